//! Direct time-domain evolution: repeated application of the step operator,
//! probability extraction, and the map to the conventional bidirectional
//! walk.
//!
//! One step sends
//!
//! ```text
//! psi0(n, t+1) = U00 psi0(n, t)   + U01 psi1(n, t)
//! psi1(n, t+1) = U10 psi0(n-1, t) + U11 psi1(n-1, t)
//! ```
//!
//! with U the coin matrix, so the support grows by one site per step and the
//! total probability is conserved. Cost of `evolve` is O(t^2) amplitude
//! operations.

use num_complex::Complex64;

use crate::error::Result;
use crate::walk::{CoinMatrix, CoinSpec, QubitState, WaveField};

/// Probability mass function rho(n, t) = |psi0|^2 + |psi1|^2 with its
/// normalization certificate.
#[derive(Debug, Clone, PartialEq)]
pub struct Pmf {
    t: usize,
    rho: Vec<f64>,
    total: f64,
}

impl Pmf {
    pub fn t(&self) -> usize {
        self.t
    }

    /// Site probabilities, indexed by n = 0..=t.
    pub fn rho(&self) -> &[f64] {
        &self.rho
    }

    /// Sum of all entries; 1 within 1e-10 for unfiltered evolution.
    pub fn total(&self) -> f64 {
        self.total
    }
}

/// Wave field re-indexed to the conventional walk on the integers, where the
/// amplitude at unidirectional site n sits at position m = 2n - t.
#[derive(Debug, Clone, PartialEq)]
pub struct BidirectionalField {
    t: usize,
    psi0: Vec<Complex64>,
    psi1: Vec<Complex64>,
}

impl BidirectionalField {
    pub fn t(&self) -> usize {
        self.t
    }

    /// Lattice position of the i-th stored amplitude; all positions share
    /// the parity of t.
    pub fn position(&self, i: usize) -> i64 {
        2 * i as i64 - self.t as i64
    }

    /// Occupied positions -t, -t+2, ..., t in increasing order.
    pub fn positions(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.psi0.len()).map(|i| self.position(i))
    }

    pub fn psi0(&self) -> &[Complex64] {
        &self.psi0
    }

    pub fn psi1(&self) -> &[Complex64] {
        &self.psi1
    }

    /// Probability per stored position, aligned with [`positions`](Self::positions).
    pub fn pmf(&self) -> Vec<f64> {
        self.psi0
            .iter()
            .zip(&self.psi1)
            .map(|(p0, p1)| p0.norm_sqr() + p1.norm_sqr())
            .collect()
    }
}

/// Places the walker at the origin with coin amplitudes (a, b).
pub fn initial_field(q: &QubitState) -> WaveField {
    WaveField::from_components(0, vec![q.a()], vec![q.b()])
        .expect("origin field is finite by construction")
}

/// Writes one step of the coin-then-shift recurrence into `dst`, reading the
/// field at the previous time from `src`. `dst` slices must be one entry
/// longer than the source support requires; entries are fully overwritten.
pub(crate) fn step_kernel(
    src0: &[Complex64],
    src1: &[Complex64],
    dst0: &mut [Complex64],
    dst1: &mut [Complex64],
    u: &CoinMatrix,
) {
    let (u00, u01) = (u.entry(0, 0), u.entry(0, 1));
    let (u10, u11) = (u.entry(1, 0), u.entry(1, 1));
    let n_src = src0.len();
    for n in 0..dst0.len() {
        dst0[n] = if n < n_src { u00 * src0[n] + u01 * src1[n] } else { Complex64::default() };
        dst1[n] = if n >= 1 && n - 1 < n_src {
            u10 * src0[n - 1] + u11 * src1[n - 1]
        } else {
            Complex64::default()
        };
    }
}

/// Applies the step operator once, growing the support by one site.
pub fn step(w: &WaveField, coin: &CoinSpec) -> WaveField {
    let u = coin.matrix();
    let t_next = w.t() + 1;
    let mut psi0 = vec![Complex64::default(); t_next + 1];
    let mut psi1 = vec![Complex64::default(); t_next + 1];
    step_kernel(w.psi0(), w.psi1(), &mut psi0, &mut psi1, &u);
    WaveField::from_components(t_next, psi0, psi1)
        .expect("stepped field is finite when the input is")
}

/// t-fold composition of [`step`] on the initial field.
pub fn evolve(q: &QubitState, coin: &CoinSpec, t: usize) -> WaveField {
    let u = coin.matrix();
    let mut psi0 = vec![q.a()];
    let mut psi1 = vec![q.b()];
    for s in 1..=t {
        let mut next0 = vec![Complex64::default(); s + 1];
        let mut next1 = vec![Complex64::default(); s + 1];
        step_kernel(&psi0, &psi1, &mut next0, &mut next1, &u);
        psi0 = next0;
        psi1 = next1;
    }
    WaveField::from_components(t, psi0, psi1).expect("evolved field is finite")
}

/// Entry-wise squared moduli summed over the two components.
pub fn pmf(w: &WaveField) -> Pmf {
    let rho: Vec<f64> = w
        .psi0()
        .iter()
        .zip(w.psi1())
        .map(|(p0, p1)| p0.norm_sqr() + p1.norm_sqr())
        .collect();
    let total = rho.iter().sum();
    Pmf { t: w.t(), rho, total }
}

/// Re-indexes the field to the conventional bidirectional walk by moving the
/// amplitude at site n to position 2n - t; nothing else changes.
pub fn to_bidirectional(w: &WaveField) -> BidirectionalField {
    BidirectionalField { t: w.t(), psi0: w.psi0().to_vec(), psi1: w.psi1().to_vec() }
}

/// Convenience wrapper returning the PMF of `evolve(q, coin, t)`.
pub fn evolve_pmf(q: &QubitState, coin: &CoinSpec, t: usize) -> Result<Pmf> {
    Ok(pmf(&evolve(q, coin, t)))
}
