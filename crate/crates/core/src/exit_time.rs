//! Exit-time distributions from the interval [0, n0).
//!
//! The walker can only leave through the threshold site n0, and probing that
//! site after every step gives the exit probability P(t) = |psi1(n0, t)|^2
//! of the unfiltered evolution. [`exit_pmf_filtered`] runs the full
//! measure-and-project protocol instead and must agree with the shortcut;
//! the simulation keeps the field unnormalized (record, then zero the probed
//! site) so that recorded probabilities are unconditional without dividing
//! by near-unity norms.
//!
//! Filtering never feeds amplitude past n0: sites beyond the threshold stay
//! empty until absorption, so a single projector suffices.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::evolution::step_kernel;
use crate::walk::{CoinSpec, QubitState};

/// Exit-time probabilities for t = n0..=tmax plus the mass that has not
/// exited by the horizon.
#[derive(Debug, Clone, PartialEq)]
pub struct ExitDistribution {
    n0: usize,
    tmax: usize,
    p_exit: Vec<f64>,
    survival: f64,
}

impl ExitDistribution {
    fn new(n0: usize, tmax: usize, p_exit: Vec<f64>) -> Self {
        debug_assert_eq!(p_exit.len(), tmax - n0 + 1);
        let survival = 1.0 - p_exit.iter().sum::<f64>();
        Self { n0, tmax, p_exit, survival }
    }

    pub fn n0(&self) -> usize {
        self.n0
    }

    pub fn tmax(&self) -> usize {
        self.tmax
    }

    /// Exit probabilities, indexed by t - n0.
    pub fn probabilities(&self) -> &[f64] {
        &self.p_exit
    }

    /// Exit probability at time t; zero before the threshold can be reached.
    pub fn probability(&self, t: usize) -> f64 {
        if t < self.n0 {
            0.0
        } else {
            self.p_exit[t - self.n0]
        }
    }

    /// Times covered by [`probabilities`](Self::probabilities).
    pub fn times(&self) -> impl Iterator<Item = usize> {
        self.n0..=self.tmax
    }

    /// Probability mass that has not exited by tmax.
    pub fn survival(&self) -> f64 {
        self.survival
    }

    /// Time of the largest exit probability.
    pub fn argmax_time(&self) -> usize {
        let (i, _) = self
            .p_exit
            .iter()
            .enumerate()
            .fold((0, f64::MIN), |best, (i, &p)| if p > best.1 { (i, p) } else { best });
        self.n0 + i
    }
}

/// Backend used for the closed-form route.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitMethod {
    /// Direct evolution below [`SPECTRAL_CROSSOVER`], frequency stepping above.
    Auto,
    /// Step the wave field in the position domain, O(tmax^2).
    Direct,
    /// Step the frequency-domain solution on a power-of-two grid and
    /// reconstruct the single probed site each step.
    Spectral,
}

/// Horizon above which [`ExitMethod::Auto`] switches to the spectral route.
///
/// Measured, not assumed (see the bench crate): the position-domain sweep
/// wins below this point, while for long horizons it slows down on the
/// subnormal amplitudes outside the ballistic cone and the O(tmax * N)
/// frequency stepping takes over.
pub const SPECTRAL_CROSSOVER: usize = 4096;

fn check_window(n0: usize, tmax: usize) -> Result<()> {
    if n0 < 1 {
        return Err(Error::ThresholdTooSmall);
    }
    if tmax < n0 {
        return Err(Error::HorizonBeforeThreshold { tmax, n0 });
    }
    Ok(())
}

/// Exit-time distribution of the Hadamard walk through the closed-form
/// shortcut P(t) = |psi1(n0, t)|^2 of the unfiltered evolution.
pub fn exit_pmf_closed(q: &QubitState, n0: usize, tmax: usize) -> Result<ExitDistribution> {
    exit_pmf_closed_with(q, n0, tmax, ExitMethod::Auto)
}

/// Same as [`exit_pmf_closed`] with an explicit backend choice.
pub fn exit_pmf_closed_with(
    q: &QubitState,
    n0: usize,
    tmax: usize,
    method: ExitMethod,
) -> Result<ExitDistribution> {
    check_window(n0, tmax)?;
    let p_exit = match method {
        ExitMethod::Direct => closed_direct(q, n0, tmax),
        ExitMethod::Spectral => closed_spectral(q, n0, tmax),
        ExitMethod::Auto => {
            if tmax > SPECTRAL_CROSSOVER {
                closed_spectral(q, n0, tmax)
            } else {
                closed_direct(q, n0, tmax)
            }
        }
    };
    Ok(ExitDistribution::new(n0, tmax, p_exit))
}

fn closed_direct(q: &QubitState, n0: usize, tmax: usize) -> Vec<f64> {
    let u = CoinSpec::hadamard().matrix();
    let mut cur0 = vec![Complex64::default(); tmax + 1];
    let mut cur1 = vec![Complex64::default(); tmax + 1];
    let mut next0 = cur0.clone();
    let mut next1 = cur1.clone();
    cur0[0] = q.a();
    cur1[0] = q.b();
    let mut p_exit = Vec::with_capacity(tmax - n0 + 1);
    for t in 1..=tmax {
        step_kernel(&cur0[..t], &cur1[..t], &mut next0[..=t], &mut next1[..=t], &u);
        std::mem::swap(&mut cur0, &mut next0);
        std::mem::swap(&mut cur1, &mut next1);
        if t >= n0 {
            p_exit.push(cur1[n0].norm_sqr());
        }
    }
    p_exit
}

fn closed_spectral(q: &QubitState, n0: usize, tmax: usize) -> Vec<f64> {
    use std::f64::consts::{FRAC_1_SQRT_2, TAU};
    let n = (tmax + 1).next_power_of_two();
    let mut f0 = vec![q.a(); n];
    let mut f1 = vec![q.b(); n];
    let rot: Vec<Complex64> =
        (0..n).map(|r| Complex64::from_polar(1.0, TAU * r as f64 / n as f64)).collect();
    let probe: Vec<Complex64> =
        (0..n).map(|r| Complex64::from_polar(1.0, -TAU * (r * n0 % n) as f64 / n as f64)).collect();
    let mut p_exit = Vec::with_capacity(tmax - n0 + 1);
    for t in 1..=tmax {
        for r in 0..n {
            let sum = (f0[r] + f1[r]) * FRAC_1_SQRT_2;
            let diff = rot[r] * (f0[r] - f1[r]) * FRAC_1_SQRT_2;
            f0[r] = sum;
            f1[r] = diff;
        }
        if t >= n0 {
            let site: Complex64 = f1.iter().zip(&probe).map(|(f, ph)| f * ph).sum();
            p_exit.push((site / n as f64).norm_sqr());
        }
    }
    p_exit
}

/// Full measurement-filtered protocol: evolve one step, record the
/// unconditional exit probability |psi1(n0, t)|^2 of the unnormalized
/// field, zero the probed site, continue.
pub fn exit_pmf_filtered(
    q: &QubitState,
    coin: &CoinSpec,
    n0: usize,
    tmax: usize,
) -> Result<ExitDistribution> {
    check_window(n0, tmax)?;
    let u = coin.matrix();
    let mut cur0 = vec![Complex64::default(); n0 + 1];
    let mut cur1 = vec![Complex64::default(); n0 + 1];
    let mut next0 = cur0.clone();
    let mut next1 = cur1.clone();
    cur0[0] = q.a();
    cur1[0] = q.b();
    let mut p_exit = Vec::with_capacity(tmax - n0 + 1);
    for t in 1..=tmax {
        step_kernel(&cur0, &cur1, &mut next0, &mut next1, &u);
        std::mem::swap(&mut cur0, &mut next0);
        std::mem::swap(&mut cur1, &mut next1);
        if t >= n0 {
            p_exit.push(cur1[n0].norm_sqr());
            cur0[n0] = Complex64::default();
            cur1[n0] = Complex64::default();
        }
    }
    Ok(ExitDistribution::new(n0, tmax, p_exit))
}

/// Classical comparator: the walker moves with probability p per step, so
/// the number of steps to accumulate n0 moves is negative-binomial,
///
/// ```text
/// P(t) = C(t-1, t-n0) p^{n0} (1-p)^{t-n0},    t >= n0.
/// ```
///
/// Evaluated through a log-space recurrence so large horizons neither
/// overflow the binomial coefficient nor underflow prematurely.
pub fn classical_exit_pmf(n0: usize, p: f64, tmax: usize) -> Result<ExitDistribution> {
    check_window(n0, tmax)?;
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::InvalidStepProbability { p });
    }
    let ln_q = (1.0 - p).ln();
    let mut ln_prob = n0 as f64 * p.ln();
    let mut p_exit = Vec::with_capacity(tmax - n0 + 1);
    p_exit.push(ln_prob.exp());
    for t in n0..tmax {
        ln_prob += (t as f64).ln() - ((t + 1 - n0) as f64).ln() + ln_q;
        p_exit.push(ln_prob.exp());
    }
    Ok(ExitDistribution::new(n0, tmax, p_exit))
}

/// Result of a log-log power-law fit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailFit {
    /// Fitted slope of ln p against ln t.
    pub exponent: f64,
    /// Fitted intercept.
    pub intercept: f64,
    /// Root-mean-square residual in log space; large values flag data that
    /// is not a power law.
    pub rms_residual: f64,
    /// Number of points entering the fit.
    pub points: usize,
}

const MIN_FIT_POINTS: usize = 10;

fn check_fit_window(d: &ExitDistribution, t_lo: usize, t_hi: usize) -> Result<()> {
    if t_lo < d.n0() || t_hi > d.tmax() || t_lo >= t_hi {
        return Err(Error::InvalidFitRange { t_lo, t_hi, n0: d.n0(), tmax: d.tmax() });
    }
    Ok(())
}

/// Oscillation floor of the distribution inside [t_lo, t_hi]: the local
/// minima of the recorded sequence. The decay of an oscillatory exit PMF is
/// carried by this envelope, while the local maxima trace the flat
/// quasi-uniform ceiling.
pub fn decay_envelope(
    d: &ExitDistribution,
    t_lo: usize,
    t_hi: usize,
) -> Result<Vec<(usize, f64)>> {
    check_fit_window(d, t_lo, t_hi)?;
    Ok(local_extrema(d, t_lo, t_hi, |a, b| a <= b))
}

/// Local maxima of the recorded sequence inside [t_lo, t_hi].
pub fn peak_envelope(d: &ExitDistribution, t_lo: usize, t_hi: usize) -> Result<Vec<(usize, f64)>> {
    check_fit_window(d, t_lo, t_hi)?;
    Ok(local_extrema(d, t_lo, t_hi, |a, b| a >= b))
}

fn local_extrema(
    d: &ExitDistribution,
    t_lo: usize,
    t_hi: usize,
    dominates: impl Fn(f64, f64) -> bool,
) -> Vec<(usize, f64)> {
    let p = d.probabilities();
    let mut out = Vec::new();
    for i in 1..p.len().saturating_sub(1) {
        let t = d.n0() + i;
        if t < t_lo || t > t_hi {
            continue;
        }
        if dominates(p[i], p[i - 1]) && dominates(p[i], p[i + 1]) {
            out.push((t, p[i]));
        }
    }
    out
}

fn loglog_fit(points: &[(usize, f64)]) -> Result<TailFit> {
    let data: Vec<(f64, f64)> = points
        .iter()
        .filter(|(_, p)| *p > 0.0)
        .map(|&(t, p)| ((t as f64).ln(), p.ln()))
        .collect();
    if data.len() < MIN_FIT_POINTS {
        return Err(Error::InsufficientFitPoints { needed: MIN_FIT_POINTS, found: data.len() });
    }
    let m = data.len() as f64;
    let mean_x = data.iter().map(|(x, _)| x).sum::<f64>() / m;
    let mean_y = data.iter().map(|(_, y)| y).sum::<f64>() / m;
    let sxx: f64 = data.iter().map(|(x, _)| (x - mean_x) * (x - mean_x)).sum();
    let sxy: f64 = data.iter().map(|(x, y)| (x - mean_x) * (y - mean_y)).sum();
    let exponent = sxy / sxx;
    let intercept = mean_y - exponent * mean_x;
    let ss: f64 = data
        .iter()
        .map(|(x, y)| {
            let r = y - (intercept + exponent * x);
            r * r
        })
        .sum();
    Ok(TailFit {
        exponent,
        intercept,
        rms_residual: (ss / m).sqrt(),
        points: data.len(),
    })
}

/// Least-squares slope of ln p against ln t over the decay envelope
/// (the local minima) inside [t_lo, t_hi].
pub fn tail_exponent_fit(d: &ExitDistribution, t_lo: usize, t_hi: usize) -> Result<TailFit> {
    loglog_fit(&decay_envelope(d, t_lo, t_hi)?)
}

/// Least-squares slope over every recorded point inside [t_lo, t_hi];
/// exposed for comparison with the envelope fit.
pub fn tail_exponent_fit_raw(d: &ExitDistribution, t_lo: usize, t_hi: usize) -> Result<TailFit> {
    check_fit_window(d, t_lo, t_hi)?;
    let points: Vec<(usize, f64)> =
        (t_lo..=t_hi).map(|t| (t, d.probability(t))).collect();
    loglog_fit(&points)
}
