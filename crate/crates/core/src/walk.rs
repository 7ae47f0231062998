//! Domain types of the unidirectional walk: the coin state, the coin
//! operator, and the two-component wave field.
//!
//! The walker lives on sites n = 0, 1, 2, ... and carries a qubit. One time
//! step throws the coin with a 2x2 unitary and then shifts the position by
//! the qubit value, so after t steps the support is exactly 0..=t. All types
//! here are immutable values; every operation is a pure function.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance for the |a|^2 + |b|^2 = 1 check at construction.
pub const NORM_TOL: f64 = 1e-12;

/// Coin amplitudes (a, b) of the walker's initial superposition,
/// guaranteed normalized and finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitState {
    a: Complex64,
    b: Complex64,
}

impl QubitState {
    /// Builds a state from already-normalized amplitudes. Rejects inputs
    /// whose norm deviates from 1 by more than [`NORM_TOL`].
    pub fn new(a: Complex64, b: Complex64) -> Result<Self> {
        if !(a.re.is_finite() && a.im.is_finite() && b.re.is_finite() && b.im.is_finite()) {
            return Err(Error::NonFiniteAmplitude);
        }
        let norm_sq = a.norm_sqr() + b.norm_sqr();
        if (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm_sq, tol: NORM_TOL });
        }
        Ok(Self { a, b })
    }

    /// Rescales arbitrary finite amplitudes to unit norm. Rejects the zero
    /// vector.
    pub fn normalized(a_raw: Complex64, b_raw: Complex64) -> Result<Self> {
        if !(a_raw.re.is_finite()
            && a_raw.im.is_finite()
            && b_raw.re.is_finite()
            && b_raw.im.is_finite())
        {
            return Err(Error::NonFiniteAmplitude);
        }
        let norm = (a_raw.norm_sqr() + b_raw.norm_sqr()).sqrt();
        if norm == 0.0 {
            return Err(Error::ZeroState);
        }
        Ok(Self { a: a_raw / norm, b: b_raw / norm })
    }

    /// The symmetric superposition (1/sqrt2, i/sqrt2) used throughout the
    /// probability and exit-time analysis.
    pub fn symmetric() -> Self {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        Self { a: Complex64::new(s, 0.0), b: Complex64::new(0.0, s) }
    }

    /// Amplitude of the "stay" coin value.
    pub fn a(&self) -> Complex64 {
        self.a
    }

    /// Amplitude of the "move" coin value.
    pub fn b(&self) -> Complex64 {
        self.b
    }
}

/// Parameters (alpha, beta, phi) of the general 2x2 unitary coin
///
/// ```text
/// [ e^{i alpha} cos phi    e^{i beta} sin phi  ]
/// [ e^{-i beta} sin phi   -e^{-i alpha} cos phi ]
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinSpec {
    pub alpha: f64,
    pub beta: f64,
    pub phi: f64,
}

impl CoinSpec {
    pub fn new(alpha: f64, beta: f64, phi: f64) -> Self {
        Self { alpha, beta, phi }
    }

    /// The fair coin whose four entries all have magnitude 1/sqrt2:
    /// alpha = beta = 0 and phi = pi/4.
    pub fn hadamard() -> Self {
        Self { alpha: 0.0, beta: 0.0, phi: std::f64::consts::FRAC_PI_4 }
    }

    /// Evaluates the coin operator as an explicit matrix.
    pub fn matrix(&self) -> CoinMatrix {
        let (sin_phi, cos_phi) = self.phi.sin_cos();
        let ea = Complex64::from_polar(1.0, self.alpha);
        let eb = Complex64::from_polar(1.0, self.beta);
        CoinMatrix {
            m: [
                [ea * cos_phi, eb * sin_phi],
                [eb.conj() * sin_phi, -ea.conj() * cos_phi],
            ],
        }
    }
}

/// A 2x2 complex matrix acting on the coin qubit; rows index the output
/// qubit value, columns the input.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinMatrix {
    m: [[Complex64; 2]; 2],
}

impl CoinMatrix {
    pub fn from_entries(m: [[Complex64; 2]; 2]) -> Self {
        Self { m }
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.m[row][col]
    }

    pub fn entries(&self) -> &[[Complex64; 2]; 2] {
        &self.m
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self {
            m: [
                [self.m[0][0].conj(), self.m[1][0].conj()],
                [self.m[0][1].conj(), self.m[1][1].conj()],
            ],
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut m = [[Complex64::new(0.0, 0.0); 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, out) in row.iter_mut().enumerate() {
                *out = self.m[i][0] * rhs.m[0][j] + self.m[i][1] * rhs.m[1][j];
            }
        }
        Self { m }
    }

    pub fn determinant(&self) -> Complex64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    /// Largest entry-wise deviation of U U^dagger from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        let p = self.mul(&self.adjoint());
        let mut worst = 0.0f64;
        for (i, row) in p.m.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                let expect = if i == j { Complex64::new(1.0, 0.0) } else { Complex64::default() };
                worst = worst.max((entry - expect).norm());
            }
        }
        worst
    }
}

/// Two-component wave function {psi0(n, t), psi1(n, t)} on sites n = 0..=t
/// at a fixed time t. Amplitudes outside 0..=t are identically zero.
///
/// The norm equals 1 for unfiltered evolution; measurement-filtered fields
/// carry less than unit mass, so no norm constraint is imposed here.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveField {
    t: usize,
    psi0: Vec<Complex64>,
    psi1: Vec<Complex64>,
}

impl WaveField {
    /// Wraps component arrays of length t + 1, rejecting NaN/Inf entries.
    pub fn from_components(t: usize, psi0: Vec<Complex64>, psi1: Vec<Complex64>) -> Result<Self> {
        let expected = t + 1;
        for v in [&psi0, &psi1] {
            if v.len() != expected {
                return Err(Error::FieldLengthMismatch { t, expected, got: v.len() });
            }
            if v.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
                return Err(Error::NonFiniteAmplitude);
            }
        }
        Ok(Self { t, psi0, psi1 })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// "Stay"-channel amplitudes, indexed by site.
    pub fn psi0(&self) -> &[Complex64] {
        &self.psi0
    }

    /// "Move"-channel amplitudes, indexed by site.
    pub fn psi1(&self) -> &[Complex64] {
        &self.psi1
    }

    /// psi0 at site n, zero outside the support.
    pub fn amplitude0(&self, n: usize) -> Complex64 {
        self.psi0.get(n).copied().unwrap_or_default()
    }

    /// psi1 at site n, zero outside the support.
    pub fn amplitude1(&self, n: usize) -> Complex64 {
        self.psi1.get(n).copied().unwrap_or_default()
    }

    /// Total probability carried by the field.
    pub fn norm_sq(&self) -> f64 {
        self.psi0
            .iter()
            .zip(&self.psi1)
            .map(|(p0, p1)| p0.norm_sqr() + p1.norm_sqr())
            .sum()
    }
}
