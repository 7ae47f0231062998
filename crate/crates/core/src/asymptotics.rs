//! Stationary-phase approximations of the wave field and the derived
//! probability envelopes and exit-time estimates.
//!
//! Everything here works in the continuum limit with the scaled position
//! nu = n / t held fixed. The oscillatory frequency sums are dominated by
//! the point u0 where the phase phi(nu, u) = pi (2 nu - 1) u + omega_u is
//! maximal; all quantities below are evaluated at that point.
//!
//! The approximation exists only where 1 - 2 (1 - 2 nu)^2 > 0. Outside that
//! interval the expressions genuinely diverge, so operations reject with a
//! domain error instead of clamping.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::walk::QubitState;

const PI: f64 = std::f64::consts::PI;
const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Open interval of scaled positions where the stationary-phase expansion
/// is defined: ((1 - 1/sqrt2)/2, (1 + 1/sqrt2)/2).
pub fn validity_interval() -> (f64, f64) {
    (0.5 * (1.0 - FRAC_1_SQRT_2), 0.5 * (1.0 + FRAC_1_SQRT_2))
}

/// Trigonometry of the stationary point u0 for one value of nu, together
/// with the phase phi0 = phi(nu, u0) and its (negative) second derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StationaryPoint {
    nu: f64,
    cos_pi_u0: f64,
    sin_pi_u0: f64,
    sin_omega0: f64,
    cos_omega0: f64,
    phi0: f64,
    phi0_second: f64,
}

impl StationaryPoint {
    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn cos_pi_u0(&self) -> f64 {
        self.cos_pi_u0
    }

    pub fn sin_pi_u0(&self) -> f64 {
        self.sin_pi_u0
    }

    pub fn sin_omega0(&self) -> f64 {
        self.sin_omega0
    }

    pub fn cos_omega0(&self) -> f64 {
        self.cos_omega0
    }

    /// The phase angle pi u0, recovered from its sine and cosine so that
    /// u0 covers the full (0, 1) range.
    pub fn pi_u0(&self) -> f64 {
        self.sin_pi_u0.atan2(self.cos_pi_u0)
    }

    pub fn u0(&self) -> f64 {
        self.pi_u0() / PI
    }

    pub fn omega0(&self) -> f64 {
        self.sin_omega0.asin()
    }

    /// Phase at the stationary point.
    pub fn phi0(&self) -> f64 {
        self.phi0
    }

    /// Second derivative of the phase at u0; negative throughout the
    /// validity interval.
    pub fn phi0_second(&self) -> f64 {
        self.phi0_second
    }
}

fn require_inside(nu: f64) -> Result<f64> {
    let (lo, hi) = validity_interval();
    if !(nu > lo && nu < hi) {
        return Err(Error::OutsideValidity { nu, lo, hi });
    }
    Ok(1.0 - 2.0 * (1.0 - 2.0 * nu) * (1.0 - 2.0 * nu))
}

/// Solves the stationarity condition for nu strictly inside
/// [`validity_interval`].
pub fn stationary_point(nu: f64) -> Result<StationaryPoint> {
    let root = require_inside(nu)?;
    let nu1 = nu * (1.0 - nu);
    let cos_pi_u0 = (1.0 - 2.0 * nu) / (2.0 * nu1.sqrt());
    let sin_pi_u0 = 0.5 * (root / nu1).sqrt();
    let sin_omega0 = 0.5 * (root / (2.0 * nu1)).sqrt();
    let cos_omega0 = 1.0 / (2.0 * (2.0 * nu1).sqrt());
    let pi_u0 = sin_pi_u0.atan2(cos_pi_u0);
    let phi0 = (2.0 * nu - 1.0) * pi_u0 + sin_omega0.asin();
    let phi0_second = -4.0 * PI * PI * nu1 * root.sqrt();
    Ok(StationaryPoint { nu, cos_pi_u0, sin_pi_u0, sin_omega0, cos_omega0, phi0, phi0_second })
}

/// Stationary-phase approximation of (psi0, psi1) at scaled position nu and
/// time t >= 1. The amplitude prefactors carry the t^{-1/2} decay; the
/// phases are A = phi0 t - pi/4 shifted by 0 or +-pi u0.
pub fn approx_wavefield(q: &QubitState, nu: f64, t: usize) -> Result<(Complex64, Complex64)> {
    assert!(t >= 1, "approximation needs t >= 1");
    let sp = stationary_point(nu)?;
    let root = 1.0 - 2.0 * (1.0 - 2.0 * nu) * (1.0 - 2.0 * nu);
    let tf = t as f64;
    let sqrt_t = tf.sqrt();

    let amp_stay = (2.0 * (1.0 - nu) / (PI * nu * root.sqrt())).sqrt() / sqrt_t;
    let amp_cross = (2.0 / (PI * root.sqrt())).sqrt() / sqrt_t;
    let amp_move = (2.0 * nu / (PI * (1.0 - nu) * root.sqrt())).sqrt() / sqrt_t;

    let a_phase = sp.phi0() * tf - PI / 4.0;
    let pi_u0 = sp.pi_u0();
    let psi0 = q.a() * (amp_stay * a_phase.cos()) + q.b() * (amp_cross * (a_phase + pi_u0).cos());
    let psi1 = q.a() * (amp_cross * (a_phase - pi_u0).cos()) + q.b() * (amp_move * a_phase.cos());
    Ok((psi0, psi1))
}

/// Approximate PMF for the symmetric initial state (1/sqrt2, i/sqrt2):
///
/// ```text
/// rho_bar = (1/t) {1 + 2 (1-2nu)^2 sin[2 phi0 t]} / (2 pi nu (1-nu) sqrt(1 - 2(1-2nu)^2))
/// ```
pub fn rho_bar(nu: f64, t: usize) -> Result<f64> {
    assert!(t >= 1, "approximation needs t >= 1");
    let root = require_inside(nu)?;
    let sp = stationary_point(nu)?;
    let tf = t as f64;
    let osc = 2.0 * (1.0 - 2.0 * nu) * (1.0 - 2.0 * nu) * (2.0 * sp.phi0() * tf).sin();
    Ok((1.0 + osc) / (tf * 2.0 * PI * nu * (1.0 - nu) * root.sqrt()))
}

/// The envelopes (rho_min, rho_max) bounding [`rho_bar`]; at nu = 1/2 both
/// collapse to 2 / (pi t).
pub fn rho_envelopes(nu: f64, t: usize) -> Result<(f64, f64)> {
    assert!(t >= 1, "approximation needs t >= 1");
    let root = require_inside(nu)?;
    let tf = t as f64;
    let nu1 = nu * (1.0 - nu);
    let square = 2.0 * (1.0 - 2.0 * nu) * (1.0 - 2.0 * nu);
    let rho_max = (1.0 + square) / (tf * 2.0 * PI * nu1 * root.sqrt());
    let rho_min = root.sqrt() / (tf * 2.0 * PI * nu1);

    let sp = stationary_point(nu)?;
    let alt = (2.0 / (PI * tf)) * 2.0 * sp.sin_omega0() * sp.cos_omega0();
    assert!((rho_min - alt).abs() <= 1e-12, "envelope identity broke: {rho_min} vs {alt}");
    Ok((rho_min, rho_max))
}

/// Approximate lower bound for the exit-time probability, defined for
/// 2 n0 <= t and 8 n0 (t - n0) - t^2 > 0 (equivalently t below
/// (4 + 2 sqrt2) n0); outside that window the bound does not apply and
/// `None` is returned.
pub fn exit_lower_bound(n0: usize, t: usize) -> Option<f64> {
    if t < 2 * n0 {
        return None;
    }
    let n0 = n0 as i64;
    let t = t as i64;
    let radicand = 8 * n0 * (t - n0) - t * t;
    if radicand <= 0 {
        return None;
    }
    let gap = (t - n0) as f64;
    Some((radicand as f64).sqrt() / (4.0 * PI * gap * gap))
}

/// Heuristic algebraic tail (1 / (2 pi n0)) (2 n0 / t)^{11/4}, intended for
/// t >= 2 n0.
pub fn exit_heuristic(n0: usize, t: usize) -> f64 {
    let ratio = 2.0 * n0 as f64 / t as f64;
    ratio.powf(2.75) / (2.0 * PI * n0 as f64)
}
