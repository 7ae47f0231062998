//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors reported by walk construction, spectral evaluation, asymptotic
/// approximations, and exit-time analysis.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A coin state failed the |a|^2 + |b|^2 = 1 check.
    #[error("coin state has norm^2 = {norm_sq}, expected 1 within {tol}")]
    NotNormalized { norm_sq: f64, tol: f64 },

    /// An amplitude was NaN or infinite.
    #[error("amplitude is not finite")]
    NonFiniteAmplitude,

    /// A zero vector cannot be rescaled to unit norm.
    #[error("cannot normalize a zero state")]
    ZeroState,

    /// Wave-field component arrays must both have length t + 1.
    #[error("wave field at t = {t} needs arrays of length {expected}, got {got}")]
    FieldLengthMismatch { t: usize, expected: usize, got: usize },

    /// Frequency index out of `0..N`.
    #[error("frequency index {r} out of range for transform length {n}")]
    FrequencyOutOfRange { r: usize, n: usize },

    /// The spectral construction needs a transform length larger than the time step.
    #[error("transform length {n} must exceed time step {t}")]
    TransformTooShort { n: usize, t: usize },

    /// The stationary-phase approximation is undefined at this scaled position.
    #[error("nu = {nu} lies outside the validity interval ({lo}, {hi})")]
    OutsideValidity { nu: f64, lo: f64, hi: f64 },

    /// Exit-time problems need a threshold of at least one site.
    #[error("absorbing threshold must be at least 1")]
    ThresholdTooSmall,

    /// The exit-time horizon must reach the threshold.
    #[error("horizon tmax = {tmax} must be at least n0 = {n0}")]
    HorizonBeforeThreshold { tmax: usize, n0: usize },

    /// Classical comparator needs a step probability strictly inside (0, 1).
    #[error("step probability p = {p} must lie in (0, 1)")]
    InvalidStepProbability { p: f64 },

    /// A fit window must sit inside the recorded distribution.
    #[error("fit range [{t_lo}, {t_hi}] invalid for distribution over [{n0}, {tmax}]")]
    InvalidFitRange { t_lo: usize, t_hi: usize, n0: usize, tmax: usize },

    /// Tail fits need enough sample points to be meaningful.
    #[error("tail fit needs at least {needed} points, found {found}")]
    InsufficientFitPoints { needed: usize, found: usize },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
