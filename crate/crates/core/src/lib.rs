//! Numerics for the unidirectional discrete-time quantum walk: a walker on
//! the half-line that either stays put or hops one site forward, steered by
//! a qubit coin.
//!
//! The crate computes the same objects along independent routes so that each
//! can certify the others:
//!
//! - [`evolution`] iterates the coin-and-shift recurrence directly;
//! - [`spectral`] evaluates the exact finite-Fourier closed forms, either as
//!   explicit cosine sums for any horizon N > t or through a radix-2 fast
//!   transform on N = 2^k;
//! - [`asymptotics`] provides the stationary-phase approximation, the
//!   quasi-uniform envelopes of the position distribution, and algebraic
//!   estimates for the exit-time tail;
//! - [`exit_time`] turns the wave functions into first-exit distributions
//!   from [0, n0), both by the closed-form shortcut and by simulating the
//!   projective measure-and-filter protocol, plus the classical
//!   negative-binomial comparator.
//!
//! All operations are pure functions over immutable values and are safe to
//! call concurrently.

pub mod asymptotics;
pub mod error;
pub mod evolution;
mod fft;
pub mod exit_time;
pub mod spectral;
pub mod walk;

pub use error::{Error, Result};
pub use evolution::{BidirectionalField, Pmf};
pub use exit_time::{ExitDistribution, ExitMethod, TailFit};
pub use num_complex::Complex64;
pub use spectral::FourierPair;
pub use walk::{CoinMatrix, CoinSpec, QubitState, WaveField};
