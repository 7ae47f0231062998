use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use uniwalk::{Complex64, QubitState, WaveField};

/// Deterministic pseudo-random normalized coin state.
pub fn seeded_state(seed: u64) -> QubitState {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || rng.random::<f64>() - 0.5;
    QubitState::normalized(
        Complex64::new(draw(), draw()),
        Complex64::new(draw(), draw()),
    )
    .expect("random draws are finite and nonzero")
}

/// Largest entry-wise amplitude deviation between two fields at equal t.
pub fn max_field_dev(a: &WaveField, b: &WaveField) -> f64 {
    assert_eq!(a.t(), b.t());
    let mut worst = 0.0f64;
    for i in 0..=a.t() {
        worst = worst.max((a.psi0()[i] - b.psi0()[i]).norm());
        worst = worst.max((a.psi1()[i] - b.psi1()[i]).norm());
    }
    worst
}
