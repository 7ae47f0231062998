//! Cross-route consistency beyond the acceptance gate: longer horizons,
//! random coin states, and the accuracy scaling of the stationary-phase
//! approximation.

mod common;

use common::{max_field_dev, seeded_state};
use uniwalk::asymptotics;
use uniwalk::evolution;
use uniwalk::spectral;
use uniwalk::walk::{CoinSpec, QubitState};

#[test]
fn three_routes_agree_up_to_t_500() {
    let q = QubitState::symmetric();
    for t in [1usize, 2, 3, 5, 17, 64, 100, 256, 500] {
        let direct = evolution::evolve(&q, &CoinSpec::hadamard(), t);
        let closed = spectral::closed_form_field(&q, t, t + 1).unwrap();
        let fast = spectral::fft_field(&q, t);
        let worst = max_field_dev(&direct, &closed).max(max_field_dev(&direct, &fast));
        assert!(worst < 1e-9, "t={t} deviation {worst:e}");
    }
}

#[test]
fn routes_agree_for_random_states_and_odd_lengths() {
    for seed in [3u64, 17, 92] {
        let q = seeded_state(seed);
        let t = 37;
        let direct = evolution::evolve(&q, &CoinSpec::hadamard(), t);
        for n in [t + 1, t + 3, 101, 128] {
            let closed = spectral::closed_form_field(&q, t, n).unwrap();
            let worst = max_field_dev(&direct, &closed);
            assert!(worst < 1e-10, "seed={seed} N={n} deviation {worst:e}");
        }
    }
}

#[test]
fn approximation_error_shrinks_as_t_grows() {
    // sup norm of (approx - exact) over the bulk, compared at t and 2t;
    // the stationary-phase correction decays faster than sqrt(t), so the
    // ratio must be at least ~sqrt2
    let q = QubitState::symmetric();
    let bulk_error = |t: usize| -> f64 {
        let exact = spectral::fft_field(&q, t);
        let mut worst = 0.0f64;
        for n in t / 4..=3 * t / 4 {
            let (a0, a1) = asymptotics::approx_wavefield(&q, n as f64 / t as f64, t).unwrap();
            worst = worst.max((a0 - exact.psi0()[n]).norm());
            worst = worst.max((a1 - exact.psi1()[n]).norm());
        }
        worst
    };
    let e200 = bulk_error(200);
    let e400 = bulk_error(400);
    let factor = e200 / e400;
    assert!(factor >= 1.2, "error factor {factor} from {e200:e} to {e400:e}");
    assert!(e200 < 1e-3, "approximation too loose at t=200: {e200:e}");
}
