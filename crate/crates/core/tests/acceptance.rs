//! Acceptance suite: every release-gating criterion as one test, each
//! printing a line with the measured quantity next to its threshold.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use std::time::Instant;

use common::{max_field_dev, seeded_state};
use uniwalk::asymptotics;
use uniwalk::evolution;
use uniwalk::exit_time;
use uniwalk::spectral;
use uniwalk::walk::{CoinMatrix, CoinSpec, QubitState};
use uniwalk::Complex64;

const PI: f64 = std::f64::consts::PI;

#[test]
fn acceptance_01_route_equivalence_at_t30() {
    let start = Instant::now();
    let q = QubitState::symmetric();
    let direct = evolution::evolve(&q, &CoinSpec::hadamard(), 30);
    let closed = spectral::closed_form_field(&q, 30, 31).unwrap();
    let fast = spectral::fft_field(&q, 30);
    let worst = max_field_dev(&direct, &closed)
        .max(max_field_dev(&direct, &fast))
        .max(max_field_dev(&closed, &fast));
    let elapsed = start.elapsed();
    assert!(worst < 1e-9, "max |dpsi| = {worst:e}");
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("acceptance 01 route equivalence: PASS (max |dpsi| = {worst:.3e}, {elapsed:?})");
}

#[test]
fn acceptance_02_transform_length_independence() {
    let q = QubitState::symmetric();
    let mut worst = 0.0f64;
    for t in [10usize, 30, 100, 500] {
        let natural = spectral::closed_form_field(&q, t, t + 1).unwrap();
        let pow2 = spectral::closed_form_field(&q, t, (t + 1).next_power_of_two()).unwrap();
        worst = worst.max(max_field_dev(&natural, &pow2));
    }
    assert!(worst < 1e-9, "max |dpsi| = {worst:e}");
    println!("acceptance 02 N-independence: PASS (max |dpsi| = {worst:.3e})");
}

#[test]
fn acceptance_03_normalization_both_routes() {
    let coin = CoinSpec::hadamard();
    let mut worst = 0.0f64;
    for seed in 0..5u64 {
        let q = seeded_state(seed);
        let mut field = evolution::initial_field(&q);
        for t in 1..=1000usize {
            field = evolution::step(&field, &coin);
            worst = worst.max((evolution::pmf(&field).total() - 1.0).abs());
            let fast = spectral::fft_field(&q, t);
            worst = worst.max((fast.norm_sq() - 1.0).abs());
        }
    }
    assert!(worst < 1e-10, "max |total - 1| = {worst:e}");
    println!("acceptance 03 normalization: PASS (max |total - 1| = {worst:.3e})");
}

/// Expands the full walker state in the 2(t+2)-dimensional truncated basis
/// and applies the step operator as an explicit matrix. Truncation is exact
/// because the walker cannot pass site t in t steps.
fn brute_force_field(q: &QubitState, coin: &CoinMatrix, t: usize) -> (Vec<Complex64>, Vec<Complex64>) {
    let sites = t + 2;
    let dim = 2 * sites;
    let idx = |c: usize, s: usize| c * sites + s;
    let mut op = vec![vec![Complex64::default(); dim]; dim];
    for s in 0..sites {
        for c in 0..2 {
            // coin throw U then conditional shift: |c,s> -> U0c |0,s> + U1c |1,s+1>
            op[idx(0, s)][idx(c, s)] += coin.entry(0, c);
            if s + 1 < sites {
                op[idx(1, s + 1)][idx(c, s)] += coin.entry(1, c);
            }
        }
    }
    let mut state = vec![Complex64::default(); dim];
    state[idx(0, 0)] = q.a();
    state[idx(1, 0)] = q.b();
    for _ in 0..t {
        let mut next = vec![Complex64::default(); dim];
        for (row, out) in next.iter_mut().enumerate() {
            for (col, &amp) in state.iter().enumerate() {
                *out += op[row][col] * amp;
            }
        }
        state = next;
    }
    let psi0 = (0..=t).map(|s| state[idx(0, s)]).collect();
    let psi1 = (0..=t).map(|s| state[idx(1, s)]).collect();
    (psi0, psi1)
}

#[test]
fn acceptance_04_brute_force_operator_oracle() {
    let coin = CoinSpec::hadamard();
    let matrix = coin.matrix();
    let mut worst = 0.0f64;
    for t in 0..=12usize {
        for q in [QubitState::symmetric(), seeded_state(41)] {
            let direct = evolution::evolve(&q, &coin, t);
            let (psi0, psi1) = brute_force_field(&q, &matrix, t);
            for n in 0..=t {
                worst = worst.max((direct.psi0()[n] - psi0[n]).norm());
                worst = worst.max((direct.psi1()[n] - psi1[n]).norm());
            }
        }
    }
    assert!(worst < 1e-12, "max |dpsi| = {worst:e}");
    println!("acceptance 04 brute-force oracle: PASS (max |dpsi| = {worst:.3e})");
}

#[test]
fn acceptance_05_quasi_uniform_plateau() {
    let t = 100usize;
    let pmf = evolution::evolve_pmf(&QubitState::symmetric(), &CoinSpec::hadamard(), t).unwrap();
    let flat = 2.0 / (PI * t as f64);
    let center_dev = (pmf.rho()[50] - flat).abs() / flat;
    assert!(center_dev < 0.05, "rho(50,100) off by {center_dev:.4}");

    let mut inside = 0usize;
    let mut total = 0usize;
    for n in 0..=t {
        let nu = n as f64 / t as f64;
        if !(0.2..=0.8).contains(&nu) {
            continue;
        }
        total += 1;
        let (rmin, rmax) = asymptotics::rho_envelopes(nu, t).unwrap();
        if pmf.rho()[n] >= 0.9 * rmin && pmf.rho()[n] <= 1.1 * rmax {
            inside += 1;
        }
    }
    let frac = inside as f64 / total as f64;
    assert!(frac >= 0.95, "only {inside}/{total} sites inside the envelopes");
    println!(
        "acceptance 05 quasi-uniform plateau: PASS (center dev {:.2}%, {inside}/{total} enveloped)",
        100.0 * center_dev
    );
}

#[test]
fn acceptance_06_stationary_phase_oracle() {
    // maximize phi(nu, u) by bisecting the sign of its u-derivative
    let phi_prime = |nu: f64, u: f64| {
        let c = (PI * u).cos();
        PI * (2.0 * nu - 1.0) + PI * c / (1.0 + c * c).sqrt()
    };
    let (lo, hi) = asymptotics::validity_interval();
    let mut worst_u = 0.0f64;
    let mut worst_id = 0.0f64;
    for i in 0..50 {
        let nu = lo + (hi - lo) * (i as f64 + 0.5) / 50.0;
        let (mut a, mut b) = (1e-12, 1.0 - 1e-12);
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if phi_prime(nu, mid) > 0.0 {
                a = mid;
            } else {
                b = mid;
            }
        }
        let sp = asymptotics::stationary_point(nu).unwrap();
        worst_u = worst_u.max((0.5 * (a + b) - sp.u0()).abs());

        for t in [1usize, 100, 10_000] {
            let rmin = asymptotics::rho_envelopes(nu, t).unwrap().0;
            let alt = (2.0 / (PI * t as f64)) * (2.0 * sp.sin_omega0() * sp.cos_omega0());
            worst_id = worst_id.max((rmin - alt).abs());
        }
    }
    assert!(worst_u < 1e-8, "max |u* - u0| = {worst_u:e}");
    assert!(worst_id < 1e-12, "max envelope identity defect = {worst_id:e}");
    println!(
        "acceptance 06 stationary-phase oracle: PASS (|u*-u0| = {worst_u:.3e}, identity = {worst_id:.3e})"
    );
}

#[test]
fn acceptance_07_exit_route_equivalence() {
    let start = Instant::now();
    let q = QubitState::symmetric();
    let coin = CoinSpec::hadamard();
    let mut worst = 0.0f64;
    for n0 in [1usize, 5, 10, 25] {
        let tmax = 30 * n0;
        let closed = exit_time::exit_pmf_closed(&q, n0, tmax).unwrap();
        let filtered = exit_time::exit_pmf_filtered(&q, &coin, n0, tmax).unwrap();
        for (a, b) in closed.probabilities().iter().zip(filtered.probabilities()) {
            worst = worst.max((a - b).abs());
        }
    }
    let elapsed = start.elapsed();
    assert!(worst < 1e-10, "max |dp| = {worst:e}");
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}");
    println!("acceptance 07 exit equivalence: PASS (max |dp| = {worst:.3e}, {elapsed:?})");
}

#[test]
fn acceptance_08_classical_comparator() {
    let d = exit_time::classical_exit_pmf(100, 0.5, 4000).unwrap();
    let defect = d.survival().abs();
    assert!(defect < 1e-9, "sum defect {defect:e}");
    let argmax = d.argmax_time();
    assert!((197..=203).contains(&argmax), "argmax {argmax}");
    println!("acceptance 08 classical comparator: PASS (sum defect {defect:.3e}, argmax {argmax})");
}

#[test]
fn acceptance_09_exit_shape() {
    let n0 = 100usize;
    // the direct backend keeps the far tail accurate in relative terms;
    // sites behind the slow front never receive amplitude (or roundoff)
    // from the bulk, so the envelope is noise-free out to the horizon
    let d = exit_time::exit_pmf_closed_with(
        &QubitState::symmetric(),
        n0,
        1000,
        exit_time::ExitMethod::Direct,
    )
    .unwrap();
    let argmax = d.argmax_time();
    assert!((n0..=n0 + n0 / 5).contains(&argmax), "argmax {argmax}");

    // after 2 n0 the oscillation floor decays (up to sampling wiggle),
    // before 2 n0 the beating makes it visibly non-monotone
    let env = exit_time::decay_envelope(&d, n0, 1000).unwrap();
    let post: Vec<f64> = env.iter().filter(|(t, _)| *t > 2 * n0).map(|&(_, p)| p).collect();
    let max_post_rise = post
        .windows(2)
        .map(|w| w[1] / w[0])
        .fold(0.0f64, f64::max);
    assert!(max_post_rise < 1.15, "envelope rises by {max_post_rise} after 2 n0");

    let pre: Vec<f64> = env.iter().filter(|(t, _)| *t <= 2 * n0).map(|&(_, p)| p).collect();
    let max_pre_rise = pre.windows(2).map(|w| w[1] / w[0]).fold(0.0f64, f64::max);
    assert!(max_pre_rise > 1.5, "envelope unexpectedly monotone before 2 n0 ({max_pre_rise})");
    println!(
        "acceptance 09 exit shape: PASS (argmax {argmax}, envelope rise {:.3} post vs {:.3} pre)",
        max_post_rise, max_pre_rise
    );
}

#[test]
fn acceptance_10_exit_tail_behavior() {
    let n0 = 100usize;
    let d = exit_time::exit_pmf_closed_with(
        &QubitState::symmetric(),
        n0,
        1000,
        exit_time::ExitMethod::Direct,
    )
    .unwrap();
    let fit = exit_time::tail_exponent_fit(&d, 220, 650).unwrap();
    assert!(
        fit.exponent > -3.0 && fit.exponent < -2.5,
        "envelope exponent {} from {} points",
        fit.exponent,
        fit.points
    );

    let env = exit_time::decay_envelope(&d, 2 * n0 + 1, 682).unwrap();
    let mut worst_lo = f64::INFINITY;
    let mut worst_hi = 0.0f64;
    let mut tracked = 0usize;
    for (t, p) in env {
        if let Some(bound) = asymptotics::exit_lower_bound(n0, t) {
            let ratio = p / bound;
            worst_lo = worst_lo.min(ratio);
            worst_hi = worst_hi.max(ratio);
            tracked += 1;
        }
    }
    assert!(tracked > 10, "only {tracked} minima in the bound's domain");
    assert!(
        worst_lo >= 0.5 && worst_hi <= 2.0,
        "minima / bound ratios span [{worst_lo:.3}, {worst_hi:.3}]"
    );
    println!(
        "acceptance 10 exit tail: PASS (exponent {:.3}, {tracked} minima within [{:.3}, {:.3}] of the bound)",
        fit.exponent, worst_lo, worst_hi
    );
}
