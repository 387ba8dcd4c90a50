//! Cross-validation between the exact lattice simulation and the
//! momentum-space asymptotics: two independent evaluation routes for the
//! same observables must agree in the long-time regime.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use num_complex::Complex64;

use qwalk::coin::{CoinParams, Qubit};
use qwalk::evolve::ReducedCoinState;
use qwalk::kspace;
use qwalk::quad;
use qwalk::state::{GaussianProfile, WalkState};

/// Trailing mean of `S_E` over the last `window` steps of an evolution:
/// the asymptotic entropy is a time-averaged limit, so an instantaneous
/// sample would carry a decaying oscillation.
fn run_walk(
    mut state: WalkState,
    coin: &CoinParams,
    steps: u64,
    window: u64,
) -> (f64, f64, f64) {
    let mut tail = Vec::new();
    state.evolve_observed(coin, steps, |st| {
        if st.time() + window > steps {
            tail.push(st.entanglement_entropy());
        }
    });
    let stats = state.position_stats();
    let t = steps as f64;
    (
        stats.mean / t,
        stats.variance / (t * t),
        tail.iter().sum::<f64>() / tail.len() as f64,
    )
}

#[test]
fn local_walks_match_quadrature_reports() {
    let t = 600u64;
    let mut rng = ChaCha8Rng::seed_from_u64(0x0417);
    let mut cases = Vec::new();
    for _ in 0..12 {
        cases.push((
            Qubit::new(rng.random::<f64>() * PI, rng.random::<f64>() * 2.0 * PI).unwrap(),
            CoinParams::fair(
                rng.random::<f64>() * 2.0 * PI,
                rng.random::<f64>() * 2.0 * PI,
            ),
        ));
    }
    cases.par_iter().for_each(|(qubit, coin)| {
        let report = kspace::report_local_quadrature(qubit, coin, 4096).unwrap();
        let (v_sim, var_sim, ent_sim) = run_walk(WalkState::local(qubit), coin, t, 8);
        assert!(
            (v_sim - report.velocity).abs() < 5e-3,
            "velocity: sim {v_sim} vs quadrature {}",
            report.velocity
        );
        assert!(
            (var_sim - report.variance_rate).abs() / report.variance_rate < 0.02,
            "variance rate: sim {var_sim} vs quadrature {}",
            report.variance_rate
        );
        assert!(
            (ent_sim - report.entropy).abs() < 0.01,
            "entropy: sim {ent_sim} vs quadrature {}",
            report.entropy
        );
    });
}

/// Exact finite-time reduced coin state via the momentum-space
/// diagonalization: `psi(k, t) = c+ l+^t phi+ + c- l-^t phi-`, integrated
/// over the band. Independent of the lattice convolution kernel; exact as
/// long as the node count exceeds the walk's support.
fn kspace_reduced_state(
    qubit: &Qubit,
    coin: &CoinParams,
    sigma0: f64,
    t: u64,
    nodes: usize,
) -> ReducedCoinState {
    let a = quad::average_periodic(nodes, |k| {
        let es = kspace::eigensystem(k, coin).unwrap();
        let f = Complex64::new(kspace::gaussian_ftilde(k, sigma0), 0.0);
        let (cp, cm) = kspace::expansion_coefficients(&es, qubit, f);
        let lp = Complex64::from_polar(1.0, t as f64 * es.lambda_plus.arg());
        let lm = Complex64::from_polar(1.0, t as f64 * es.lambda_minus.arg());
        (cp * lp * es.phi_plus[0] + cm * lm * es.phi_minus[0]).norm_sqr()
    });
    let gamma = quad::average_periodic_complex(nodes, |k| {
        let es = kspace::eigensystem(k, coin).unwrap();
        let f = Complex64::new(kspace::gaussian_ftilde(k, sigma0), 0.0);
        let (cp, cm) = kspace::expansion_coefficients(&es, qubit, f);
        let lp = Complex64::from_polar(1.0, t as f64 * es.lambda_plus.arg());
        let lm = Complex64::from_polar(1.0, t as f64 * es.lambda_minus.arg());
        let up = cp * lp * es.phi_plus[0] + cm * lm * es.phi_minus[0];
        let down = cp * lp * es.phi_plus[1] + cm * lm * es.phi_minus[1];
        up * down.conj()
    });
    ReducedCoinState::new(a, gamma)
}

#[test]
fn gaussian_walks_match_quadrature_reports() {
    // wide envelope, long horizon: the delocalized asymptotics regime
    let sigma0 = 25.0;
    let t = 2000u64;
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a55);
    let mut cases = Vec::new();
    for coin in [CoinParams::hadamard(), CoinParams::fourier()] {
        for _ in 0..10 {
            cases.push((
                Qubit::new(rng.random::<f64>() * PI, rng.random::<f64>() * 2.0 * PI).unwrap(),
                coin,
            ));
        }
    }
    // a 10 sigma0 cutoff keeps the truncated-envelope mismatch against the
    // continuum transform below the 1e-6 cross-check tolerance
    let profile = GaussianProfile::with_cutoff(sigma0, 250).unwrap();
    cases.par_iter().for_each(|(qubit, coin)| {
        let report = kspace::report_gaussian_quadrature(qubit, coin, sigma0, 4096).unwrap();
        let state = WalkState::gaussian(qubit, &profile);
        let initial_var = state.position_stats().variance;
        let mut state2 = state.clone();
        state2.evolve(coin, t);
        let rho_sim = state2.reduced_coin_state();
        let (v_sim, var_sim, ent_sim) = run_walk(state, coin, t, 16);
        let t2 = (t as f64) * (t as f64);
        assert!(
            (v_sim - report.velocity).abs() < 0.02,
            "velocity: sim {v_sim} vs quadrature {}",
            report.velocity
        );
        assert!(
            (var_sim - initial_var / t2 - report.variance_rate).abs() < 0.02,
            "variance rate: sim {} vs quadrature {}",
            var_sim - initial_var / t2,
            report.variance_rate
        );
        // exact finite-time cross-check of the reduced coin state: the
        // lattice convolution and the band diagonalization must agree at
        // any t, converged or not
        let rho_k = kspace_reduced_state(qubit, coin, sigma0, t, 8192);
        assert!(
            (rho_sim.a() - rho_k.a()).abs() < 1e-6
                && (rho_sim.gamma() - rho_k.gamma()).norm() < 1e-6,
            "reduced state: sim ({}, {}) vs k-space ({}, {})",
            rho_sim.a(),
            rho_sim.gamma(),
            rho_k.a(),
            rho_k.gamma()
        );
        // the asymptote itself is only reached within 0.02 by t = 2000 for
        // the fast-converging Hadamard phase (delta = 0); the Fourier phase
        // approaches it on a much longer t >> sigma0^2 timescale
        if coin.delta() < 1.0 {
            assert!(
                (ent_sim - report.entropy).abs() < 0.02,
                "entropy: sim {ent_sim} vs quadrature {}",
                report.entropy
            );
        }
    });
}

#[test]
fn quadrature_reports_match_closed_forms() {
    // third route: the closed-form expressions
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..40 {
        let qubit = Qubit::new(rng.random::<f64>() * PI, rng.random::<f64>() * 2.0 * PI).unwrap();
        let coin = CoinParams::fair(
            rng.random::<f64>() * 2.0 * PI,
            rng.random::<f64>() * 2.0 * PI,
        );
        let quad = kspace::report_local_quadrature(&qubit, &coin, 4096).unwrap();
        let closed = kspace::report_local_closed(&qubit, &coin).unwrap();
        assert!((quad.velocity - closed.velocity).abs() < 1e-10);
        assert!((quad.variance_rate - closed.variance_rate).abs() < 1e-10);
        assert!((quad.delta - closed.delta).abs() < 1e-10);
        assert!((quad.entropy - closed.entropy).abs() < 1e-9);

        // the sigma0 >> 1 closed forms against wide-envelope quadrature
        let quad = kspace::report_gaussian_quadrature(&qubit, &coin, 100.0, 8192).unwrap();
        let closed = kspace::report_gaussian_closed(&qubit, &coin).unwrap();
        assert!((quad.velocity - closed.velocity).abs() < 1e-3);
        assert!((quad.delta - closed.delta).abs() < 1e-3);
        assert!((quad.entropy - closed.entropy).abs() < 5e-3);
    }
}

#[test]
fn velocity_slope_matches_running_mean() {
    // the limit velocity is the slope of <j>(t); check the slope between
    // two late times rather than the ratio at one time
    let qubit = Qubit::new(0.8, 0.5).unwrap();
    for coin in [CoinParams::hadamard(), CoinParams::fourier()] {
        let u = kspace::limit_velocity_local(&qubit, &coin).unwrap();
        let mut s = WalkState::local(&qubit);
        s.evolve(&coin, 400);
        let m1 = s.position_stats().mean;
        s.evolve(&coin, 200);
        let m2 = s.position_stats().mean;
        let slope = (m2 - m1) / 200.0;
        assert!(
            (slope - u).abs() < 5e-3,
            "slope {slope} vs limit velocity {u}"
        );
    }
}
