//! Evolve a single Hadamard walk from one site and watch the position
//! statistics and the spin-position entanglement build up.
//!
//! Run with `cargo run --release --example hadamard_walk`.

use qwalk::{CoinParams, Qubit, WalkState};

fn main() {
    let coin = CoinParams::hadamard();
    // spin-up start: the walk drifts right and the distribution is asymmetric
    let mut state = WalkState::local(&Qubit::up());

    println!("{:>5} {:>10} {:>12} {:>10}", "t", "<j>", "variance", "S_E");
    state.evolve_observed(&coin, 100, |s| {
        if s.time() % 10 == 0 {
            let stats = s.position_stats();
            println!(
                "{:>5} {:>10.4} {:>12.4} {:>10.6}",
                s.time(),
                stats.mean,
                stats.variance,
                s.entanglement_entropy()
            );
        }
    });

    // the two ballistic peaks sit near +-t/sqrt(2)
    let t = state.time() as i64;
    let peak = state
        .site_range()
        .max_by(|&a, &b| {
            state
                .probability(a)
                .partial_cmp(&state.probability(b))
                .unwrap()
        })
        .unwrap();
    println!("\ndominant peak at j = {peak} (t = {t}), P = {:.4}", state.probability(peak));
}
