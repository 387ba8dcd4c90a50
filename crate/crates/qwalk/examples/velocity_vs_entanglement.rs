//! The limit velocity of the walker determines its asymptotic
//! entanglement (given the polar angle, for local states, or the coin
//! phase, for wide Gaussians). This example sweeps qubits and shows the
//! entanglement recovered from the velocity alone.
//!
//! Run with `cargo run --release --example velocity_vs_entanglement`.

use qwalk::ensemble::{scatter_dataset, StateKind};
use qwalk::kspace;
use qwalk::{CoinParams, Qubit};
use std::f64::consts::PI;

fn main() {
    let deltas = [0.0, PI / 4.0];
    let records = scatter_dataset(StateKind::Local, &deltas, 0.0, 0.0, 9).unwrap();
    println!("{:>8} {:>8} {:>12} {:>10}", "delta", "alpha", "var rate", "S_E_bar");
    for r in &records {
        println!(
            "{:>8.4} {:>8.4} {:>12.6} {:>10.6}",
            r.delta, r.alpha, r.variance_rate, r.entropy
        );
    }

    // recover the entanglement indicator from (alpha, u) alone
    println!("\nentanglement recovered from the limit velocity:");
    let coin = CoinParams::hadamard();
    for alpha in [0.5, 1.5, 2.5] {
        let qubit = Qubit::new(alpha, 0.0).unwrap();
        let u = kspace::limit_velocity_local(&qubit, &coin).unwrap();
        let direct = kspace::delta_local(&qubit, &coin).unwrap();
        let from_u = kspace::delta_from_velocity_local(alpha, u).unwrap();
        println!(
            "  alpha = {alpha:.1}: u = {u:+.4}, Delta direct = {direct:.10}, from velocity = {from_u:.10}"
        );
    }
    println!("\na null limit velocity is necessary (not sufficient) for maximal entanglement.");
}
