//! Compare how local and Gaussian initial states spread: the long-time
//! variance of a wide Gaussian under a Fourier coin is almost frozen,
//! while a Hadamard coin keeps it ballistic.
//!
//! Run with `cargo run --release --example gaussian_spreading`.

use qwalk::{CoinParams, GaussianProfile, Qubit, WalkState};

fn main() {
    let qubit = Qubit::new(std::f64::consts::FRAC_PI_2, 0.0).unwrap();
    let profile = GaussianProfile::new(10.0).unwrap();
    let steps = 400u64;

    for (name, coin) in [
        ("Hadamard", CoinParams::hadamard()),
        ("Fourier", CoinParams::fourier()),
    ] {
        let mut local = WalkState::local(&qubit);
        let mut gauss = WalkState::gaussian(&qubit, &profile);
        local.evolve(&coin, steps);
        gauss.evolve(&coin, steps);
        let t2 = (steps as f64).powi(2);
        println!(
            "{name:>8}: local sigma^2/t^2 = {:.5}, gaussian (sigma0 = 10) = {:.5}",
            local.position_stats().variance / t2,
            (gauss.position_stats().variance - 100.0) / t2,
        );
    }
    println!("\nA Fourier coin freezes a wide Gaussian in place; a Hadamard coin does not.");
}
