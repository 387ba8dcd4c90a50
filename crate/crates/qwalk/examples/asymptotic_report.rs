//! Full long-time report for one configuration, evaluated by two
//! independent routes: closed-form expressions and direct momentum-band
//! quadrature.
//!
//! Run with `cargo run --release --example asymptotic_report`.

use qwalk::kspace;
use qwalk::{CoinParams, Qubit};

fn main() {
    let qubit = Qubit::new(1.0, 0.4).unwrap();
    let coin = CoinParams::fair(0.6, 0.2);

    let closed = kspace::report_local_closed(&qubit, &coin).unwrap();
    let quad = kspace::report_local_quadrature(&qubit, &coin, 4096).unwrap();

    println!("local state, coin delta = {:.4}, eta = {:.4}", coin.delta(), coin.eta());
    println!("{:>14} {:>14} {:>14}", "", "closed form", "quadrature");
    for (label, a, b) in [
        ("I", closed.i_integral, quad.i_integral),
        ("R", closed.r_integral, quad.r_integral),
        ("velocity u", closed.velocity, quad.velocity),
        ("sigma^2/t^2", closed.variance_rate, quad.variance_rate),
        ("Delta", closed.delta, quad.delta),
        ("S_E_bar", closed.entropy, quad.entropy),
    ] {
        println!("{label:>14} {a:>14.9} {b:>14.9}");
    }

    // the quadrature route also resolves the full coherence term
    let (a_bar, gamma) = quad
        .gamma_bar
        .map(|g| (quad.a_bar, g))
        .expect("quadrature reports carry gamma_bar");
    println!("\nreduced coin state: A_bar = {a_bar:.9}, gamma_bar = {gamma:.9}");
}
