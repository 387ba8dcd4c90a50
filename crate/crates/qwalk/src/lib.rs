//! Discrete-time quantum walks on the one-dimensional lattice.
//!
//! The crate simulates split-step walks driven by a general balanced or
//! biased SU(2) coin exactly (complex amplitudes per site, no sampling),
//! and evaluates the matching long-time momentum-space asymptotics:
//! ballistic variance growth, the limit velocity of the wavefront, and the
//! stationary spin-position entanglement entropy. Closed-form expressions
//! and direct quadrature over the quasi-momentum band are both available,
//! so every asymptotic quantity can be cross-checked against the exact
//! simulation and against an independent evaluation route.
//!
//! Entry points:
//! - [`WalkState`] / [`CoinParams`] / [`Qubit`]: exact evolution and
//!   per-step observables ([`WalkState::position_stats`],
//!   [`WalkState::entanglement_entropy`]).
//! - [`kspace`]: long-time integrals, limit velocity, entanglement
//!   parameter and entropy, closed-form and quadrature reports.
//! - [`ensemble`]: Bloch-sphere averages, qubit grids, scatter datasets
//!   and ensemble time series.
//! - [`cli`]: the `qwalk` command-line front end (CSV output).
//!
//! Runnable walkthroughs for each capability live in `examples/`.

pub mod cli;
pub mod coin;
pub mod ensemble;
pub mod error;
pub mod evolve;
pub mod kspace;
pub mod quad;
pub mod state;

pub use coin::{CoinParams, Qubit};
pub use error::{Error, Result};
pub use evolve::{PositionStats, ReducedCoinState};
pub use state::{GaussianProfile, WalkState};
