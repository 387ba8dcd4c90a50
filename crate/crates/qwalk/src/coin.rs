//! Coin states (qubits on the Bloch sphere) and SU(2) quantum coins.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A coin (spin) state written with Bloch-sphere angles: polar `alpha` in
/// `[0, pi]` and azimuth `beta`, stored canonically in `[0, 2*pi)`.
///
/// The corresponding spinor is `(cos(alpha/2), e^{i beta} sin(alpha/2))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Qubit {
    alpha: f64,
    beta: f64,
}

impl Qubit {
    /// Azimuth inputs in `[-pi, pi]` (or any real value) are reduced mod
    /// `2*pi`; a polar angle outside `[0, pi]` is rejected.
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&alpha) {
            return Err(Error::Domain(format!(
                "polar angle alpha = {alpha} must lie in [0, pi]"
            )));
        }
        if !beta.is_finite() {
            return Err(Error::Domain(format!("azimuth beta = {beta} must be finite")));
        }
        let beta = beta.rem_euclid(TAU);
        Ok(Self { alpha, beta })
    }

    /// Spin-up basis state (north pole).
    pub fn up() -> Self {
        Self { alpha: 0.0, beta: 0.0 }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Unit-norm spinor `(cos(alpha/2), e^{i beta} sin(alpha/2))`.
    pub fn spinor(&self) -> (Complex64, Complex64) {
        let half = 0.5 * self.alpha;
        (
            Complex64::new(half.cos(), 0.0),
            Complex64::from_polar(half.sin(), self.beta),
        )
    }
}

/// Parameters of the general SU(2) coin
///
/// ```text
/// [ sqrt(q)              sqrt(1-q) e^{i theta}   ]
/// [ sqrt(1-q) e^{i phi}  -sqrt(q) e^{i(theta+phi)} ]
/// ```
///
/// with chirality `q` in `[0, 1]` and phases `theta`, `phi`. The phase
/// combinations `delta = (theta + phi)/2` and `eta = (theta - phi)/2` are
/// the ones the long-time closed forms actually depend on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinParams {
    q: f64,
    theta: f64,
    phi: f64,
}

impl CoinParams {
    pub fn new(q: f64, theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&q) {
            return Err(Error::Domain(format!("chirality q = {q} must lie in [0, 1]")));
        }
        if !theta.is_finite() || !phi.is_finite() {
            return Err(Error::Domain("coin phases must be finite".into()));
        }
        Ok(Self {
            q,
            theta: theta.rem_euclid(TAU),
            phi: phi.rem_euclid(TAU),
        })
    }

    /// Balanced coin without relative phases: `(1/2, 0, 0)`.
    pub fn hadamard() -> Self {
        Self { q: 0.5, theta: 0.0, phi: 0.0 }
    }

    /// Balanced coin with a `pi/2` relative phase: `(1/2, pi/2, pi/2)`.
    pub fn fourier() -> Self {
        Self { q: 0.5, theta: 0.5 * PI, phi: 0.5 * PI }
    }

    /// Balanced coin with the given phases.
    pub fn fair(theta: f64, phi: f64) -> Self {
        Self {
            q: 0.5,
            theta: theta.rem_euclid(TAU),
            phi: phi.rem_euclid(TAU),
        }
    }

    /// Balanced coin specified by the phase combinations `delta` and `eta`.
    pub fn fair_from_delta_eta(delta: f64, eta: f64) -> Self {
        Self::fair(delta + eta, delta - eta)
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// `(theta + phi) / 2`.
    pub fn delta(&self) -> f64 {
        0.5 * (self.theta + self.phi)
    }

    /// `(theta - phi) / 2`.
    pub fn eta(&self) -> f64 {
        0.5 * (self.theta - self.phi)
    }

    /// A coin is balanced (fair) when `q = 1/2` exactly; every asymptotic
    /// closed form requires this.
    pub fn is_fair(&self) -> bool {
        self.q == 0.5
    }

    /// The 2x2 unitary matrix, row-major.
    pub fn matrix(&self) -> [[Complex64; 2]; 2] {
        let sq = self.q.sqrt();
        let sp = (1.0 - self.q).sqrt();
        [
            [
                Complex64::new(sq, 0.0),
                Complex64::from_polar(sp, self.theta),
            ],
            [
                Complex64::from_polar(sp, self.phi),
                -Complex64::from_polar(sq, self.theta + self.phi),
            ],
        ]
    }
}
