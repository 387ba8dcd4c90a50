//! Exact lattice evolution `U^t = (S (C ⊗ 1))^t` and the observables read
//! off the evolved state: position statistics, the reduced coin state, and
//! the spin-position entanglement entropy.
//!
//! This brute-force path is the independent oracle against which every
//! closed-form asymptotic result is cross-checked.

use num_complex::Complex64;

use crate::coin::CoinParams;
use crate::state::WalkState;

/// Position moments of a walk state at a fixed time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PositionStats {
    /// `<j>` in lattice units.
    pub mean: f64,
    /// `<j^2>` in lattice units squared.
    pub second_moment: f64,
    /// `<j^2> - <j>^2`, floored at zero against round-off.
    pub variance: f64,
    pub time: u64,
}

/// The 2x2 reduced coin state after tracing out position:
/// `[[A, gamma], [conj(gamma), B]]` with `B = 1 - A`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedCoinState {
    a: f64,
    gamma: Complex64,
}

impl ReducedCoinState {
    pub fn new(a: f64, gamma: Complex64) -> Self {
        Self { a, gamma }
    }

    /// Spin-up population `A`.
    pub fn a(&self) -> f64 {
        self.a
    }

    /// Spin-down population `B = 1 - A`.
    pub fn b(&self) -> f64 {
        1.0 - self.a
    }

    /// Coherence `gamma`.
    pub fn gamma(&self) -> Complex64 {
        self.gamma
    }

    /// Eigenvalues `1/2 ± sqrt(1/4 - A(1-A) + |gamma|^2)`, clamped to
    /// `[0, 1]` to absorb round-off.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let disc = (0.25 - self.a * (1.0 - self.a) + self.gamma.norm_sqr()).max(0.0);
        let r = disc.sqrt();
        ((0.5 + r).clamp(0.0, 1.0), (0.5 - r).clamp(0.0, 1.0))
    }

    /// Von Neumann entropy in bits, in `[0, 1]`.
    pub fn entanglement_entropy(&self) -> f64 {
        let (lp, lm) = self.eigenvalues();
        entropy_bits(lp) + entropy_bits(lm)
    }
}

/// `-x log2 x` with the `0 log 0 = 0` convention.
pub(crate) fn entropy_bits(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        -x * x.log2()
    }
}

impl WalkState {
    /// One step of the walk: coin applied at every site, then spin-up
    /// amplitudes shifted `j -> j+1` and spin-down `j -> j-1`. The storage
    /// grows by one site on each side.
    pub fn step(&mut self, coin: &CoinParams) {
        self.evolve(coin, 1);
    }

    /// Apply `steps` walk steps.
    pub fn evolve(&mut self, coin: &CoinParams, steps: u64) {
        self.evolve_impl(coin, steps, None);
    }

    /// Apply `steps` walk steps, invoking `observer` on the state after
    /// every step (for time-series capture).
    pub fn evolve_observed<F>(&mut self, coin: &CoinParams, steps: u64, mut observer: F)
    where
        F: FnMut(&WalkState),
    {
        self.evolve_impl(coin, steps, Some(&mut observer));
    }

    fn evolve_impl(
        &mut self,
        coin: &CoinParams,
        steps: u64,
        mut observer: Option<&mut dyn FnMut(&WalkState)>,
    ) {
        if steps == 0 {
            return;
        }
        let c = coin.matrix();
        let n = self.up.len();
        let pad = steps as usize;
        let total = n + 2 * pad;
        let zero = Complex64::new(0.0, 0.0);

        // grow storage once, up front, to the final light-cone size
        let mut up = vec![zero; total];
        let mut down = vec![zero; total];
        up[pad..pad + n].copy_from_slice(&self.up);
        down[pad..pad + n].copy_from_slice(&self.down);
        self.up = up;
        self.down = down;
        self.offset -= pad as i64;

        let mut scratch_up = vec![zero; total];
        let mut scratch_down = vec![zero; total];
        // active (possibly nonzero) index window, inclusive
        let mut lo = pad;
        let mut hi = pad + n - 1;

        for _ in 0..steps {
            let new_lo = lo - 1;
            let new_hi = hi + 1;
            for m in new_lo..=new_hi {
                // up amplitude at m arrives from site m-1; down from m+1
                scratch_up[m] = if m >= lo + 1 && m <= hi + 1 {
                    c[0][0] * self.up[m - 1] + c[0][1] * self.down[m - 1]
                } else {
                    zero
                };
                scratch_down[m] = if m + 1 >= lo && m + 1 <= hi {
                    c[1][0] * self.up[m + 1] + c[1][1] * self.down[m + 1]
                } else {
                    zero
                };
            }
            std::mem::swap(&mut self.up, &mut scratch_up);
            std::mem::swap(&mut self.down, &mut scratch_down);
            lo = new_lo;
            hi = new_hi;
            self.time += 1;
            if let Some(obs) = observer.as_deref_mut() {
                obs(self);
            }
        }
    }

    /// First and second position moments and the variance.
    pub fn position_stats(&self) -> PositionStats {
        let mut mean = 0.0;
        let mut second = 0.0;
        for (i, (a, b)) in self.up.iter().zip(&self.down).enumerate() {
            let p = a.norm_sqr() + b.norm_sqr();
            if p == 0.0 {
                continue;
            }
            let j = (self.offset + i as i64) as f64;
            mean += j * p;
            second += j * j * p;
        }
        PositionStats {
            mean,
            second_moment: second,
            variance: (second - mean * mean).max(0.0),
            time: self.time,
        }
    }

    /// Trace out position: `A = sum |a(j)|^2`, `gamma = sum a(j) conj(b(j))`.
    pub fn reduced_coin_state(&self) -> ReducedCoinState {
        let mut a_pop = 0.0;
        let mut gamma = Complex64::new(0.0, 0.0);
        for (a, b) in self.up.iter().zip(&self.down) {
            a_pop += a.norm_sqr();
            gamma += a * b.conj();
        }
        ReducedCoinState::new(a_pop, gamma)
    }

    /// Entanglement entropy of the current state.
    pub fn entanglement_entropy(&self) -> f64 {
        self.reduced_coin_state().entanglement_entropy()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coin::Qubit;
    use crate::state::GaussianProfile;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    #[test]
    fn one_step_hadamard_from_spin_up() {
        let mut s = WalkState::local(&Qubit::up());
        s.step(&CoinParams::hadamard());
        assert_eq!(s.time(), 1);
        assert_abs_diff_eq!(s.amplitude_up(1).re, FRAC_1_SQRT_2, epsilon = 1e-14);
        assert_abs_diff_eq!(s.amplitude_down(-1).re, FRAC_1_SQRT_2, epsilon = 1e-14);
        assert_abs_diff_eq!(s.amplitude_up(-1).norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.amplitude_down(1).norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn two_step_hadamard_amplitudes() {
        let mut s = WalkState::local(&Qubit::up());
        s.evolve(&CoinParams::hadamard(), 2);
        assert_abs_diff_eq!(s.amplitude_up(2).re, 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(s.amplitude_up(0).re, 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(s.amplitude_down(0).re, 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(s.amplitude_down(-2).re, -0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(s.probability(0), 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(s.probability(2), 0.25, epsilon = 1e-14);
        assert_abs_diff_eq!(s.probability(-2), 0.25, epsilon = 1e-14);
    }

    #[test]
    fn zero_steps_is_identity() {
        let mut s = WalkState::local(&Qubit::new(1.0, 2.0).unwrap());
        let before = s.clone();
        s.evolve(&CoinParams::fourier(), 0);
        assert_eq!(s, before);
    }

    #[test]
    fn q_one_spin_up_moves_right() {
        let mut s = WalkState::local(&Qubit::up());
        let coin = CoinParams::new(1.0, 0.0, 0.0).unwrap();
        s.evolve(&coin, 25);
        assert_abs_diff_eq!(s.probability(25), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn norm_preserved() {
        let mut s = WalkState::gaussian(
            &Qubit::new(2.0, 4.0).unwrap(),
            &GaussianProfile::new(2.0).unwrap(),
        );
        s.evolve(&CoinParams::new(0.3, 1.0, 2.0).unwrap(), 200);
        assert_abs_diff_eq!(s.norm_sqr(), 1.0, epsilon = 1e-10);
    }

    #[test]
    fn light_cone_support() {
        let mut s = WalkState::local(&Qubit::new(0.7, 1.1).unwrap());
        let t = 37;
        s.evolve(&CoinParams::hadamard(), t);
        for j in s.site_range() {
            if j.unsigned_abs() > t {
                assert_eq!(s.probability(j), 0.0);
            }
        }
    }

    #[test]
    fn local_stats_at_origin() {
        let s = WalkState::local(&Qubit::new(0.3, 0.4).unwrap());
        let st = s.position_stats();
        assert_eq!(st.mean, 0.0);
        assert_eq!(st.variance, 0.0);
    }

    #[test]
    fn mean_bounded_by_time() {
        let mut s = WalkState::local(&Qubit::up());
        s.evolve(&CoinParams::hadamard(), 60);
        let st = s.position_stats();
        assert!(st.mean.abs() <= 60.0);
        assert!(st.variance >= 0.0);
    }

    #[test]
    fn reduced_state_examples() {
        let rho = WalkState::local(&Qubit::up()).reduced_coin_state();
        assert_abs_diff_eq!(rho.a(), 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(rho.gamma().norm(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(rho.entanglement_entropy(), 0.0, epsilon = 1e-12);

        let mut s = WalkState::local(&Qubit::up());
        s.step(&CoinParams::hadamard());
        let rho = s.reduced_coin_state();
        assert_abs_diff_eq!(rho.a(), 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(rho.gamma().norm(), 0.0, epsilon = 1e-14);

        s.step(&CoinParams::hadamard());
        let rho = s.reduced_coin_state();
        assert_abs_diff_eq!(rho.a(), 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(rho.gamma().re, 0.25, epsilon = 1e-14);
        assert_abs_diff_eq!(rho.gamma().im, 0.0, epsilon = 1e-14);
        // eigenvalues {3/4, 1/4}
        assert_abs_diff_eq!(rho.entanglement_entropy(), 0.8112781244591328, epsilon = 1e-12);
    }

    #[test]
    fn maximal_entropy_state() {
        let rho = ReducedCoinState::new(0.5, Complex64::new(0.0, 0.0));
        assert_abs_diff_eq!(rho.entanglement_entropy(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn positive_semidefinite_along_walk() {
        let mut s = WalkState::local(&Qubit::new(0.9, 5.0).unwrap());
        s.evolve_observed(&CoinParams::fourier(), 50, |st| {
            let rho = st.reduced_coin_state();
            assert!(rho.a() >= -1e-12 && rho.a() <= 1.0 + 1e-12);
            assert!(rho.a() * rho.b() - rho.gamma().norm_sqr() >= -1e-12);
            let se = rho.entanglement_entropy();
            assert!((-1e-12..=1.0 + 1e-12).contains(&se));
        });
    }

    #[test]
    fn mean_sign_symmetry() {
        // qubit (alpha, beta) vs (pi - alpha, pi - beta - 2(delta + eta))
        // gives a mirrored walk under the same coin at every step
        let coin = CoinParams::fair(0.9, 0.3);
        let two_de = 2.0 * (coin.delta() + coin.eta());
        let (alpha, beta) = (1.1, 2.3);
        let mut s1 = WalkState::local(&Qubit::new(alpha, beta).unwrap());
        let mut s2 = WalkState::local(&Qubit::new(PI - alpha, PI - beta - two_de).unwrap());
        for _ in 0..40 {
            s1.step(&coin);
            s2.step(&coin);
            let m1 = s1.position_stats().mean;
            let m2 = s2.position_stats().mean;
            assert_abs_diff_eq!(m1, -m2, epsilon = 1e-10);
        }
    }

    #[test]
    fn observer_sees_every_step() {
        let mut seen = Vec::new();
        let mut s = WalkState::local(&Qubit::up());
        s.evolve_observed(&CoinParams::hadamard(), 5, |st| seen.push(st.time()));
        assert_eq!(seen, vec![1, 2, 3, 4, 5]);
    }
}
