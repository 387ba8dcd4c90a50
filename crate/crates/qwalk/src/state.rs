//! Walk states on the line and their initial-profile builders.

use num_complex::Complex64;

use crate::coin::Qubit;
use crate::error::{Error, Result};

/// Gaussian initial-position envelope with dispersion `sigma0 >= 1`
/// (lattice units), truncated to `|j| <= cutoff` and renormalized.
///
/// The default cutoff is `ceil(6 sigma0)`; the probability mass discarded
/// there is below 1e-8.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianProfile {
    sigma0: f64,
    cutoff: i64,
}

impl GaussianProfile {
    pub fn new(sigma0: f64) -> Result<Self> {
        if !(sigma0 >= 1.0) {
            return Err(Error::Domain(format!(
                "sigma0 = {sigma0} must be >= 1 (narrower envelopes fall outside the validity regime)"
            )));
        }
        Ok(Self {
            sigma0,
            cutoff: (6.0 * sigma0).ceil() as i64,
        })
    }

    pub fn with_cutoff(sigma0: f64, cutoff: i64) -> Result<Self> {
        let mut p = Self::new(sigma0)?;
        if cutoff < 1 {
            return Err(Error::Domain("cutoff must be at least 1".into()));
        }
        p.cutoff = cutoff;
        Ok(p)
    }

    pub fn sigma0(&self) -> f64 {
        self.sigma0
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    /// Unit-norm real amplitudes `f(j)` for `j = -cutoff ..= cutoff`.
    pub fn amplitudes(&self) -> Vec<f64> {
        let s2 = self.sigma0 * self.sigma0;
        let mut f: Vec<f64> = (-self.cutoff..=self.cutoff)
            .map(|j| (-(j * j) as f64 / (4.0 * s2)).exp())
            .collect();
        let norm = f.iter().map(|x| x * x).sum::<f64>().sqrt();
        for x in &mut f {
            *x /= norm;
        }
        f
    }
}

/// State of a walker on the line: spin-up and spin-down amplitudes per
/// lattice site, stored densely from site `offset` upward, plus the step
/// count.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkState {
    pub(crate) offset: i64,
    pub(crate) up: Vec<Complex64>,
    pub(crate) down: Vec<Complex64>,
    pub(crate) time: u64,
}

impl WalkState {
    /// Initial state with all position mass on site 0 and the given coin
    /// state.
    pub fn local(qubit: &Qubit) -> Self {
        let (a, b) = qubit.spinor();
        Self {
            offset: 0,
            up: vec![a],
            down: vec![b],
            time: 0,
        }
    }

    /// Initial state with a Gaussian position envelope, spin factorized.
    pub fn gaussian(qubit: &Qubit, profile: &GaussianProfile) -> Self {
        let (a, b) = qubit.spinor();
        let f = profile.amplitudes();
        Self {
            offset: -profile.cutoff(),
            up: f.iter().map(|&x| a * x).collect(),
            down: f.iter().map(|&x| b * x).collect(),
            time: 0,
        }
    }

    pub fn time(&self) -> u64 {
        self.time
    }

    /// Leftmost stored lattice site.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn num_sites(&self) -> usize {
        self.up.len()
    }

    /// Stored lattice sites, leftmost..=rightmost.
    pub fn site_range(&self) -> std::ops::RangeInclusive<i64> {
        self.offset..=self.offset + self.up.len() as i64 - 1
    }

    pub fn up_amplitudes(&self) -> &[Complex64] {
        &self.up
    }

    pub fn down_amplitudes(&self) -> &[Complex64] {
        &self.down
    }

    /// Spin-up amplitude at lattice site `j` (zero outside storage).
    pub fn amplitude_up(&self, j: i64) -> Complex64 {
        self.lookup(&self.up, j)
    }

    /// Spin-down amplitude at lattice site `j` (zero outside storage).
    pub fn amplitude_down(&self, j: i64) -> Complex64 {
        self.lookup(&self.down, j)
    }

    /// Position probability `|a(j)|^2 + |b(j)|^2`.
    pub fn probability(&self, j: i64) -> f64 {
        self.amplitude_up(j).norm_sqr() + self.amplitude_down(j).norm_sqr()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.up
            .iter()
            .zip(&self.down)
            .map(|(a, b)| a.norm_sqr() + b.norm_sqr())
            .sum()
    }

    fn lookup(&self, arr: &[Complex64], j: i64) -> Complex64 {
        let i = j - self.offset;
        if i >= 0 && (i as usize) < arr.len() {
            arr[i as usize]
        } else {
            Complex64::new(0.0, 0.0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    #[test]
    fn local_spin_up() {
        let s = WalkState::local(&Qubit::up());
        assert_eq!(s.time(), 0);
        assert_abs_diff_eq!(s.amplitude_up(0).re, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.probability(1), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.norm_sqr(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn local_equator_splits_evenly() {
        let s = WalkState::local(&Qubit::new(0.5 * PI, 0.0).unwrap());
        assert_abs_diff_eq!(s.amplitude_up(0).re, FRAC_1_SQRT_2, epsilon = 1e-15);
        assert_abs_diff_eq!(s.amplitude_down(0).re, FRAC_1_SQRT_2, epsilon = 1e-15);
    }

    #[test]
    fn gaussian_weight_ratio() {
        let p = GaussianProfile::new(1.0).unwrap();
        let s = WalkState::gaussian(&Qubit::up(), &p);
        // P(0)/P(1) = e^{1/2} for sigma0 = 1
        assert_abs_diff_eq!(
            s.probability(0) / s.probability(1),
            (0.5f64).exp(),
            epsilon = 1e-12
        );
    }

    #[test]
    fn gaussian_unit_norm() {
        for sigma0 in [1.0, 2.5, 10.0, 40.0] {
            let p = GaussianProfile::new(sigma0).unwrap();
            let s = WalkState::gaussian(&Qubit::new(1.0, 2.0).unwrap(), &p);
            assert_abs_diff_eq!(s.norm_sqr(), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn gaussian_second_moment_matches_direct_sum() {
        // independent oracle: direct summation of j^2 e^{-j^2/(2 s^2)} / Z
        let sigma0 = 10.0_f64;
        let c = (6.0 * sigma0).ceil() as i64;
        let mut z = 0.0;
        let mut m2 = 0.0;
        for j in -c..=c {
            let w = (-(j * j) as f64 / (2.0 * sigma0 * sigma0)).exp();
            z += w;
            m2 += (j * j) as f64 * w;
        }
        let expected = m2 / z;
        assert_abs_diff_eq!(expected, 100.0, epsilon = 0.1);

        let p = GaussianProfile::new(sigma0).unwrap();
        let s = WalkState::gaussian(&Qubit::up(), &p);
        let got: f64 = s
            .site_range()
            .map(|j| (j * j) as f64 * s.probability(j))
            .sum();
        assert_abs_diff_eq!(got, expected, epsilon = 1e-9);
    }

    #[test]
    fn gaussian_symmetric() {
        let p = GaussianProfile::new(3.0).unwrap();
        let f = p.amplitudes();
        let n = f.len();
        for i in 0..n {
            assert_eq!(f[i], f[n - 1 - i]);
        }
    }

    #[test]
    fn truncation_discards_little_mass() {
        for sigma0 in [1.0_f64, 2.0, 5.0, 10.0] {
            let cutoff = (6.0 * sigma0).ceil() as i64;
            let wide = 4 * cutoff;
            let weight = |j: i64| (-(j * j) as f64 / (2.0 * sigma0 * sigma0)).exp();
            let total: f64 = (-wide..=wide).map(weight).sum();
            let kept: f64 = (-cutoff..=cutoff).map(weight).sum();
            assert!((total - kept) / total < 1e-8);
        }
    }

    #[test]
    fn narrow_profile_rejected() {
        assert!(GaussianProfile::new(0.99).is_err());
        assert!(GaussianProfile::new(f64::NAN).is_err());
    }
}
