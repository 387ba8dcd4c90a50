//! Bloch-sphere averaging and parameter sweeps: uniform-measure qubit
//! averages, the 2016-qubit ensemble time series, and the scatter datasets
//! linking long-time variance to asymptotic entanglement.

use std::f64::consts::{PI, TAU};

use rayon::prelude::*;

use crate::coin::{CoinParams, Qubit};
use crate::error::{Error, Result};
use crate::kspace;
use crate::state::{GaussianProfile, WalkState};

/// Weighting used when averaging over initial qubits.
///
/// The closed-form averages use the flat product measure
/// `d(alpha)/pi * d(beta)/2pi`; the Haar (`sin alpha`) measure is offered
/// for comparison only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlochMeasure {
    Flat,
    Haar,
}

/// Average `f` over the `(alpha, beta)` rectangle with a midpoint product
/// grid of spacing about `step` (radians) in each angle.
pub fn bloch_average<F>(f: F, step: f64, measure: BlochMeasure) -> f64
where
    F: Fn(&Qubit) -> f64 + Sync,
{
    let na = ((PI / step).round() as usize).max(1);
    let nb = ((TAU / step).round() as usize).max(1);
    let ha = PI / na as f64;
    let hb = TAU / nb as f64;
    let rows: Vec<(f64, f64)> = (0..na)
        .into_par_iter()
        .map(|i| {
            let alpha = (i as f64 + 0.5) * ha;
            let w = match measure {
                BlochMeasure::Flat => 1.0,
                BlochMeasure::Haar => alpha.sin(),
            };
            let qubit_row: f64 = (0..nb)
                .map(|j| {
                    let beta = (j as f64 + 0.5) * hb;
                    f(&Qubit::new(alpha, beta).expect("midpoint grid stays in range"))
                })
                .sum();
            (w * qubit_row, w * nb as f64)
        })
        .collect();
    let (num, den) = rows
        .into_iter()
        .fold((0.0, 0.0), |(n, d), (rn, rd)| (n + rn, d + rd));
    num / den
}

/// Rectangular grid of initial qubits with fixed angular increments
/// starting at `(0, 0)`. Increment `0.1` gives the 32 x 63 = 2016-point
/// ensemble grid.
#[derive(Debug, Clone)]
pub struct QubitGrid {
    alphas: Vec<f64>,
    betas: Vec<f64>,
}

impl QubitGrid {
    pub fn with_step(step: f64) -> Result<Self> {
        if !(step > 0.0) {
            return Err(Error::Domain("grid step must be positive".into()));
        }
        let count = |end: f64| ((end / step).floor() as usize) + 1;
        Ok(Self {
            alphas: (0..count(PI)).map(|i| i as f64 * step).collect(),
            betas: (0..count(TAU)).map(|i| i as f64 * step).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.alphas.len() * self.betas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Grid points in row-major `(alpha, beta)` order.
    pub fn qubits(&self) -> Vec<Qubit> {
        let mut out = Vec::with_capacity(self.len());
        for &a in &self.alphas {
            for &b in &self.betas {
                out.push(Qubit::new(a, b).expect("grid angles stay in range"));
            }
        }
        out
    }

    /// Every `stride`-th point of the flattened grid; `stride = 9` thins
    /// the 2016-point grid to 224 qubits.
    pub fn subsample(&self, stride: usize) -> Vec<Qubit> {
        self.qubits()
            .into_iter()
            .step_by(stride.max(1))
            .collect()
    }
}

/// Per-step ensemble averages of position variance and entanglement.
#[derive(Debug, Clone)]
pub struct EnsembleSeries {
    /// Initial position variance of the common envelope (`sigma0^2`-ish,
    /// measured on the actual truncated state).
    pub initial_variance: f64,
    /// `<sigma^2>(t)` for `t = 0..=steps`, averaged over the qubit set.
    pub mean_variance: Vec<f64>,
    /// `<S_E>(t)` for `t = 0..=steps`.
    pub mean_entropy: Vec<f64>,
    /// Number of qubits averaged.
    pub ensemble_size: usize,
}

impl EnsembleSeries {
    pub fn steps(&self) -> usize {
        self.mean_variance.len() - 1
    }
}

/// Evolve every qubit of the increment-0.1 grid (optionally thinned by
/// `stride`) from a Gaussian state and average variance and entanglement
/// per step. Walks run in parallel; the reduction order is fixed.
pub fn figure3_ensemble(
    coin: &CoinParams,
    sigma0: f64,
    steps: u64,
    stride: usize,
) -> Result<EnsembleSeries> {
    let profile = GaussianProfile::new(sigma0)?;
    let qubits = QubitGrid::with_step(0.1)?.subsample(stride);
    let n = qubits.len();
    let len = steps as usize + 1;

    let series: Vec<(Vec<f64>, Vec<f64>)> = qubits
        .par_iter()
        .map(|qubit| {
            let mut state = WalkState::gaussian(qubit, &profile);
            let mut var = Vec::with_capacity(len);
            let mut ent = Vec::with_capacity(len);
            var.push(state.position_stats().variance);
            ent.push(state.entanglement_entropy());
            state.evolve_observed(coin, steps, |s| {
                var.push(s.position_stats().variance);
                ent.push(s.entanglement_entropy());
            });
            (var, ent)
        })
        .collect();

    let mut mean_variance = vec![0.0; len];
    let mut mean_entropy = vec![0.0; len];
    for (var, ent) in &series {
        for t in 0..len {
            mean_variance[t] += var[t];
            mean_entropy[t] += ent[t];
        }
    }
    for t in 0..len {
        mean_variance[t] /= n as f64;
        mean_entropy[t] /= n as f64;
    }
    let initial_variance = mean_variance[0];
    Ok(EnsembleSeries {
        initial_variance,
        mean_variance,
        mean_entropy,
        ensemble_size: n,
    })
}

/// Initial position envelope selector for sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateKind {
    Local,
    /// The `sigma0 >> 1` delocalized regime.
    Gaussian,
}

/// One `(qubit, coin)` point of a variance-entanglement scatter plot.
#[derive(Debug, Clone, Copy)]
pub struct SweepRecord {
    pub delta: f64,
    pub alpha: f64,
    pub beta: f64,
    /// Long-time `sigma^2 / t^2`.
    pub variance_rate: f64,
    /// Asymptotic entanglement entropy.
    pub entropy: f64,
}

/// Sweep the polar angle at fixed `beta` and `eta` for each coin phase in
/// `deltas`, emitting the long-time variance rate and asymptotic
/// entanglement per qubit. Records are ordered by `(delta, alpha)`.
pub fn scatter_dataset(
    kind: StateKind,
    deltas: &[f64],
    beta: f64,
    eta: f64,
    alpha_points: usize,
) -> Result<Vec<SweepRecord>> {
    if alpha_points < 2 {
        return Err(Error::Domain("alpha sweep needs at least 2 points".into()));
    }
    let mut out = Vec::with_capacity(deltas.len() * alpha_points);
    for &delta in deltas {
        let coin = CoinParams::fair_from_delta_eta(delta, eta);
        for i in 0..alpha_points {
            let alpha = PI * i as f64 / (alpha_points - 1) as f64;
            let qubit = Qubit::new(alpha, beta)?;
            let report = match kind {
                StateKind::Local => kspace::report_local_closed(&qubit, &coin)?,
                StateKind::Gaussian => kspace::report_gaussian_closed(&qubit, &coin)?,
            };
            out.push(SweepRecord {
                delta,
                alpha,
                beta,
                variance_rate: report.variance_rate,
                entropy: report.entropy,
            });
        }
    }
    Ok(out)
}
