//! Fourier-space machinery for balanced-coin walks: the per-momentum
//! eigenproblem, the moment integrals `I` and `R`, closed-form long-time
//! variances, asymptotic entanglement, and the velocity-entanglement
//! relations. Everything here requires a fair coin (`q = 1/2`).

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_8, PI, SQRT_2};

use num_complex::Complex64;

use crate::coin::{CoinParams, Qubit};
use crate::error::{Error, Result};
use crate::evolve::entropy_bits;

/// `I` for a local state: `1 - sqrt(2)/2`, independent of the coin phases.
pub const I_LOCAL: f64 = 1.0 - SQRT_2 / 2.0;

/// Average long-time variance rate over all qubits, local state:
/// `(2 sqrt(2) - 1) / 8`.
pub const AVG_VARIANCE_RATE_LOCAL: f64 = (2.0 * SQRT_2 - 1.0) / 8.0;

const XI_MU: [f64; 5] = [0.8674, -1.2113, 0.2477, -0.6081, 2.3145];
const XI_NU: [f64; 5] = [-0.6461, 0.7183, -0.1083, 0.4476, -1.4515];

fn require_fair(coin: &CoinParams) -> Result<()> {
    if coin.is_fair() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "asymptotics require a balanced coin (q = 1/2), got q = {}",
            coin.q()
        )))
    }
}

/// Clamp `x` into `[0, 1]`, tolerating round-off up to `1e-9`; larger
/// excursions are reported instead of silently clamped.
fn clamp_unit(x: f64, what: &str) -> Result<f64> {
    if x < -1e-9 || x > 1.0 + 1e-9 {
        return Err(Error::Domain(format!("{what} = {x} lies outside [0, 1]")));
    }
    Ok(x.clamp(0.0, 1.0))
}

/// Eigen-decomposition of the one-step operator at momentum `k`.
#[derive(Debug, Clone)]
pub struct KEigenSystem {
    pub k: f64,
    /// `asin(sin(k - delta) / sqrt(2))` on the principal branch.
    pub omega: f64,
    pub lambda_plus: Complex64,
    pub lambda_minus: Complex64,
    /// Normalized eigenvector for `lambda_plus`, `[up, down]`.
    pub phi_plus: [Complex64; 2],
    /// Normalized eigenvector for `lambda_minus`.
    pub phi_minus: [Complex64; 2],
    delta: f64,
    eta: f64,
}

impl KEigenSystem {
    /// `<Z>` on the `+` branch: `cos(k - delta) / sqrt(1 + cos^2(k - delta))`.
    pub fn z_plus(&self) -> f64 {
        let kd = self.k - self.delta;
        kd.cos() / (1.0 + kd.cos() * kd.cos()).sqrt()
    }

    /// `<Z>` on the `-` branch.
    pub fn z_minus(&self) -> f64 {
        -self.z_plus()
    }

    /// The one-step operator at this momentum, `diag(e^{ik}, e^{-ik}) C`
    /// (the up component shifts toward larger `j`).
    pub fn u_k(&self, coin: &CoinParams) -> [[Complex64; 2]; 2] {
        let c = coin.matrix();
        let ep = Complex64::from_polar(1.0, self.k);
        let em = Complex64::from_polar(1.0, -self.k);
        [[ep * c[0][0], ep * c[0][1]], [em * c[1][0], em * c[1][1]]]
    }
}

/// Diagonalize the momentum-`k` step operator of a fair-coin walk.
pub fn eigensystem(k: f64, coin: &CoinParams) -> Result<KEigenSystem> {
    require_fair(coin)?;
    let delta = coin.delta();
    let eta = coin.eta();
    let kd = k - delta;
    let omega = (kd.sin() / SQRT_2).asin();
    let lambda_plus = Complex64::from_polar(1.0, delta + omega);
    let lambda_minus = -Complex64::from_polar(1.0, delta - omega);
    let eik = Complex64::from_polar(1.0, k);
    let pre = Complex64::from_polar(1.0, -(delta + eta));
    let mut phi_plus = [eik, pre * (SQRT_2 * lambda_plus - eik)];
    let mut phi_minus = [eik, pre * (SQRT_2 * lambda_minus - eik)];
    for phi in [&mut phi_plus, &mut phi_minus] {
        let n = (phi[0].norm_sqr() + phi[1].norm_sqr()).sqrt();
        phi[0] /= n;
        phi[1] /= n;
    }
    Ok(KEigenSystem {
        k,
        omega,
        lambda_plus,
        lambda_minus,
        phi_plus,
        phi_minus,
        delta,
        eta,
    })
}

/// Expansion coefficients `(c_plus, c_minus)` of the initial spinor at
/// momentum `k` in the eigenbasis, from the closed formula
/// `c± = e^{-ik}/N± { a - b e^{i(delta+eta)} [1 - sqrt(2) e^{ik}/lambda±] }`
/// with analytic normalizations `N±`.
pub fn expansion_coefficients(
    es: &KEigenSystem,
    qubit: &Qubit,
    ftilde_value: Complex64,
) -> (Complex64, Complex64) {
    let (ca, cb) = qubit.spinor();
    let a = ftilde_value * ca;
    let b = ftilde_value * cb;
    let kd = es.k - es.delta;
    // |phi_unnormalized|^2 = 4 - 2 sqrt(2) cos(kd -+ omega)
    let n_plus = (4.0 - 2.0 * SQRT_2 * (kd - es.omega).cos()).sqrt();
    let n_minus = (4.0 + 2.0 * SQRT_2 * (kd + es.omega).cos()).sqrt();
    let emik = Complex64::from_polar(1.0, -es.k);
    let eik = Complex64::from_polar(1.0, es.k);
    let phase = Complex64::from_polar(1.0, es.delta + es.eta);
    let one = Complex64::new(1.0, 0.0);
    let c_plus = emik / n_plus * (a - b * phase * (one - SQRT_2 * eik / es.lambda_plus));
    let c_minus = emik / n_minus * (a - b * phase * (one - SQRT_2 * eik / es.lambda_minus));
    (c_plus, c_minus)
}

/// The momentum-space Gaussian envelope `(8 pi sigma0^2)^{1/4} e^{-k^2 sigma0^2}`,
/// normalized so that `∫ |f|^2 dk/2π = 1` for `sigma0 >= 1`.
pub fn gaussian_ftilde(k: f64, sigma0: f64) -> f64 {
    (8.0 * PI * sigma0 * sigma0).powf(0.25) * (-k * k * sigma0 * sigma0).exp()
}

fn check_normalized(nodes: usize, ftilde: &dyn Fn(f64) -> Complex64) -> Result<()> {
    let norm = crate::quad::average_periodic(nodes, |k| ftilde(k).norm_sqr());
    if (norm - 1.0).abs() > 1e-6 {
        return Err(Error::Domain(format!(
            "momentum envelope is not normalized: ∫|f|^2 dk/2π = {norm} (undersampled quadrature or bad profile)"
        )));
    }
    Ok(())
}

/// `I(f, delta) = ∫ dk/2π |f(k)|^2 cos^2(k-delta) / (1 + cos^2(k-delta))`.
pub fn integral_i<F>(ftilde: F, delta: f64, nodes: usize) -> Result<f64>
where
    F: Fn(f64) -> Complex64,
{
    check_normalized(nodes, &ftilde)?;
    Ok(crate::quad::average_periodic(nodes, |k| {
        let c = (k - delta).cos();
        ftilde(k).norm_sqr() * c * c / (1.0 + c * c)
    }))
}

/// `R(f, delta) = ∫ dk/2π |f(k)|^2 cos(k-delta) sin(k-delta) / (1 + cos^2(k-delta))`.
pub fn integral_r<F>(ftilde: F, delta: f64, nodes: usize) -> Result<f64>
where
    F: Fn(f64) -> Complex64,
{
    check_normalized(nodes, &ftilde)?;
    Ok(crate::quad::average_periodic(nodes, |k| {
        let c = (k - delta).cos();
        let s = (k - delta).sin();
        ftilde(k).norm_sqr() * c * s / (1.0 + c * c)
    }))
}

/// Source for the finite-`sigma0` correction coefficients `xi_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XiMode {
    /// Published two-term fits `mu/sigma0^2 + nu/sigma0^3`.
    Fitted,
    /// Effective coefficients recovered by matching the directly
    /// quadrature-evaluated `I`/`R` at a set of `delta` values.
    Quadrature,
}

fn xi_fitted(n: usize, sigma0: f64) -> f64 {
    let s2 = sigma0 * sigma0;
    XI_MU[n - 1] / s2 + XI_NU[n - 1] / (s2 * sigma0)
}

/// Basis weights of the fitted `I` expression at a given `delta`:
/// coefficients of `xi_1`, `(1 + xi_2)` and `xi_3`.
fn i_basis(delta: f64) -> (f64, f64, f64) {
    let c2 = delta.cos() * delta.cos();
    let d = 1.0 + c2;
    (c2 * c2 / d, c2 / d, 1.0 / d)
}

/// Basis weights of the fitted `R` expression: coefficients of
/// `(xi_5 - 1)` and `xi_4`.
fn r_basis(delta: f64) -> (f64, f64) {
    let d = 1.0 + delta.cos() * delta.cos();
    (delta.cos() * delta.sin() / d, (2.0 * delta).sin())
}

fn xi_quadrature(sigma0: f64, nodes: usize) -> Result<[f64; 5]> {
    let f = |k: f64| Complex64::new(gaussian_ftilde(k, sigma0), 0.0);
    // xi_1..3 from I at three delta values
    let deltas_i = [0.0, FRAC_PI_4, FRAC_PI_2];
    let mut m = [[0.0f64; 3]; 3];
    let mut rhs = [0.0f64; 3];
    for (row, &d) in deltas_i.iter().enumerate() {
        let (a, b, c) = i_basis(d);
        m[row] = [a, b, c];
        rhs[row] = integral_i(f, d, nodes)? - b;
    }
    let x = solve3(m, rhs)?;
    // xi_4..5 from R at two delta values; xi_4 multiplies sin(2 delta) and
    // xi_5 enters through the (xi_5 - 1) weight
    let deltas_r = [FRAC_PI_8, 3.0 * FRAC_PI_8];
    let mut m2 = [[0.0f64; 2]; 2];
    let mut rhs2 = [0.0f64; 2];
    for (row, &d) in deltas_r.iter().enumerate() {
        let (dw, ew) = r_basis(d);
        m2[row] = [ew, dw];
        rhs2[row] = integral_r(f, d, nodes)? + dw;
    }
    let y = solve2(m2, rhs2)?;
    Ok([x[0], x[1], x[2], y[0], y[1]])
}

/// Finite-`sigma0` correction coefficient `xi_n`, `n` in `1..=5`.
pub fn xi(n: usize, sigma0: f64, mode: XiMode, nodes: usize) -> Result<f64> {
    if !(1..=5).contains(&n) {
        return Err(Error::Domain(format!("xi index n = {n} must be in 1..=5")));
    }
    if !(sigma0 >= 1.0) {
        return Err(Error::Domain(format!("sigma0 = {sigma0} must be >= 1")));
    }
    if sigma0.is_infinite() {
        return Ok(0.0);
    }
    match mode {
        XiMode::Fitted => Ok(xi_fitted(n, sigma0)),
        XiMode::Quadrature => Ok(xi_quadrature(sigma0, nodes)?[n - 1]),
    }
}

/// `I` and `R` for a Gaussian envelope. `sigma0 = +inf` yields the
/// delocalized limit `(cos^2 d / (1 + cos^2 d), -cos d sin d / (1 + cos^2 d))`
/// regardless of mode.
pub fn gaussian_ir(delta: f64, sigma0: f64, mode: XiMode, nodes: usize) -> Result<(f64, f64)> {
    if !(sigma0 >= 1.0) {
        return Err(Error::Domain(format!("sigma0 = {sigma0} must be >= 1")));
    }
    let c2 = delta.cos() * delta.cos();
    let d = 1.0 + c2;
    if sigma0.is_infinite() {
        return Ok((c2 / d, -delta.cos() * delta.sin() / d));
    }
    match mode {
        XiMode::Fitted => {
            let (a, b, c) = i_basis(delta);
            let i = a * xi_fitted(1, sigma0) + b * (1.0 + xi_fitted(2, sigma0))
                + c * xi_fitted(3, sigma0);
            let (dw, ew) = r_basis(delta);
            let r = dw * (xi_fitted(5, sigma0) - 1.0) + ew * xi_fitted(4, sigma0);
            Ok((i, r))
        }
        XiMode::Quadrature => {
            let f = |k: f64| Complex64::new(gaussian_ftilde(k, sigma0), 0.0);
            Ok((integral_i(f, delta, nodes)?, integral_r(f, delta, nodes)?))
        }
    }
}

/// Long-time variance rate `sigma^2 / t^2` for a local state:
/// `(1 - sqrt(2)/2) - (3/2 - sqrt(2)) [cos a + sin a cos(b + delta + eta)]^2`.
pub fn variance_rate_local(qubit: &Qubit, coin: &CoinParams) -> Result<f64> {
    require_fair(coin)?;
    let bracket = qubit.alpha().cos()
        + qubit.alpha().sin() * (qubit.beta() + coin.delta() + coin.eta()).cos();
    Ok(I_LOCAL - (1.5 - SQRT_2) * bracket * bracket)
}

/// Qubit-averaged local variance rate, `(2 sqrt(2) - 1)/8`, for any fair coin.
pub fn avg_variance_rate_local() -> f64 {
    AVG_VARIANCE_RATE_LOCAL
}

/// Qubit-averaged Gaussian variance rate `I - (3 I^2 + R^2)/4`.
pub fn avg_variance_rate_gaussian(
    coin: &CoinParams,
    sigma0: f64,
    mode: XiMode,
    nodes: usize,
) -> Result<f64> {
    require_fair(coin)?;
    let (i, r) = gaussian_ir(coin.delta(), sigma0, mode, nodes)?;
    Ok(i - (3.0 * i * i + r * r) / 4.0)
}

/// Entanglement indicator for a local state:
/// `Delta_L = (3 - 2 sqrt(2)) [1 + sin(2a) cos(b + delta + eta)]`.
pub fn delta_local(qubit: &Qubit, coin: &CoinParams) -> Result<f64> {
    require_fair(coin)?;
    let v = (3.0 - 2.0 * SQRT_2)
        * (1.0 + (2.0 * qubit.alpha()).sin()
            * (qubit.beta() + coin.delta() + coin.eta()).cos());
    clamp_unit(v, "Delta_L")
}

/// Entanglement indicator for a highly delocalized Gaussian state
/// (`sigma0 >> 1`):
/// `Delta_G = [cos a cos d + sin a cos(b + eta)]^2 / (1 + cos^2 d)`.
pub fn delta_gaussian(qubit: &Qubit, coin: &CoinParams) -> Result<f64> {
    require_fair(coin)?;
    let d = coin.delta();
    let num = qubit.alpha().cos() * d.cos()
        + qubit.alpha().sin() * (qubit.beta() + coin.eta()).cos();
    clamp_unit(num * num / (1.0 + d.cos() * d.cos()), "Delta_G")
}

/// Asymptotic entanglement entropy from the indicator `Delta`:
/// the binary entropy of `(1 + sqrt(Delta))/2` in bits.
pub fn asymptotic_entropy(delta: f64) -> Result<f64> {
    let delta = clamp_unit(delta, "Delta")?;
    let root = delta.sqrt();
    Ok(entropy_bits(0.5 * (1.0 + root)) + entropy_bits(0.5 * (1.0 - root)))
}

/// Limit velocity of a local-state walker:
/// `u_L = (1 - sqrt(2)/2) [cos a + sin a cos(b + delta + eta)]`.
pub fn limit_velocity_local(qubit: &Qubit, coin: &CoinParams) -> Result<f64> {
    require_fair(coin)?;
    Ok(I_LOCAL
        * (qubit.alpha().cos()
            + qubit.alpha().sin() * (qubit.beta() + coin.delta() + coin.eta()).cos()))
}

/// Limit velocity of a highly delocalized Gaussian walker:
/// `u_G = [cos a cos^2 d + sin a cos d cos(b + eta)] / (1 + cos^2 d)`.
pub fn limit_velocity_gaussian(qubit: &Qubit, coin: &CoinParams) -> Result<f64> {
    require_fair(coin)?;
    let d = coin.delta();
    Ok((qubit.alpha().cos() * d.cos() * d.cos()
        + qubit.alpha().sin() * d.cos() * (qubit.beta() + coin.eta()).cos())
        / (1.0 + d.cos() * d.cos()))
}

/// Recover `Delta_L` from the polar angle and the limit velocity:
/// `(4 - 2 sqrt(2)) u cos a - (3 - 2 sqrt(2)) cos(2a)`.
pub fn delta_from_velocity_local(alpha: f64, u: f64) -> Result<f64> {
    let v = (4.0 - 2.0 * SQRT_2) * u * alpha.cos() - (3.0 - 2.0 * SQRT_2) * (2.0 * alpha).cos();
    if v < -1e-9 || v > 1.0 + 1e-9 {
        return Err(Error::Domain(format!(
            "inconsistent (alpha, u) pair: recovered Delta_L = {v} outside [0, 1]"
        )));
    }
    Ok(v.clamp(0.0, 1.0))
}

/// Recover `Delta_G` from the coin phase and the limit velocity:
/// `u^2 (1 + cos^2 d) / cos^2 d`, valid away from `d = pi/2`.
pub fn delta_from_velocity_gaussian(delta_phase: f64, u: f64) -> Result<f64> {
    let c = delta_phase.cos();
    if c.abs() <= 1e-6 {
        return Err(Error::Singular(
            "coin phase delta is at (or within 1e-6 of) pi/2, where velocity carries no \
             entanglement information; use the qubit-based delocalized closed form instead"
                .into(),
        ));
    }
    let v = u * u * (1.0 + c * c) / (c * c);
    if v > 1.0 + 1e-9 {
        return Err(Error::Domain(format!(
            "inconsistent (delta, u) pair: recovered Delta_G = {v} outside [0, 1]"
        )));
    }
    Ok(v.clamp(0.0, 1.0))
}

/// Everything the asymptotics know about one `(qubit, coin, envelope)`
/// configuration.
#[derive(Debug, Clone, Copy)]
pub struct AsymptoticReport {
    pub i_integral: f64,
    pub r_integral: f64,
    pub a_bar: f64,
    /// `|gamma_bar|`; the closed-form routes only determine the magnitude.
    pub gamma_abs: f64,
    /// Full coherence, available on the quadrature route.
    pub gamma_bar: Option<Complex64>,
    /// `(2 A_bar - 1)^2 + 4 |gamma_bar|^2`, in `[0, 1]`.
    pub delta: f64,
    /// Asymptotic entanglement entropy `S_E_bar`.
    pub entropy: f64,
    /// Limit velocity `u` in sites per step.
    pub velocity: f64,
    /// Long-time `sigma^2 / t^2`.
    pub variance_rate: f64,
}

/// Momentum-grid tables that depend on the coin and envelope but not the
/// qubit; lets Bloch-sphere sweeps reuse one eigen-decomposition pass.
pub struct KspaceTable {
    weight_i: Vec<f64>,
    weight_r: Vec<f64>,
    z_plus: Vec<f64>,
    // linear functionals: c± = l±·cos(a/2) + m±·e^{ib} sin(a/2)
    l_plus: Vec<Complex64>,
    m_plus: Vec<Complex64>,
    l_minus: Vec<Complex64>,
    m_minus: Vec<Complex64>,
    up_plus: Vec<f64>,
    up_minus: Vec<f64>,
    cross_plus: Vec<Complex64>,
    cross_minus: Vec<Complex64>,
}

impl KspaceTable {
    pub fn new<F>(coin: &CoinParams, ftilde: F, nodes: usize) -> Result<Self>
    where
        F: Fn(f64) -> Complex64,
    {
        require_fair(coin)?;
        check_normalized(nodes, &ftilde)?;
        let n = nodes.max(1);
        let h = 2.0 * PI / n as f64;
        let delta = coin.delta();
        let mut t = Self {
            weight_i: Vec::with_capacity(n),
            weight_r: Vec::with_capacity(n),
            z_plus: Vec::with_capacity(n),
            l_plus: Vec::with_capacity(n),
            m_plus: Vec::with_capacity(n),
            l_minus: Vec::with_capacity(n),
            m_minus: Vec::with_capacity(n),
            up_plus: Vec::with_capacity(n),
            up_minus: Vec::with_capacity(n),
            cross_plus: Vec::with_capacity(n),
            cross_minus: Vec::with_capacity(n),
        };
        for i in 0..n {
            let k = -PI + i as f64 * h;
            let es = eigensystem(k, coin)?;
            let f = ftilde(k);
            let c = (k - delta).cos();
            let s = (k - delta).sin();
            let fw = f.norm_sqr();
            t.weight_i.push(fw * c * c / (1.0 + c * c));
            t.weight_r.push(fw * c * s / (1.0 + c * c));
            t.z_plus.push(es.z_plus());
            t.l_plus.push(es.phi_plus[0].conj() * f);
            t.m_plus.push(es.phi_plus[1].conj() * f);
            t.l_minus.push(es.phi_minus[0].conj() * f);
            t.m_minus.push(es.phi_minus[1].conj() * f);
            t.up_plus.push(es.phi_plus[0].norm_sqr());
            t.up_minus.push(es.phi_minus[0].norm_sqr());
            t.cross_plus.push(es.phi_plus[0] * es.phi_plus[1].conj());
            t.cross_minus.push(es.phi_minus[0] * es.phi_minus[1].conj());
        }
        Ok(t)
    }

    fn nodes(&self) -> usize {
        self.weight_i.len()
    }

    /// Stationary `(A_bar, gamma_bar)` for the given qubit.
    pub fn a_gamma(&self, qubit: &Qubit) -> (f64, Complex64) {
        let (ca, cb) = qubit.spinor();
        let mut a = 0.0;
        let mut gamma = Complex64::new(0.0, 0.0);
        for i in 0..self.nodes() {
            let wp = (self.l_plus[i] * ca + self.m_plus[i] * cb).norm_sqr();
            let wm = (self.l_minus[i] * ca + self.m_minus[i] * cb).norm_sqr();
            a += wp * self.up_plus[i] + wm * self.up_minus[i];
            gamma += wp * self.cross_plus[i] + wm * self.cross_minus[i];
        }
        let n = self.nodes() as f64;
        (a / n, gamma / n)
    }

    /// Limit velocity via the moment route (`<Z>` on each branch).
    pub fn velocity(&self, qubit: &Qubit) -> f64 {
        let (ca, cb) = qubit.spinor();
        let mut v = 0.0;
        for i in 0..self.nodes() {
            let wp = (self.l_plus[i] * ca + self.m_plus[i] * cb).norm_sqr();
            let wm = (self.l_minus[i] * ca + self.m_minus[i] * cb).norm_sqr();
            v += (wp - wm) * self.z_plus[i];
        }
        v / self.nodes() as f64
    }

    pub fn integral_i(&self) -> f64 {
        self.weight_i.iter().sum::<f64>() / self.nodes() as f64
    }

    pub fn integral_r(&self) -> f64 {
        self.weight_r.iter().sum::<f64>() / self.nodes() as f64
    }

    /// Full quadrature report for one qubit.
    pub fn report(&self, qubit: &Qubit) -> Result<AsymptoticReport> {
        let (a_bar, gamma_bar) = self.a_gamma(qubit);
        let velocity = self.velocity(qubit);
        let i = self.integral_i();
        let r = self.integral_r();
        let delta = clamp_unit(
            (2.0 * a_bar - 1.0).powi(2) + 4.0 * gamma_bar.norm_sqr(),
            "Delta",
        )?;
        Ok(AsymptoticReport {
            i_integral: i,
            r_integral: r,
            a_bar,
            gamma_abs: gamma_bar.norm(),
            gamma_bar: Some(gamma_bar),
            delta,
            entropy: asymptotic_entropy(delta)?,
            velocity,
            variance_rate: i - velocity * velocity,
        })
    }
}

/// Stationary `(A_bar, gamma_bar)` by momentum quadrature for an arbitrary
/// normalized envelope.
pub fn asymptotic_a_gamma<F>(
    qubit: &Qubit,
    coin: &CoinParams,
    ftilde: F,
    nodes: usize,
) -> Result<(f64, Complex64)>
where
    F: Fn(f64) -> Complex64,
{
    Ok(KspaceTable::new(coin, ftilde, nodes)?.a_gamma(qubit))
}

/// Quadrature report for a local state (`f = 1` in momentum space).
pub fn report_local_quadrature(
    qubit: &Qubit,
    coin: &CoinParams,
    nodes: usize,
) -> Result<AsymptoticReport> {
    KspaceTable::new(coin, |_| Complex64::new(1.0, 0.0), nodes)?.report(qubit)
}

/// Quadrature report for a Gaussian state of finite `sigma0`.
pub fn report_gaussian_quadrature(
    qubit: &Qubit,
    coin: &CoinParams,
    sigma0: f64,
    nodes: usize,
) -> Result<AsymptoticReport> {
    if !(sigma0 >= 1.0) {
        return Err(Error::Domain(format!("sigma0 = {sigma0} must be >= 1")));
    }
    KspaceTable::new(coin, |k| Complex64::new(gaussian_ftilde(k, sigma0), 0.0), nodes)?
        .report(qubit)
}

fn report_from_closed(i: f64, r: f64, u: f64, delta: f64, var: f64) -> Result<AsymptoticReport> {
    Ok(AsymptoticReport {
        i_integral: i,
        r_integral: r,
        a_bar: 0.5 * (1.0 + u),
        gamma_abs: 0.5 * (delta - u * u).max(0.0).sqrt(),
        gamma_bar: None,
        delta,
        entropy: asymptotic_entropy(delta)?,
        velocity: u,
        variance_rate: var,
    })
}

/// Closed-form report for a local state.
pub fn report_local_closed(qubit: &Qubit, coin: &CoinParams) -> Result<AsymptoticReport> {
    let u = limit_velocity_local(qubit, coin)?;
    report_from_closed(
        I_LOCAL,
        0.0,
        u,
        delta_local(qubit, coin)?,
        variance_rate_local(qubit, coin)?,
    )
}

/// Closed-form report for a highly delocalized Gaussian state
/// (`sigma0 >> 1` regime).
pub fn report_gaussian_closed(qubit: &Qubit, coin: &CoinParams) -> Result<AsymptoticReport> {
    let (i, r) = gaussian_ir(coin.delta(), f64::INFINITY, XiMode::Fitted, 0)?;
    let u = limit_velocity_gaussian(qubit, coin)?;
    report_from_closed(i, r, u, delta_gaussian(qubit, coin)?, i - u * u)
}

fn solve2(m: [[f64; 2]; 2], rhs: [f64; 2]) -> Result<[f64; 2]> {
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if det.abs() < 1e-12 {
        return Err(Error::Singular("2x2 system is singular".into()));
    }
    Ok([
        (rhs[0] * m[1][1] - rhs[1] * m[0][1]) / det,
        (m[0][0] * rhs[1] - m[1][0] * rhs[0]) / det,
    ])
}

fn solve3(mut m: [[f64; 3]; 3], mut rhs: [f64; 3]) -> Result<[f64; 3]> {
    // Gaussian elimination with partial pivoting
    for col in 0..3 {
        let pivot = (col..3)
            .max_by(|&a, &b| m[a][col].abs().partial_cmp(&m[b][col].abs()).unwrap())
            .unwrap();
        if m[pivot][col].abs() < 1e-12 {
            return Err(Error::Singular("3x3 system is singular".into()));
        }
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        for row in col + 1..3 {
            let f = m[row][col] / m[col][col];
            for c in col..3 {
                m[row][c] -= f * m[col][c];
            }
            rhs[row] -= f * rhs[col];
        }
    }
    let mut x = [0.0; 3];
    for row in (0..3).rev() {
        let mut acc = rhs[row];
        for c in row + 1..3 {
            acc -= m[row][c] * x[c];
        }
        x[row] = acc / m[row][row];
    }
    Ok(x)
}
