//! Command-line surface: `simulate`, `asymptotics`, `sweep` and `figure N`
//! subcommands emitting CSV (comma separator, `.` decimal, headers, floats
//! printed with 17 significant digits so files re-parse to identical
//! values).
//!
//! Option precedence is CLI flag > config file (`--config`, TOML) >
//! built-in default; `--dump-config` echoes the resolved configuration.

use std::f64::consts::PI;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::coin::{CoinParams, Qubit};
use crate::ensemble::{self, BlochMeasure, StateKind};
use crate::error::{Error, Result};
use crate::kspace::{self, XiMode};
use crate::quad::DEFAULT_NODES;
use crate::state::{GaussianProfile, WalkState};

/// Exit codes: 0 success, 2 usage (from clap), 3 domain error,
/// 4 unsupported or singular configuration, 1 I/O failure.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Domain(_) => 3,
        Error::Unsupported(_) | Error::Singular(_) => 4,
        Error::Io(_) => 1,
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "qwalk",
    about = "Discrete-time quantum walks on the line: exact simulation, \
             long-time asymptotics, and ensemble sweeps, emitted as CSV"
)]
pub struct Cli {
    /// TOML config file supplying defaults for any flag
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Print the fully resolved configuration (TOML) and exit
    #[arg(long, global = true)]
    pub dump_config: bool,

    /// Output CSV path (stdout when omitted)
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Seed for randomized auxiliary tooling (recorded for reproducibility)
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evolve one walk exactly and emit a per-step observable time series
    Simulate(SimulateArgs),
    /// Emit the asymptotic report for one (qubit, coin, envelope) configuration
    Asymptotics(AsymptoticsArgs),
    /// Sweep the polar angle against a list of coin phases (scatter dataset)
    Sweep(SweepArgs),
    /// Reproduce a numbered dataset (1-5)
    Figure(FigureArgs),
}

#[derive(Debug, Args, Clone)]
pub struct CommonStateArgs {
    /// Coin: `hadamard`, `fourier`, or `q,theta,phi`
    #[arg(long)]
    pub coin: Option<String>,

    /// Polar angle of the initial qubit (radians)
    #[arg(long)]
    pub alpha: Option<f64>,

    /// Azimuth angle of the initial qubit (radians)
    #[arg(long)]
    pub beta: Option<f64>,

    /// Start from a single-site state (default)
    #[arg(long, conflicts_with = "gaussian")]
    pub local: bool,

    /// Start from a Gaussian envelope (see --sigma0)
    #[arg(long)]
    pub gaussian: bool,

    /// Initial dispersion of the Gaussian envelope (lattice sites, >= 1)
    #[arg(long)]
    pub sigma0: Option<f64>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub state: CommonStateArgs,

    /// Number of walk steps
    #[arg(long)]
    pub steps: Option<u64>,

    /// Emit every n-th step (plus the final one)
    #[arg(long)]
    pub stride: Option<u64>,
}

#[derive(Debug, Args)]
pub struct AsymptoticsArgs {
    #[command(flatten)]
    pub state: CommonStateArgs,

    /// `closed` or `quadrature`
    #[arg(long)]
    pub method: Option<String>,

    /// Momentum-quadrature node count
    #[arg(long)]
    pub nodes: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// `local` or `gaussian` (delocalized regime)
    #[arg(long)]
    pub kind: Option<String>,

    /// Comma-separated coin phases delta
    #[arg(long, value_delimiter = ',')]
    pub deltas: Option<Vec<f64>>,

    /// Fixed azimuth of the swept qubits
    #[arg(long)]
    pub beta: Option<f64>,

    /// Fixed coin phase eta
    #[arg(long)]
    pub eta: Option<f64>,

    /// Number of polar-angle samples in [0, pi]
    #[arg(long)]
    pub alpha_points: Option<usize>,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    /// Dataset number, 1-5
    #[arg(value_parser = clap::value_parser!(u8).range(1..=5))]
    pub n: u8,

    /// Walk steps (dataset 3)
    #[arg(long)]
    pub steps: Option<u64>,

    /// Gaussian dispersion (dataset 3)
    #[arg(long)]
    pub sigma0: Option<f64>,

    /// Qubit-grid thinning stride (dataset 3); 1 = full 2016-qubit ensemble
    #[arg(long)]
    pub stride: Option<usize>,

    /// Bloch-average grid spacing (datasets 1, 2)
    #[arg(long)]
    pub grid_step: Option<f64>,

    /// Momentum-quadrature node count
    #[arg(long)]
    pub nodes: Option<usize>,

    /// Polar-angle samples (datasets 4, 5)
    #[arg(long)]
    pub alpha_points: Option<usize>,
}

/// Flat option set a config file can provide; any field may be omitted.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FileConfig {
    pub coin: Option<String>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub state: Option<String>,
    pub sigma0: Option<f64>,
    pub steps: Option<u64>,
    pub stride: Option<u64>,
    pub grid_step: Option<f64>,
    pub nodes: Option<usize>,
    pub method: Option<String>,
    pub eta: Option<f64>,
    pub deltas: Option<Vec<f64>>,
    pub alpha_points: Option<usize>,
    pub kind: Option<String>,
    pub out: Option<PathBuf>,
    pub seed: Option<u64>,
}

impl FileConfig {
    fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        toml::from_str(&text).map_err(|e| Error::Domain(format!("bad config file: {e}")))
    }
}

fn parse_coin(spec: &str) -> Result<CoinParams> {
    match spec {
        "hadamard" => Ok(CoinParams::hadamard()),
        "fourier" => Ok(CoinParams::fourier()),
        other => {
            let parts: Vec<&str> = other.split(',').collect();
            if parts.len() != 3 {
                return Err(Error::Domain(format!(
                    "coin must be `hadamard`, `fourier`, or `q,theta,phi`; got `{other}`"
                )));
            }
            let nums: Result<Vec<f64>> = parts
                .iter()
                .map(|p| {
                    p.trim()
                        .parse::<f64>()
                        .map_err(|_| Error::Domain(format!("bad coin component `{p}`")))
                })
                .collect();
            let nums = nums?;
            CoinParams::new(nums[0], nums[1], nums[2])
        }
    }
}

/// Full round-trip float formatting (17 significant digits).
fn fmt(x: f64) -> String {
    format!("{x:.16e}")
}

fn open_output(out: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

struct Resolved {
    coin_spec: String,
    coin: CoinParams,
    qubit: Qubit,
    gaussian: bool,
    sigma0: f64,
}

fn resolve_state(args: &CommonStateArgs, file: &FileConfig) -> Result<Resolved> {
    let coin_spec = args
        .coin
        .clone()
        .or_else(|| file.coin.clone())
        .unwrap_or_else(|| "hadamard".into());
    let coin = parse_coin(&coin_spec)?;
    let alpha = args.alpha.or(file.alpha).unwrap_or(0.0);
    let beta = args.beta.or(file.beta).unwrap_or(0.0);
    let qubit = Qubit::new(alpha, beta)?;
    let gaussian = args.gaussian
        || (!args.local && file.state.as_deref() == Some("gaussian"));
    let sigma0 = args.sigma0.or(file.sigma0).unwrap_or(10.0);
    Ok(Resolved {
        coin_spec,
        coin,
        qubit,
        gaussian,
        sigma0,
    })
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code(&err)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<()> {
    let file = match &cli.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    match &cli.command {
        Command::Simulate(args) => cmd_simulate(cli, args, &file),
        Command::Asymptotics(args) => cmd_asymptotics(cli, args, &file),
        Command::Sweep(args) => cmd_sweep(cli, args, &file),
        Command::Figure(args) => cmd_figure(cli, args, &file),
    }
}

fn dump(cli: &Cli, resolved: FileConfig) -> Result<bool> {
    if !cli.dump_config {
        return Ok(false);
    }
    let text = toml::to_string_pretty(&resolved)
        .map_err(|e| Error::Domain(format!("cannot serialize config: {e}")))?;
    print!("{text}");
    Ok(true)
}

fn write_series_row(w: &mut dyn Write, state: &WalkState) -> Result<()> {
    let stats = state.position_stats();
    let rho = state.reduced_coin_state();
    writeln!(
        w,
        "{},{},{},{},{},{},{}",
        state.time(),
        fmt(stats.mean),
        fmt(stats.variance),
        fmt(rho.a()),
        fmt(rho.gamma().re),
        fmt(rho.gamma().im),
        fmt(rho.entanglement_entropy())
    )?;
    Ok(())
}

fn cmd_simulate(cli: &Cli, args: &SimulateArgs, file: &FileConfig) -> Result<()> {
    let r = resolve_state(&args.state, file)?;
    let steps = args.steps.or(file.steps).unwrap_or(100);
    let stride = args.stride.or(file.stride).unwrap_or(1).max(1);
    if dump(
        cli,
        FileConfig {
            coin: Some(r.coin_spec.clone()),
            alpha: Some(r.qubit.alpha()),
            beta: Some(r.qubit.beta()),
            state: Some(if r.gaussian { "gaussian" } else { "local" }.into()),
            sigma0: r.gaussian.then_some(r.sigma0),
            steps: Some(steps),
            stride: Some(stride),
            out: cli.out.clone(),
            seed: cli.seed,
            ..Default::default()
        },
    )? {
        return Ok(());
    }

    let mut state = if r.gaussian {
        WalkState::gaussian(&r.qubit, &GaussianProfile::new(r.sigma0)?)
    } else {
        WalkState::local(&r.qubit)
    };

    let mut w = open_output(cli.out.as_deref())?;
    writeln!(w, "t,mean_j,variance,A,re_gamma,im_gamma,entropy")?;
    write_series_row(w.as_mut(), &state)?;
    let mut failed = None;
    state.evolve_observed(&r.coin, steps, |s| {
        if failed.is_none() && (s.time() % stride == 0 || s.time() == steps) {
            if let Err(e) = write_series_row(w.as_mut(), s) {
                failed = Some(e);
            }
        }
    });
    if let Some(e) = failed {
        return Err(e);
    }
    w.flush()?;
    Ok(())
}

fn cmd_asymptotics(cli: &Cli, args: &AsymptoticsArgs, file: &FileConfig) -> Result<()> {
    let r = resolve_state(&args.state, file)?;
    let method = args
        .method
        .clone()
        .or_else(|| file.method.clone())
        .unwrap_or_else(|| "closed".into());
    let nodes = args.nodes.or(file.nodes).unwrap_or(DEFAULT_NODES);
    if dump(
        cli,
        FileConfig {
            coin: Some(r.coin_spec.clone()),
            alpha: Some(r.qubit.alpha()),
            beta: Some(r.qubit.beta()),
            state: Some(if r.gaussian { "gaussian" } else { "local" }.into()),
            sigma0: r.gaussian.then_some(r.sigma0),
            method: Some(method.clone()),
            nodes: Some(nodes),
            out: cli.out.clone(),
            seed: cli.seed,
            ..Default::default()
        },
    )? {
        return Ok(());
    }

    let report = match (method.as_str(), r.gaussian) {
        ("closed", false) => kspace::report_local_closed(&r.qubit, &r.coin)?,
        ("closed", true) => kspace::report_gaussian_closed(&r.qubit, &r.coin)?,
        ("quadrature", false) => kspace::report_local_quadrature(&r.qubit, &r.coin, nodes)?,
        ("quadrature", true) => {
            kspace::report_gaussian_quadrature(&r.qubit, &r.coin, r.sigma0, nodes)?
        }
        (other, _) => {
            return Err(Error::Domain(format!(
                "method must be `closed` or `quadrature`, got `{other}`"
            )))
        }
    };

    let mut w = open_output(cli.out.as_deref())?;
    writeln!(
        w,
        "alpha,beta,q,theta,phi,state,sigma0,method,I,R,A_bar,gamma_abs,Delta,S_E_bar,u,var_rate"
    )?;
    let sigma0 = if r.gaussian {
        if method == "closed" {
            "inf".to_string()
        } else {
            fmt(r.sigma0)
        }
    } else {
        String::new()
    };
    writeln!(
        w,
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
        fmt(r.qubit.alpha()),
        fmt(r.qubit.beta()),
        fmt(r.coin.q()),
        fmt(r.coin.theta()),
        fmt(r.coin.phi()),
        if r.gaussian { "gaussian" } else { "local" },
        sigma0,
        method,
        fmt(report.i_integral),
        fmt(report.r_integral),
        fmt(report.a_bar),
        fmt(report.gamma_abs),
        fmt(report.delta),
        fmt(report.entropy),
        fmt(report.velocity),
        fmt(report.variance_rate)
    )?;
    w.flush()?;
    Ok(())
}

fn parse_kind(s: &str) -> Result<StateKind> {
    match s {
        "local" => Ok(StateKind::Local),
        "gaussian" => Ok(StateKind::Gaussian),
        other => Err(Error::Domain(format!(
            "kind must be `local` or `gaussian`, got `{other}`"
        ))),
    }
}

const FIG4_DELTAS: [f64; 5] = [0.0, PI / 8.0, PI / 4.0, 3.0 * PI / 8.0, PI / 2.0];
// the near-singular curve sits at 0.4995 pi, not exactly pi/2
const FIG5_DELTAS: [f64; 5] = [0.0, PI / 8.0, PI / 4.0, 3.0 * PI / 8.0, 0.4995 * PI];

fn write_scatter(
    out: Option<&Path>,
    kind: StateKind,
    deltas: &[f64],
    beta: f64,
    eta: f64,
    alpha_points: usize,
) -> Result<()> {
    let records = ensemble::scatter_dataset(kind, deltas, beta, eta, alpha_points)?;
    let mut w = open_output(out)?;
    writeln!(w, "delta,alpha,beta,variance_rate,entropy")?;
    for r in records {
        writeln!(
            w,
            "{},{},{},{},{}",
            fmt(r.delta),
            fmt(r.alpha),
            fmt(r.beta),
            fmt(r.variance_rate),
            fmt(r.entropy)
        )?;
    }
    w.flush()?;
    Ok(())
}

fn cmd_sweep(cli: &Cli, args: &SweepArgs, file: &FileConfig) -> Result<()> {
    let kind_str = args
        .kind
        .clone()
        .or_else(|| file.kind.clone())
        .unwrap_or_else(|| "local".into());
    let kind = parse_kind(&kind_str)?;
    let deltas = args
        .deltas
        .clone()
        .or_else(|| file.deltas.clone())
        .unwrap_or_else(|| match kind {
            StateKind::Local => FIG4_DELTAS.to_vec(),
            StateKind::Gaussian => FIG5_DELTAS.to_vec(),
        });
    let beta = args.beta.or(file.beta).unwrap_or(0.0);
    let eta = args.eta.or(file.eta).unwrap_or(0.0);
    let alpha_points = args.alpha_points.or(file.alpha_points).unwrap_or(201);
    if dump(
        cli,
        FileConfig {
            kind: Some(kind_str),
            deltas: Some(deltas.clone()),
            beta: Some(beta),
            eta: Some(eta),
            alpha_points: Some(alpha_points),
            out: cli.out.clone(),
            seed: cli.seed,
            ..Default::default()
        },
    )? {
        return Ok(());
    }
    write_scatter(cli.out.as_deref(), kind, &deltas, beta, eta, alpha_points)
}

fn inset_path(main: &Path) -> PathBuf {
    let stem = main.file_stem().and_then(|s| s.to_str()).unwrap_or("figure1");
    let ext = main.extension().and_then(|s| s.to_str()).unwrap_or("csv");
    main.with_file_name(format!("{stem}_inset.{ext}"))
}

fn cmd_figure(cli: &Cli, args: &FigureArgs, file: &FileConfig) -> Result<()> {
    let steps = args.steps.or(file.steps).unwrap_or(300);
    let sigma0 = args.sigma0.or(file.sigma0).unwrap_or(10.0);
    let stride = args.stride.or(file.stride.map(|s| s as usize)).unwrap_or(9);
    let grid_step = args.grid_step.or(file.grid_step).unwrap_or(0.02);
    let nodes = args.nodes.or(file.nodes).unwrap_or(DEFAULT_NODES);
    let alpha_points = args.alpha_points.or(file.alpha_points).unwrap_or(201);
    if dump(
        cli,
        FileConfig {
            steps: Some(steps),
            sigma0: Some(sigma0),
            stride: Some(stride as u64),
            grid_step: Some(grid_step),
            nodes: Some(nodes),
            alpha_points: Some(alpha_points),
            out: cli.out.clone(),
            seed: cli.seed,
            ..Default::default()
        },
    )? {
        return Ok(());
    }

    match args.n {
        1 => figure1(cli.out.as_deref(), nodes),
        2 => figure2(cli.out.as_deref(), grid_step),
        3 => figure3(cli.out.as_deref(), steps, sigma0, stride),
        4 => write_scatter(cli.out.as_deref(), StateKind::Local, &FIG4_DELTAS, 0.0, 0.0, alpha_points),
        5 => write_scatter(cli.out.as_deref(), StateKind::Gaussian, &FIG5_DELTAS, 0.0, 0.0, alpha_points),
        _ => unreachable!("clap range guard"),
    }
}

/// Average variance rate against the coin phase: the constant local curve
/// and Gaussian curves for several dispersions, plus (when writing to a
/// file) an inset table sweeping the dispersion at fixed coin phases.
fn figure1(out: Option<&Path>, nodes: usize) -> Result<()> {
    let sigmas = [1.0, 2.0, 3.0, 10.0];
    let mut w = open_output(out)?;
    writeln!(
        w,
        "delta,local,gaussian_sigma0_1,gaussian_sigma0_2,gaussian_sigma0_3,gaussian_sigma0_10"
    )?;
    let points = 101;
    for i in 0..points {
        let delta = PI / 2.0 * i as f64 / (points - 1) as f64;
        let coin = CoinParams::fair_from_delta_eta(delta, 0.0);
        let mut row = vec![fmt(delta), fmt(kspace::avg_variance_rate_local())];
        for &s in &sigmas {
            row.push(fmt(kspace::avg_variance_rate_gaussian(
                &coin,
                s,
                XiMode::Quadrature,
                nodes,
            )?));
        }
        writeln!(w, "{}", row.join(","))?;
    }
    w.flush()?;

    if let Some(path) = out {
        let mut w = open_output(Some(&inset_path(path)))?;
        writeln!(w, "sigma0,delta_0,delta_pi_8,delta_pi_4,delta_3pi_8,delta_pi_2")?;
        let mut s = 1.0;
        while s <= 10.0 + 1e-9 {
            let mut row = vec![fmt(s)];
            for d in FIG4_DELTAS {
                let coin = CoinParams::fair_from_delta_eta(d, 0.0);
                row.push(fmt(kspace::avg_variance_rate_gaussian(
                    &coin,
                    s,
                    XiMode::Quadrature,
                    nodes,
                )?));
            }
            writeln!(w, "{}", row.join(","))?;
            s += 0.25;
        }
        w.flush()?;
    }
    Ok(())
}

/// Delocalized-regime averages against the coin phase: variance rate and
/// asymptotic entanglement.
fn figure2(out: Option<&Path>, grid_step: f64) -> Result<()> {
    let mut w = open_output(out)?;
    writeln!(w, "delta,avg_variance_rate,avg_entropy")?;
    let points = 101;
    for i in 0..points {
        let delta = PI / 2.0 * i as f64 / (points - 1) as f64;
        let coin = CoinParams::fair_from_delta_eta(delta, 0.0);
        let var = kspace::avg_variance_rate_gaussian(&coin, f64::INFINITY, XiMode::Fitted, 0)?;
        let ent = ensemble::bloch_average(
            |q| {
                kspace::asymptotic_entropy(kspace::delta_gaussian(q, &coin).expect("fair coin"))
                    .expect("Delta in range")
            },
            grid_step,
            BlochMeasure::Flat,
        );
        writeln!(w, "{},{},{}", fmt(delta), fmt(var), fmt(ent))?;
    }
    w.flush()?;
    Ok(())
}

/// Ensemble time series: Hadamard and Fourier columns side by side.
fn figure3(out: Option<&Path>, steps: u64, sigma0: f64, stride: usize) -> Result<()> {
    let had = ensemble::figure3_ensemble(&CoinParams::hadamard(), sigma0, steps, stride)?;
    let fou = ensemble::figure3_ensemble(&CoinParams::fourier(), sigma0, steps, stride)?;
    let mut w = open_output(out)?;
    writeln!(
        w,
        "t,hadamard_variance,hadamard_variance_minus_initial,hadamard_entropy,\
         fourier_variance,fourier_variance_minus_initial,fourier_entropy"
    )?;
    for t in 0..had.mean_variance.len() {
        writeln!(
            w,
            "{},{},{},{},{},{},{}",
            t,
            fmt(had.mean_variance[t]),
            fmt(had.mean_variance[t] - had.initial_variance),
            fmt(had.mean_entropy[t]),
            fmt(fou.mean_variance[t]),
            fmt(fou.mean_variance[t] - fou.initial_variance),
            fmt(fou.mean_entropy[t])
        )?;
    }
    w.flush()?;
    Ok(())
}
