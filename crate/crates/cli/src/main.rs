//! `qent` — configure, run, and serialize the entanglement-formation
//! experiments: ensemble trajectories, saturation-time scaling, Groverian
//! distributions, and the Haar-random-state baseline.
//!
//! Every command takes an explicit `--seed` and writes plot-ready CSV plus a
//! JSON manifest sidecar. Outputs are byte-identical across re-runs and
//! across `--threads` settings. Exit status: 0 on success, 2 on usage
//! errors, 1 on runtime (I/O) errors.

mod commands;
mod manifest;
mod output;

use std::path::PathBuf;
use std::process::exit;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qent_core::random::Geometry;

#[derive(Parser)]
#[command(
    name = "qent",
    version,
    about = "Random-gate entanglement formation simulator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ensemble means of K, Q, G vs. step count for one register size.
    Trajectory(TrajectoryArgs),
    /// 90%-saturation times vs. register size, with linear/quadratic fits.
    Saturation(SaturationArgs),
    /// Histogram densities of the Groverian measure at chosen times.
    Distribution(DistributionArgs),
    /// Q and G samples over Haar-random states of the register.
    Baseline(BaselineArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum GeometryArg {
    /// Nearest-neighbor pairs on a periodic chain.
    Local,
    /// Any pair of qubits.
    Nonlocal,
}

impl GeometryArg {
    pub fn to_geometry(self) -> Geometry {
        match self {
            GeometryArg::Local => Geometry::Local1DPeriodic,
            GeometryArg::Nonlocal => Geometry::NonLocal,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GeometryArg::Local => "local",
            GeometryArg::Nonlocal => "nonlocal",
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum GeometryChoice {
    Local,
    Nonlocal,
    Both,
}

impl GeometryChoice {
    pub fn selection(self) -> Vec<GeometryArg> {
        match self {
            GeometryChoice::Local => vec![GeometryArg::Local],
            GeometryChoice::Nonlocal => vec![GeometryArg::Nonlocal],
            GeometryChoice::Both => vec![GeometryArg::Local, GeometryArg::Nonlocal],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GeometryChoice::Local => "local",
            GeometryChoice::Nonlocal => "nonlocal",
            GeometryChoice::Both => "both",
        }
    }
}

/// Flags shared by every subcommand.
#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Master seed (decimal 64-bit integer); required, never time-based.
    #[arg(long)]
    pub seed: u64,
    /// Random restarts of the product-state optimizer.
    #[arg(long, default_value_t = 20)]
    pub restarts: usize,
    /// Per-sweep overlap-improvement tolerance of the optimizer.
    #[arg(long, default_value_t = 1e-9)]
    pub tolerance: f64,
    /// Output base path: writes <out>.csv and <out>.manifest.json.
    #[arg(long)]
    pub out: PathBuf,
    /// Worker threads (0 = all cores). Outputs do not depend on this.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
}

#[derive(Debug, Args)]
pub struct TrajectoryArgs {
    /// Register size (2..=24).
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum)]
    pub geometry: GeometryArg,
    /// Iterations per realization.
    #[arg(long)]
    pub steps: usize,
    /// Realizations in the ensemble (≥ 2).
    #[arg(long)]
    pub runs: usize,
    /// Record every k-th step (0 = dense to t=50, then every 5th).
    #[arg(long, default_value_t = 0)]
    pub record_every: usize,
    /// Evaluate G at every k-th recorded time (0 = never).
    #[arg(long, default_value_t = 1)]
    pub g_every: usize,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct SaturationArgs {
    /// Smallest register size (≥ 2).
    #[arg(long)]
    pub n_min: usize,
    /// Largest register size (≤ 24).
    #[arg(long)]
    pub n_max: usize,
    #[arg(long, value_enum, default_value_t = GeometryChoice::Both)]
    pub geometry: GeometryChoice,
    /// Realizations per (n, geometry) point.
    #[arg(long, default_value_t = 2000)]
    pub runs: usize,
    /// Iterations per realization (0 = automatic per n and geometry).
    #[arg(long, default_value_t = 0)]
    pub steps: usize,
    /// Record every k-th step (0 = dense to t=50, then every 5th).
    #[arg(long, default_value_t = 0)]
    pub record_every: usize,
    /// Evaluate G at every k-th recorded time (0 = never).
    #[arg(long, default_value_t = 5)]
    pub g_every: usize,
    /// Saturation threshold as a fraction of the tail-window mean.
    #[arg(long, default_value_t = 0.9)]
    pub fraction: f64,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct DistributionArgs {
    /// Register size (2..=24).
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = GeometryArg::Nonlocal)]
    pub geometry: GeometryArg,
    /// Times at which to histogram G, comma-separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub t: Vec<usize>,
    /// Realizations (= samples per series, ≥ 2).
    #[arg(long)]
    pub runs: usize,
    /// Histogram bin count.
    #[arg(long, default_value_t = 40)]
    pub bins: usize,
    /// Also emit the Haar-random-state reference series.
    #[arg(long)]
    pub baseline: bool,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct BaselineArgs {
    /// Register size (1..=24).
    #[arg(long)]
    pub n: usize,
    /// Number of Haar-random states to sample (≥ 1).
    #[arg(long)]
    pub samples: usize,
    #[command(flatten)]
    pub common: CommonArgs,
}

/// Usage errors exit with status 2, runtime errors with 1.
pub enum AppError {
    Usage(String),
    Runtime(anyhow::Error),
}

impl From<anyhow::Error> for AppError {
    fn from(e: anyhow::Error) -> Self {
        AppError::Runtime(e)
    }
}

pub fn usage(msg: impl Into<String>) -> AppError {
    AppError::Usage(msg.into())
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Trajectory(args) => commands::trajectory(&args),
        Command::Saturation(args) => commands::saturation(&args),
        Command::Distribution(args) => commands::distribution(&args),
        Command::Baseline(args) => commands::baseline(&args),
    };
    match result {
        Ok(()) => {}
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            exit(2);
        }
        Err(AppError::Runtime(e)) => {
            eprintln!("error: {e:#}");
            exit(1);
        }
    }
}
