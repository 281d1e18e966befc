//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "anomalab",
    version,
    about = "Scale-anomaly calculator for delta-function and 1/r^2 potentials"
)]
pub struct Cli {
    /// Output format; csv unless the subcommand says otherwise.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the table here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Also write an SVG plot of the main column.
    #[arg(long, global = true)]
    pub svg: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Phase shift of one partial wave over a log-spaced k grid.
    PhaseShift(PhaseShiftArgs),
    /// Differential cross section in one of three regimes.
    CrossSection(CrossSectionArgs),
    /// Geometric tower of bound levels for a cutoff a.
    BoundStates(BoundStatesArgs),
    /// Coupling flow Xi(a) that keeps the ground state fixed.
    Flow(FlowArgs),
    /// Critical dipole coupling from truncated angular matrices.
    CriticalDipole(CriticalDipoleArgs),
    /// Classical deflection and cross section for repulsive g.
    Classical(ClassicalArgs),
    /// Closed forms against direct radial integration.
    OracleCompare(OracleArgs),
}

#[derive(Debug, Clone, Args)]
pub struct KRange {
    #[arg(long, default_value_t = 0.1)]
    pub k_min: f64,
    #[arg(long, default_value_t = 10.0)]
    pub k_max: f64,
    #[arg(long, default_value_t = 50)]
    pub k_steps: usize,
}

/// Angles in radians, linearly spaced.
#[derive(Debug, Clone, Args)]
pub struct ThetaRange {
    #[arg(long, default_value_t = 0.1)]
    pub theta_min: f64,
    #[arg(long, default_value_t = 3.0)]
    pub theta_max: f64,
    #[arg(long, default_value_t = 30)]
    pub theta_steps: usize,
}

#[derive(Debug, Clone, Args)]
pub struct PhaseShiftArgs {
    /// Coupling g = 2m lambda.
    #[arg(long, allow_negative_numbers = true)]
    pub g: f64,
    #[arg(long, default_value_t = 0)]
    pub l: u32,
    /// Ground-state scale; required for an anomalous s-wave.
    #[arg(long)]
    pub mu: Option<f64>,
    #[command(flatten)]
    pub k: KRange,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Regime {
    /// Two-dimensional delta function (needs --kappa; sweeps k).
    Delta2d,
    /// Anomalous 1/r^2 (needs --g, --mu, --k; sweeps theta).
    Invsq,
    /// Repulsive 1/r^2, classical and quantum (needs --g; sweeps theta).
    Classical,
}

#[derive(Debug, Clone, Args)]
pub struct CrossSectionArgs {
    #[arg(long, value_enum)]
    pub regime: Regime,
    /// Bound-state momentum of the delta function.
    #[arg(long)]
    pub kappa: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub g: Option<f64>,
    #[arg(long)]
    pub mu: Option<f64>,
    /// Momentum for the angular sweeps.
    #[arg(long)]
    pub k: Option<f64>,
    /// Energy for the classical regime (k = sqrt(E)).
    #[arg(long)]
    pub energy: Option<f64>,
    /// Fixed partial-wave cutoff; adaptive when omitted (invsq), 4000 (classical).
    #[arg(long)]
    pub l_max: Option<u32>,
    /// Taper fraction of the classical-regime quantum sum.
    #[arg(long)]
    pub taper: Option<f64>,
    #[command(flatten)]
    pub k_range: KRange,
    #[command(flatten)]
    pub theta: ThetaRange,
}

#[derive(Debug, Clone, Args)]
pub struct BoundStatesArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub g: f64,
    /// Hard-wall cutoff radius.
    #[arg(long)]
    pub a: f64,
    #[arg(long, default_value_t = 5)]
    pub levels: u32,
}

#[derive(Debug, Clone, Args)]
pub struct FlowArgs {
    #[arg(long, default_value_t = 1.0)]
    pub mu: f64,
    #[arg(long, default_value_t = 1e-6)]
    pub a_min: f64,
    #[arg(long, default_value_t = 1e-3)]
    pub a_max: f64,
    #[arg(long, default_value_t = 4)]
    pub a_steps: usize,
    /// Add a Numerov shooting column at each a.
    #[arg(long)]
    pub shoot: bool,
}

#[derive(Debug, Clone, Args)]
pub struct CriticalDipoleArgs {
    #[arg(long, default_value_t = 8)]
    pub n_max: u32,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
}

#[derive(Debug, Clone, Args)]
pub struct ClassicalArgs {
    #[arg(long)]
    pub g: f64,
    #[arg(long, default_value_t = 1.0)]
    pub energy: f64,
    #[command(flatten)]
    pub theta: ThetaRange,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Non-anomalous phase shifts, random cases.
    Repulsive,
    /// Ground level against the zero locator.
    Bound,
    /// Shooting scale along the coupling flow.
    Flow,
}

#[derive(Debug, Clone, Args)]
pub struct OracleArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Override the suite tolerance.
    #[arg(long)]
    pub tolerance: Option<f64>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Number of random cases (repulsive suite).
    #[arg(long, default_value_t = 20)]
    pub cases: usize,
}
