use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "ucr",
    version,
    about = "Compare scaled classical and quantum moments of 1D bound systems",
    after_help = "Exit status: 0 ok, 1 computation error, 2 parity or verify failure, 64 usage error.\n\
                  A key=value config file may be given with --config or UCR_CONFIG; flags win."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classical vs quantum moments, commutator bound and parity verdict per level.
    Compare(RunArgs),
    /// Quantum and classical position densities on a grid over the scaled region.
    Density(RunArgs),
    /// Scaled bouncer energies, the magnitudes of the zeros of Ai.
    AiryZeros(RunArgs),
    /// Check classical quadrature moments against a trajectory time average.
    Verify(RunArgs),
    /// List the registered systems and their parameters.
    Systems,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Rule {
    Midpoint,
    Uniform,
    Random,
}

#[derive(Debug, Clone, Default, Args)]
pub struct RunArgs {
    /// System name or alias (see `ucr systems`).
    #[arg(long)]
    pub system: Option<String>,
    /// Quantum numbers: a list `0,1,5`, an inclusive range `1..5`, or both.
    #[arg(long)]
    pub n: Option<String>,
    /// Grid points for `density`.
    #[arg(long)]
    pub points: Option<usize>,
    /// Trajectory samples per period for `verify`.
    #[arg(long)]
    pub samples: Option<usize>,
    /// Parity tolerance (default 1e-6 for compare, 1e-4 for verify).
    #[arg(long)]
    pub tol: Option<f64>,
    /// Absolute and relative quadrature tolerance.
    #[arg(long = "quad-tol")]
    pub quad_tol: Option<f64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Report path; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// key=value config file.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Verification oracle; only `trajectory` exists.
    #[arg(long)]
    pub oracle: Option<String>,
    /// Number of zeros for `airy-zeros`.
    #[arg(long)]
    pub count: Option<u32>,
    /// Sample placement for `verify`.
    #[arg(long, value_enum)]
    pub rule: Option<Rule>,
    /// Seed for `--rule random`.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Physical parameter, e.g. `--param mass=2`; repeatable.
    #[arg(long = "param", value_name = "KEY=VALUE")]
    pub params: Vec<String>,
}
