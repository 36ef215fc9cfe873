use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "chebelim",
    version,
    about = "Exact discrete Chebyshev (minimax) approximation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve min_theta max_i |x_i . theta - y_i| for a CSV instance.
    Solve(SolveArgs),
    /// Solve, then cross-check the result against vertex enumeration.
    Verify(VerifyArgs),
    /// Print the a priori entry bound C(N, M).
    Bound {
        /// Number of parameters N.
        n: usize,
        /// Number of rows M.
        m: usize,
    },
    /// Run the two built-in worked instances and compare with published results.
    Demo(DemoArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// CSV file: one row per observation, Y in the last column.
    #[arg(long)]
    pub input: PathBuf,
    /// lower, midpoint, upper, or a comma-separated list of values.
    #[arg(long, default_value = "midpoint")]
    pub selector: String,
    /// Drop rows repeated up to sign in reduced stages.
    #[arg(long)]
    pub dedupe: bool,
    /// Eliminate the columns with the most zeros first.
    #[arg(long)]
    pub reorder_columns: bool,
    /// Refuse instances whose entry bound C(N, M) exceeds this many entries.
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    /// Skip the budget check.
    #[arg(long)]
    pub force: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Use machine floats instead of exact rationals.
    #[arg(long)]
    pub float: bool,
    /// Zero tolerance in float mode.
    #[arg(long, default_value_t = chebelim_core::DEFAULT_FLOAT_TOLERANCE)]
    pub tolerance: f64,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct DemoArgs {
    /// Run with duplicate-row removal; entry counts become informational.
    #[arg(long)]
    pub dedupe: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}
