use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

#[derive(Debug, Parser)]
#[command(name = "qubo", version, about = "Reduce, solve and benchmark QUBO instances with a counted decision oracle")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve an instance, reducing it to QUBO first when needed.
    Solve(SolveArgs),
    /// Write the QUBO (or integer program) an instance reduces to.
    Reduce(ReduceArgs),
    /// Decide whether the minimum of a QUBO equals `--value`.
    Decide(DecideArgs),
    /// Turn an optimal clique-QUBO assignment into a maximum clique.
    Repair(RepairArgs),
    /// Count oracle queries over a seeded instance family and print CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Qubo,
    Ilp,
    Graph,
    Knapsack,
    Rqubo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Auto,
    General,
    Lqubo,
    Uqubo,
}

#[derive(Debug, Args)]
pub struct Io {
    #[arg(long)]
    pub input: PathBuf,
    /// Defaults to standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "qubo")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub io: Io,
    #[arg(long, value_enum, default_value = "auto")]
    pub mode: Mode,
    /// Every coefficient is at least this negative value (lqubo mode).
    #[arg(long, allow_negative_numbers = true)]
    pub lower_bound: Option<BigInt>,
    /// Every coefficient is below this positive value (uqubo mode).
    #[arg(long, allow_negative_numbers = true)]
    pub upper_bound: Option<BigInt>,
    #[arg(long)]
    pub extract_argmin: bool,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[command(flatten)]
    pub io: Io,
}

#[derive(Debug, Args)]
pub struct DecideArgs {
    #[command(flatten)]
    pub io: Io,
    #[arg(long, allow_negative_numbers = true)]
    pub value: BigInt,
}

#[derive(Debug, Args)]
pub struct RepairArgs {
    /// Graph file.
    #[arg(long)]
    pub input: PathBuf,
    /// File holding the optimal assignment of the graph's clique QUBO.
    #[arg(long)]
    pub assignment: PathBuf,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub family: String,
    /// Inclusive range `A..B` of vertex counts or exponents.
    #[arg(long)]
    pub sizes: String,
    #[arg(long, default_value_t = 1)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}
