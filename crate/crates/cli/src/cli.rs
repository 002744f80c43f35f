use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact Drazin inverses of aP + bQ for idempotent pairs.
#[derive(Debug, Parser)]
#[command(name = "idemdrazin", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit a JSON report instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Include wall-clock timing in the report.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the condition classes a pair satisfies.
    Classify(InputArgs),
    /// Drazin inverse of aP + bQ by closed form, oracle, or both.
    Drazin(DrazinArgs),
    /// Write a seeded pair of the given class.
    Generate(GenerateArgs),
    /// Check a formula's Drazin identities in the quotient algebra.
    Symbolic(SymbolicArgs),
    /// Check a candidate inverse of aP + bQ.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Pair document (JSON).
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct Scalars {
    /// Coefficient of P; overrides the document.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// Coefficient of Q; overrides the document.
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Oracle,
    Both,
}

#[derive(Debug, Args)]
pub struct DrazinArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub scalars: Scalars,
    #[arg(long, value_enum, default_value_t = Method::Both)]
    pub method: Method,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// Condition class, e.g. PQP_P or pqp-p.
    #[arg(long)]
    pub class: String,
    #[arg(long)]
    pub size: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Bound on the off-diagonal entries of the similarity factors.
    #[arg(long, default_value_t = idemdrazin::generator::DEFAULT_ENTRY_BOUND)]
    pub entry_bound: i64,
    #[command(flatten)]
    pub scalars: Scalars,
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SymbolicArgs {
    /// Formula id: pqp-zero, pqp-p, pqp-p-diff, commute, commute-diff,
    /// pqp-q, pqp-q-diff, pqp-pq-sum, pqp-pq-diff.
    #[arg(long)]
    pub theorem: String,
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, allow_hyphen_values = true)]
    pub b: String,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub scalars: Scalars,
    /// Candidate inverse (matrix JSON).
    #[arg(long)]
    pub candidate: PathBuf,
    /// Exponent in A^(k+1)B = A^k.
    #[arg(long)]
    pub k: u32,
}
