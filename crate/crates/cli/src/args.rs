use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "pvb", version, about = "Coefficient bounds for p-valent starlike functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,

    /// Write the report to PATH instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    /// Relative tolerance for bound comparisons.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tolerance: f64,

    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Global,
    PerN,
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    #[arg(short = 'A', allow_negative_numbers = true)]
    pub a: f64,
    #[arg(short = 'B', allow_negative_numbers = true)]
    pub b: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub beta: f64,
    #[arg(short = 'p', default_value_t = 1)]
    pub p: u32,
}

#[derive(Debug, Clone, Args)]
pub struct OptionalParamArgs {
    #[arg(short = 'A', allow_negative_numbers = true, requires = "b")]
    pub a: Option<f64>,
    #[arg(short = 'B', allow_negative_numbers = true, requires = "a")]
    pub b: Option<f64>,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub beta: f64,
    #[arg(short = 'p', default_value_t = 1)]
    pub p: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bounds on |a_n| for one index or a range.
    Bound {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(short = 'n')]
        n: u32,
        /// Report every index from n through this one.
        #[arg(long)]
        n_to: Option<u32>,
    },
    /// Expand an extremal function and check that it attains the bound.
    Extremal {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t = FamilyArg::Global)]
        family: FamilyArg,
        /// Coefficient index to check (and the per-n family's target).
        #[arg(short = 'n')]
        n: u32,
        /// Number of coefficients to list past z^p.
        #[arg(long, default_value_t = 10)]
        terms: usize,
        /// δ = exp(2πi·t).
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        delta_turns: f64,
    },
    /// Sample |φ(z)|/|z| for a function to test class membership.
    Membership {
        #[command(flatten)]
        params: ParamArgs,
        /// Coefficients a_{p+1}, a_{p+2}, ... (real, or re:im).
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, conflicts_with = "family")]
        coeffs: Option<Vec<String>>,
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        #[arg(short = 'n')]
        n: Option<u32>,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        delta_turns: f64,
        /// Series order used for evaluation.
        #[arg(long, default_value_t = 400)]
        order: usize,
        #[arg(long, value_delimiter = ',')]
        radii: Option<Vec<f64>>,
        #[arg(long, default_value_t = 256)]
        angles: usize,
    },
    /// Build random class members and check every coefficient bound.
    Sweep {
        #[command(flatten)]
        params: OptionalParamArgs,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        /// Largest coefficient index, absolute (defaults to p + 10).
        #[arg(long)]
        max_n: Option<u32>,
        /// Sweep the built-in 20-point parameter grid instead of one point.
        #[arg(long)]
        grid: bool,
    },
    /// Reproduce the summand sign table and the product-formula counterexample.
    Audit {
        /// Only the table.
        #[arg(long)]
        table1: bool,
    },
    /// Show that the product formula is exceeded by a class member.
    Falsify {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(short = 'n')]
        n: u32,
    },
    /// Check the product/weighted-sum identity in the positive regime.
    IdentityCheck {
        #[command(flatten)]
        params: OptionalParamArgs,
        /// Largest m checked for the given parameters.
        #[arg(long)]
        m_to: Option<u32>,
        /// Check this many random positive-regime (params, m) pairs instead.
        #[arg(long)]
        random: Option<usize>,
    },
}
