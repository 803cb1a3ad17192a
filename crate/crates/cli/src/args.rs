use clap::{Args, Parser, Subcommand, ValueEnum};
use tridiag_pow::{ComplexScalar, Family};

use crate::complex_lit::parse_complex;

#[derive(Debug, Parser)]
#[command(
    name = "tridiag-pow",
    version,
    about = "Closed-form integer powers of structured complex tridiagonal matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the s-th power of a family matrix.
    Power(PowerArgs),
    /// Print eigenvalues, nodes and optionally the eigenvector matrix.
    Eigen(EigenArgs),
    /// Compare the closed form against the brute-force oracle.
    Verify(VerifyArgs),
    /// Fibonacci polynomial: recurrence, factorisation, determinant identity.
    Fib(FibArgs),
    /// Time the closed form against binary exponentiation (CSV output).
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    A,
    Adagger,
    Anti,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::A => Family::A,
            FamilyArg::Adagger => Family::ADagger,
            FamilyArg::Anti => Family::AntiADagger,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Pretty,
}

#[derive(Debug, Clone, Args)]
pub struct MatrixArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub a: ComplexScalar,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub b: ComplexScalar,
}

#[derive(Debug, Clone, Args)]
pub struct PowerArgs {
    #[command(flatten)]
    pub matrix: MatrixArgs,
    #[arg(long, allow_negative_numbers = true)]
    pub s: i64,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct EigenArgs {
    #[command(flatten)]
    pub matrix: MatrixArgs,
    /// Also print the eigenvector (transforming) matrix.
    #[arg(long)]
    pub vectors: bool,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Run the randomized property suites instead of a single case.
    #[arg(long)]
    pub suite: bool,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    #[arg(long, value_enum, required_unless_present = "suite")]
    pub family: Option<FamilyArg>,
    #[arg(long, required_unless_present = "suite")]
    pub n: Option<usize>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, required_unless_present = "suite")]
    pub a: Option<ComplexScalar>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, required_unless_present = "suite")]
    pub b: Option<ComplexScalar>,
    #[arg(long, allow_negative_numbers = true, required_unless_present = "suite")]
    pub s: Option<i64>,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct FibArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub x: ComplexScalar,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Comma-separated dimensions.
    #[arg(long, value_delimiter = ',', required = true)]
    pub n: Vec<usize>,
    /// Comma-separated non-negative exponents.
    #[arg(long, value_delimiter = ',', required = true)]
    pub s: Vec<u32>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}
