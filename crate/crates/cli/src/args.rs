use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "turankit",
    version,
    about = "Turán-type inequalities |x|^θ p_n² − p_{n−1}p_{n+1} ≥ 0 for three-term recurrence families"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate p_{n−1}, p_n, p_{n+1} and t_n = p_{n+1}/p_n at one point.
    Eval(EvalArgs),
    /// Check the weighted determinant on an interval for each (λ, n) cell.
    Check(CheckArgs),
    /// Like `check`, but with exact Sturm certificates wherever λ and θ are rational.
    Certify(CheckArgs),
    /// Bracket the largest admissible exponent θ for each (λ, n) cell.
    SharpTheta(SharpArgs),
    /// Compare the vertex x̃ with the largest zeros, and test the Christoffel–Darboux kernel.
    Claims(ClaimsArgs),
    /// Evaluate ρ, η, D_n, g and the factorization residuals against their sign claims.
    Audit(AuditArgs),
    /// Branch gaps and resultants to the right of x₀ for large n.
    Remark(RemarkArgs),
    /// SVG of t_n with both branches of the curves 𝒯_n and 𝒯_{n+1}.
    Plot(PlotArgs),
    /// Plain Turán inequality for a monic symmetric family with increasing a_n.
    AskeyCheck(AskeyArgs),
    /// Hermite-type weighted inequality and vertex values.
    HermiteCheck(HermiteArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Clone, Debug, Args)]
pub struct Common {
    /// Working precision in bits (at least 53).
    #[arg(long, env = "TURANKIT_PRECISION", default_value_t = 128)]
    pub precision: u32,
    /// Output format; csv for tables and svg for plots by default.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Debug, Args)]
pub struct FamilyArgs {
    /// Named family: ultraspherical, legendre, chebyshev, hermite, hermite-standard.
    #[arg(long, conflicts_with = "family_file")]
    pub family: Option<String>,
    /// JSON family description.
    #[arg(long)]
    pub family_file: Option<PathBuf>,
    /// λ as p/q or a decimal literal; comma-separated where several are allowed.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
}

#[derive(Clone, Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Index n, or a list/range such as 1..5.
    #[arg(long)]
    pub n: String,
    /// Evaluation point (p/q or decimal).
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Clone, Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Indices: n, a..b or a comma list.
    #[arg(long)]
    pub n: String,
    /// Exponent: a value, `auto` (4/(2−λ) for λ ≤ 0, 2/(1+2λ) for λ ≥ 0, the
    /// x²/(x²+a_n−a_{n−1}) factor for monic families) or `thm2` (inf_n F(n)).
    #[arg(long, default_value = "auto", allow_hyphen_values = true)]
    pub theta: String,
    /// Scan interval lo..hi.
    #[arg(long, default_value = "0..1", allow_hyphen_values = true)]
    pub x: String,
    /// Scan grid size.
    #[arg(long, default_value_t = 4096)]
    pub grid: usize,
    /// Use exact Sturm certificates where possible (always on for `certify`).
    #[arg(long)]
    pub exact: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Clone, Debug, Args)]
pub struct SharpArgs {
    /// λ values, comma-separated.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long)]
    pub n: String,
    /// Bracket width.
    #[arg(long, default_value = "1e-4")]
    pub tol: String,
    #[arg(long, default_value_t = 4096)]
    pub grid: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Clone, Debug, Args)]
pub struct ClaimsArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long)]
    pub n: String,
    /// Kernel grid size on [−1, 1].
    #[arg(long, default_value_t = 1001)]
    pub grid: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Clone, Debug, Args)]
pub struct AuditArgs {
    /// Rational λ values, comma-separated.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long)]
    pub n: String,
    /// Rational exponent; defaults to the `auto` value.
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<String>,
    /// Single evaluation point instead of the interior grid.
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    /// Print residual polynomials and the symbolic resultant in full.
    #[arg(long)]
    pub symbolic: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Clone, Debug, Args)]
pub struct RemarkArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    /// Exponent value or `auto`.
    #[arg(long, default_value = "auto", allow_hyphen_values = true)]
    pub theta: String,
    #[arg(long)]
    pub n: String,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Clone, Debug, Args)]
pub struct PlotArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "auto", allow_hyphen_values = true)]
    pub theta: String,
    /// Plot range lo..hi, or `auto` (from just left of min(x̃, x₂) up to 1).
    #[arg(long, default_value = "auto", allow_hyphen_values = true)]
    pub x: String,
    /// Samples per curve.
    #[arg(long, default_value_t = 512)]
    pub grid: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Clone, Debug, Args)]
pub struct AskeyArgs {
    /// Monic symmetric family; defaults to monic Hermite (a_n = n/2).
    #[arg(long)]
    pub family_file: Option<PathBuf>,
    /// Largest index; a range uses its maximum.
    #[arg(long, default_value = "20")]
    pub n: String,
    #[arg(long, default_value = "-8..8", allow_hyphen_values = true)]
    pub x: String,
    #[arg(long, default_value_t = 801)]
    pub grid: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Clone, Debug, Args)]
pub struct HermiteArgs {
    /// Monic symmetric family; defaults to Hermite (scanned in standard normalization).
    #[arg(long)]
    pub family_file: Option<PathBuf>,
    #[arg(long, default_value = "1..20")]
    pub n: String,
    #[arg(long, default_value = "-8..8", allow_hyphen_values = true)]
    pub x: String,
    #[arg(long, default_value_t = 4096)]
    pub grid: usize,
    /// Also test 20 random increasing triples drawn from this seed.
    #[arg(long)]
    pub seed: Option<u64>,
    #[command(flatten)]
    pub common: Common,
}
