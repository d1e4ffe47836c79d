use std::path::PathBuf;

use bicomm_core::Field;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "bicomm", version, about = "Computations in free bicommutative superalgebras")]
pub struct Cli {
    /// Coefficient field: `rational` or `char-C` for an odd prime C.
    #[arg(long, global = true, default_value = "rational", value_parser = parse_field)]
    pub field: Field,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Seed for randomized checks.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub fn parse_field(s: &str) -> Result<Field, String> {
    if s == "rational" || s == "rationals" {
        return Ok(Field::Rationals);
    }
    let c = s
        .strip_prefix("char-")
        .ok_or_else(|| format!("expected `rational` or `char-C`, got {s:?}"))?
        .parse::<u64>()
        .map_err(|e| format!("bad characteristic in {s:?}: {e}"))?;
    Field::prime(c).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Args)]
pub struct SigArgs {
    /// Number of even generators y1..yp.
    #[arg(long, default_value_t = 1)]
    pub p: usize,
    /// Number of odd generators z1..zq.
    #[arg(long, default_value_t = 1)]
    pub q: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GradingArg {
    Total,
    Bi,
    Multi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Deglex,
    Weight,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a bracketed term to its canonical form.
    Normalize {
        #[command(flatten)]
        sig: SigArgs,
        /// Term such as "(z2 (z1 y1))".
        term: String,
    },
    /// Test an identity by random and exhaustive substitution.
    IdentityCheck(IdentityArgs),
    /// Hilbert series of the free algebra.
    Hilbert {
        #[command(flatten)]
        sig: SigArgs,
        #[arg(long, value_enum, default_value_t = GradingArg::Total)]
        grading: GradingArg,
        /// Expansion degree.
        #[arg(long, default_value_t = bicomm_core::series::DEFAULT_TRUNCATION)]
        trunc: usize,
    },
    /// Dimension of a homogeneous component.
    Dim {
        #[command(flatten)]
        sig: SigArgs,
        /// Total degree.
        #[arg(long, conflicts_with_all = ["bi", "y", "z"])]
        total: Option<usize>,
        /// Even and odd degree, as `K,L`.
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["y", "z"])]
        bi: Option<Vec<usize>>,
        /// Degrees in y1..yp, comma separated.
        #[arg(long, value_delimiter = ',')]
        y: Option<Vec<u32>>,
        /// Degrees in z1..zq, comma separated.
        #[arg(long, value_delimiter = ',')]
        z: Option<Vec<u32>>,
    },
    /// Codimension: `--n N` for the ordinary sequence, `--p P --q Q` for the super one.
    Codim {
        #[arg(long, conflicts_with_all = ["p", "q"])]
        n: Option<usize>,
        #[arg(long, requires = "q")]
        p: Option<usize>,
        #[arg(long, requires = "p")]
        q: Option<usize>,
    },
    /// Gelfand-Kirillov dimension of the free algebra.
    Gk {
        #[command(flatten)]
        sig: SigArgs,
    },
    /// Truncated Groebner-Shirshov computations for a two-sided ideal.
    Gs {
        #[command(subcommand)]
        action: GsAction,
    },
    /// Cocharacter multiplicities.
    Cochar {
        /// Even shape, e.g. 2,1.
        #[arg(long, required_unless_present = "table", conflicts_with = "table")]
        lambda: Option<String>,
        /// Odd shape; empty for the empty partition.
        #[arg(long, default_value = "")]
        mu: String,
        /// List every pair with |lambda| + |mu| <= MAX.
        #[arg(long)]
        table: bool,
        #[arg(long, default_value_t = 6)]
        max: usize,
    },
    /// Schur polynomial in a number of variables.
    Schur {
        #[arg(long)]
        shape: String,
        #[arg(long, default_value_t = 2)]
        vars: usize,
    },
    /// Run the built-in invariant checks and print a pass/fail table.
    Selftest,
}

#[derive(Debug, Clone, Args)]
pub struct IdentityArgs {
    #[arg(long, default_value_t = 3)]
    pub p: usize,
    #[arg(long, default_value_t = 4)]
    pub q: usize,
    /// Catalog identity name; see --list.
    #[arg(long, conflicts_with_all = ["lhs", "all", "list"])]
    pub name: Option<String>,
    /// Check every catalog identity.
    #[arg(long, conflicts_with_all = ["lhs", "list"])]
    pub all: bool,
    /// Print the catalog.
    #[arg(long)]
    pub list: bool,
    /// Length parameter for the catalog's long forms.
    #[arg(long, default_value_t = 4)]
    pub k: usize,
    /// Left side of a custom identity, e.g. "(x1 (x2 x3))".
    #[arg(long, requires = "rhs")]
    pub lhs: Option<String>,
    /// Right side, or 0.
    #[arg(long, requires = "lhs")]
    pub rhs: Option<String>,
    /// Sign exponent in the variable parities, e.g. "x1*x2".
    #[arg(long, default_value = "")]
    pub sign: String,
    /// Variables forced odd.
    #[arg(long, value_delimiter = ',')]
    pub odd: Vec<String>,
    /// Variables forced even.
    #[arg(long, value_delimiter = ',')]
    pub even: Vec<String>,
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
}

#[derive(Debug, Clone, Args)]
pub struct IdealArgs {
    #[command(flatten)]
    pub sig: SigArgs,
    /// One polynomial per line; `#` starts a comment.
    #[arg(long)]
    pub ideal: PathBuf,
    #[arg(long, value_enum, default_value_t = OrderArg::Deglex)]
    pub order: OrderArg,
    /// Truncation degree; defaults to the largest input degree.
    #[arg(long)]
    pub max_degree: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum GsAction {
    /// Staircase and reduced generators.
    Basis {
        #[command(flatten)]
        ideal: IdealArgs,
    },
    /// Normal form of a polynomial.
    Reduce {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Ideal membership: yes, no or unknown.
    Member {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Quotient dimensions per degree.
    Dims {
        #[command(flatten)]
        ideal: IdealArgs,
    },
}
