use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use curvearr::Rational;

/// Audit curve arrangement combinatorics with exact arithmetic.
#[derive(Debug, Parser)]
#[command(name = "curvearr", version, about, long_about = None)]
pub struct Cli {
    /// Output format (default: table for audit/search, json for generate/intersect).
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check an arrangement-class file against every inequality.
    Audit {
        path: PathBuf,
        /// Also evaluate the parametric inequalities and the global orbifold check at this weight.
        #[arg(long, value_parser = parse_rational)]
        alpha: Option<Rational>,
    },
    /// Print a named arrangement class.
    Generate {
        /// icosahedron, klein, fermat N, hesse, extended_hesse, wiman, generic_lines K, pencil K
        name: String,
        params: Vec<u64>,
    },
    /// Derive the arrangement class of a rational line arrangement.
    Intersect { path: PathBuf },
    /// Enumerate t-vectors not ruled out by the selected inequalities.
    Search(SearchArgs),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["lines", "equal_degree", "line_conic"])))]
pub struct SearchArgs {
    /// K lines.
    #[arg(long, value_name = "K")]
    pub lines: Option<u64>,

    /// K curves of degree D.
    #[arg(long, num_args = 2, value_names = ["D", "K"])]
    pub equal_degree: Option<Vec<u64>>,

    /// L lines and K conics.
    #[arg(long, num_args = 2, value_names = ["L", "K"])]
    pub line_conic: Option<Vec<u64>>,

    /// Comma-separated inequality names, `all` or `none`.
    #[arg(long, default_value = "none")]
    pub filters: String,

    /// Largest multiplicity to enumerate.
    #[arg(long, value_name = "N")]
    pub r_cap: Option<u64>,

    #[arg(long, value_enum, default_value_t = Policy::Pass)]
    pub policy: Policy,

    /// Stop after this many survivors.
    #[arg(long, value_name = "N")]
    pub limit: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Policy {
    /// Inapplicable filters let candidates through.
    Pass,
    /// Candidates outside a filter's hypotheses are skipped.
    Require,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e| format!("{e}"))
}
