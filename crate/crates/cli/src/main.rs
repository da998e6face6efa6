//! `davis`: batch front end for flag complexes, right-angled Coxeter groups,
//! Davis complex truncations and quotients, homology and genus bounds.
//!
//! Exit codes: 0 ok, 1 certificate failure, 2 usage or input error,
//! 3 resource guard exceeded.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "davis", version, about = "Reflection group constructions over flag complexes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Seed for randomized checks; recorded in every report.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Flag and flag-no-square predicates, empty squares, hyperbolicity.
    Check(InputArgs),
    /// Barycentric subdivision and the flag-no-square refinement loop.
    Subdivide(SubdivideArgs),
    /// Balls, growth, hyperbolicity and the torsion scan of W(T).
    Group(GroupArgs),
    /// Truncations of the Davis complex with disk certificates.
    Davis(DavisArgs),
    /// The quotient by the commutator subgroup, with its homology.
    Quotient(QuotientArgs),
    /// Integral homology of a complex.
    Homology(InputArgs),
    /// Chern evaluation and adjunction genus bounds.
    Adjunction(AdjunctionArgs),
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct InputArgs {
    /// Complex JSON: {"vertices": [...], "facets": [[...], ...]}.
    #[arg(long, short, conflicts_with = "builtin", required_unless_present = "builtin")]
    pub input: Option<PathBuf>,

    /// A built-in complex: cycle-N, simplex-boundary-D, pentagon, square,
    /// octahedron, icosahedron, rp2, torus, point, edge.
    #[arg(long)]
    pub builtin: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct SubdivideArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// Refinement rounds before giving up.
    #[arg(long, default_value_t = 3)]
    pub rounds: usize,

    /// Include the resulting complex in the report.
    #[arg(long)]
    pub emit_complex: bool,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct GroupArgs {
    #[command(flatten)]
    pub input: InputArgs,

    #[arg(long, default_value_t = 4)]
    pub radius: usize,

    /// Guard on the number of group elements enumerated.
    #[arg(long, default_value_t = 1_000_000, value_parser = positive)]
    pub max_elements: usize,

    /// Samples per check of the free-product law.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,

    /// `json` report, or `csv` growth table.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// With `--format csv`, dump the ordered ball instead of the growth table.
    #[arg(long)]
    pub ball: bool,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct DavisArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// Number of chambers in the truncation.
    #[arg(long, default_value_t = 16)]
    pub tiles: usize,

    #[arg(long, default_value_t = 4096, value_parser = positive)]
    pub max_tiles: usize,

    #[arg(long, default_value_t = 2_000_000, value_parser = positive)]
    pub max_cells: usize,

    /// `json` report or `dot` tile adjacency graph.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Include boundary matrices and the adjacency graph in the JSON report.
    #[arg(long)]
    pub dump: bool,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct QuotientArgs {
    #[command(flatten)]
    pub input: InputArgs,

    #[arg(long, default_value_t = 2_000_000, value_parser = positive)]
    pub max_cells: usize,

    /// Include boundary matrices in the report.
    #[arg(long)]
    pub dump: bool,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct AdjunctionArgs {
    /// Curve data {"B": {"tb": .., "r": .., "framing": ..}, "G": {...}};
    /// framing defaults to tb - 1. Without it the built-in Stein data is used.
    #[arg(long, short)]
    pub input: Option<PathBuf>,

    /// Multiples k of the generator to bound (repeatable).
    #[arg(long = "k", default_values_t = vec![1i64, 2, 3], allow_negative_numbers = true)]
    pub multiples: Vec<i64>,

    /// Report the clasped family for m = 0..=N.
    #[arg(long, default_value_t = 3)]
    pub family: i64,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(outcome) => {
            if let Err(e) = report::emit(cli.output.as_deref(), &outcome.body) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if outcome.certified {
                ExitCode::SUCCESS
            } else {
                eprintln!("certificate failure");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
