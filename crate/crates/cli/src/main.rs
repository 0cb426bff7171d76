mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

/// Total domination and minimum maximal matchings on small graphs.
///
/// Graphs are read as edge lists: one `u v` pair per line, `#` comments,
/// and an optional `vertices: a b c` line declaring vertices. Use `-` to
/// read standard input.
///
/// Exit status: 0 success or yes, 1 negative verdict, 2 error.
#[derive(Debug, Parser)]
#[command(name = "totdom", version)]
pub struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Total domination number with a lex-least witness.
    GammaT { input: PathBuf },
    /// Minimum maximal matching number with a lex-least witness.
    MuStar { input: PathBuf },
    /// Decide gamma_t = 2 mu* for a graph of minimum degree 2 in polynomial time.
    Recognize {
        input: PathBuf,
        /// Cross-check against the exact solvers when the graph is small enough.
        #[arg(long)]
        oracle: bool,
        /// Write the certifying matching, if any, as an edge list.
        #[arg(long, value_name = "FILE")]
        certificate_out: Option<PathBuf>,
    },
    /// Check a matching against the extremal-graph conditions.
    Verify { input: PathBuf, matching: PathBuf },
    /// Print a member of a named family as an edge list.
    Generate {
        family: Family,
        /// Family parameters: n for most families, `n delta` for prop2.
        params: Vec<usize>,
        /// Seed for family-f.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Build family-f from a recipe file instead of sampling.
        #[arg(long, value_name = "FILE")]
        recipe: Option<PathBuf>,
        /// Sample family-f without marked vertices (minimum degree 2).
        #[arg(long)]
        unmarked: bool,
        /// Largest family-f instance to accept when sampling.
        #[arg(long, default_value_t = 16)]
        max_vertices: usize,
        /// Write the construction's matching, if any, as an edge list.
        #[arg(long, value_name = "FILE")]
        matching_out: Option<PathBuf>,
    },
    /// Compare gamma_t with the degree-dependent bound in terms of mu*.
    Bounds { input: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Spider,
    SubdividedGrid,
    KFamily,
    Cycle,
    Path,
    Prop2,
    FamilyF,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = commands::run(&cli.command);
    print!("{}", out.render(cli.json));
    if let Some(msg) = &out.error {
        eprintln!("error: {msg}");
    }
    ExitCode::from(out.status)
}
