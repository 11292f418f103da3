//! `f5w`: constructors, detectors, certificates, audits and searches for
//! generalized-triangle-free 3-graphs.
//!
//! Exit codes: 0 when every requested check passes, 1 when one fails, 2 on a
//! usage or input error.

mod commands;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "f5w", version, about = "Generalized-triangle workbench for 3-graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format. `3g` writes an edge list and only applies to
    /// `construct` and `search`.
    #[arg(long, value_enum, default_value_t = Emit::Json, global = true)]
    pub emit: Emit,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Lattice resolution for slack scans.
    #[arg(long, default_value_t = 60, global = true)]
    pub resolution: usize,
    /// Node limit for searches.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Seed for fuzz corpora and random scan starts.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Emit {
    Json,
    Text,
    #[value(name = "3g")]
    ThreeG,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a named 3-graph and report its basic properties.
    Construct(ConstructArgs),
    /// Evaluate predicates on a 3-graph read from a file (`-` for stdin).
    Check(CheckArgs),
    /// Run one exact certificate.
    Lemma(LemmaArgs),
    /// Run the certificate and claim catalogs.
    Audit(AuditArgs),
    /// Exhaustive small-order searches and theorem fuzzing.
    Search(SearchArgs),
    /// Re-check a JSON result written by `construct` or `search`, or a
    /// pattern witness against a 3-graph.
    Validate(ValidateArgs),
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("kind").required(true).multiple(false)))]
pub struct ConstructArgs {
    /// Balanced complete 3-partite 3-graph on N vertices.
    #[arg(long, value_name = "N", group = "kind")]
    pub turan: Option<usize>,
    /// Complete 3-partite 3-graph with parts A,B,C.
    #[arg(long, value_name = "A,B,C", value_delimiter = ',', group = "kind")]
    pub three_partite: Option<Vec<usize>>,
    /// Wheel blowup with hub class X and rim classes Y1..Y5.
    #[arg(long, value_name = "X,Y1,..,Y5", value_delimiter = ',', group = "kind")]
    pub wheel: Option<Vec<usize>>,
    /// Tight wheel blowup on N vertices (X = N/3, Yi = 2N/15; N divisible by 15).
    #[arg(long, value_name = "N", group = "kind")]
    pub wheel_tight: Option<usize>,
    /// The circulant graph Γ_D (a 2-graph).
    #[arg(long, value_name = "D", group = "kind")]
    pub gamma: Option<usize>,
    /// The seven-part witness on N vertices whose shadow contains K4.
    #[arg(long, value_name = "N", group = "kind")]
    pub witness: Option<usize>,
    /// Part sizes Y1,Y2,Y3,Z1,Z2,Z3 for `--witness` (sum N - 10).
    #[arg(long, value_name = "Y1,Y2,Y3,Z1,Z2,Z3", value_delimiter = ',', requires = "witness")]
    pub parts: Option<Vec<usize>>,
    /// Replace every vertex by M copies.
    #[arg(long, value_name = "M")]
    pub blowup: Option<usize>,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// `.3g` or JSON edge list; `-` reads stdin.
    #[arg(long)]
    pub file: PathBuf,
    #[arg(long)]
    pub f5: bool,
    #[arg(long)]
    pub k4minus: bool,
    #[arg(long)]
    pub k4shadow: bool,
    #[arg(long)]
    pub cancellative: bool,
    #[arg(long = "3partite")]
    pub three_partite: bool,
    /// Independence number of the 3-graph and of its shadow.
    #[arg(long)]
    pub alpha: bool,
    /// Link facts of cancellative and F5-free 3-graphs.
    #[arg(long)]
    pub links: bool,
    /// The minimum-degree stability implication.
    #[arg(long)]
    pub theorem: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaName {
    GammaInverse,
    Conjugation,
    Pentagon,
    Opt1,
    Opt2,
    Parameters,
    /// Sanity run: the wheel system at threshold 3/45 must be feasible.
    WeakenedOpt1,
    /// Sanity run: the Γ_d system at threshold 3/45 must be feasible.
    WeakenedOpt2,
}

#[derive(Args, Debug)]
pub struct LemmaArgs {
    #[arg(long, value_enum)]
    pub name: LemmaName,
    #[arg(long)]
    pub d: Option<usize>,
    /// Parameters as `A:B` meaning A + B√5 (rationals), for `parameters`.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub delta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<String>,
}

#[derive(Args, Debug)]
pub struct AuditArgs {
    /// Everything below (the default when no selector is given).
    #[arg(long)]
    pub all: bool,
    /// Scalar claim catalog.
    #[arg(long)]
    pub claims: bool,
    /// Extendability parameter system at the stability choice.
    #[arg(long)]
    pub parameters: bool,
    /// Matrix identities over their full parameter ranges.
    #[arg(long)]
    pub matrices: bool,
    /// Both infeasibility certificates (slower).
    #[arg(long)]
    pub systems: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    MaxEdges,
    MaxMinDegree,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long, required_unless_present = "fuzz")]
    pub n: Option<usize>,
    /// Forbidden configurations: any of f5, k4minus, k4shadow, cancellative.
    #[arg(long, default_value = "k4minus,f5")]
    pub forbid: String,
    #[arg(long, value_enum, default_value_t = ModeArg::MaxEdges)]
    pub mode: ModeArg,
    #[arg(long = "non-3partite")]
    pub non_3partite: bool,
    /// Search isomorphism classes instead of labeled graphs.
    #[arg(long)]
    pub reduced: bool,
    /// Fuzz the stability implication on COUNT random instances instead.
    #[arg(long, value_name = "COUNT", conflicts_with_all = ["n", "reduced", "non_3partite"])]
    pub fuzz: Option<u64>,
    #[arg(long, default_value_t = 5)]
    pub min_n: usize,
    #[arg(long, default_value_t = 7)]
    pub max_n: usize,
}

#[derive(Args, Debug)]
pub struct ValidateArgs {
    /// A JSON result, or with `--witness` the host 3-graph.
    #[arg(long)]
    pub file: PathBuf,
    /// A pattern witness (JSON) to check against `--file`.
    #[arg(long)]
    pub witness: Option<PathBuf>,
}

/// Outcome of a command: rendered output plus pass/fail.
pub struct Outcome {
    pub output: String,
    pub pass: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    if let Some(t) = cli.global.threads {
        if t == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        #[cfg(feature = "parallel")]
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: --threads: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli) {
        Ok(out) => {
            let mut text = out.output;
            if !text.ends_with('\n') {
                text.push('\n');
            }
            // a closed pipe (e.g. `| head`) is not an error
            let _ = std::io::stdout().write_all(text.as_bytes());
            ExitCode::from(if out.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
