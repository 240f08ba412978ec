//! Command-line front end for the morphoforge library.
//!
//! Every subcommand reads its inputs, computes a report and writes it to
//! `--out` (atomically) or standard output. Diagnostics go to standard
//! error; [`CliError::exit_code`] maps failures to exit codes.

pub mod commands;
pub mod config;
pub mod error;
pub mod io;
pub mod svg;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use error::{CliError, Result};

#[derive(Debug, Parser)]
#[command(name = "morphoforge", version, about = "Lexicon compiler, AMP simulator and cost reports")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Json,
    Csv,
    Svg,
}

impl Emit {
    pub(crate) fn require(self, allowed: &[Emit], command: &str) -> Result<Self> {
        if allowed.contains(&self) {
            Ok(self)
        } else {
            Err(CliError::Usage(format!(
                "{command} cannot emit {:?}",
                self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
            )))
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Segment a text into indexed sentences and word forms
    Tokenize(commands::tokenize::Args),
    /// Compile a lexicon TSV into a binary memory image
    LexiconCompile(commands::compile::Args),
    /// Stem-length histogram and symbol combination counts
    Stats(commands::stats::Args),
    /// Fit a Gaussian to the stem-length histogram
    Fit(commands::fit::Args),
    /// Run the AMP simulator over a text
    Analyze(commands::analyze::Args),
    /// AMP cycles against linear-scan comparisons over lexicon sizes
    Bench(commands::bench::Args),
    /// Pareto front and weighted selection of realizations
    Pareto(commands::pareto::Args),
    /// Per-level memory cost of an image
    Memcost(commands::memcost::Args),
    /// Ontograph complexity and concept union
    Ontometrics(commands::ontometrics::Args),
}

/// Shared output flag.
#[derive(Debug, Clone, clap::Args)]
pub struct OutArgs {
    /// Output file; standard output when absent
    #[arg(short, long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Tokenize(a) => commands::tokenize::run(&a),
        Command::LexiconCompile(a) => commands::compile::run(&a),
        Command::Stats(a) => commands::stats::run(&a),
        Command::Fit(a) => commands::fit::run(&a),
        Command::Analyze(a) => commands::analyze::run(&a),
        Command::Bench(a) => commands::bench::run(&a),
        Command::Pareto(a) => commands::pareto::run(&a),
        Command::Memcost(a) => commands::memcost::run(&a),
        Command::Ontometrics(a) => commands::ontometrics::run(&a),
    }
}
