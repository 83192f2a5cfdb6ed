//! Command-line front end for `sdgamma-core`.
//!
//! Every command produces both a text report and a versioned JSON report;
//! [`run`] returns them together with the verdict so that output is a pure
//! function of the arguments and the input.

use std::num::NonZeroUsize;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub mod commands;
pub mod input;
pub mod render;
pub mod witness;

pub use input::{parse_document, parse_inline_facets, parse_inline_h, Decimal, Input};
pub use witness::{parse_witness, verify_witness, WitnessDocument};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{origin}:{line}:{column}: {message}")]
    Parse { origin: String, line: usize, column: usize, message: String },
    #[error("{0}")]
    Input(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Parse { .. } | CliError::Input(_) => 2,
        }
    }
}

impl From<sdgamma_core::Error> for CliError {
    fn from(e: sdgamma_core::Error) -> Self {
        match e {
            sdgamma_core::Error::TheoremRefuted { .. } => CliError::Verification(e.to_string()),
            e => CliError::Input(e.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "sdgamma", version, about = "f-, h-, g- and gamma-vectors of simplicial complexes and their barycentric subdivisions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Size limit; its meaning depends on the command (see each command's help).
    #[arg(long, global = true)]
    pub cap: Option<NonZeroUsize>,
    /// Worker threads for parallel enumeration. Results do not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<NonZeroUsize>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// JSON document with "facets" or "h"; `-` reads stdin.
    #[arg(long, value_name = "FILE")]
    pub input: Option<String>,
    /// Comma-separated h-vector.
    #[arg(long, value_name = "H", allow_hyphen_values = true)]
    pub h: Option<String>,
    /// JSON list of facets.
    #[arg(long = "facets-inline", value_name = "FACETS")]
    pub facets_inline: Option<String>,
}

impl InputArgs {
    pub fn load(&self) -> Result<Input, CliError> {
        match (&self.input, &self.h, &self.facets_inline) {
            (Some(path), None, None) => {
                let (source, text) = input::read_source(path)?;
                parse_document(&source, &text)
            }
            (None, Some(h), None) => parse_inline_h(h),
            (None, None, Some(f)) => parse_inline_facets(f),
            _ => Err(CliError::Input("give exactly one of --input, --h, --facets-inline".into())),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// f, h, g and gamma of the input and of its barycentric subdivision.
    Vectors(InputArgs),
    /// The barycentric subdivision; --cap bounds its facet count (default 10^6).
    Subdivide(InputArgs),
    /// Restricted Eulerian table and gamma families; --cap bounds n (default 40).
    Eulerian {
        #[arg(long)]
        n: usize,
    },
    /// Decides whether a vector is the f-vector of a d-colored complex.
    FfkCheck {
        /// Comma-separated vector starting with 1.
        #[arg(long, value_name = "F")]
        f: String,
        /// Number of colors.
        #[arg(long)]
        d: usize,
    },
    /// Balanced complex with f-vector gamma(sd); --cap bounds its face count (default 10^6).
    Witness(InputArgs),
    /// Batch identity checks up to --n-max (capped by --cap, default 12), or
    /// re-verification of a witness document.
    Verify {
        #[arg(long = "n-max", required_unless_present = "witness", conflicts_with = "witness")]
        n_max: Option<usize>,
        /// Witness document produced by `witness --format json`; `-` reads stdin.
        #[arg(long, value_name = "FILE")]
        witness: Option<String>,
    },
}

/// A finished command: both renderings and whether everything checked out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub json: serde_json::Value,
    pub success: bool,
}

impl Outcome {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("reports are valid JSON");
                s.push('\n');
                s
            }
        }
    }

    pub fn exit_code(&self) -> u8 {
        if self.success {
            0
        } else {
            1
        }
    }
}

pub fn configure_threads(threads: Option<NonZeroUsize>) -> Result<(), CliError> {
    if let Some(k) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k.get())
            .build_global()
            .map_err(|e| CliError::Input(format!("--threads: {e}")))?;
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let cap = cli.cap.map(NonZeroUsize::get);
    match &cli.command {
        Command::Vectors(args) => commands::vectors(&args.load()?),
        Command::Subdivide(args) => commands::subdivide(&args.load()?, cap.unwrap_or(1_000_000)),
        Command::Eulerian { n } => commands::eulerian(*n, cap.unwrap_or(40)),
        Command::FfkCheck { f, d } => commands::ffk_check(f, *d),
        Command::Witness(args) => commands::witness(&args.load()?, cap.unwrap_or(1_000_000)),
        Command::Verify { n_max: Some(n), .. } => commands::verify(*n, cap.unwrap_or(12)),
        Command::Verify { witness: Some(path), .. } => {
            let (source, text) = input::read_source(path)?;
            commands::verify_witness_document(&parse_witness(&source, &text)?)
        }
        Command::Verify { .. } => Err(CliError::Input("give --n-max or --witness".into())),
    }
}
