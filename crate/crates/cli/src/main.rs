mod cache;
mod commands;
mod envelope;
mod job;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cache::Cache;
use crate::commands::{Failure, Outcome};

/// Generating functions for Hecke operators on modular forms of full level.
#[derive(Parser, Debug)]
#[command(name = "hecke", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Directory for cached results.
    #[arg(long, global = true, env = "HECKE_CACHE")]
    cache_dir: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Series,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Series => "series",
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    Power,
    Symmetric,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    A,
    B,
    E,
    Delta,
}

#[derive(Args, Debug, Clone)]
pub struct LevelArgs {
    /// Level: 2, 3, 5 or 7.
    #[arg(long = "N", value_name = "N")]
    pub level: u32,

    /// Basis of the torsion algebra; defaults to symmetric at level 5 and
    /// power elsewhere.
    #[arg(long, value_enum)]
    pub basis: Option<Basis>,
}

#[derive(Args, Debug, Clone)]
pub struct TableArgs {
    #[command(flatten)]
    pub level: LevelArgs,

    /// `exact` for the rational function, `series` for its coefficient
    /// table. Defaults to exact when the matrices have dimension at most 8.
    #[arg(long, value_enum)]
    pub mode: Option<Mode>,

    /// Largest source weight `4i + 6j` in coefficient tables.
    #[arg(long, default_value_t = 24, allow_negative_numbers = true)]
    pub max_weight: i64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute F_N exactly, or its coefficient table.
    Genfun(TableArgs),
    /// Compare the coefficient table of F_N with the q-expansion oracle.
    Verify(TableArgs),
    /// Print rho(a') and rho(b').
    Matrices(LevelArgs),
    /// Print the q-expansion of a, b, e or the discriminant.
    Qexp {
        #[arg(long, value_enum)]
        form: FormArg,
        /// Number of coefficients.
        #[arg(long, default_value_t = 10)]
        terms: u32,
    },
    /// Trace of T_N on the forms of one weight.
    Trace {
        #[command(flatten)]
        level: LevelArgs,
        #[arg(long, allow_negative_numbers = true)]
        weight: i64,
    },
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let cache = cli.cache_dir.as_ref().map(Cache::new);
    let cache = cache.as_ref();
    match &cli.command {
        Command::Genfun(args) => commands::genfun(args, cache),
        Command::Verify(args) => commands::verify(args, cache),
        Command::Matrices(args) => commands::matrices(args, cache),
        Command::Qexp { form, terms } => commands::qexp(*form, *terms, cache),
        Command::Trace { level, weight } => commands::trace(level, *weight, cache),
    }
}

fn render(cli: &Cli, outcome: &Outcome) -> Result<String, Failure> {
    match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&outcome.envelope).expect("envelope serializes");
            s.push('\n');
            Ok(s)
        }
        Format::Text => outcome.envelope.payload.to_text().map_err(Failure::internal),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|outcome| {
        let body = render(&cli, &outcome)?;
        match &cli.output {
            Some(path) => std::fs::write(path, body)
                .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?,
            None => print!("{body}"),
        }
        Ok(outcome.status)
    });
    match result {
        Ok(status) => ExitCode::from(status),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
