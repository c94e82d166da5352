//! `iso-euler`: exact scale-invariant Euler solutions from the command line.
//!
//! Exit codes: 0 success, 1 numerical failure or missed threshold, 2 config error.

// `!(x > 0.0)` is used on purpose so that NaN fails positivity checks
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod config;
mod error;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{Artifact, Outcome};
use error::CliError;

const THREADS_VAR: &str = "ISO_EULER_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "iso-euler",
    version,
    about = "Scale-invariant homentropic Euler solutions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, clap::Args)]
struct Common {
    /// JSON run configuration.
    #[arg(long)]
    config: PathBuf,
    /// Output directory, created if missing.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Planar Noh shock states over a sweep of inflow speeds.
    Noh(Common),
    /// Shock-free Tait bubble profiles for each geometry.
    Bubble(Common),
    /// Integrate the reduced similarity ODEs of a scaling group.
    Similarity(Common),
    /// Finite-volume convergence suites with pass/fail thresholds.
    Verify(Common),
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        error::config(format!(
            "{THREADS_VAR} must be a positive integer, got `{raw}`"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(error::numerical)
}

fn write_outputs(outcome: &Outcome, out: &Path, format: Format) -> Result<(), CliError> {
    std::fs::create_dir_all(out)?;
    for artifact in &outcome.artifacts {
        let (file, text) = match (artifact, format) {
            (Artifact::Table(name, table), Format::Csv) => (format!("{name}.csv"), table.to_csv()),
            (Artifact::Table(name, table), Format::Json) => {
                (format!("{name}.json"), table.to_json())
            }
            (Artifact::Json(name, value), _) => {
                let mut text = serde_json::to_string_pretty(value).map_err(error::numerical)?;
                text.push('\n');
                (format!("{name}.json"), text)
            }
        };
        std::fs::write(out.join(file), text)?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), CliError> {
    configure_threads()?;
    let (common, outcome) = match &cli.command {
        Command::Noh(c) => (c, commands::noh(&config::load(&c.config)?)?),
        Command::Bubble(c) => (c, commands::bubble(&config::load(&c.config)?)?),
        Command::Similarity(c) => (c, commands::similarity(&config::load(&c.config)?)?),
        Command::Verify(c) => (c, commands::verify(&config::load(&c.config)?)?),
    };
    write_outputs(&outcome, &common.out, common.format)?;
    match outcome.failure {
        Some(msg) => Err(CliError::Numerical(msg)),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("iso-euler: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
