//! `pntb`: batch front-end for the bound engine.
//!
//! Every subcommand emits machine-readable output (JSON by default, CSV for
//! tabular data) in which each number carries a rounding tag: `exact`,
//! `rounded-up`, or `rounded-down`. Exit codes: 0 success, 1 usage or data
//! error, 2 certification failure (a computed bound violates a published
//! target).

mod output;
mod run;

use clap::Parser;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(
    name = "pntb",
    version,
    about = "Explicit prime-number-theorem error-bound certificates",
    after_help = "A --config TOML file, when given, overrides command-line flags.\n\
                  The data directory defaults to $PNTB_DATA_DIR, then ./data."
)]
pub struct Cli {
    /// Directory holding the zeros catalog and density constants
    #[arg(long, global = true)]
    data_dir: Option<std::path::PathBuf>,

    /// Zeros catalog file (one gamma per line)
    #[arg(long, global = true)]
    zeros: Option<std::path::PathBuf>,

    /// Zero-density constants file
    #[arg(long, global = true)]
    density: Option<std::path::PathBuf>,

    /// Output format
    #[arg(long, global = true, value_parser = ["json", "csv"])]
    format: Option<String>,

    /// Significand bits the engine must provide (>= 60; the kernel computes
    /// with 106)
    #[arg(long, global = true)]
    precision_bits: Option<u32>,

    /// TOML config; values here override the flags
    #[arg(long, global = true)]
    config: Option<std::path::PathBuf>,

    #[command(subcommand)]
    command: run::Command,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // help/version are successful exits; everything else is usage
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run::run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                pnt_bounds::Error::Certification(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
