//! `ecover`: generate, verify and analyse the genus-g covers of the Legendre
//! elliptic curves.
//!
//! Exit status: 0 when every check passes, 1 when a check fails, 2 on usage
//! or parse errors.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

const DEFAULT_MAX_GENUS: i64 = 64;

#[derive(Parser)]
#[command(name = "ecover", version, about = "Exact covers of the Legendre elliptic curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Build the genus-G cover and certify it.
    Generate {
        #[arg(long, allow_negative_numbers = true)]
        genus: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Refuse genera above this bound.
        #[arg(long, default_value_t = DEFAULT_MAX_GENUS)]
        max_genus: i64,
    },
    /// Check a cover document.
    Verify { file: PathBuf },
    /// Print the staircase origami of genus G.
    Origami {
        #[arg(long, allow_negative_numbers = true)]
        genus: i64,
        #[arg(long, default_value_t = DEFAULT_MAX_GENUS)]
        max_genus: i64,
    },
    /// Re-derive the genus-G cover from its t = 0 degeneration.
    Degenerate {
        #[arg(long, allow_negative_numbers = true)]
        genus: i64,
        #[arg(long, default_value_t = DEFAULT_MAX_GENUS)]
        max_genus: i64,
    },
    /// Run the acceptance suite.
    Selftest {
        /// Upper genus for the criteria that range over g = 1..G.
        #[arg(long, default_value_t = ecover_core::conformance::DEFAULT_MAX_GENUS)]
        max_genus: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut text = false;
    let outcome = match cli.command {
        Command::Generate { genus, format, max_genus } => {
            text = matches!(format, Format::Text);
            commands::generate(genus, max_genus)
        }
        Command::Verify { file } => commands::verify(&file),
        Command::Origami { genus, max_genus } => commands::origami(genus, max_genus),
        Command::Degenerate { genus, max_genus } => commands::degenerate(genus, max_genus),
        Command::Selftest { max_genus } => commands::selftest(max_genus),
    };
    match outcome {
        Ok(cert) => {
            if text {
                print!("{}", commands::generate_text(&cert));
            } else {
                println!("{}", cert.to_json());
            }
            if cert.all_passed() {
                ExitCode::SUCCESS
            } else {
                for c in cert.checks.iter().filter(|c| !c.passed) {
                    eprintln!("check failed: {}: {}", c.name, c.witness);
                }
                ExitCode::from(1)
            }
        }
        Err(commands::UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
