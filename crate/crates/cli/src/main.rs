use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use kodaira_cli::commands::{self, VerifyOptions};
use kodaira_cli::{CliError, Output};
use kodaira_core::verifier::{ExampleId, Theorem, DEFAULT_M_BOUND};

/// Invariants, plurigenera and diffeomorphism verdicts for complex
/// surfaces and their products with curves.
#[derive(Debug, Parser)]
#[command(name = "kodaira", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Chern, Hodge and intersection-form data of a construction.
    Invariants {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Table of P_1 .. P_max.
    Plurigenera {
        expr: String,
        #[arg(long)]
        max: u64,
        #[arg(long)]
        json: bool,
    },
    /// Diffeomorphism verdict, Chern equality and first differing plurigenus.
    Compare {
        left: String,
        right: String,
        #[arg(long, default_value_t = DEFAULT_M_BOUND)]
        max: u64,
        #[arg(long)]
        json: bool,
    },
    /// Check the example pairs of theorem A or B; exits 1 if any row fails.
    Verify {
        #[arg(value_parser = parse_theorem)]
        theorem: Theorem,
        #[arg(long, value_parser = parse_example)]
        example: Option<ExampleId>,
        #[arg(long, default_value_t = 20)]
        kmax: u64,
        /// Curve genus; by default genus 1 and 2 (genus 0 for B1).
        #[arg(long)]
        genus: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_M_BOUND)]
        mbound: u64,
        #[arg(long)]
        json: bool,
    },
    /// The surface family table.
    Catalog {
        #[arg(long)]
        json: bool,
    },
    /// Disagreements between stated and recomputed example data.
    Anomalies {
        #[arg(long)]
        json: bool,
    },
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    match s {
        "A" | "a" => Ok(Theorem::A),
        "B" | "b" => Ok(Theorem::B),
        _ => Err(format!("expected A or B, got `{s}`")),
    }
}

fn parse_example(s: &str) -> Result<ExampleId, String> {
    ExampleId::parse(s).ok_or_else(|| format!("unknown example `{s}` (A1..A5, B1..B3)"))
}

fn run(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Invariants { expr, json } => commands::invariants(&expr, json),
        Command::Plurigenera { expr, max, json } => commands::plurigenera(&expr, max, json),
        Command::Compare { left, right, max, json } => commands::compare(&left, &right, max, json),
        Command::Verify { theorem, example, kmax, genus, mbound, json } => {
            commands::verify(VerifyOptions { theorem, example, k_max: kmax, genus, m_bound: mbound }, json)
        }
        Command::Catalog { json } => commands::catalog(json),
        Command::Anomalies { json } => commands::anomalies(json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.stdout.as_bytes()).and_then(|()| stdout.flush()).is_err() {
                return ExitCode::from(3);
            }
            ExitCode::from(u8::from(out.verification_failed))
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}
