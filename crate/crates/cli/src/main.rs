//! `acs`: command-line front end for `acs-core`.
//!
//! Exit codes: 0 when every check passes, 1 on a verification failure,
//! 2 on a usage or input error.

mod args;
mod commands;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use serde::Serialize;
use serde_json::Value;

use args::{Cli, Command};
use commands::{CliError, Outcome};

#[derive(Serialize)]
struct RunReport<'a> {
    command: &'a str,
    parameters: &'a Value,
    results: &'a Value,
    status: &'a str,
    elapsed_ms: u64,
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let max = cli.global.max_cells;
    match &cli.command {
        Command::Fvector { n } => commands::fvector(*n, max),
        Command::Betti { n, method } => commands::betti(*n, *method, max),
        Command::Verify { n, checks } => commands::verify(*n, checks, max),
        Command::Basis { n, dim } => commands::basis(*n, *dim, max),
        Command::Graph { input, n, method: _ } => commands::graph(input, *n, max),
        Command::HomGraph { m } => commands::hom(*m, max),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.global.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.global.threads).build_global() {
            eprintln!("error: cannot set up {} threads: {e}", cli.global.threads);
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            return ExitCode::from(1);
        }
    };
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let status = commands::status(outcome.ok);
    if cli.global.json {
        let report = RunReport {
            command: outcome.command,
            parameters: &outcome.parameters,
            results: &outcome.results,
            status,
            elapsed_ms,
        };
        match serde_json::to_string_pretty(&report) {
            Ok(s) => println!("{s}"),
            Err(e) => {
                eprintln!("internal error: {e}");
                return ExitCode::from(1);
            }
        }
    } else {
        print!("{}", outcome.human);
        println!("status: {status} ({elapsed_ms} ms)");
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
