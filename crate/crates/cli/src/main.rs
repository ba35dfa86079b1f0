//! `bgbc`: batch front end for the invariant computations.
//!
//! Exit status is 0 on success, 1 when a checked property fails and 2 on
//! invalid arguments.

mod commands;
mod config;
mod report;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use config::{validate, Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, args) = match &cli.command {
        Command::Basis(a) => ("basis", a),
        Command::Invariants(a) => ("invariants", a),
        Command::Verify(a) => ("verify", a),
    };
    let cfg = match validate(name, args) {
        Ok(cfg) => cfg,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Some(threads) = args.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: cannot start {threads} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let report = match name {
        "basis" => commands::cmd_basis(cfg),
        "invariants" => commands::cmd_invariants(cfg),
        _ => commands::cmd_verify(cfg),
    };
    let report = match report {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    if let Err(e) = report.write(&mut out).and_then(|_| out.flush()) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if report.failed() > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
