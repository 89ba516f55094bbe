mod commands;
mod config;
mod render;

use clap::Parser;
use commands::{Outcome, RunError};
use config::{Cli, Command, RunConfig, SideArg};
use std::process::ExitCode;

// 0: every check passed, 1: usage or input error, 2: a mathematical check failed.
const EXIT_INPUT: u8 = 1;
const EXIT_MATH: u8 = 2;

fn run(cli: &Cli) -> Result<(Outcome, RunConfig), RunError> {
    let cfg = match &cli.command {
        Command::Classify(a) => RunConfig::from_group_args(a, SideArg::Functions)?,
        Command::Verify(a) => RunConfig::from_group_args(a, SideArg::Both)?,
        Command::Qsuite(a) => RunConfig::from_qsuite_args(a)?,
    };
    let outcome = match &cli.command {
        Command::Classify(_) => commands::classify(&cfg)?,
        Command::Verify(_) => commands::verify(&cfg)?,
        Command::Qsuite(_) => commands::qsuite(&cfg)?,
    };
    Ok((outcome, cfg))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_INPUT) } else { ExitCode::SUCCESS };
        }
    };
    let (outcome, cfg) = match run(&cli) {
        Ok(v) => v,
        Err(RunError::Input(e)) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_INPUT);
        }
        Err(RunError::Math(e)) => {
            eprintln!("check failed: {e:#}");
            return ExitCode::from(EXIT_MATH);
        }
    };
    let body = match outcome.rendered.format(cfg.format) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    match &cfg.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_INPUT);
            }
        }
        None => print!("{body}"),
    }
    if let Some(f) = &outcome.failure {
        eprintln!("counterexample: {f}");
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MATH)
    }
}
