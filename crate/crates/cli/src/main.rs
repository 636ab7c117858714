//! `hyperspec` command-line tool.
//!
//! Exit codes: 0 success, 1 unreadable input or bad arguments, 2 invalid
//! graph or parameters (including the size guard), 3 the solver ran out of
//! iterations, 4 a verification row was not unique.

mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;
use hyperspec::Error;

use crate::args::Cli;
use crate::commands::{Falsified, Usage};

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.is::<Falsified>() {
        return 4;
    }
    if err.is::<Usage>() || err.is::<std::io::Error>() {
        return 1;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::Parse(_)) | Some(Error::AlphaOutOfRange(_)) => 1,
        Some(Error::MaxIterationsExceeded { .. }) => 3,
        Some(_) => 2,
        None => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            match err.downcast_ref::<Error>() {
                Some(e) => eprintln!("error: {}: {e}", e.name()),
                None => eprintln!("error: {err:#}"),
            }
            ExitCode::from(exit_code(&err))
        }
    }
}
