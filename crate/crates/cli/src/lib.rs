//! Command-line front end for `reflquot`: root data, Ψ expansions and their
//! inverses, scenario verification and graded point counts.

pub mod args;
pub mod commands;
pub mod config;

use std::ffi::OsString;

use anyhow::Result;
use clap::Parser;

use args::{Cli, Command};

/// Exit status for errors (clap uses the same code for usage errors).
pub const ERROR_STATUS: i32 = 2;

/// Parses arguments, runs the command and returns the process exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(&cli.command) {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {e:#}");
            ERROR_STATUS
        }
    }
}

fn dispatch(command: &Command) -> Result<i32> {
    let (cfg, outcome) = match command {
        Command::Roots(a) => {
            let cfg = a.to_config()?;
            let o = commands::roots(&cfg)?;
            (cfg, o)
        }
        Command::Psi { scenario, point } => {
            let cfg = scenario.to_config()?;
            let o = commands::psi(&cfg, point)?;
            (cfg, o)
        }
        Command::Invpsi { scenario, file } => {
            let cfg = scenario.to_config()?;
            let o = commands::invpsi(&cfg, file)?;
            (cfg, o)
        }
        Command::Check(a) => {
            let cfg = a.to_config()?;
            let o = commands::check(&cfg)?;
            (cfg, o)
        }
        Command::Hilbert(a) => {
            let cfg = a.to_config()?;
            let o = commands::hilbert(&cfg)?;
            (cfg, o)
        }
        Command::Config(a) => {
            let cfg = a.to_config()?;
            let o = commands::config(&cfg)?;
            (cfg, o)
        }
    };
    commands::emit(&cfg, &outcome)?;
    Ok(outcome.status)
}
