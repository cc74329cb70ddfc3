//! Command-line front end for the seed image classification toolkit.

mod args;
mod commands;
mod dataio;
mod error;
mod render;

use clap::error::ErrorKind;
use clap::Parser;

use crate::args::{Cli, Command};
use crate::error::CliError;

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            std::process::exit(0);
        }
        Err(e) => {
            eprint!("{e}");
            std::process::exit(CliError::Usage(String::new()).exit_code());
        }
    };
    let outcome = if cli.jobs > 0 {
        match rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build()
        {
            Ok(pool) => pool.install(|| dispatch(&cli.command)),
            Err(e) => Err(CliError::Internal(format!("thread pool: {e}"))),
        }
    } else {
        dispatch(&cli.command)
    };
    if let Err(e) = outcome {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}

fn dispatch(command: &Command) -> Result<(), CliError> {
    match command {
        Command::Segment(args) => commands::segment::run(args),
        Command::Extract(args) => commands::extract::run(args),
        Command::Train(args) => commands::train::run(args),
        Command::Evaluate(args) => commands::evaluate::run(args),
        Command::Predict(args) => commands::predict::run(args),
        Command::Compare(args) => commands::compare::run(args),
    }
}
