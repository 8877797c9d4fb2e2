use std::io;
use std::process::ExitCode;

use clap::Parser;

use cumulants_cli::{emit, execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = execute(&cli, &mut io::stdin()).and_then(|outcome| {
        emit(&cli, &outcome, &mut io::stdout().lock())?;
        Ok(outcome)
    });
    match outcome {
        Ok(outcome) if outcome.pass => ExitCode::SUCCESS,
        Ok(_) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
