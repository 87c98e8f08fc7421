mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use commands::CliError;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(err: &CliError) -> u8 {
    use qubo_core::Error;
    match err {
        CliError::Core(Error::Parse(_) | Error::Parameter(_)) => 2,
        CliError::Core(Error::SubclassViolation(_)) => 3,
        CliError::Core(Error::Capacity { .. }) => 4,
        CliError::Core(_) | CliError::Io { .. } => 1,
    }
}
