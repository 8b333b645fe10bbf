use std::process::ExitCode;

use clap::Parser;
use dk_cli::{emit, init_threads, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_threads();
    match run(&cli).and_then(|r| emit(&cli, r)) {
        Ok(Some(false)) => ExitCode::from(1),
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("dk: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
