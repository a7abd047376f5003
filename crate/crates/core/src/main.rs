use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use landau_coherent::cli::{run, Cli};

const EXIT_USAGE: u8 = 2;
const EXIT_NUMERICAL: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(if e.is_numerical() { EXIT_NUMERICAL } else { EXIT_USAGE });
        }
    };

    let stdout = io::stdout();
    let mut out = stdout.lock();
    let written = if cli.common.json {
        outcome.table.write_json(&mut out)
    } else {
        outcome.table.write_csv(&mut out)
    };
    if let Err(e) = written.and_then(|_| out.flush()) {
        eprintln!("error: {e}");
        return ExitCode::FAILURE;
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_NUMERICAL)
    }
}
