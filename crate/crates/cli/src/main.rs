use std::process::ExitCode;

use clap::Parser;
use knotcover_cli::{run, Cli};

fn main() -> ExitCode {
    let output = run(Cli::parse());
    print!("{}", output.stdout);
    eprint!("{}", output.stderr);
    ExitCode::from(output.code)
}
