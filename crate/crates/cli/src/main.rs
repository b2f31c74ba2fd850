use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use conic_cli::{run, Cli, DIVISOR_CAP_ENV};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = std::env::var(DIVISOR_CAP_ENV).ok();
    let output = run(cli, cap.as_deref());
    print!("{}", output.stdout);
    eprint!("{}", output.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(output.status as u8)
}
