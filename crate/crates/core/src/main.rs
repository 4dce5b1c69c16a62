use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let result = binterp::cli::run(std::env::args_os(), &mut io::stdin().lock());
    // A closed pipe is not worth a panic.
    let _ = io::stdout().write_all(result.stdout.as_bytes());
    let _ = io::stderr().write_all(result.stderr.as_bytes());
    ExitCode::from(result.exit_code as u8)
}
