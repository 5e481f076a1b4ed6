use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdin = io::stdin();
    let mut out = io::stdout().lock();
    let mut err = io::stderr().lock();
    let code = tricomplex_cli::run(std::env::args_os(), &mut stdin.lock(), &mut out, &mut err);
    let _ = out.flush();
    ExitCode::from(code)
}
