use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use tensor_gsb::cli::{run, Cli, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            return ExitCode::from(code as u8);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = run(&cli, &mut out, &mut io::stderr());
    let _ = out.flush();
    ExitCode::from(code as u8)
}
