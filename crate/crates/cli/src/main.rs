use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use prm_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (text, code) = match run(&cli) {
        Ok(text) => (text, 0),
        Err(e) => {
            eprintln!("error: {e}");
            (e.report().unwrap_or_default().to_string(), e.exit_code())
        }
    };
    if !text.is_empty() {
        let written = match &cli.output {
            Some(path) => std::fs::write(path, &text),
            None => std::io::stdout().write_all(text.as_bytes()),
        };
        if let Err(e) = written {
            eprintln!("error: writing output: {e}");
            return ExitCode::from(2);
        }
    }
    ExitCode::from(code as u8)
}
