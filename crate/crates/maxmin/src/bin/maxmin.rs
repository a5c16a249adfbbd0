//! Thin binary over [`maxmin::cli`]: parse, execute, print, exit.

use std::process::ExitCode;

use clap::Parser;
use maxmin::cli::{execute, render, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // --help and --version are successful exits; real usage errors
            // leave the 0/1/2 verdict range
            let code = if err.use_stderr() { 3 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match execute(&cli) {
        Ok((report, code)) => {
            print!("{}", render(&cli, &report));
            ExitCode::from(u8::try_from(code).unwrap_or(3))
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(3)
        }
    }
}
