//! Command-line front end for `jtwist-core`: argument parsing, JSON and text
//! output, and the command drivers used by the `jtwist` binary.

pub mod args;
pub mod commands;
pub mod json;

use std::io::Write;

use args::{Cli, Command};
use commands::{Rendered, UsageError};

/// Runs a parsed command and writes its output; returns the process exit
/// code (0 all pass, 1 some check failed, 2 usage or IO error).
pub fn run(cli: &Cli) -> i32 {
    let (result, out) = match &cli.command {
        Command::Expand(a) => (commands::expand(a), &a.output.out),
        Command::Verify(a) => (commands::verify(a), &a.output.out),
        Command::Identities(a) => (commands::identities(a), &a.output.out),
    };
    match result.and_then(|r| emit(&r, out.as_deref())) {
        Ok(passed) => exit_code(passed),
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

pub fn exit_code(passed: bool) -> i32 {
    if passed {
        0
    } else {
        1
    }
}

fn emit(r: &Rendered, out: Option<&std::path::Path>) -> Result<bool, UsageError> {
    match out {
        Some(path) => std::fs::write(path, &r.body)?,
        None => std::io::stdout().write_all(r.body.as_bytes())?,
    }
    Ok(r.passed)
}
