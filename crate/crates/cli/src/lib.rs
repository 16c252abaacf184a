//! `hker`: evaluate φ₂, Ψ₂ and the hypergeometric building blocks, run
//! identity sweeps and tabulate functions along a line.
//!
//! Exit codes: 0 success, 1 identity check failed, 2 invalid input,
//! 3 non-convergence.

mod args;
mod check;
mod eval;
pub mod format;
mod record;
mod table;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub use args::{Cli, Format, Function, Method};
pub use eval::{evaluate, Evaluated, Inputs};
pub use record::{ComplexValue, OutputRecord, TableRow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NOT_CONVERGED: i32 = 3;

/// Environment variable overriding the default relative tolerance.
pub const TOL_ENV: &str = "HKER_DEFAULT_TOL";

/// A failure that ends the command with a one-line machine-readable error.
#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub code: i32,
    pub kind: String,
    pub message: String,
}

impl CliError {
    pub fn invalid(kind: &str, message: impl Into<String>) -> Self {
        CliError { code: EXIT_INVALID, kind: kind.to_string(), message: message.into() }
    }

    fn to_json_line(&self) -> String {
        format::to_json(&serde_json::json!({ "error": self.message, "kind": self.kind }))
    }
}

impl From<hker_core::Error> for CliError {
    fn from(e: hker_core::Error) -> Self {
        CliError { code: EXIT_INVALID, kind: e.kind().to_string(), message: e.to_string() }
    }
}

/// Lines to emit plus the exit code to finish with.
pub struct Output {
    pub lines: Vec<String>,
    pub code: i32,
}

/// Parse arguments, run the command and write its output. Returns the
/// process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            eprintln!("{}", usage_error(&e).to_json_line());
            return EXIT_INVALID;
        }
        Err(e) => {
            // --help and --version
            let _ = e.print();
            return EXIT_OK;
        }
    };
    let echo = argv.iter().skip(1).map(|s| s.to_string_lossy().into_owned()).collect::<Vec<_>>().join(" ");
    match execute(&cli, &echo).and_then(|out| emit(&cli, out)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{}", e.to_json_line());
            e.code
        }
    }
}

/// Collapse clap's multi-line diagnostic to its first line.
fn usage_error(e: &clap::Error) -> CliError {
    let rendered = e.render().to_string();
    let first = rendered.lines().next().unwrap_or("invalid arguments");
    CliError::invalid("usage", first.trim_start_matches("error: ").trim())
}

/// Run a parsed command without touching stdout.
pub fn execute(cli: &Cli, echo: &str) -> Result<Output, CliError> {
    match &cli.command {
        args::Command::Eval(a) => eval::run(cli, a, echo),
        args::Command::Check(a) => check::run(cli, a),
        args::Command::Table(a) => table::run(cli, a),
    }
}

fn emit(cli: &Cli, out: Output) -> Result<i32, CliError> {
    let mut text = out.lines.join("\n");
    text.push('\n');
    let io_err = |e: std::io::Error| CliError::invalid("io", e.to_string());
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(io_err)?,
        None => std::io::stdout().lock().write_all(text.as_bytes()).map_err(io_err)?,
    }
    Ok(out.code)
}
