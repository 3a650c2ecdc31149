//! Command-line front end: one subcommand per library crate plus `repro`,
//! which reruns named reproduction recipes and reports each expected value
//! as PASS, FAIL or SKIPPED.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::Parser;
use thiserror::Error;

mod commands;
pub mod recipes;

pub use commands::Cli;

/// Exit code for a completed run.
pub const EXIT_OK: i32 = 0;
/// Exit code for failed checks or I/O and verification errors.
pub const EXIT_FAILURE: i32 = 1;
/// Exit code for bad arguments, including unknown flags and recipe ids.
pub const EXIT_USAGE: i32 = 2;
/// Exit code of `feas solve` for an infeasible system.
pub const EXIT_INFEASIBLE: i32 = 20;
/// Exit code of `feas solve` when the node budget ran out.
pub const EXIT_UNKNOWN: i32 = 30;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] hosens_core::Error),
    #[error(transparent)]
    Mm(#[from] hosens_mm::MmError),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Core(hosens_core::Error::Argument(_)) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        }
    }
}

pub(crate) fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub(crate) fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match cli.execute() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
