//! Command-line front end for `esfi-core`.
//!
//! Exit codes: 0 success, 2 invalid input, 3 outside the physical regime
//! (guard or barrier suppression), 4 numerical failure, 1 I/O.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
mod commands;
pub mod format;

use std::io::{self, Write};
use std::path::{Path, PathBuf};

use esfi_core::EsfiError;
use thiserror::Error;

pub use args::Cli;
pub use commands::{BarrierRecord, ConstantRecord, InvertRecord, RateRecord};

pub const GUARD_OVERRIDE_ENV: &str = "ESFI_GUARD_OVERRIDE";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),

    #[error("{0}")]
    Regime(String),

    #[error(transparent)]
    Core(#[from] EsfiError),

    #[error("cannot write {}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },

    #[error("serialization failed: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Regime(_) => 3,
            CliError::Core(e) => core_exit_code(e),
            CliError::Io { .. } | CliError::Json(_) => 1,
        }
    }
}

pub fn core_exit_code(e: &EsfiError) -> u8 {
    use EsfiError::*;
    match e {
        NonFinite(_)
        | DimensionMismatch { .. }
        | UnsupportedGaussianDimension(_)
        | NonPositiveZ(_)
        | NonPositiveIonizationEnergy(_)
        | NonPositiveField(_)
        | NonPositiveCoordinate(_)
        | NegativeCoordinate(_)
        | InvalidArgument(_)
        | TargetUnattainable { .. } => 2,
        ShallowTunnellingRegime { .. } | BarrierSuppressed { .. } => 3,
        BracketingFailure { .. }
        | QuadratureNonConvergence { .. }
        | NonMonotoneBracket { .. }
        | NoConvergence { .. } => 4,
    }
}

/// True when the environment asks for the deep-tunnelling guard to be lifted.
pub fn guard_override_from_env() -> bool {
    std::env::var(GUARD_OVERRIDE_ENV).is_ok_and(|v| v.trim() == "1")
}

/// Execute a parsed command line. Notes about skipped sweep points go to
/// `stderr`; everything else goes to `stdout` or the requested file.
pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    commands::dispatch(cli, stdout, stderr)
}

pub(crate) fn emit(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => stdout
            .write_all(text.as_bytes())
            .and_then(|_| stdout.flush())
            .map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}
