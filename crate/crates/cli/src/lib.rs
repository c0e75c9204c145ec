//! Report pipelines, JSON schemas, and verification sweeps behind the
//! `monozeta` command line tool.

pub mod batch;
pub mod input;
pub mod report;
pub mod verify;

use thiserror::Error;

/// Tool-level errors, carrying the process exit code contract:
/// 0 success, 1 parse/I-O errors, 2 validation errors, 3 verification
/// mismatches.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(monozeta_core::ParseError),
    #[error("{0}")]
    Syntax(String),
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("verification found {0} mismatch(es)")]
    Mismatch(usize),
    #[error("cannot encode report: {0}")]
    Report(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Syntax(_) | CliError::Io(_) => 1,
            CliError::Validation(_) | CliError::Report(_) => 2,
            CliError::Mismatch(_) => 3,
        }
    }
}

impl From<monozeta_core::ParseError> for CliError {
    fn from(e: monozeta_core::ParseError) -> Self {
        match e {
            // Constructor-level rejections are data validation, not syntax.
            monozeta_core::ParseError::Invalid(inner) => CliError::Validation(inner.to_string()),
            other => CliError::Parse(other),
        }
    }
}

impl From<monozeta_core::ModelError> for CliError {
    fn from(e: monozeta_core::ModelError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<monozeta_core::EngineError> for CliError {
    fn from(e: monozeta_core::EngineError) -> Self {
        CliError::Validation(e.to_string())
    }
}

/// Which axis plays the role of the transverse-slice parameter for a
/// surface: `y` swaps the exponent pairs before any processing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Axis {
    X,
    Y,
}

impl Axis {
    pub fn as_str(self) -> &'static str {
        match self {
            Axis::X => "x",
            Axis::Y => "y",
        }
    }
}

/// Optional report sections.
#[derive(Clone, Copy, Debug, Default)]
pub struct ReportOptions {
    pub trace: bool,
    pub cyclotomic: bool,
}
