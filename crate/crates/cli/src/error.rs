use std::path::PathBuf;

use fnnn_core::FnnError;

use crate::input::{CellDiagnostic, ParseError};

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const DATA: i32 = 2;
    pub const DEGENERATE: i32 = 3;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("{} invalid cell(s)", .0.len())]
    InvalidCells(Vec<CellDiagnostic>),
    #[error("{0}")]
    Data(String),
    #[error("degenerate computation: {0}")]
    Degenerate(FnnError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Degenerate(_) => exit::DEGENERATE,
            _ => exit::DATA,
        }
    }
}

impl From<FnnError> for CliError {
    fn from(e: FnnError) -> Self {
        if e.is_degenerate() {
            CliError::Degenerate(e)
        } else {
            CliError::Data(e.to_string())
        }
    }
}
