//! Batch driver behind the `coble` binary: the check registry, table
//! reports against embedded expected rows, and the subcommands.
//!
//! Every subcommand writes JSON lines to stdout (and to `--json <path>` when
//! given). Exit status is 0 when everything passes, 1 on any failed check or
//! mismatched table, 2 on usage or I/O errors.

mod commands;
mod registry;
mod tables;

use thiserror::Error;

pub use commands::{parse_point, run_cli};
pub use registry::{registry, run_checks, select, CheckEntry};
pub use tables::{expected_tables_check, rank1_check, rank2_check, table_report, TableOptions, TableReport, TableRow, TABLES};

use crate::algebra::AlgebraError;
use crate::reps::RepError;
use crate::varieties::VarietyError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("unknown check name(s): {0}")]
    UnknownCheck(String),
    #[error("unknown table id {0:?}")]
    UnknownTable(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failed(_) => 1,
            _ => 2,
        }
    }
}

impl From<RepError> for CliError {
    fn from(e: RepError) -> Self {
        match e {
            RepError::UnknownAction(_) | RepError::UnknownVariety(_) | RepError::BadPartition(_) => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Failed(e.to_string()),
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<VarietyError> for CliError {
    fn from(e: VarietyError) -> Self {
        match e {
            VarietyError::Parameter(_) | VarietyError::UnknownId(_) | VarietyError::NotOnHyperplane(_) => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Failed(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
