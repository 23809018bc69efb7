use std::fmt;

use gdka_core::{AllianceError, BoundError};

/// Process-level error classes: usage and validation problems exit with
/// code 2, solver cap violations with 3, internal contract failures
/// with 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Cap(String),
    Internal(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Internal(_) => 1,
        }
    }

    pub fn usage(err: impl fmt::Display) -> CliError {
        CliError::Usage(err.to_string())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Cap(msg) | CliError::Internal(msg) => {
                f.write_str(msg)
            }
        }
    }
}

impl From<AllianceError> for CliError {
    fn from(err: AllianceError) -> CliError {
        match err {
            AllianceError::TooLarge { .. } => CliError::Cap(err.to_string()),
            AllianceError::EmptySet => CliError::Usage(err.to_string()),
        }
    }
}

impl From<BoundError> for CliError {
    fn from(err: BoundError) -> CliError {
        match err {
            BoundError::Solve(inner) => inner.into(),
            BoundError::WitnessContract { .. } | BoundError::EqualityContract { .. } => {
                CliError::Internal(err.to_string())
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}
