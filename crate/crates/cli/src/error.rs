use std::fmt;

/// A failed command and the process exit code it maps to.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad flags or arguments.
    #[error("{0}")]
    Usage(String),
    /// Unreadable or malformed input.
    #[error("{0}")]
    Data(String),
    /// Valid input with no meaningful result: an empty window or a singular fit.
    #[error("{0}")]
    Degenerate(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Data(_) => 3,
            CliError::Degenerate(_) => 4,
        }
    }

    pub fn data(context: impl fmt::Display, err: impl fmt::Display) -> Self {
        CliError::Data(format!("{context}: {err}"))
    }
}

impl From<aperiodic::substitution::SubstitutionError> for CliError {
    fn from(e: aperiodic::substitution::SubstitutionError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<aperiodic::graph::EmptyWindow> for CliError {
    fn from(e: aperiodic::graph::EmptyWindow) -> Self {
        CliError::Degenerate(e.to_string())
    }
}

impl From<aperiodic::regression::RegressionError> for CliError {
    fn from(e: aperiodic::regression::RegressionError) -> Self {
        use aperiodic::regression::RegressionError::*;
        match e {
            TooFewPoints(_) | Singular => CliError::Degenerate(e.to_string()),
            MissingGeneration(_) | Unordered(..) | Parse { .. } => CliError::Data(e.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
