use std::fmt;
use std::io;

use nbracket_core::identities::IdentityError;
use nbracket_core::{ExpandError, ParseError};

/// Failures with their process exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Exit 2.
    Parse(ParseError),
    /// Malformed input that parsed; exit 2.
    Invalid(String),
    /// Exit 3.
    Budget(String),
    /// Exit 4.
    Unsupported(String),
    /// Exit 5.
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Invalid(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Unsupported(_) => 4,
            CliError::Io(_) => 5,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(e) => e.fmt(f),
            CliError::Invalid(s) | CliError::Budget(s) | CliError::Unsupported(s) => f.write_str(s),
            CliError::Io(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<ExpandError> for CliError {
    fn from(e: ExpandError) -> Self {
        match e {
            ExpandError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            ExpandError::UnsupportedShape(_) => CliError::Unsupported(e.to_string()),
            ExpandError::NotMultilinear(_) => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<IdentityError> for CliError {
    fn from(e: IdentityError) -> Self {
        match e {
            IdentityError::Expand(e) => e.into(),
            IdentityError::IndexMismatch => CliError::Invalid(e.to_string()),
            _ => CliError::Unsupported(e.to_string()),
        }
    }
}
