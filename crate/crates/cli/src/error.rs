use std::fmt;

use quipu_core::charpoly::CharpolyError;
use quipu_core::search::SearchError;
use quipu_core::spectral::SpectralError;
use quipu_core::transfer::TransferError;
use quipu_core::verify::VerifyError;
use quipu_core::GraphError;

/// Process exit codes.
pub const EXIT_CHECK: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    /// Bad input, bad configuration or an unmet precondition.
    Parse(String),
    /// A numeric routine could not deliver the requested accuracy.
    Numeric(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Numeric(_) => EXIT_NUMERIC,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) | CliError::Numeric(m) => f.write_str(m),
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<SpectralError> for CliError {
    fn from(e: SpectralError) -> Self {
        match e {
            SpectralError::InvalidK(_) | SpectralError::Disconnected | SpectralError::Empty => CliError::Parse(e.to_string()),
            _ => CliError::Numeric(e.to_string()),
        }
    }
}

impl From<CharpolyError> for CliError {
    fn from(e: CharpolyError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<TransferError> for CliError {
    fn from(e: TransferError) -> Self {
        CliError::Numeric(e.to_string())
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::Graph(g) => g.into(),
            SearchError::Spectral(s) => s.into(),
            SearchError::Charpoly(c) => c.into(),
            SearchError::Transfer(t) => t.into(),
            other => CliError::Parse(other.to_string()),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Graph(g) => g.into(),
            VerifyError::Spectral(s) => s.into(),
            VerifyError::Transfer(t) => t.into(),
            other => CliError::Parse(other.to_string()),
        }
    }
}
