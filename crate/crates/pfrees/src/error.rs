use thiserror::Error;

/// Failures of the command-line layer, each with its exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}: {1}")]
    Io(String, std::io::Error),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("budget exceeded")]
    Budget,
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Core(pfrees_core::Error),
}

impl From<pfrees_core::Error> for CliError {
    fn from(e: pfrees_core::Error) -> Self {
        match e {
            pfrees_core::Error::BudgetExceeded(_) => CliError::Budget,
            pfrees_core::Error::Parse { .. } => CliError::Parse(e.to_string()),
            e => CliError::Core(e),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) | CliError::Io(..) => 2,
            CliError::Budget => 3,
            CliError::Internal(_) => 4,
            CliError::Core(_) => 2,
        }
    }
}
