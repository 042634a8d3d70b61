use thiserror::Error;
use tropconv::TropError;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const DIMENSION: i32 = 3;
    pub const PRECONDITION: i32 = 4;
    /// The command ran but its answer is negative (e.g. a non-member).
    pub const NEGATIVE: i32 = 5;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{source_name}:{line}: {message}")]
    Parse {
        source_name: String,
        line: usize,
        message: String,
    },
    #[error("{0}")]
    Io(String),
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Parse { .. } | CliError::Io(_) => exit::PARSE,
            CliError::Dimension(_) => exit::DIMENSION,
            CliError::Precondition(_) => exit::PRECONDITION,
        }
    }
}

impl From<TropError> for CliError {
    fn from(e: TropError) -> Self {
        match e {
            TropError::Precondition(msg) => CliError::Precondition(msg),
            TropError::Empty => CliError::Precondition(e.to_string()),
            other => CliError::Dimension(other.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
