use thiserror::Error;

/// Errors raised by the tropical geometry routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TropError {
    /// A projective point needs at least two homogeneous coordinates.
    #[error("a point of TP^d needs at least 2 coordinates, got {0}")]
    TooFewCoordinates(usize),

    #[error("dimension mismatch: expected {expected} coordinates, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("matrix is not square: {rows} rows, row {row} has {len} entries")]
    NotSquare { rows: usize, row: usize, len: usize },

    #[error("empty input")]
    Empty,

    #[error("operation requires dimension 2, got {0}")]
    NotPlanar(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, TropError>;
