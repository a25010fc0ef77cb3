use thiserror::Error as ThisError;

/// Failure to read a scalar, vector, matrix or structure-constant literal.
#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
#[error("{message}")]
pub struct ParseError {
    pub message: String,
}

impl ParseError {
    pub fn new(message: impl Into<String>) -> Self {
        ParseError {
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("coefficient grid is empty")]
    EmptyGrid,
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("input vector is quasi-zero")]
    QuasiZeroInput,
    #[error("vector is not in the span of the given list")]
    NotInSpan,
    #[error("representation is not unique: {first} and {second}")]
    AmbiguousRepresentation { first: String, second: String },
    #[error("series is zero")]
    ZeroSeries,
    #[error("truncation exhausted: {0}")]
    TruncationExhausted(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("cyclic sum for m = {m} is {value}, not quasi-zero")]
    CyclicSum { m: usize, value: String },
    #[error("structure constants invalid: {0}")]
    InvalidConstants(String),
    #[error("generator {generator} is not closed under bracket with basis vector {basis}")]
    NonIdeal { generator: usize, basis: usize },
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;
