use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("coefficient ring mismatch: {0}")]
    RingMismatch(String),
    #[error("leading coefficient is not a unit")]
    NonUnitLeading,
    #[error("invalid embedding index {index} for order {order}")]
    InvalidEmbedding { index: i64, order: usize },
    #[error("lattice is not self-dual: {0}")]
    NotSelfDual(String),
    #[error("lattice is not positive definite")]
    NotPositiveDefinite,
    #[error("singular matrix: {0}")]
    Singular(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("truncation order too small: {0}")]
    TruncationTooSmall(String),
    #[error("missing coefficient data: {0}")]
    MissingData(String),
    #[error("point too close to the divisor (R = {0:e})")]
    DivisorProximity(f64),
    #[error("rationality check failed: {0}")]
    NotRational(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
