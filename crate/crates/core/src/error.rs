use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("inverse is only supported for nonzero single-radical values")]
    UnsupportedInverse,
    #[error("square root of a value that is negative for large t")]
    NegativeRadicand,
    #[error("q-factorial of negative integer {0}")]
    NegativeFactorial(i64),
    #[error("pole at t = {0}")]
    Pole(String),
    #[error("negative radicand at t = {0}")]
    DomainError(String),
    #[error("evaluation point must be positive, got t = {0}")]
    InvalidPoint(String),
    #[error("invalid spin or weight `{0}`")]
    InvalidHalfInt(String),
    #[error("out of range: {0}")]
    Range(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown identifier `{name}` at position {pos}")]
    UnknownIdentifier { pos: usize, name: String },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("spin {j} does not occur in the decomposition of {k} x {l}")]
    NotInDecomposition { k: String, l: String, j: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
