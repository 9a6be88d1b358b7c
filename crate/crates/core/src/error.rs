use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("invalid cover: {0}")]
    InvalidCover(String),
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
    #[error("invalid genus {0}")]
    InvalidGenus(i64),
    #[error("invalid degree {0}: expected an odd positive integer")]
    InvalidDegree(i64),
    #[error("origami diagram is not connected")]
    NotConnected,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error("degeneration pipeline did not close: {0}")]
    Pipeline(String),
    #[error("deformation failed: {0}")]
    DeformationFailed(String),
    #[error("first-order solution does not extend to an exact cover: {0}")]
    FirstOrderOnly(String),
}

pub type Result<T> = std::result::Result<T, Error>;
