use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero in ℚ(q)")]
    DivisionByZero,
    #[error("not regular at q=1")]
    NotRegularAtOne,
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("algebra mismatch: {0} vs {1}")]
    AlgebraMismatch(String, String),
    #[error("invalid label: {0}")]
    InvalidLabel(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency error: {0}")]
    Consistency(String),
    #[error("entry {entry} is not regular at q=1")]
    PoleAtOne { entry: String },
}

pub type Result<T> = std::result::Result<T, Error>;
