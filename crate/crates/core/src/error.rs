use thiserror::Error;

/// Errors raised by the kernel.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("variable table mismatch: {0}")]
    VarTableMismatch(String),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("missing generator image for {0}")]
    MissingImage(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("relation not orientable: {0}")]
    NotOrientable(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("window insufficient: {0}")]
    WindowInsufficient(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
