use thiserror::Error;

/// Errors raised by graph construction, polynomial arithmetic and the
/// closed-form evaluators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("exact division failed: {0}")]
    Divisibility(String),

    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    #[error("partition is not equitable: block ({row}, {col}) has non-constant row sums")]
    NotEquitable { row: usize, col: usize },

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parameter(msg.into()))
}
