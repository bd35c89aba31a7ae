use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: wrong shape, bad entry, index out of range.
    #[error("invalid input: {0}")]
    Validation(String),

    /// A simplex with repeated vertices or zero class where a proper one is required.
    #[error("degenerate simplex: {0}")]
    Degenerate(String),

    /// A structural property that must hold for nondegenerate simplices did not.
    #[error("internal consistency violation: {0}")]
    Inconsistency(String),

    /// Request outside the supported range of the computation.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A linear program that must have an optimum did not.
    #[error("linear program failure: {0}")]
    Lp(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
