use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by argument validation and by analytic domain violations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the documented domain of an operation.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An operation's hypothesis does not hold for the given input
    /// (for example a sine form requested for an even character).
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("gamma function pole at {0}")]
    GammaPole(Complex64),

    #[error("unknown character id `{0}`")]
    UnknownCharacter(String),

    /// The requested computation exceeds the configured work limit.
    #[error("work limit exceeded: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
