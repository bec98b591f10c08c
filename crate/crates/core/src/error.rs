use thiserror::Error;

/// Errors produced by the analysis routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("non-integer literal at position {position}")]
    NonIntegerLiteral { position: usize },

    #[error("polynomial {0} is not monic")]
    NotMonic(String),

    #[error(
        "common-factor: the polynomials share a nonconstant common divisor (resultant is zero)"
    )]
    ZeroResultant,

    #[error("out of hypothesis: {0}")]
    OutOfHypothesis(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("unsupported case: {0}")]
    UnsupportedCase(String),

    #[error("enumeration guard exceeded: {candidates} candidates > limit {limit}")]
    EnumerationGuard { candidates: u128, limit: u128 },

    #[error("theorem violation (implementation defect): {0}")]
    TheoremViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
