use thiserror::Error;

use crate::context::MAX_PRECISION;

/// Errors produced by decimal arithmetic, parsing and series evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// The leading-digit exponent left the signed 32-bit range.
    #[error("exponent out of range")]
    ExponentOverflow,

    #[error("invalid number at offset {offset}: {reason}")]
    Parse { offset: usize, reason: &'static str },

    #[error("invalid digit value {0}")]
    InvalidDigit(u8),

    #[error("precision must be ≥ 1")]
    PrecisionTooSmall,

    #[error("precision must be ≤ {}", MAX_PRECISION)]
    PrecisionTooLarge(u64),

    #[error("{function}: argument out of domain, |x| must be ≤ {bound}")]
    Domain { function: &'static str, bound: u32 },

    #[error("series did not converge within {0} terms")]
    MaxTermsExceeded(usize),

    #[error("invalid series policy: {0}")]
    InvalidPolicy(&'static str),

    /// An allocation the operation needs cannot be satisfied.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
