use thiserror::Error;

use crate::ring::RingSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    SpecMismatch { left: RingSpec, right: RingSpec },

    #[error("{0} is not a unit in {1}")]
    NotAUnit(String, RingSpec),

    #[error("invalid index {0}: must be at least 1")]
    InvalidIndex(usize),

    #[error("invalid modulus {0}: must be at least 2")]
    InvalidModulus(u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("cannot truncate precision {have} up to {want}")]
    PrecisionTooHigh { have: usize, want: usize },

    #[error("matrix is not square: row {row} has {len} entries, expected {size}")]
    NotSquare { row: usize, len: usize, size: usize },

    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
