//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid exponent tuple: {0}")]
    InvalidTuple(String),

    #[error("unknown or unsupported group: {0}")]
    UnknownGroup(String),

    #[error("argument {argument} is off the evaluation grid (doubled parity {expected_parity})")]
    OffGrid {
        argument: String,
        expected_parity: u8,
    },

    #[error("quasi-polynomial is in {found} space, expected {expected}")]
    WrongSpace { expected: &'static str, found: &'static str },

    #[error(
        "coefficient {index} is not {period}-periodic (first break at residue {residue}); \
         the sub-period guarantee was violated"
    )]
    SubPeriodicity {
        index: usize,
        period: u64,
        residue: u64,
    },

    #[error("inconsistent closure system while determining the periodic remainder: {0}")]
    ClosureInconsistent(String),

    #[error("invalid document: {0}")]
    Document(String),

    #[error("invalid scale factor: {0}")]
    InvalidScale(String),

    #[error("tuple has no duplicated exponent")]
    NoDuplicateExponent,

    #[error("sieve limit {limit} too small for N = {n}")]
    SieveTooSmall { limit: u64, n: u64 },

    #[error("{0}")]
    Verification(String),
}
