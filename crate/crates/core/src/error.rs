use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("{what} exceeds the configured cap of {cap}")]
    CapExceeded { what: String, cap: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("objects live over different groups")]
    GroupMismatch,

    #[error("action axioms violated: {0}")]
    InvalidAction(String),

    #[error("expected an integer but found {0}")]
    NonIntegral(String),

    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,

    #[error("missing value for divisor {0}")]
    MissingDivisor(u64),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("mismatch: {0}")]
    Mismatch(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
