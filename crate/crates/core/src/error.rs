use thiserror::Error;

/// Errors raised anywhere in the pipeline.
///
/// Variants split into two families that the CLI maps to distinct exit
/// codes: invalid input (bad files, malformed permutations, inconsistent
/// partitions) and exceeded computational caps.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, got {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid fusion partition: {0}")]
    InvalidPartition(String),

    #[error("length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("{what} exceeds cap of {cap}")]
    CapExceeded { what: String, cap: u64 },

    #[error("lattice rank {found} does not match fusion class count {expected}")]
    RankMismatch { expected: usize, found: usize },

    #[error("not a lattice basis: {0}")]
    NotABasis(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("unknown catalog entry `{0}`")]
    UnknownGroup(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn cap(what: impl Into<String>, cap: u64) -> Self {
        Error::CapExceeded { what: what.into(), cap }
    }

    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
