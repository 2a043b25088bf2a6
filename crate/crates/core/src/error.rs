use thiserror::Error;

/// Errors raised by constructions, verifiers and the search engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid block: {0}")]
    InvalidBlock(String),

    #[error("degenerate block {block:?}: elements {x} and {y} are congruent mod {v}")]
    DegenerateBlock { block: Vec<i64>, x: i64, y: i64, v: i64 },

    #[error("invalid interval [{a},{b}]_{c}")]
    InvalidInterval { a: i64, b: i64, c: i64 },

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("unsupported modulus v={v}: {reason}")]
    UnsupportedModulus { v: i64, reason: String },

    #[error("inadmissible parameters: {0}")]
    Inadmissible(String),

    #[error("known nonexistent: {0}")]
    KnownNonexistent(String),

    #[error("not found: {0}")]
    NotFound(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("construction gap: {0}")]
    ConstructionGap(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
