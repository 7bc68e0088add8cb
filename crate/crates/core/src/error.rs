use thiserror::Error;

use crate::algebra::Gen;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("truncation orders differ: {left} vs {right}")]
    TruncationMismatch { left: u32, right: u32 },

    #[error("tensor ranks differ: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("operation requires a rank-{expected} tensor, got rank {found}")]
    WrongRank { expected: usize, found: usize },

    #[error("exponential argument has a term of parameter degree 0: {0}")]
    NonNilpotent(String),

    #[error("unsupported matrix: {0}")]
    UnsupportedMatrix(String),

    #[error("rewrite rule for {0}{1} violates the termination witness")]
    NonTerminating(Gen, Gen),

    #[error("rewrite system is missing a rule for {0}{1}")]
    MissingRule(Gen, Gen),

    #[error("basis change is not a Lie algebra automorphism: {0}")]
    NotAutomorphism(String),

    #[error("tensor is not alternating")]
    NotAlternating,

    #[error("tensor is not skew-symmetric")]
    NotSkew,

    #[error("structure is not quantizable: {0}")]
    NotQuantizable(String),

    #[error("antipode iteration did not stabilise for {0}")]
    AntipodeInconsistent(Gen),

    #[error("operation needs concrete rational values: {0}")]
    NotConcrete(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
