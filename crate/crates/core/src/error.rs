use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Error type shared by every engine in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("closure exceeded the cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },

    #[error("generators mix incompatible element representations")]
    MixedRepresentation,

    #[error("group order {order} exceeds the lattice cap of {cap}")]
    OrderCapExceeded { order: usize, cap: usize },

    #[error("operands belong to different parents")]
    ParentMismatch,

    #[error("element is not a unit modulo the radical")]
    NotUnitModRadical,

    #[error("{0}")]
    CapExceeded(String),

    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),

    #[error("the zero element has no valuation")]
    ZeroElement,

    #[error("free words have different ranks ({left} vs {right})")]
    RankMismatch { left: usize, right: usize },

    #[error("expansions agree to degree {degree} but the words differ")]
    TruncationInsufficient { degree: usize },

    #[error("index error: {0}")]
    IndexError(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
