use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("operands belong to different rings")]
    RingMismatch,

    #[error("element is not invertible")]
    NotInvertible,

    #[error("length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("exhaustive search refused: rank {rank} exceeds the limit of {limit}")]
    TooLarge { rank: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
