use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KnotError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid code: {0}")]
    Validity(String),
    #[error("code is not realizable as a planar diagram")]
    NotRealizable,
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("unknown crossing {0}")]
    UnknownCrossing(usize),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("stale or invalid move: {0}")]
    InvalidMove(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, KnotError>;
