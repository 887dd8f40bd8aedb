use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("word is not reduced: {0:?}")]
    NotReduced(Vec<usize>),
    #[error("walk length {len} exceeds bound {bound}")]
    WalkTooLong { len: usize, bound: usize },
    #[error("not a monomial eigenvalue: {0}")]
    NotMonomial(String),
    #[error("limit does not exist: {0}")]
    NoLimit(String),
    #[error("calibration failed: {0}")]
    Calibration(String),
    #[error("window error: {0}")]
    Window(String),
    #[error("crystal error: {0}")]
    Crystal(String),
    #[error("route mismatch: {0}")]
    RouteMismatch(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
