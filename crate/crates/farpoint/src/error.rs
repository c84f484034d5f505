use thiserror::Error;

/// Errors produced by library operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("point set is empty")]
    EmptySet,
    #[error("ambient dimension must be at least 2, got {0}")]
    DimTooSmall(usize),
    #[error("invalid point set: {0}")]
    InvalidPointSet(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("state budget of {budget} states exhausted after {states} states")]
    BudgetExhausted { budget: usize, states: usize },
    #[error("target is infeasible: {0}")]
    InfeasibleTarget(String),
    #[error("resampling budget exhausted: {0}")]
    ResamplingExhausted(String),
    #[error("zero vector has no polar angle")]
    ZeroVector,
    #[error("need at least two points, got {0}")]
    TooFewPoints(usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
