use thiserror::Error;

/// Errors surfaced by the algebra kernel and the certification pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resample budget exhausted after {0} attempts")]
    BudgetExhausted(u32),

    #[error("saturation did not stabilize within {0} colon iterations")]
    SaturationBound(u32),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
