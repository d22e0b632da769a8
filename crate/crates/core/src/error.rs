use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("consistency error: {0}")]
    Consistency(String),

    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("operation requires a non-empty vertex set")]
    EmptySet,

    #[error("node budget of {budget} exhausted during branch and bound")]
    BudgetExceeded { budget: u64 },

    #[error("{what} exceeds guard of {limit} (got {got})")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("input graph must be connected")]
    Disconnected,

    #[error("instance has no {0} geometry")]
    MissingGeometry(&'static str),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
