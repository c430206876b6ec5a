use thiserror::Error;

/// Errors shared by the kernel, enrichment and harness layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid monotone map: {0}")]
    InvalidMonotone(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("operand shape mismatch: {0}")]
    ShapeMismatch(String),

    /// An operation needs level data beyond the faithful range of an object.
    #[error("truncation insufficient for {what}: needs level {needed}, faithful up to {}",
            .available.map_or("all levels".to_string(), |d| format!("level {d}")))]
    Truncation {
        what: String,
        needed: usize,
        available: Option<usize>,
    },

    #[error("probe {probe} is not materialized on structure {structure}")]
    ProbeMissing { probe: String, structure: String },

    #[error("not an isomorphism: {0}")]
    NotIso(String),

    #[error("configuration error: {0}")]
    Config(String),

    /// A condition the library guarantees by construction was violated.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
