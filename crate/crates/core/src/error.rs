use thiserror::Error;

#[derive(Debug, Error)]
pub enum EngineError {
    /// A map failed to descend to a quotient: proj ∘ f ∘ relations ≠ 0.
    #[error("map does not descend to the quotient: {0}")]
    NotWellDefined(String),
    #[error("objects live over different groups")]
    GroupMismatch,
    #[error("zero value where a nonzero one is required: {0}")]
    ZeroValue(String),
    #[error("R * R_inv is not 1 ⊗ 1")]
    NotInverse,
    #[error("operation is not available for this backend: {0}")]
    UnsupportedBackend(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("a solved morphism failed its defining relation: {0}")]
    SolveFailed(String),
}

pub type Result<T> = std::result::Result<T, EngineError>;
