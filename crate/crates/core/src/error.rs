use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    /// Input outside the mathematical domain of the operation (non-Hermitian,
    /// not a state, bad norm selector, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The input is valid but sits on a degenerate point the operation
    /// cannot handle, e.g. a vanishing Bargmann invariant.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// Malformed serialized input.
    #[error("parse error: {0}")]
    Parse(String),

    #[error("sampling failed after {tries} tries: {what}")]
    Sampling { what: String, tries: usize },
}
