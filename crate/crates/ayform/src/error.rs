use thiserror::Error;

/// Errors surfaced by constructors and guarded operations.
#[derive(Debug, Error)]
pub enum AyError {
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid window notation: {0}")]
    InvalidWindow(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("enumeration guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("scalar backend cannot represent the requested normalization: {0}")]
    BackendMismatch(String),
    #[error("family is not closed under the action: {0}")]
    FamilyNotClosed(String),
}
