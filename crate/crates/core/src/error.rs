use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown catalog entry `{0}`")]
    UnknownAlgebra(String),

    #[error("parameter `{0}` is required but unbound")]
    UnboundParameter(String),

    #[error("parameter `{name}` = {value} is excluded (must avoid 0 and 1)")]
    ExcludedParameter { name: String, value: String },

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("invalid relation: {0}")]
    InvalidRelation(String),

    #[error("relations kill the identity at vertex {0}")]
    InconsistentPresentation(String),

    #[error("paths of length {cap} do not vanish; raise the length cap")]
    CapInsufficient { cap: usize },

    #[error("field error: {0}")]
    Field(String),

    #[error("not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("failed to split an idempotent during decomposition")]
    SplittingFailure,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("enumeration incomplete after {0} nodes")]
    Incomplete(usize),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("{line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}
