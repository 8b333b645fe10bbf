use thiserror::Error;

/// Errors raised across the engine.
///
/// `Parse` covers malformed input text; every other variant is a violated
/// precondition of the requested operation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DkError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degree {degree} out of range 0..={max}")]
    OutOfRange { degree: usize, max: usize },
    #[error("insufficient truncation: need top degree >= {needed}, have {have}")]
    InsufficientTruncation { needed: usize, have: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("attaching element is not a cycle: d(z) = {0}")]
    NotCycle(String),
    #[error("degree/weight mismatch: {0}")]
    Homogeneity(String),
    #[error("algebra is not weight graded: {0}")]
    NotWeightGraded(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("missing assignment for generator `{0}`")]
    MissingAssignment(String),
    #[error("point is not classical: d({generator}) evaluates to {value}")]
    NotClassical { generator: String, value: String },
    #[error("map is not multiplicative: {0}")]
    NotMultiplicative(String),
    #[error("not a chain map: {0}")]
    NotChainMap(String),
    #[error("simplicial algebra is not reduced: {0}")]
    NotReduced(String),
    #[error("simplicial algebra is not free: {0}")]
    NotFree(String),
    #[error("no origin supplied")]
    NoOrigin,
    #[error("invalid simplicial data: {0}")]
    Simplicial(String),
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, DkError>;
