use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal `{0}` (expected `p` or `p/q`)")]
pub struct ParseScalarError(pub String);

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not symmetric")]
    NonSymmetric,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("operands belong to different algebras")]
    AlgebraMismatch,
    #[error("algebra `{0}` carries no conjugation")]
    NoConjugation(String),
    #[error("x·x* is not a scalar multiple of 1: {0}")]
    NotScalar(String),
    #[error("invalid conjugation: {0}")]
    InvalidConjugation(String),
    #[error("tower of {0} doublings exceeds the cap of 4")]
    TowerTooTall(usize),
    #[error("formed space of dimension {0} is not supported (dimension must be at most 3)")]
    DimensionTooLarge(usize),
    #[error("algebra is not the octonions in the canonical basis (every Q must equal -1)")]
    NotOctonions,
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("tables differ: {0}")]
    Mismatch(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error(transparent)]
    Scalar(#[from] ParseScalarError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
