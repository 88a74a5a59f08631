use thiserror::Error;

use crate::exactnum::ExactError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("invalid orbifold curve: {0}")]
    InvalidCurve(String),
    #[error("index mismatch: {0}")]
    IndexMismatch(String),
    #[error("star quiver needs at least one leg")]
    EmptyQuiver,
    #[error("quiver is not of affine type")]
    NotAffine,
    #[error("routing error: {0}")]
    Routing(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
}

pub type Result<T, E = EngineError> = std::result::Result<T, E>;
