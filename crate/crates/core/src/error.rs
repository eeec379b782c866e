use thiserror::Error;

use crate::matrix::StarFailure;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix must have zero diagonal")]
    NonZeroDiagonal,

    #[error("matrix is not a Kleene star")]
    NotKleeneStar,

    #[error("matrix is not normal")]
    NotNormal,

    #[error("matrix is not normal idempotent")]
    NotNormalIdempotent,

    #[error("point must lie in the section x_n = 0 (last coordinate {0})")]
    NotInSection(String),

    #[error(transparent)]
    Star(#[from] StarFailure),

    #[error("the alcoved polytope is empty")]
    EmptyPolytope,

    #[error("point {0} does not lie in the polytope")]
    NotInPolytope(String),

    #[error("the measured set does not contain the origin")]
    OriginNotContained,

    #[error("inconsistent bounds: {0}")]
    InconsistentBounds(String),

    #[error("enumeration supports order at most {max}, got {order}")]
    TooLarge { order: usize, max: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}
