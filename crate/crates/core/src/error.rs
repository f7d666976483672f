use thiserror::Error;

use crate::metric::Point;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different algebras ({left} vs {right})")]
    MixedAlgebra { left: String, right: String },

    #[error("operation `{0}` is not supported by this algebra")]
    Unsupported(&'static str),

    #[error("invalid element literal `{0}`")]
    InvalidLiteral(String),

    #[error("atom count must be between 1 and 64, got {0}")]
    InvalidAtomCount(usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("point {point} does not belong to the space")]
    NotInSpace { point: Point },

    #[error("point {point} is not in the convex hull: no generator matches on atom {atom}")]
    NotInHull { point: Point, atom: usize },

    #[error("space has no basepoint")]
    MissingBasepoint,

    #[error("space is not convex")]
    NotConvex,

    #[error("empty space")]
    EmptySpace,

    #[error("coefficients select generator {index} but only {len} generators were given")]
    CoefficientArity { index: usize, len: usize },

    #[error("coefficients do not form a partition of unity")]
    NotAPartition,

    #[error("size cap exceeded: {size} > {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("map is not a function: {point} has two images")]
    NotAFunction { point: Point },

    #[error("map is undefined at {point}")]
    Undefined { point: Point },

    #[error("map is not contractive: d(F({x}), F({y})) is not below d({x}, {y})")]
    NotContractive { x: Point, y: Point },

    #[error("map is not an isometry: distance between {x} and {y} is not preserved")]
    NotIsometric { x: Point, y: Point },

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("internal verification failed: {0}")]
    Internal(String),
}
