//! Bound quiver algebras and their finite-dimensional right modules.

mod algebra;
pub mod ar;
pub mod conditions;
pub mod constructors;
pub mod homological;
pub mod onepoint;
mod quiver;
pub mod reflection;
mod rep;
pub mod tilting;

pub use algebra::{BoundQuiverAlgebra, Relation};
pub use quiver::{Arrow, Path, Quiver};
pub use rep::{Morphism, Representation};

use thiserror::Error;

use crate::exactalg::MatrixError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundQuiverError {
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("quiver has an oriented cycle")]
    CyclicQuiver,
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("unknown arrow {0}")]
    UnknownArrow(String),
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
    #[error("points must be pairwise distinct")]
    DuplicatePoints,
    #[error("the point at infinity is not supported here")]
    InfinitePointUnsupported,
    #[error("at least two points are required")]
    TooFewPoints,
    #[error("module and algebra do not match")]
    AlgebraMismatch,
    #[error("module has a projective direct summand")]
    ProjectiveSummand,
    #[error("module has an injective direct summand")]
    InjectiveSummand,
    #[error("algebra is not hereditary")]
    NotHereditary,
    #[error("vertex is neither a sink nor a source as required")]
    WrongVertexType,
    #[error("conditions violated: {0}")]
    ConditionsViolated(String),
    #[error("representation violates a relation")]
    RelationViolated,
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}
