use thiserror::Error;

use crate::constructions::Family;
use crate::torus::TorusDims;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("torus dimensions must be at least 3, got {m} x {n}")]
    DimensionTooSmall { m: usize, n: usize },

    #[error("vertex set belongs to {found}, expected {expected}")]
    DimsMismatch { expected: TorusDims, found: TorusDims },

    #[error("vertex ({i}, {j}) is outside {dims}")]
    VertexOutOfRange { i: usize, j: usize, dims: TorusDims },

    #[error("weight source ({i}, {j}) is not a member of the set")]
    SourceNotInSet { i: usize, j: usize },

    #[error("family {family} is not defined on C{m} x C{n}")]
    FamilyDimsMismatch { family: Family, m: usize, n: usize },

    #[error("cannot fold {dims} along the {axis} axis: need folded length >= 7 and other length >= 6")]
    DimsTooSmall { dims: TorusDims, axis: &'static str },

    #[error("column sequence is identically zero")]
    AllZero,

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("column dp needs m <= 4 and n >= 5, got {dims}")]
    StateSpaceTooLarge { dims: TorusDims },

    #[error("instance {dims} has more than 128 vertices")]
    InstanceTooLarge { dims: TorusDims },

    #[error("solver produced a set that failed verification")]
    Unverified,
}

pub type Result<T> = std::result::Result<T, Error>;
