use thiserror::Error;

use crate::universe::{Property, Witness};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("universe must have at least one point")]
    EmptyUniverse,
    #[error("universe of {size} points exceeds the cap of {cap}")]
    UniverseTooLarge { size: usize, cap: usize },
    #[error("family would exceed the cap of {cap} members")]
    FamilyTooLarge { cap: usize },
    #[error("point {point} is outside a universe of {size} points")]
    PointOutOfRange { point: usize, size: usize },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("duplicate point label {0:?}")]
    DuplicateLabel(String),
    #[error("universes do not match ({left} vs {right} points)")]
    UniverseMismatch { left: usize, right: usize },
    #[error("family is not a {property}: {witness}")]
    NotA { property: Property, witness: Witness },
    #[error("partition length must be at least 1")]
    ZeroParts,
    #[error("filter minimum must be a nonempty member of the ambient family")]
    InvalidFilterMin,
    #[error("filter base is improper (contains the empty set)")]
    ImproperBase,
    #[error("filter base is empty")]
    EmptyBase,
    #[error("filter base fails the directedness condition at {0} and {1}")]
    NotDirected(String, String),
    #[error("set {0} is not a member of the ambient family")]
    NotInAmbient(String),
    #[error("map has {got} entries for a domain of {expected} points")]
    MapLength { expected: usize, got: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
