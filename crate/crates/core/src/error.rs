//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the invariant computations.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// A precondition on an argument was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Winding data is not in the image of the degree dictionary.
    #[error("not in image of iota: {0}")]
    NotInImage(String),

    /// An operation was asked of the wrong geometry.
    #[error("family mismatch: {0}")]
    FamilyMismatch(String),

    /// A division that must be exact left a remainder.
    #[error("non-exact division: {0}")]
    InexactDivision(String),

    /// The q -> 1 limit does not exist.
    #[error("pole at q=1")]
    PoleAtOne,

    /// A fractional sign (-1)^x with non-integral x.
    #[error("sign undefined: {0}")]
    SignUndefined(String),

    /// Two evaluation routes that must agree did not.
    #[error("internal consistency fault: {0}")]
    ConsistencyFault(String),

    /// A certified-integral quantity failed its certificate.
    #[error("integrality violation: {0}")]
    IntegralityViolation(String),

    /// An equivariant contraction kept a dependence on the torus weights.
    #[error("lambda dependence survived contraction: {0}")]
    LambdaDependence(String),

    /// The quiver fit found no candidate, or more than one.
    #[error("quiver search: {0}")]
    QuiverSearch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
