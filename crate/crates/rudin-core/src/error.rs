use thiserror::Error;

use crate::blaschke::BlaschkeProduct;
use crate::corank::MonotoneViolation;

/// Errors across the symbolic and numeric layers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("point {re}+{im}i lies on or outside the unit circle")]
    PointOutsideDisc { re: f64, im: f64 },

    #[error("{divisor} does not divide {dividend}")]
    NotDivisible {
        dividend: BlaschkeProduct,
        divisor: BlaschkeProduct,
    },

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("prime tuple never has all coordinates active at a common index")]
    TupleNotInLambda,

    #[error("empty input: at least one order tuple is required")]
    EmptyInput,

    #[error("order tuple entries must all be at least 1")]
    ZeroOrderEntry,

    #[error("variable partition must be a proper non-empty subset of the variables: {0}")]
    BadVariablePartition(String),

    #[error("family is not monotone for the given partition ({} violations)", .0.len())]
    NotMonotone(Vec<MonotoneViolation>),

    #[error("the published comparison formula is defined for exactly two variables, got {0}")]
    NotTwoVariables(usize),

    #[error("truncation degree {given} too coarse: need at least {needed} for max zero modulus {radius}")]
    TruncationTooCoarse {
        given: usize,
        needed: usize,
        radius: f64,
    },

    #[error("resolvent (I - conj(a) S) is numerically singular; basis is broken")]
    SingularResolvent,

    #[error("desk-scale cap exceeded: {what} is {size}, limit {limit}")]
    DeskScaleExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("expected {expected} coordinates, got {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("operation requires a module supported at a single point")]
    NotSinglePoint,

    #[error("vector {index} lies outside the module (residual {residual:.3e})")]
    VectorOutsideModule { index: usize, residual: f64 },

    #[error("no coordinate satisfies the required divisibility hypothesis")]
    HypothesisNotMet,
}
