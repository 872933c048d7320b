//! Co-rank combinatorics for Rudin quotient modules.
//!
//! The computation factors through three stages: enumerate the prime-tuple
//! classes Λ of the family, collect each class's order tuples over its
//! zero set, and reduce to the Pareto-maximal antichain whose size is the
//! class's co-rank. The family co-rank is the maximum over classes.

mod family;
mod monotone;
mod pareto;
mod report;

pub use family::{
    lambda_classes, order_tuples, zero_set, MultiplicityProfile, OrderTuple, PrimeTuple,
    RudinFamily, Window, ZeroSet,
};
pub use monotone::{
    corank_monotone, izuchi_published_corank, validate_monotone, MonotoneDetail,
    MonotoneViolation,
};
pub use pareto::{pareto_maximal, MinimalRep};
pub use report::{corank_general, CorankReport, Method, MethodDetail, TupleReport};
