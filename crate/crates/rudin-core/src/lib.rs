//! Co-rank of Rudin quotient modules of the polydisc Hardy space.
//!
//! A Rudin quotient module is the closed span, over `k ∈ ℤ`, of tensor
//! products `Q_{φ_{1,k}} ⊗ ⋯ ⊗ Q_{φ_{n,k}}` of one-variable model spaces,
//! where each `Φ_i = {φ_{i,k}}` is a sequence of finite Blaschke products.
//! Its co-rank is the minimal number of vectors whose joint orbit under the
//! compressed adjoint shifts spans the module.
//!
//! The crate computes this number two independent ways:
//!
//! * [`corank`] — exact combinatorics on zero multisets: per prime tuple,
//!   the co-rank of the local piece equals the size of the Pareto-maximal
//!   antichain of its order tuples, and the total is the maximum over
//!   tuples. A second closed-form route exists for families that are
//!   increasing in some variables and decreasing in the rest, plus a
//!   faithful implementation of an older published two-variable formula
//!   that is kept around because it undercounts (see [`fixtures`]).
//! * [`numerics`] — a finite-dimensional oracle: orthonormal bases of
//!   model spaces built from truncated Taylor series, compressed adjoint
//!   shift matrices, and two rank procedures (a local generator count and
//!   randomized generation testing) that must agree with the combinatorics.
//!
//! [`suites`] bundles the cross-checks between the two routes; the `rudin`
//! CLI exposes everything, including two built-in worked examples.

pub mod blaschke;
pub mod corank;
mod error;
pub mod fixtures;
pub mod numerics;
pub mod sampling;
pub mod suites;

pub use blaschke::{BlaschkeProduct, DiscPoint, PrimePower};
pub use corank::{
    corank_general, corank_monotone, izuchi_published_corank, lambda_classes, order_tuples,
    pareto_maximal, validate_monotone, zero_set, CorankReport, Method, MethodDetail, MinimalRep,
    MonotoneDetail, MonotoneViolation, MultiplicityProfile, OrderTuple, PrimeTuple, RudinFamily,
    TupleReport, Window, ZeroSet,
};
pub use error::Error;
pub use numerics::{
    adjoint_multiplier, assemble_point_module, compressed_adjoint_shift, general_basis,
    krylov_generated, nakayama_corank, randomized_min_generators, required_truncation,
    single_point_basis, taylor_truncation, verify_annihilation, verify_projection_identity,
    verify_quotient_cyclic, verify_star_cyclic, GeneratorCertificate, ModelSpace, TensorModule,
    TruncatedVector,
};

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
