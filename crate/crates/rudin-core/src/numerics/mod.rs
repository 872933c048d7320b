//! Numerical side of the library: concrete finite-dimensional models of
//! the quotient spaces and their shift operators, and rank oracles that
//! measure minimal generating sets directly. Nothing here consults the
//! combinatorial counting routines, so agreement between the two routes
//! is meaningful evidence rather than circular bookkeeping.

mod linalg;
mod model_space;
mod series;
mod tensor;
mod verify;

pub use model_space::{
    adjoint_multiplier, compressed_adjoint_shift, general_basis, single_point_basis, ModelSpace,
};
pub use series::{required_truncation, taylor_truncation, TruncatedVector};
pub use tensor::{
    assemble_point_module, krylov_generated, nakayama_corank, randomized_min_generators,
    GeneratorCertificate, TensorModule,
};
pub use verify::{
    verify_annihilation, verify_projection_identity, verify_quotient_cyclic, verify_star_cyclic,
};
