//! Self-contained numerical verifications of the operator identities the
//! symbolic routes rely on. Each check builds its own spaces and
//! matrices and answers with a plain pass/fail at a 1e-8 working
//! tolerance.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::blaschke::{BlaschkeProduct, DiscPoint};
use crate::error::Error;
use crate::numerics::linalg::krylov_span_dim;
use crate::numerics::model_space::{
    adjoint_multiplier, compressed_adjoint_shift, general_basis,
};
use crate::numerics::series::{
    blaschke_factor_series, required_truncation, szego_kernel, taylor_truncation,
};
use crate::Result;

const CHECK_TOL: f64 = 1e-8;
const RANK_TOL: f64 = 1e-10;
const MAX_DEGREE: u32 = 6;
const MAX_ANNIHILATION_DEGREE: u32 = 4;
const MAX_VARIABLES: usize = 3;

fn check_degree(degree: u32, limit: u32) -> Result<()> {
    if degree == 0 {
        return Err(Error::EmptyInput);
    }
    if degree > limit {
        return Err(Error::DeskScaleExceeded {
            what: "blaschke degree",
            size: degree as usize,
            limit: limit as usize,
        });
    }
    Ok(())
}

/// Checks the two identities behind the single-point bases: the raw
/// vector `g = b_α^{m−1} · (1−|α|²)𝕊(·,α)` has norm `(1−|α|²)^{1/2}`,
/// and the adjoint shift acts on it with diagonal coefficient `ᾱ`,
/// i.e. `⟨M_z* g, g⟩ / ⟨g, g⟩ = ᾱ`. Built from raw series only.
pub fn verify_projection_identity(alpha: DiscPoint, order: u32) -> Result<bool> {
    if order == 0 {
        return Err(Error::ZeroOrderEntry);
    }
    let a = alpha.as_complex();
    let len = required_truncation(alpha.modulus(), order);
    let scale = Complex64::new(1.0 - a.norm_sqr(), 0.0);
    let mut g = szego_kernel(a, len).scale(scale);
    let factor = blaschke_factor_series(a, len);
    for _ in 1..order {
        g = g.mul_truncated(&factor);
    }
    let norm_ok = (g.norm() - (1.0 - a.norm_sqr()).sqrt()).abs() <= CHECK_TOL;
    let ratio = g.backward_shift().inner(&g) / Complex64::new(g.norm_squared(), 0.0);
    let diag_ok = (ratio - a.conj()).norm() <= CHECK_TOL;
    Ok(norm_ok && diag_ok)
}

/// Checks that `M_z* φ` is star-cyclic for `Q_φ`: its orbit under the
/// compressed adjoint shift spans the whole space.
pub fn verify_star_cyclic(phi: &BlaschkeProduct) -> Result<bool> {
    check_degree(phi.degree(), MAX_DEGREE)?;
    let len = required_truncation(phi.max_zero_modulus(), phi.degree());
    let space = general_basis(phi, len)?;
    let f = taylor_truncation(phi, len).backward_shift();
    if space.membership_residual(&f) > CHECK_TOL {
        return Ok(false);
    }
    let t = compressed_adjoint_shift(&space);
    let start = DMatrix::from_column_slice(space.dim(), 1, space.project(&f).as_slice());
    Ok(krylov_span_dim(&[t], &start, RANK_TOL) == space.dim())
}

/// Checks that `g = M_ψ* M_z* φ` lands in `Q_θ` for `θ = φ / gcd(φ, ψ)`
/// and is star-cyclic there. When `θ` is the unit the claim degenerates
/// to `g = 0`, which is what gets checked.
pub fn verify_quotient_cyclic(phi: &BlaschkeProduct, psi: &BlaschkeProduct) -> Result<bool> {
    check_degree(phi.degree(), MAX_DEGREE)?;
    let radius = phi.max_zero_modulus().max(psi.max_zero_modulus());
    let len = required_truncation(radius, phi.degree().max(psi.degree()));
    let space = general_basis(phi, len)?;
    let f = space.project(&taylor_truncation(phi, len).backward_shift());
    let g_coords = adjoint_multiplier(&space, psi)? * f;
    let g = space.embed(&g_coords);

    let theta = phi
        .quotient(&phi.gcd(psi))
        .expect("gcd divides");
    if theta.is_one() {
        return Ok(g.norm() <= CHECK_TOL);
    }
    let target = general_basis(&theta, len)?;
    if target.membership_residual(&g) > CHECK_TOL {
        return Ok(false);
    }
    let t = compressed_adjoint_shift(&target);
    let start = DMatrix::from_column_slice(target.dim(), 1, target.project(&g).as_slice());
    Ok(krylov_span_dim(&[t], &start, RANK_TOL) == target.dim())
}

/// Checks the annihilation step behind the corank upper bound: if some
/// `ξ_j` divides `η_j`, then `M_{η_1}* ⊗ … ⊗ M_{η_n}*` kills
/// `Q_{ξ_1} ⊗ … ⊗ Q_{ξ_n}`. The composed operator is assembled as a
/// Kronecker product of compressed adjoint multipliers and its largest
/// singular value compared against the tolerance. A unit `ξ_j` makes the
/// module zero and the claim vacuous.
pub fn verify_annihilation(xi: &[BlaschkeProduct], eta: &[BlaschkeProduct]) -> Result<bool> {
    if xi.is_empty() {
        return Err(Error::EmptyInput);
    }
    if xi.len() != eta.len() {
        return Err(Error::ArityMismatch {
            expected: xi.len(),
            found: eta.len(),
        });
    }
    if xi.len() > MAX_VARIABLES {
        return Err(Error::DeskScaleExceeded {
            what: "variables",
            size: xi.len(),
            limit: MAX_VARIABLES,
        });
    }
    for f in xi.iter().chain(eta) {
        if f.degree() > MAX_ANNIHILATION_DEGREE {
            return Err(Error::DeskScaleExceeded {
                what: "blaschke degree",
                size: f.degree() as usize,
                limit: MAX_ANNIHILATION_DEGREE as usize,
            });
        }
    }
    if xi.iter().any(BlaschkeProduct::is_one) {
        return Ok(true);
    }
    if !xi.iter().zip(eta).any(|(x, e)| x.divides(e)) {
        return Err(Error::HypothesisNotMet);
    }

    let mut factor_norms = 1.0f64;
    let mut composed: Option<DMatrix<Complex64>> = None;
    for (x, e) in xi.iter().zip(eta) {
        let len = required_truncation(
            x.max_zero_modulus().max(e.max_zero_modulus()),
            x.degree().max(e.degree()),
        );
        let space = general_basis(x, len)?;
        let m = adjoint_multiplier(&space, e)?;
        factor_norms *= operator_norm(&m);
        composed = Some(match composed {
            None => m,
            Some(acc) => acc.kronecker(&m),
        });
    }
    let composed = composed.expect("nonempty input");
    let norm = operator_norm(&composed);
    // the Kronecker norm must factor; a mismatch means assembly went wrong
    let consistent = (norm - factor_norms).abs() <= CHECK_TOL * factor_norms.max(1.0);
    Ok(consistent && norm <= CHECK_TOL)
}

fn operator_norm(m: &DMatrix<Complex64>) -> f64 {
    m.clone().singular_values()[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(re: f64, im: f64) -> DiscPoint {
        DiscPoint::new(re, im).unwrap()
    }

    #[test]
    fn projection_identity_holds_across_the_disc() {
        for &(re, im, m) in &[(0.0, 0.0, 1), (0.5, 0.0, 2), (-0.6, 0.55, 4), (0.0, 0.85, 3)] {
            assert!(verify_projection_identity(p(re, im), m).unwrap());
        }
        assert!(matches!(
            verify_projection_identity(p(0.5, 0.0), 0),
            Err(Error::ZeroOrderEntry)
        ));
    }

    #[test]
    fn shifted_generator_is_star_cyclic() {
        let phi = BlaschkeProduct::from_zeros([(p(0.5, 0.1), 2), (p(-0.2, 0.3), 1)]);
        assert!(verify_star_cyclic(&phi).unwrap());
        let monomial = BlaschkeProduct::prime_power(p(0.0, 0.0), 4);
        assert!(verify_star_cyclic(&monomial).unwrap());
        assert!(matches!(
            verify_star_cyclic(&BlaschkeProduct::one()),
            Err(Error::EmptyInput)
        ));
        let big = BlaschkeProduct::prime_power(p(0.3, 0.0), 7);
        assert!(matches!(
            verify_star_cyclic(&big),
            Err(Error::DeskScaleExceeded { .. })
        ));
    }

    #[test]
    fn quotient_cyclic_covers_the_three_regimes() {
        let a = p(0.5, 0.0);
        let b = p(-0.3, 0.2);
        let phi = BlaschkeProduct::from_zeros([(a, 2), (b, 1)]);
        // coprime ψ: θ = φ
        let coprime = BlaschkeProduct::factor(p(0.1, -0.4));
        assert!(verify_quotient_cyclic(&phi, &coprime).unwrap());
        // partial cancellation: θ = b_a
        let partial = BlaschkeProduct::from_zeros([(a, 1), (b, 2)]);
        assert!(verify_quotient_cyclic(&phi, &partial).unwrap());
        // ψ divisible by φ: θ = 1, the image must vanish
        let full = BlaschkeProduct::from_zeros([(a, 2), (b, 1), (p(0.7, 0.0), 1)]);
        assert!(verify_quotient_cyclic(&phi, &full).unwrap());
    }

    #[test]
    fn annihilation_requires_the_divisibility_hypothesis() {
        let xi = [
            BlaschkeProduct::prime_power(p(0.5, 0.0), 2),
            BlaschkeProduct::prime_power(p(-0.3, 0.1), 1),
        ];
        let eta_good = [
            BlaschkeProduct::prime_power(p(0.5, 0.0), 2),
            BlaschkeProduct::prime_power(p(0.2, 0.2), 1),
        ];
        assert!(verify_annihilation(&xi, &eta_good).unwrap());
        let eta_bad = [
            BlaschkeProduct::prime_power(p(0.5, 0.0), 1),
            BlaschkeProduct::prime_power(p(0.2, 0.2), 1),
        ];
        assert!(matches!(
            verify_annihilation(&xi, &eta_bad),
            Err(Error::HypothesisNotMet)
        ));
        // a unit factor collapses the module
        let xi_unit = [BlaschkeProduct::one(), xi[1].clone()];
        assert!(verify_annihilation(&xi_unit, &eta_bad).unwrap());
        assert!(matches!(
            verify_annihilation(&xi, &eta_good[..1]),
            Err(Error::ArityMismatch { expected: 2, found: 1 })
        ));
    }
}
