//! Finite-dimensional model spaces `Q_φ = H² ⊖ φH²` for finite Blaschke
//! products, realized as explicit orthonormal bases of truncated Taylor
//! vectors, with the compressed adjoint shift and the compressed adjoint
//! multiplier `M_ψ*|_{Q_φ}`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::blaschke::{BlaschkeProduct, DiscPoint};
use crate::error::Error;
use crate::numerics::series::{
    blaschke_factor_series, required_truncation, szego_kernel, TruncatedVector,
};
use crate::Result;

/// A model space `Q_φ` carried as an orthonormal basis of truncated
/// Taylor vectors. `dim Q_φ = deg φ`.
#[derive(Debug, Clone)]
pub struct ModelSpace {
    generator: BlaschkeProduct,
    truncation: usize,
    basis: Vec<TruncatedVector>,
}

impl ModelSpace {
    pub fn generator(&self) -> &BlaschkeProduct {
        &self.generator
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[TruncatedVector] {
        &self.basis
    }

    /// Coordinates of `v` against the basis: `x_i = ⟨v, e_i⟩`.
    pub fn project(&self, v: &TruncatedVector) -> DVector<Complex64> {
        DVector::from_iterator(self.dim(), self.basis.iter().map(|e| v.inner(e)))
    }

    /// The vector `Σ x_i e_i` back in Taylor coordinates.
    pub fn embed(&self, coords: &DVector<Complex64>) -> TruncatedVector {
        assert_eq!(coords.len(), self.dim());
        let mut out = TruncatedVector::zeros(self.truncation);
        for (x, e) in coords.iter().zip(&self.basis) {
            out.add_scaled(*x, e);
        }
        out
    }

    /// `‖v − P_Q v‖`: how far `v` is from lying in the space.
    pub fn membership_residual(&self, v: &TruncatedVector) -> f64 {
        let mut diff = v.clone();
        for e in &self.basis {
            diff.add_scaled(-v.inner(e), e);
        }
        diff.norm()
    }

    /// `max_{i,j} |⟨e_i, e_j⟩ − δ_ij|`; truncation noise only.
    pub fn gram_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for (i, a) in self.basis.iter().enumerate() {
            for (j, b) in self.basis.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((a.inner(b) - Complex64::new(target, 0.0)).norm());
            }
        }
        worst
    }

    /// `max_i ‖(I − P_Q) M_z* e_i‖`: the basis spans a backward-shift
    /// invariant space, so this is again truncation noise only.
    pub fn coinvariance_residual(&self) -> f64 {
        self.basis
            .iter()
            .map(|e| self.membership_residual(&e.backward_shift()))
            .fold(0.0, f64::max)
    }
}

fn check_truncation(given: usize, needed: usize, radius: f64) -> Result<()> {
    if given < needed {
        return Err(Error::TruncationTooCoarse {
            given,
            needed,
            radius,
        });
    }
    Ok(())
}

/// Orthonormal basis of `Q_{b_α^m}`: `g_j = b_α^j · (1−|α|²)𝕊(·,α)`,
/// normalized, for `j = 0..m`. Multiplication by the inner factor `b_α`
/// is isometric, so the raw vectors share the norm `(1−|α|²)^{1/2}` and
/// are mutually orthogonal.
pub fn single_point_basis(alpha: DiscPoint, order: u32, truncation: usize) -> Result<ModelSpace> {
    if order == 0 {
        return Err(Error::ZeroOrderEntry);
    }
    let radius = alpha.modulus();
    check_truncation(truncation, required_truncation(radius, order), radius)?;

    let a = alpha.as_complex();
    let scale = Complex64::new(1.0 - a.norm_sqr(), 0.0);
    let kernel = szego_kernel(a, truncation).scale(scale);
    debug_assert!((kernel.norm() - (1.0 - a.norm_sqr()).sqrt()).abs() < 1e-10);

    let factor = blaschke_factor_series(a, truncation);
    let mut basis = Vec::with_capacity(order as usize);
    let mut g = kernel;
    for _ in 0..order {
        basis.push(g.normalized());
        g = g.mul_truncated(&factor);
    }
    Ok(ModelSpace {
        generator: BlaschkeProduct::prime_power(alpha, order),
        truncation,
        basis,
    })
}

/// Orthonormal basis of `Q_φ` for any finite Blaschke product, built as
/// the Takenaka–Malmquist flag over an enumeration `a_1, …, a_d` of the
/// zeros with repetition:
/// `e_k = (1−|a_k|²)^{1/2} 𝕊(·,a_k) · ∏_{j<k} b_{a_j}`.
pub fn general_basis(phi: &BlaschkeProduct, truncation: usize) -> Result<ModelSpace> {
    let degree = phi.degree();
    if degree == 0 {
        return Err(Error::EmptyInput);
    }
    let radius = phi.max_zero_modulus();
    check_truncation(truncation, required_truncation(radius, degree), radius)?;

    let mut basis = Vec::with_capacity(degree as usize);
    let mut tail = TruncatedVector::one(truncation);
    for alpha in phi.zeros_with_repetition() {
        let a = alpha.as_complex();
        let scale = Complex64::new((1.0 - a.norm_sqr()).sqrt(), 0.0);
        let e = szego_kernel(a, truncation).scale(scale).mul_truncated(&tail);
        basis.push(e);
        tail = tail.mul_truncated(&blaschke_factor_series(a, truncation));
    }
    Ok(ModelSpace {
        generator: phi.clone(),
        truncation,
        basis,
    })
}

/// Matrix of the compressed adjoint shift `S_φ* = M_z*|_{Q_φ}` against the
/// basis: `T[i][j] = ⟨M_z* e_j, e_i⟩`. Upper triangular in the flag basis,
/// with the conjugated zeros on the diagonal.
pub fn compressed_adjoint_shift(space: &ModelSpace) -> DMatrix<Complex64> {
    let d = space.dim();
    let shifted: Vec<TruncatedVector> =
        space.basis.iter().map(|e| e.backward_shift()).collect();
    DMatrix::from_fn(d, d, |i, j| shifted[j].inner(&space.basis[i]))
}

/// Matrix of `M_ψ*|_{Q_φ}` against the basis, via the rational calculus
/// of the compressed forward shift `S = (M_z*|_Q)^H`:
/// `ψ(S) = ∏(S − β_kI) · [∏(I − β̄_kS)]^{-1}`, then one conjugate
/// transpose. The two products commute, so a single LU solve suffices.
pub fn adjoint_multiplier(space: &ModelSpace, psi: &BlaschkeProduct) -> Result<DMatrix<Complex64>> {
    let d = space.dim();
    let s = compressed_adjoint_shift(space).adjoint();
    let id = DMatrix::<Complex64>::identity(d, d);
    let mut num = id.clone();
    let mut den = id.clone();
    for beta in psi.zeros_with_repetition() {
        let b = beta.as_complex();
        num *= &s - &id * b;
        den *= &id - &s * b.conj();
    }
    // ψ(S)·den = num with the factors commuting, so solve denᵀ Xᵀ = numᵀ
    let solved = den
        .transpose()
        .lu()
        .solve(&num.transpose())
        .ok_or(Error::SingularResolvent)?;
    Ok(solved.transpose().adjoint())
}
