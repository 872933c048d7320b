//! Truncated Taylor series with the Hardy-space inner product.
//!
//! A function on the disc is carried as its first `N` Taylor coefficients;
//! `⟨f, g⟩ = Σ f_j · conj(g_j)` is then the H² inner product of the
//! truncations. Every construction below has geometrically decaying tails,
//! so [`required_truncation`] turns a target accuracy into a degree bound
//! a priori instead of estimating errors after the fact.

use num_complex::Complex64;

use crate::blaschke::BlaschkeProduct;

/// Taylor coefficients `c_0..c_{N-1}` of a function on the disc.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedVector {
    coeffs: Vec<Complex64>,
}

impl TruncatedVector {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        Self { coeffs }
    }

    pub fn zeros(len: usize) -> Self {
        Self {
            coeffs: vec![Complex64::new(0.0, 0.0); len],
        }
    }

    /// The constant function 1.
    pub fn one(len: usize) -> Self {
        let mut v = Self::zeros(len);
        v.coeffs[0] = Complex64::new(1.0, 0.0);
        v
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^j`, zero past the truncation.
    pub fn coeff(&self, j: usize) -> Complex64 {
        self.coeffs
            .get(j)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// `Σ self_j · conj(other_j)`; mismatched lengths zero-pad.
    pub fn inner(&self, other: &Self) -> Complex64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a * b.conj())
            .sum()
    }

    pub fn norm_squared(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn normalized(&self) -> Self {
        self.scale(Complex64::new(1.0 / self.norm(), 0.0))
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Self::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn add_scaled(&mut self, s: Complex64, other: &Self) {
        debug_assert_eq!(self.len(), other.len());
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += s * b;
        }
    }

    /// The adjoint shift `M_z*`: drop the constant term, shift left.
    pub fn backward_shift(&self) -> Self {
        let mut coeffs: Vec<Complex64> = self.coeffs[1..].to_vec();
        coeffs.push(Complex64::new(0.0, 0.0));
        Self::new(coeffs)
    }

    /// Cauchy product truncated to this vector's length.
    pub fn mul_truncated(&self, other: &Self) -> Self {
        let n = self.len();
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.norm_sqr() == 0.0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Evaluates the truncated polynomial by Horner's rule.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    }
}

/// Szegő kernel `𝕊(·,α) = (1 − ᾱz)^{-1} = Σ ᾱ^m z^m`, truncated.
pub fn szego_kernel(alpha: Complex64, len: usize) -> TruncatedVector {
    let mut coeffs = Vec::with_capacity(len);
    let mut pow = Complex64::new(1.0, 0.0);
    for _ in 0..len {
        coeffs.push(pow);
        pow *= alpha.conj();
    }
    TruncatedVector::new(coeffs)
}

/// Series of the factor `b_α = (z − α)/(1 − ᾱz)`:
/// `c_0 = −α`, `c_j = ᾱ^{j−1}(1 − |α|²)` for `j ≥ 1`.
pub fn blaschke_factor_series(alpha: Complex64, len: usize) -> TruncatedVector {
    let mut coeffs = vec![Complex64::new(0.0, 0.0); len];
    coeffs[0] = -alpha;
    let scale = 1.0 - alpha.norm_sqr();
    let mut pow = Complex64::new(scale, 0.0);
    for c in coeffs.iter_mut().skip(1) {
        *c = pow;
        pow *= alpha.conj();
    }
    TruncatedVector::new(coeffs)
}

/// First `len` Taylor coefficients of a finite Blaschke product, by
/// repeated truncated multiplication of its factor series.
pub fn taylor_truncation(phi: &BlaschkeProduct, len: usize) -> TruncatedVector {
    assert!(len >= 1, "need at least one coefficient");
    let mut acc = TruncatedVector::one(len);
    for alpha in phi.zeros_with_repetition() {
        acc = acc.mul_truncated(&blaschke_factor_series(alpha.as_complex(), len));
    }
    acc
}

/// Smallest truncation degree for which every construction over zeros of
/// modulus at most `max_modulus` meets the working tolerances: the tail
/// bound `r^N < 1e-14·(1−r)` keeps single-tail errors near 1e-15 and
/// inner-product errors (products of two tails) far below the 1e-10 Gram
/// budget. Always leaves room for `degree + 1` coefficients.
pub fn required_truncation(max_modulus: f64, degree: u32) -> usize {
    let floor = degree as usize + 1;
    if max_modulus <= 0.0 {
        return floor;
    }
    debug_assert!(max_modulus < 1.0);
    let bound = 1e-14 * (1.0 - max_modulus);
    let n = (bound.ln() / max_modulus.ln()).ceil() as usize + 1;
    floor.max(n)
}
