//! Exact arithmetic on finite Blaschke products via their zero multisets.
//!
//! A finite Blaschke product is determined, up to a unimodular constant, by
//! its zeros with multiplicity. We normalize that constant away: a product
//! here *is* its zero multiset, and two products are equal exactly when the
//! multisets coincide. The empty multiset is the constant 1.
//!
//! Zero coordinates compare bitwise. Two points that differ in the last ulp
//! are distinct primes; merging nearby zeros is a decision for the caller,
//! not for this module.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use crate::{Error, Result};

/// A point of the open unit disc, usable as an exact map key.
///
/// Equality and ordering are bitwise on the coordinate pair, which is safe
/// because the constructor rejects NaN (it fails the disc test).
#[derive(Debug, Clone, Copy)]
pub struct DiscPoint {
    re: f64,
    im: f64,
}

impl DiscPoint {
    /// Checks `re² + im² < 1` strictly.
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if re * re + im * im < 1.0 {
            Ok(Self { re, im })
        } else {
            Err(Error::PointOutsideDisc { re, im })
        }
    }

    pub fn re(&self) -> f64 {
        self.re
    }

    pub fn im(&self) -> f64 {
        self.im
    }

    pub fn as_complex(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn modulus(&self) -> f64 {
        self.as_complex().norm()
    }
}

impl PartialEq for DiscPoint {
    fn eq(&self, other: &Self) -> bool {
        self.re.to_bits() == other.re.to_bits() && self.im.to_bits() == other.im.to_bits()
    }
}

impl Eq for DiscPoint {}

impl PartialOrd for DiscPoint {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DiscPoint {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.re
            .total_cmp(&other.re)
            .then_with(|| self.im.total_cmp(&other.im))
    }
}

impl std::hash::Hash for DiscPoint {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.re.to_bits().hash(state);
        self.im.to_bits().hash(state);
    }
}

impl fmt::Display for DiscPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im >= 0.0 {
            write!(f, "{}+{}i", self.re, self.im)
        } else {
            write!(f, "{}{}i", self.re, self.im)
        }
    }
}

/// A prime power `b_α^m`: one zero with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimePower {
    pub base: DiscPoint,
    pub exponent: u32,
}

/// A finite Blaschke product as a zero → multiplicity map.
///
/// Divisibility, gcd, lcm and quotients act per prime on the multiplicity
/// exponents, exactly as for integers under unique factorization.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BlaschkeProduct {
    zeros: BTreeMap<DiscPoint, u32>,
}

impl BlaschkeProduct {
    /// The constant 1 (empty zero multiset, degree 0).
    pub fn one() -> Self {
        Self::default()
    }

    /// The single factor `b_α`.
    pub fn factor(alpha: DiscPoint) -> Self {
        Self::prime_power(alpha, 1)
    }

    /// `b_α^m`. Multiplicity 0 gives the unit.
    pub fn prime_power(alpha: DiscPoint, multiplicity: u32) -> Self {
        let mut zeros = BTreeMap::new();
        if multiplicity > 0 {
            zeros.insert(alpha, multiplicity);
        }
        Self { zeros }
    }

    /// Builds a product from (zero, multiplicity) pairs. Multiplicities of
    /// the same point accumulate; zero multiplicities are dropped.
    pub fn from_zeros<I: IntoIterator<Item = (DiscPoint, u32)>>(zeros: I) -> Self {
        let mut map = BTreeMap::new();
        for (p, m) in zeros {
            if m > 0 {
                *map.entry(p).or_insert(0) += m;
            }
        }
        Self { zeros: map }
    }

    pub fn is_one(&self) -> bool {
        self.zeros.is_empty()
    }

    /// Sum of multiplicities.
    pub fn degree(&self) -> u32 {
        self.zeros.values().sum()
    }

    /// Iterates distinct zeros with multiplicities, in key order.
    pub fn zeros(&self) -> impl Iterator<Item = (&DiscPoint, u32)> {
        self.zeros.iter().map(|(p, &m)| (p, m))
    }

    /// Largest zero modulus, 0 for the unit.
    pub fn max_zero_modulus(&self) -> f64 {
        self.zeros
            .keys()
            .map(|p| p.modulus())
            .fold(0.0, f64::max)
    }

    /// Evaluates `∏ b_α(z)^m` at `z`. Poles sit at `1/ᾱ` outside the closed
    /// disc, so every `|z| ≤ 1` is admissible.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(1.0, 0.0);
        for (p, m) in self.zeros() {
            let a = p.as_complex();
            let factor = (z - a) / (Complex64::new(1.0, 0.0) - a.conj() * z);
            acc *= factor.powu(m);
        }
        acc
    }

    /// Multiplicity of `p` as a zero, 0 when absent.
    pub fn order(&self, p: &DiscPoint) -> u32 {
        self.zeros.get(p).copied().unwrap_or(0)
    }

    /// True iff every prime of `self` divides `other` with at least the
    /// same multiplicity.
    pub fn divides(&self, other: &Self) -> bool {
        self.zeros().all(|(p, m)| other.order(p) >= m)
    }

    /// Greatest common inner factor: per-prime minimum of multiplicities.
    pub fn gcd(&self, other: &Self) -> Self {
        let zeros = self
            .zeros()
            .filter_map(|(p, m)| {
                let n = other.order(p);
                (n > 0).then(|| (*p, m.min(n)))
            })
            .collect();
        Self { zeros }
    }

    /// Least common multiple: per-prime maximum of multiplicities.
    pub fn lcm(&self, other: &Self) -> Self {
        let mut zeros = self.zeros.clone();
        for (p, m) in other.zeros() {
            let e = zeros.entry(*p).or_insert(0);
            *e = (*e).max(m);
        }
        Self { zeros }
    }

    /// Product: per-prime sum of multiplicities.
    pub fn mul(&self, other: &Self) -> Self {
        let mut zeros = self.zeros.clone();
        for (p, m) in other.zeros() {
            *zeros.entry(*p).or_insert(0) += m;
        }
        Self { zeros }
    }

    /// Exact division, failing with [`Error::NotDivisible`] unless
    /// `divisor` divides `self`.
    pub fn quotient(&self, divisor: &Self) -> Result<Self> {
        if !divisor.divides(self) {
            return Err(Error::NotDivisible {
                dividend: self.clone(),
                divisor: divisor.clone(),
            });
        }
        let zeros = self
            .zeros()
            .filter_map(|(p, m)| {
                let rem = m - divisor.order(p);
                (rem > 0).then_some((*p, rem))
            })
            .collect();
        Ok(Self { zeros })
    }

    /// The relatively prime factorization `{b_α^{l_α}}` over distinct zeros.
    pub fn prime_power_factors(&self) -> Vec<PrimePower> {
        self.zeros()
            .map(|(p, m)| PrimePower {
                base: *p,
                exponent: m,
            })
            .collect()
    }

    /// Zeros listed with repetition, in key order; length equals the degree.
    pub fn zeros_with_repetition(&self) -> Vec<DiscPoint> {
        let mut out = Vec::with_capacity(self.degree() as usize);
        for (p, m) in self.zeros() {
            out.extend(std::iter::repeat_n(*p, m as usize));
        }
        out
    }
}

impl fmt::Display for BlaschkeProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (p, m) in self.zeros() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if m == 1 {
                write!(f, "b({p})")?;
            } else {
                write!(f, "b({p})^{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dp(re: f64, im: f64) -> DiscPoint {
        DiscPoint::new(re, im).unwrap()
    }

    #[test]
    fn disc_point_rejects_boundary_and_outside() {
        assert!(DiscPoint::new(1.0, 0.0).is_err());
        assert!(DiscPoint::new(0.8, 0.7).is_err());
        assert!(DiscPoint::new(f64::NAN, 0.0).is_err());
        assert!(DiscPoint::new(0.99, 0.0).is_ok());
    }

    #[test]
    fn disc_point_equality_is_bitwise() {
        let a = dp(0.1 + 0.2, 0.0);
        let b = dp(0.3, 0.0);
        // 0.1 + 0.2 != 0.3 in binary floating point.
        assert_ne!(a, b);
        assert_eq!(a, dp(0.1 + 0.2, 0.0));
    }

    #[test]
    fn evaluate_unit_is_one() {
        let z = Complex64::new(0.3, 0.0);
        assert_eq!(BlaschkeProduct::one().evaluate(z), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn evaluate_vanishes_at_zero_of_factor() {
        let a = dp(0.4, -0.2);
        let phi = BlaschkeProduct::factor(a);
        assert!(phi.evaluate(a.as_complex()).norm() < 1e-15);
    }

    #[test]
    fn evaluate_squared_factor_at_origin() {
        // b_{0.5}(0) = (0 - 0.5)/(1 - 0) = -0.5, so the square is 0.25.
        let phi = BlaschkeProduct::prime_power(dp(0.5, 0.0), 2);
        let v = phi.evaluate(Complex64::new(0.0, 0.0));
        assert!((v - Complex64::new(0.25, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn divides_componentwise() {
        let a = dp(0.5, 0.0);
        let c = dp(-0.3, 0.1);
        let unit = BlaschkeProduct::one();
        let phi = BlaschkeProduct::from_zeros([(a, 2), (c, 1)]);
        let psi = BlaschkeProduct::from_zeros([(a, 1), (c, 1)]);
        assert!(unit.divides(&phi));
        assert!(psi.divides(&phi));
        assert!(!BlaschkeProduct::prime_power(a, 2)
            .divides(&BlaschkeProduct::from_zeros([(a, 1), (c, 5)])));
    }

    #[test]
    fn gcd_lcm_per_prime_min_max() {
        let a = dp(0.5, 0.0);
        let c = dp(-0.3, 0.1);
        let phi = BlaschkeProduct::from_zeros([(a, 2), (c, 1)]);
        let psi = BlaschkeProduct::from_zeros([(a, 1), (c, 2)]);
        let g = phi.gcd(&psi);
        assert_eq!(g, BlaschkeProduct::from_zeros([(a, 1), (c, 1)]));
        assert_eq!(phi.lcm(&BlaschkeProduct::one()), phi);
        assert_eq!(phi.gcd(&phi), phi);
        // gcd * lcm has the same per-prime sum as phi * psi
        let left = g.mul(&phi.lcm(&psi));
        let right = phi.mul(&psi);
        assert_eq!(left, right);
    }

    #[test]
    fn quotient_subtracts_multiplicities() {
        let a = dp(0.5, 0.0);
        let c = dp(-0.3, 0.1);
        let phi = BlaschkeProduct::from_zeros([(a, 3), (c, 1)]);
        assert_eq!(phi.quotient(&BlaschkeProduct::one()).unwrap(), phi);
        assert_eq!(
            phi.quotient(&BlaschkeProduct::prime_power(a, 1)).unwrap(),
            BlaschkeProduct::from_zeros([(a, 2), (c, 1)])
        );
        let err = BlaschkeProduct::factor(a)
            .quotient(&BlaschkeProduct::factor(c))
            .unwrap_err();
        assert!(matches!(err, Error::NotDivisible { .. }));
    }

    #[test]
    fn prime_power_factors_round_trip() {
        let a = dp(0.5, 0.0);
        let c = dp(-0.3, 0.1);
        assert!(BlaschkeProduct::one().prime_power_factors().is_empty());
        let phi = BlaschkeProduct::from_zeros([(a, 2), (c, 1)]);
        let factors = phi.prime_power_factors();
        assert_eq!(factors.len(), 2);
        let product = factors.iter().fold(BlaschkeProduct::one(), |acc, f| {
            acc.mul(&BlaschkeProduct::prime_power(f.base, f.exponent))
        });
        assert_eq!(product, phi);
    }

    #[test]
    fn order_reads_multiplicity() {
        let a = dp(0.5, 0.0);
        let c = dp(-0.3, 0.1);
        let phi = BlaschkeProduct::prime_power(a, 3);
        assert_eq!(BlaschkeProduct::one().order(&a), 0);
        assert_eq!(phi.order(&a), 3);
        assert_eq!(phi.order(&c), 0);
    }

    #[test]
    fn boundary_modulus_is_one() {
        let phi = BlaschkeProduct::from_zeros([(dp(0.5, 0.2), 2), (dp(-0.1, -0.6), 1)]);
        for k in 0..16 {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / 16.0;
            let z = Complex64::new(theta.cos(), theta.sin());
            assert!((phi.evaluate(z).norm() - 1.0).abs() < 1e-12);
        }
    }
}
