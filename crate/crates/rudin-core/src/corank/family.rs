//! Rudin families and their prime-tuple combinatorics.
//!
//! A family is `n` bi-infinite sequences of Blaschke products. We store it
//! per (variable, prime) as a multiplicity profile `k ↦ ord(φ_{i,k}, b_p)`
//! that is constant outside a shared finite window. Everything downstream —
//! the tuple classes Λ, zero sets, order tuples — is then finitely
//! computable while staying faithful on each tail.

use std::collections::BTreeSet;
use std::fmt;

use crate::blaschke::{BlaschkeProduct, DiscPoint};
use crate::{Error, Result};

/// The shared finite index window `[k_min, k_max]` of a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub k_min: i64,
    pub k_max: i64,
}

impl Window {
    pub fn new(k_min: i64, k_max: i64) -> Result<Self> {
        if k_min > k_max {
            return Err(Error::InvalidFamily(format!(
                "window [{k_min}, {k_max}] is empty"
            )));
        }
        Ok(Self { k_min, k_max })
    }

    pub fn len(&self) -> usize {
        (self.k_max - self.k_min + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false // constructor rejects k_min > k_max
    }

    pub fn contains(&self, k: i64) -> bool {
        self.k_min <= k && k <= self.k_max
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.k_min..=self.k_max
    }
}

/// One prime's multiplicity along a sequence: `ord(φ_{i,k}, b_p)` as a
/// function of `k`, constant left of the window and right of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityProfile {
    left_tail: u32,
    window: Vec<u32>,
    right_tail: u32,
}

impl MultiplicityProfile {
    pub fn new(left_tail: u32, window: Vec<u32>, right_tail: u32) -> Self {
        Self {
            left_tail,
            window,
            right_tail,
        }
    }

    /// Profile that is `value` at every index.
    pub fn constant(value: u32, window_len: usize) -> Self {
        Self::new(value, vec![value; window_len], value)
    }

    pub fn left_tail(&self) -> u32 {
        self.left_tail
    }

    pub fn right_tail(&self) -> u32 {
        self.right_tail
    }

    pub fn window(&self) -> &[u32] {
        &self.window
    }

    /// Value at `k` relative to the window `w` (tails outside).
    pub fn at(&self, k: i64, w: Window) -> u32 {
        if k < w.k_min {
            self.left_tail
        } else if k > w.k_max {
            self.right_tail
        } else {
            self.window[(k - w.k_min) as usize]
        }
    }

    pub fn is_identically_zero(&self) -> bool {
        self.left_tail == 0 && self.right_tail == 0 && self.window.iter().all(|&v| v == 0)
    }

    pub fn max_value(&self) -> u32 {
        self.window
            .iter()
            .copied()
            .chain([self.left_tail, self.right_tail])
            .max()
            .unwrap_or(0)
    }
}

/// The family `Φ = (Φ_1, …, Φ_n)` in per-prime profile form.
#[derive(Debug, Clone, PartialEq)]
pub struct RudinFamily {
    window: Window,
    variables: Vec<Vec<(DiscPoint, MultiplicityProfile)>>,
}

impl RudinFamily {
    /// Validates and builds a family. Within each variable the primes must
    /// be pairwise distinct, every profile window must span the family
    /// window, and no profile may vanish identically (a prime that never
    /// occurs does not belong in the encoding).
    pub fn new(
        window: Window,
        variables: Vec<Vec<(DiscPoint, MultiplicityProfile)>>,
    ) -> Result<Self> {
        if variables.is_empty() {
            return Err(Error::InvalidFamily(
                "a family needs at least one variable".into(),
            ));
        }
        for (i, var) in variables.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for (p, prof) in var {
                if !seen.insert(*p) {
                    return Err(Error::InvalidFamily(format!(
                        "variable {i} lists the prime {p} twice"
                    )));
                }
                if prof.window.len() != window.len() {
                    return Err(Error::InvalidFamily(format!(
                        "variable {i}, prime {p}: profile window has {} entries, family window has {}",
                        prof.window.len(),
                        window.len()
                    )));
                }
                if prof.is_identically_zero() {
                    return Err(Error::InvalidFamily(format!(
                        "variable {i}, prime {p}: profile is identically zero"
                    )));
                }
            }
        }
        Ok(Self { window, variables })
    }

    pub fn n(&self) -> usize {
        self.variables.len()
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn variable(&self, i: usize) -> &[(DiscPoint, MultiplicityProfile)] {
        &self.variables[i]
    }

    pub fn primes(&self, i: usize) -> impl Iterator<Item = &DiscPoint> {
        self.variables[i].iter().map(|(p, _)| p)
    }

    pub fn profile(&self, i: usize, p: &DiscPoint) -> Option<&MultiplicityProfile> {
        self.variables[i]
            .iter()
            .find(|(q, _)| q == p)
            .map(|(_, prof)| prof)
    }

    /// `ord(φ_{i,k}, b_p)`; 0 for primes the variable does not list.
    pub fn ord(&self, i: usize, p: &DiscPoint, k: i64) -> u32 {
        self.profile(i, p)
            .map_or(0, |prof| prof.at(k, self.window))
    }

    /// Reconstructs the Blaschke product `φ_{i,k}` from the profiles.
    pub fn phi(&self, i: usize, k: i64) -> BlaschkeProduct {
        BlaschkeProduct::from_zeros(
            self.variables[i]
                .iter()
                .map(|(p, prof)| (*p, prof.at(k, self.window))),
        )
    }
}

/// A class of Λ: one prime per variable, jointly active at some index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeTuple {
    primes: Vec<DiscPoint>,
}

impl PrimeTuple {
    pub fn new(primes: Vec<DiscPoint>) -> Self {
        Self { primes }
    }

    pub fn primes(&self) -> &[DiscPoint] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }
}

impl fmt::Display for PrimeTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.primes.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Order tuple `(l_1, …, l_n)`, every entry at least 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderTuple {
    l: Vec<u32>,
}

impl OrderTuple {
    pub fn new(l: Vec<u32>) -> Result<Self> {
        if l.contains(&0) {
            return Err(Error::ZeroOrderEntry);
        }
        Ok(Self { l })
    }

    pub fn entries(&self) -> &[u32] {
        &self.l
    }

    pub fn len(&self) -> usize {
        self.l.len()
    }

    pub fn is_empty(&self) -> bool {
        self.l.is_empty()
    }

    /// Componentwise `self ≥ other`.
    pub fn dominates(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.l.iter().zip(&other.l).all(|(a, b)| a >= b)
    }
}

impl fmt::Display for OrderTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.l.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// The zero set `Z(ξ_1,…,ξ_n)` of a tuple: window members listed
/// explicitly, tail regions (where membership is all-or-nothing because
/// profiles are constant there) as flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroSet {
    pub left_unbounded: bool,
    /// Members of `Z` inside the window, ascending.
    pub indices: Vec<i64>,
    pub right_unbounded: bool,
}

impl ZeroSet {
    pub fn is_bounded(&self) -> bool {
        !self.left_unbounded && !self.right_unbounded
    }
}

/// All tuple classes of Λ: one prime per variable such that every
/// coordinate's profile is positive at some common index (tails included).
pub fn lambda_classes(fam: &RudinFamily) -> Vec<PrimeTuple> {
    let n = fam.n();
    let counts: Vec<usize> = (0..n).map(|i| fam.variable(i).len()).collect();
    if counts.contains(&0) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; n];
    loop {
        let tuple = PrimeTuple::new(
            (0..n)
                .map(|i| fam.variable(i)[choice[i]].0)
                .collect::<Vec<_>>(),
        );
        if jointly_active(fam, &tuple) {
            out.push(tuple);
        }
        // odometer over the per-variable prime lists
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < counts[i] {
                break;
            }
            choice[i] = 0;
        }
    }
}

fn jointly_active(fam: &RudinFamily, t: &PrimeTuple) -> bool {
    let w = fam.window();
    let profs: Vec<_> = t
        .primes()
        .iter()
        .enumerate()
        .map(|(i, p)| fam.profile(i, p))
        .collect();
    if profs.iter().any(|p| p.is_none()) {
        return false;
    }
    let profs: Vec<_> = profs.into_iter().map(|p| p.unwrap()).collect();
    if profs.iter().all(|p| p.left_tail() >= 1) || profs.iter().all(|p| p.right_tail() >= 1) {
        return true;
    }
    w.iter().any(|k| profs.iter().all(|p| p.at(k, w) >= 1))
}

/// The zero set `Z = {k : b_{α_i} | φ_{i,k} for all i}` of a tuple.
pub fn zero_set(fam: &RudinFamily, t: &PrimeTuple) -> Result<ZeroSet> {
    if t.len() != fam.n() {
        return Err(Error::ArityMismatch {
            expected: fam.n(),
            found: t.len(),
        });
    }
    let w = fam.window();
    let left_unbounded = t
        .primes()
        .iter()
        .enumerate()
        .all(|(i, p)| fam.ord(i, p, w.k_min - 1) >= 1);
    let right_unbounded = t
        .primes()
        .iter()
        .enumerate()
        .all(|(i, p)| fam.ord(i, p, w.k_max + 1) >= 1);
    let indices: Vec<i64> = w
        .iter()
        .filter(|&k| {
            t.primes()
                .iter()
                .enumerate()
                .all(|(i, p)| fam.ord(i, p, k) >= 1)
        })
        .collect();
    if !left_unbounded && !right_unbounded && indices.is_empty() {
        return Err(Error::TupleNotInLambda);
    }
    Ok(ZeroSet {
        left_unbounded,
        indices,
        right_unbounded,
    })
}

/// Order tuples `(l_{1,k},…,l_{n,k})` over the zero set, in `k` order.
/// Each infinite tail of `Z` carries one constant tuple and contributes it
/// once. Duplicates across distinct `k` are kept; the Pareto filter
/// collapses them.
pub fn order_tuples(fam: &RudinFamily, t: &PrimeTuple) -> Result<Vec<OrderTuple>> {
    let zs = zero_set(fam, t)?;
    let w = fam.window();
    let tuple_at = |k: i64| -> OrderTuple {
        OrderTuple::new(
            t.primes()
                .iter()
                .enumerate()
                .map(|(i, p)| fam.ord(i, p, k))
                .collect(),
        )
        .expect("zero-set membership makes every order positive")
    };
    let mut out = Vec::new();
    if zs.left_unbounded {
        out.push(tuple_at(w.k_min - 1));
    }
    out.extend(zs.indices.iter().map(|&k| tuple_at(k)));
    if zs.right_unbounded {
        out.push(tuple_at(w.k_max + 1));
    }
    Ok(out)
}
