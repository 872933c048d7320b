//! The closed-form co-rank route for mixed monotone families, and the
//! published two-variable formula it corrects.
//!
//! For a partition of the variables into an increasing set `A` and a
//! decreasing set `B` (with no common inner factor, i.e. zero tails on the
//! appropriate side), the zero set of each tuple is an interval `[r₁, r₂]`
//! and the minimal representation can be read off successive quotients:
//! gains `ζ_{i,k} = φ_{i,k}/φ_{i,k−1}` on the `A` side pick the candidate
//! indices `I`, and drops `η_{i,k_j} = φ_{i,k_j}/φ_{i,k_{j+1}}` on the `B`
//! side decide which candidates below the last one survive.
//!
//! This file never calls the Pareto filter to produce its counts; the two
//! routes stay independent so that their agreement is evidence.

use std::collections::BTreeSet;
use std::fmt;

use super::family::{lambda_classes, OrderTuple, RudinFamily, ZeroSet};
use super::pareto::MinimalRep;
use super::report::{CorankReport, Method, MethodDetail, TupleReport};
use crate::blaschke::DiscPoint;
use crate::{Error, Result};

/// Where and how a profile breaks the declared monotonicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneViolation {
    pub variable: usize,
    pub prime: DiscPoint,
    pub detail: MonotoneDetail,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonotoneDetail {
    /// Declared increasing, but the multiplicity drops entering index `k`.
    DropsAt { k: i64 },
    /// Declared decreasing, but the multiplicity gains entering index `k`.
    GainsAt { k: i64 },
    /// Increasing variables must start from nothing; a positive left tail
    /// is a common inner factor of the whole sequence.
    LeftTailNonzero { value: u32 },
    /// Decreasing variables must end at nothing, for the same reason.
    RightTailNonzero { value: u32 },
}

impl fmt::Display for MonotoneViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "variable {}, prime {}: ", self.variable, self.prime)?;
        match &self.detail {
            MonotoneDetail::DropsAt { k } => write!(f, "multiplicity drops entering k = {k}"),
            MonotoneDetail::GainsAt { k } => write!(f, "multiplicity gains entering k = {k}"),
            MonotoneDetail::LeftTailNonzero { value } => {
                write!(f, "left tail is {value}, so a common factor persists at -∞")
            }
            MonotoneDetail::RightTailNonzero { value } => {
                write!(f, "right tail is {value}, so a common factor persists at +∞")
            }
        }
    }
}

fn check_partition(fam: &RudinFamily, a: &[usize]) -> Result<BTreeSet<usize>> {
    let n = fam.n();
    let set: BTreeSet<usize> = a.iter().copied().collect();
    if set.len() != a.len() {
        return Err(Error::BadVariablePartition(
            "duplicate variable index".into(),
        ));
    }
    if let Some(&bad) = set.iter().find(|&&i| i >= n) {
        return Err(Error::BadVariablePartition(format!(
            "variable index {bad} out of range for {n} variables"
        )));
    }
    if set.is_empty() || set.len() == n {
        return Err(Error::BadVariablePartition(format!(
            "need a proper non-empty subset of 0..{n}, got {} of {n} variables",
            set.len()
        )));
    }
    Ok(set)
}

/// Checks that the family is increasing on `a` (0-based variable indices)
/// and decreasing on the complement, with vanishing tails on the matching
/// sides. Returns all violations; an empty list means the closed-form
/// route applies.
pub fn validate_monotone(fam: &RudinFamily, a: &[usize]) -> Result<Vec<MonotoneViolation>> {
    let a_set = check_partition(fam, a)?;
    let w = fam.window();
    let mut violations = Vec::new();
    for i in 0..fam.n() {
        let increasing = a_set.contains(&i);
        for (p, prof) in fam.variable(i) {
            let mut report = |detail| {
                violations.push(MonotoneViolation {
                    variable: i,
                    prime: *p,
                    detail,
                })
            };
            if increasing && prof.left_tail() != 0 {
                report(MonotoneDetail::LeftTailNonzero {
                    value: prof.left_tail(),
                });
            }
            if !increasing && prof.right_tail() != 0 {
                report(MonotoneDetail::RightTailNonzero {
                    value: prof.right_tail(),
                });
            }
            // step k-1 → k can only change inside [k_min, k_max + 1]
            for k in w.k_min..=w.k_max + 1 {
                let prev = prof.at(k - 1, w);
                let next = prof.at(k, w);
                if increasing && next < prev {
                    report(MonotoneDetail::DropsAt { k });
                } else if !increasing && next > prev {
                    report(MonotoneDetail::GainsAt { k });
                }
            }
        }
    }
    Ok(violations)
}

/// First index with positive multiplicity, for a validated increasing
/// profile (finite because the left tail vanishes and the profile is not
/// identically zero; falls into the right tail when the window is silent).
fn first_positive(fam: &RudinFamily, i: usize, p: &DiscPoint) -> i64 {
    let w = fam.window();
    for k in w.k_min..=w.k_max {
        if fam.ord(i, p, k) >= 1 {
            return k;
        }
    }
    w.k_max + 1
}

/// Last index with positive multiplicity, for a validated decreasing
/// profile.
fn last_positive(fam: &RudinFamily, i: usize, p: &DiscPoint) -> i64 {
    let w = fam.window();
    for k in (w.k_min..=w.k_max).rev() {
        if fam.ord(i, p, k) >= 1 {
            return k;
        }
    }
    w.k_min - 1
}

/// Co-rank via the closed-form route for a family that is increasing on
/// `a` and decreasing elsewhere. Must agree with [`corank_general`] on
/// every input it accepts.
///
/// [`corank_general`]: super::report::corank_general
pub fn corank_monotone(fam: &RudinFamily, a: &[usize]) -> Result<CorankReport> {
    let violations = validate_monotone(fam, a)?;
    if !violations.is_empty() {
        return Err(Error::NotMonotone(violations));
    }
    let a_set: BTreeSet<usize> = a.iter().copied().collect();
    let mut per_tuple = Vec::new();
    for tuple in lambda_classes(fam) {
        let r1 = tuple
            .primes()
            .iter()
            .enumerate()
            .filter(|(i, _)| a_set.contains(i))
            .map(|(i, p)| first_positive(fam, i, p))
            .max()
            .expect("A is nonempty");
        let r2 = tuple
            .primes()
            .iter()
            .enumerate()
            .filter(|(i, _)| !a_set.contains(i))
            .map(|(i, p)| last_positive(fam, i, p))
            .min()
            .expect("B is nonempty");
        debug_assert!(r1 <= r2, "lambda_classes only yields jointly active tuples");

        // gains on the increasing side pick the candidate indices
        let i_set: Vec<i64> = (r1..=r2)
            .filter(|&k| {
                tuple.primes().iter().enumerate().any(|(i, p)| {
                    a_set.contains(&i) && fam.ord(i, p, k) > fam.ord(i, p, k - 1)
                })
            })
            .collect();
        debug_assert_eq!(i_set.first(), Some(&r1));

        // the last candidate always stays; an earlier candidate stays iff
        // some decreasing coordinate drops before the next candidate
        let last = *i_set.last().expect("r1 is always a candidate");
        let mut z_tilde: Vec<i64> = i_set
            .windows(2)
            .filter(|pair| {
                let (kj, knext) = (pair[0], pair[1]);
                tuple.primes().iter().enumerate().any(|(i, p)| {
                    !a_set.contains(&i) && fam.ord(i, p, kj) > fam.ord(i, p, knext)
                })
            })
            .map(|pair| pair[0])
            .collect();
        z_tilde.push(last);

        let count = z_tilde.len();
        let rep = MinimalRep::from_antichain(
            z_tilde
                .iter()
                .map(|&k| {
                    OrderTuple::new(
                        tuple
                            .primes()
                            .iter()
                            .enumerate()
                            .map(|(i, p)| fam.ord(i, p, k))
                            .collect(),
                    )
                    .expect("Z̃ indices lie in the zero set")
                })
                .collect(),
        );
        debug_assert_eq!(rep.len(), count, "Z̃ indices carry distinct order tuples");
        per_tuple.push(TupleReport {
            tuple,
            zero_set: ZeroSet {
                left_unbounded: false,
                indices: (r1..=r2).collect(),
                right_unbounded: false,
            },
            minimal_rep: rep,
            count,
            detail: MethodDetail::Monotone {
                r1,
                r2,
                i_set,
                z_tilde,
            },
        });
    }
    Ok(CorankReport::from_tuples(Method::Monotone, per_tuple))
}

/// The earlier published two-variable formula, reproduced as stated: for
/// each prime pair `(α, β)`, count the indices where the decreasing first
/// variable drops `α` and the increasing second variable gains `β`
/// *simultaneously*, then take the maximum over pairs.
///
/// This formula is KNOWN to be incorrect — joint counting misses minimal
/// representations whose gains and drops happen at different indices. It
/// exists so the discrepancy against [`corank_general`] can be exhibited;
/// do not use its output for anything else.
///
/// [`corank_general`]: super::report::corank_general
pub fn izuchi_published_corank(fam: &RudinFamily) -> Result<CorankReport> {
    if fam.n() != 2 {
        return Err(Error::NotTwoVariables(fam.n()));
    }
    // the published convention: first variable decreasing, second increasing
    let violations = validate_monotone(fam, &[1])?;
    if !violations.is_empty() {
        return Err(Error::NotMonotone(violations));
    }
    let w = fam.window();
    let mut per_tuple = Vec::new();
    for tuple in lambda_classes(fam) {
        let [alpha, beta] = tuple.primes() else {
            unreachable!("two variables")
        };
        let matches: Vec<i64> = (w.k_min - 1..=w.k_max + 1)
            .filter(|&m| {
                fam.ord(0, alpha, m) > fam.ord(0, alpha, m + 1)
                    && fam.ord(1, beta, m) > fam.ord(1, beta, m - 1)
            })
            .collect();
        let count = matches.len();
        let claimed = matches
            .iter()
            .map(|&m| {
                OrderTuple::new(vec![fam.ord(0, alpha, m), fam.ord(1, beta, m)])
                    .expect("a joint drop and gain forces both orders positive")
            })
            .collect();
        let zs = super::family::zero_set(fam, &tuple).expect("tuple comes from lambda_classes");
        per_tuple.push(TupleReport {
            tuple,
            zero_set: zs,
            minimal_rep: MinimalRep::from_antichain(claimed),
            count,
            detail: MethodDetail::IzuchiPublished { matches },
        });
    }
    Ok(CorankReport::from_tuples(
        Method::IzuchiPublished,
        per_tuple,
    ))
}
