//! Pareto-maximal antichains of order tuples.

use std::fmt;

use super::family::OrderTuple;
use crate::{Error, Result};

/// The minimal representation `Ã`: pairwise incomparable order tuples.
///
/// For every kept pair there are coordinates `i ≠ j` with `l_i < l_i'` and
/// `l_j > l_j'`, and every input tuple is dominated by some kept tuple, so
/// the join of the corresponding modules is unchanged. [`pareto_maximal`]
/// is the only constructor that enforces this; reports produced by the
/// closed-form monotone route build their sets directly from the index
/// formula and are checked against this invariant in debug builds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalRep {
    tuples: Vec<OrderTuple>,
}

impl MinimalRep {
    pub(crate) fn from_antichain(mut tuples: Vec<OrderTuple>) -> Self {
        tuples.sort();
        tuples.dedup();
        let rep = Self { tuples };
        debug_assert!(rep.is_antichain());
        rep
    }

    pub fn tuples(&self) -> &[OrderTuple] {
        &self.tuples
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn contains(&self, t: &OrderTuple) -> bool {
        self.tuples.binary_search(t).is_ok()
    }

    /// True iff no member dominates another.
    pub fn is_antichain(&self) -> bool {
        self.tuples.iter().enumerate().all(|(i, a)| {
            self.tuples
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !(a.dominates(b) || b.dominates(a)))
        })
    }
}

impl fmt::Display for MinimalRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, t) in self.tuples.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "}}")
    }
}

/// Filters a nonempty collection of order tuples down to its maximal
/// elements under componentwise order.
///
/// Duplicates collapse first (equal tuples describe equal modules). The
/// scan runs in lexicographically descending order: a later tuple can then
/// never dominate an already-kept one, so a single containment test per
/// tuple against the kept set suffices.
pub fn pareto_maximal(tuples: &[OrderTuple]) -> Result<MinimalRep> {
    let first = tuples.first().ok_or(Error::EmptyInput)?;
    let arity = first.len();
    if let Some(bad) = tuples.iter().find(|t| t.len() != arity) {
        return Err(Error::ArityMismatch {
            expected: arity,
            found: bad.len(),
        });
    }
    let mut sorted: Vec<&OrderTuple> = tuples.iter().collect();
    sorted.sort();
    sorted.dedup();
    sorted.reverse();
    let mut kept: Vec<OrderTuple> = Vec::new();
    for t in sorted {
        if !kept.iter().any(|m| m.dominates(t)) {
            kept.push(t.clone());
        }
    }
    Ok(MinimalRep::from_antichain(kept))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ot(l: &[u32]) -> OrderTuple {
        OrderTuple::new(l.to_vec()).unwrap()
    }

    #[test]
    fn keeps_incomparable_pair() {
        let rep = pareto_maximal(&[ot(&[2, 1]), ot(&[1, 1]), ot(&[1, 2])]).unwrap();
        assert_eq!(rep.tuples(), &[ot(&[1, 2]), ot(&[2, 1])]);
        assert_eq!(rep.len(), 2);
    }

    #[test]
    fn dominated_tuple_drops() {
        let rep = pareto_maximal(&[ot(&[1, 1]), ot(&[2, 2])]).unwrap();
        assert_eq!(rep.tuples(), &[ot(&[2, 2])]);
    }

    #[test]
    fn duplicates_collapse() {
        let rep = pareto_maximal(&[ot(&[1, 2]), ot(&[1, 2]), ot(&[1, 2])]).unwrap();
        assert_eq!(rep.len(), 1);
    }

    #[test]
    fn empty_input_rejected() {
        assert!(matches!(pareto_maximal(&[]), Err(Error::EmptyInput)));
    }

    #[test]
    fn ragged_arity_rejected() {
        let err = pareto_maximal(&[ot(&[1, 2]), ot(&[1, 2, 3])]).unwrap_err();
        assert!(matches!(
            err,
            Error::ArityMismatch {
                expected: 2,
                found: 3
            }
        ));
    }

    #[test]
    fn matches_quadratic_filter_in_three_coordinates() {
        // deterministic pseudo-random tuples; the library scan must agree
        // with the O(k²) definition applied literally
        let mut state = 0x2545F4914F6CDD1Du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..50 {
            let count = (next() % 20 + 1) as usize;
            let tuples: Vec<OrderTuple> = (0..count)
                .map(|_| ot(&[(next() % 4 + 1) as u32, (next() % 4 + 1) as u32, (next() % 4 + 1) as u32]))
                .collect();
            let rep = pareto_maximal(&tuples).unwrap();
            let mut expect: Vec<OrderTuple> = tuples
                .iter()
                .filter(|t| {
                    tuples
                        .iter()
                        .all(|s| !(s.dominates(t) && s.entries() != t.entries()))
                })
                .cloned()
                .collect();
            expect.sort();
            expect.dedup();
            assert_eq!(rep.tuples(), expect.as_slice());
            assert!(rep.is_antichain());
            for t in &tuples {
                assert!(rep.tuples().iter().any(|m| m.dominates(t)));
            }
        }
    }
}
