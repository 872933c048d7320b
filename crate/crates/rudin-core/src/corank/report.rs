//! Co-rank reports and the general (antichain) computation route.

use super::family::{lambda_classes, order_tuples, zero_set, PrimeTuple, RudinFamily, ZeroSet};
use super::pareto::{pareto_maximal, MinimalRep};

/// Which formula produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Per-tuple Pareto antichain, maximized over Λ.
    General,
    /// Closed-form index count for increasing/decreasing partitions.
    Monotone,
    /// The earlier published two-variable formula, reproduced verbatim.
    /// It undercounts on repeated-point families; it is here so the
    /// discrepancy can be demonstrated, not for use.
    IzuchiPublished,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::General => "general",
            Method::Monotone => "monotone",
            Method::IzuchiPublished => "izuchi_published",
        }
    }
}

/// Method-specific evidence attached to a per-tuple result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MethodDetail {
    General,
    Monotone {
        r1: i64,
        r2: i64,
        /// Indices where some increasing coordinate gains the prime.
        i_set: Vec<i64>,
        /// The chosen minimal index set `Z̃`.
        z_tilde: Vec<i64>,
    },
    IzuchiPublished {
        /// Indices where the decreasing side drops and the increasing side
        /// gains the pair simultaneously — the published formula's count.
        matches: Vec<i64>,
    },
}

/// Result for a single prime tuple.
#[derive(Debug, Clone, PartialEq)]
pub struct TupleReport {
    pub tuple: PrimeTuple,
    pub zero_set: ZeroSet,
    pub minimal_rep: MinimalRep,
    /// The method's count for this tuple. Equals `minimal_rep.len()` for
    /// the general and monotone routes; the published formula counts
    /// matching indices instead.
    pub count: usize,
    pub detail: MethodDetail,
}

/// Full co-rank report: per-tuple breakdown and the maximum.
#[derive(Debug, Clone, PartialEq)]
pub struct CorankReport {
    pub method: Method,
    /// `max` of the per-tuple counts, 0 when Λ is empty.
    pub overall: usize,
    pub per_tuple: Vec<TupleReport>,
    /// True when some zero set extends past the window on either side;
    /// the counts are still exact (tails are constant), but the printed
    /// index lists are clipped to the window.
    pub truncated_window: bool,
}

impl CorankReport {
    pub(crate) fn from_tuples(method: Method, per_tuple: Vec<TupleReport>) -> Self {
        let overall = per_tuple.iter().map(|t| t.count).max().unwrap_or(0);
        let truncated_window = per_tuple.iter().any(|t| !t.zero_set.is_bounded());
        Self {
            method,
            overall,
            per_tuple,
            truncated_window,
        }
    }

    /// The tuple reports whose count attains the overall maximum.
    pub fn witnesses(&self) -> impl Iterator<Item = &TupleReport> {
        let overall = self.overall;
        self.per_tuple.iter().filter(move |t| t.count == overall)
    }
}

/// Co-rank of the family by the general route: for every tuple class of Λ,
/// the count is the size of the Pareto-maximal antichain of its order
/// tuples, and the co-rank is the maximum over classes.
pub fn corank_general(fam: &RudinFamily) -> CorankReport {
    let mut per_tuple = Vec::new();
    for tuple in lambda_classes(fam) {
        let zs = zero_set(fam, &tuple).expect("tuple comes from lambda_classes");
        let tuples = order_tuples(fam, &tuple).expect("tuple comes from lambda_classes");
        let rep = pareto_maximal(&tuples).expect("zero set is nonempty");
        per_tuple.push(TupleReport {
            tuple,
            zero_set: zs,
            count: rep.len(),
            minimal_rep: rep,
            detail: MethodDetail::General,
        });
    }
    CorankReport::from_tuples(Method::General, per_tuple)
}
