//! On-disk co-rank report: the JSON schema written by `rudin corank --json`.

use rudin_core::{CorankReport, MethodDetail};
use serde::{Deserialize, Serialize};

/// Root object of a report file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct CorankReportFile {
    /// `"general"`, `"monotone"`, or `"izuchi_published"`.
    pub method: String,
    /// The overall co-rank: maximum per-tuple count over Λ.
    pub corank: usize,
    pub tuples: Vec<TupleReportFile>,
    /// True when some zero set extends past the window; printed index
    /// lists are then clipped even though the counts stay exact.
    pub truncated_window: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct TupleReportFile {
    pub primes: Vec<PointFile>,
    pub zero_set: ZeroSetFile,
    /// The Pareto antichain `Ã`, one inner array per kept order tuple.
    pub minimal_rep: Vec<Vec<u32>>,
    pub count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monotone: Option<MonotoneDetailFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub published_matches: Option<Vec<i64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct PointFile {
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct ZeroSetFile {
    pub left_unbounded: bool,
    pub indices: Vec<i64>,
    pub right_unbounded: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct MonotoneDetailFile {
    pub r1: i64,
    pub r2: i64,
    pub i_set: Vec<i64>,
    pub z_tilde: Vec<i64>,
}

impl CorankReportFile {
    pub fn from_report(report: &CorankReport) -> Self {
        let tuples = report
            .per_tuple
            .iter()
            .map(|t| {
                let (monotone, published_matches) = match &t.detail {
                    MethodDetail::General => (None, None),
                    MethodDetail::Monotone {
                        r1,
                        r2,
                        i_set,
                        z_tilde,
                    } => (
                        Some(MonotoneDetailFile {
                            r1: *r1,
                            r2: *r2,
                            i_set: i_set.clone(),
                            z_tilde: z_tilde.clone(),
                        }),
                        None,
                    ),
                    MethodDetail::IzuchiPublished { matches } => (None, Some(matches.clone())),
                };
                TupleReportFile {
                    primes: t
                        .tuple
                        .primes()
                        .iter()
                        .map(|p| PointFile {
                            re: p.re(),
                            im: p.im(),
                        })
                        .collect(),
                    zero_set: ZeroSetFile {
                        left_unbounded: t.zero_set.left_unbounded,
                        indices: t.zero_set.indices.clone(),
                        right_unbounded: t.zero_set.right_unbounded,
                    },
                    minimal_rep: t
                        .minimal_rep
                        .tuples()
                        .iter()
                        .map(|ot| ot.entries().to_vec())
                        .collect(),
                    count: t.count,
                    monotone,
                    published_matches,
                }
            })
            .collect();
        CorankReportFile {
            method: report.method.as_str().to_string(),
            corank: report.overall,
            tuples,
            truncated_window: report.truncated_window,
        }
    }
}
