//! Built-in reference families with hand-checked co-ranks. These are the
//! instances the CLI's `paper-examples` command replays and the
//! acceptance tests pin down; everything here is deterministic.

use crate::blaschke::DiscPoint;
use crate::corank::{MultiplicityProfile, RudinFamily, Window};

/// A family bundled with the variable partition its monotone structure
/// supports (`increasing` lists the variables whose orders grow with the
/// index; the rest shrink).
#[derive(Debug, Clone)]
pub struct ReferenceFamily {
    pub name: &'static str,
    pub family: RudinFamily,
    /// Variables (0-indexed) on the increasing side, usable as the `A`
    /// argument of the monotone route. Empty when the family is not
    /// structurally monotone.
    pub increasing: Vec<usize>,
}

fn pt(re: f64, im: f64) -> DiscPoint {
    DiscPoint::new(re, im).unwrap()
}

/// The repeated-points family on which the published two-variable count
/// goes wrong: the point `a` recurs at sequence indices 0 and 3 on the
/// shrinking side, the point `c` at indices 0 and 2 on the growing side.
/// True co-rank 2; the published formula reports 1.
///
/// Encoded on the window `[-1, 4]`. Every other point of the two
/// underlying products is a distinct throwaway prime: those can never
/// contribute more than one order tuple, so the window encoding is
/// faithful.
pub struct RepeatedPoints {
    pub reference: ReferenceFamily,
    /// The recurring prime on the shrinking side (variable 0).
    pub a: DiscPoint,
    /// The recurring prime on the growing side (variable 1).
    pub c: DiscPoint,
}

pub fn repeated_points_counterexample() -> RepeatedPoints {
    let window = Window::new(-1, 4).unwrap();
    let a = pt(0.5, 0.0);
    let c = pt(-0.4, 0.2);

    // shrinking side: order of p in φ_m counts occurrences at indices ≥ m
    let mut var0 = vec![(a, MultiplicityProfile::new(2, vec![2, 2, 1, 1, 1, 0], 0))];
    // throwaway occurrences at the remaining indices −1, 1, 2, 4
    for (j, point) in [
        (-1, pt(0.25, 0.55)),
        (1, pt(-0.62, -0.1)),
        (2, pt(0.1, -0.7)),
        (4, pt(0.33, 0.42)),
    ] {
        let values = window.iter().map(|k| u32::from(k <= j)).collect();
        var0.push((point, MultiplicityProfile::new(1, values, 0)));
    }

    // growing side: order of p in ψ_m counts occurrences at indices ≤ m
    let mut var1 = vec![(c, MultiplicityProfile::new(0, vec![0, 1, 1, 2, 2, 2], 2))];
    for (j, point) in [
        (-1, pt(-0.18, 0.64)),
        (1, pt(0.71, 0.2)),
        (3, pt(-0.45, -0.5)),
        (4, pt(0.05, 0.31)),
    ] {
        let values = window.iter().map(|k| u32::from(k >= j)).collect();
        var1.push((point, MultiplicityProfile::new(0, values, 1)));
    }

    let family = RudinFamily::new(window, vec![var0, var1]).unwrap();
    RepeatedPoints {
        reference: ReferenceFamily {
            name: "repeated-points counterexample",
            family,
            increasing: vec![1],
        },
        a,
        c,
    }
}

/// All points distinct, variable 0 shrinking and variable 1 growing:
/// at every sequence index each side gains or loses one simple prime.
/// Every jointly active pair meets along an interval with all order
/// tuples equal to (1,1), so the co-rank is 1.
///
/// Encoded on the window `[-3, 3]` with one prime per index per side.
pub fn distinct_points_example() -> ReferenceFamily {
    let window = Window::new(-3, 3).unwrap();
    let build = |radius: f64, phase: f64, growing: bool| {
        window
            .iter()
            .enumerate()
            .map(|(slot, j)| {
                let angle = phase + 0.7 * slot as f64;
                let point = pt(radius * angle.cos(), radius * angle.sin());
                let values: Vec<u32> = window
                    .iter()
                    .map(|k| u32::from(if growing { k >= j } else { k <= j }))
                    .collect();
                let profile = if growing {
                    MultiplicityProfile::new(0, values, 1)
                } else {
                    MultiplicityProfile::new(1, values, 0)
                };
                (point, profile)
            })
            .collect::<Vec<_>>()
    };
    let family = RudinFamily::new(window, vec![build(0.55, 0.13, false), build(0.3, 0.41, true)])
        .unwrap();
    ReferenceFamily {
        name: "distinct-points example",
        family,
        increasing: vec![1],
    }
}

/// Window truncations of a family whose orders climb without bound in
/// both directions — the infinite co-rank phenomenon the finite encoding
/// deliberately cannot represent. The `[-w, w]` truncation clamps the
/// profiles at the window edges, carries order tuples `(6−k, 6+k)` for
/// `k` in the window, and so has co-rank `2w + 1`; reports on it flag
/// the truncated window.
pub fn growing_window_family(w: i64) -> RudinFamily {
    assert!((1..=5).contains(&w), "calibrated for windows [-1,1]..[-5,5]");
    let window = Window::new(-w, w).unwrap();
    let down: Vec<u32> = window.iter().map(|k| (6 - k) as u32).collect();
    let up: Vec<u32> = window.iter().map(|k| (6 + k) as u32).collect();
    let var0 = vec![(
        pt(0.45, 0.15),
        MultiplicityProfile::new((6 + w) as u32, down, (6 - w) as u32),
    )];
    let var1 = vec![(
        pt(-0.2, -0.35),
        MultiplicityProfile::new((6 - w) as u32, up, (6 + w) as u32),
    )];
    RudinFamily::new(window, vec![var0, var1]).unwrap()
}

/// Two variables whose primes are never active at a common index: the
/// union defining the module is empty of joint tuples and the co-rank
/// is 0.
pub fn empty_overlap_family() -> RudinFamily {
    let window = Window::new(0, 1).unwrap();
    let var0 = vec![(pt(0.5, 0.0), MultiplicityProfile::new(1, vec![1, 0], 0))];
    let var1 = vec![(pt(0.0, 0.5), MultiplicityProfile::new(0, vec![0, 1], 1))];
    RudinFamily::new(window, vec![var0, var1]).unwrap()
}
