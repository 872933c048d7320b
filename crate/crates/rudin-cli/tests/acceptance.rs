//! Acceptance gate: the eight checks that pin down what this workspace
//! claims to compute. Each test prints a single `[PASS]`/`[FAIL]` line
//! (visible with `--nocapture`) with its runtime against a pinned budget.
//!
//! Tolerances in play are the library-wide ones: 1e-8 for operator
//! residuals and membership, 1e-10 relative for numeric ranks. Symbolic
//! results are asserted as exact integers.

use std::process::Command;
use std::time::{Duration, Instant};

use rudin_core::fixtures::{
    distinct_points_example, growing_window_family, repeated_points_counterexample,
};
use rudin_core::suites::{
    annihilation_battery, cross_oracle_battery, factorization_battery, lattice_law_battery,
    monotone_general_battery, projection_identity_battery, quotient_cyclic_battery,
    star_cyclic_battery,
};
use rudin_core::{corank_general, corank_monotone, izuchi_published_corank, MethodDetail};

const SEED: u64 = 0xACCE;

/// Prints the one-line verdict and enforces the runtime budget.
fn verdict(number: u32, what: &str, passed: bool, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    let state = if passed && elapsed < budget {
        "PASS"
    } else {
        "FAIL"
    };
    println!(
        "[{state}] acceptance {number}: {what} ({elapsed:.2?} of {budget:.0?} budget)"
    );
    assert!(passed, "acceptance {number} failed: {what}");
    assert!(
        elapsed < budget,
        "acceptance {number} exceeded its budget: {elapsed:?} >= {budget:?}"
    );
}

#[test]
fn acceptance_1_repeated_points_corank_is_two_on_both_routes() {
    let start = Instant::now();
    let fixture = repeated_points_counterexample();
    let family = &fixture.reference.family;

    let general = corank_general(family);
    let monotone = corank_monotone(family, &fixture.reference.increasing)
        .expect("fixture is monotone");

    let witness_pair = [fixture.a, fixture.c];
    let witness_count = general
        .per_tuple
        .iter()
        .find(|t| t.tuple.primes() == witness_pair.as_slice())
        .map(|t| t.count)
        .unwrap_or(0);
    let others_ok = general
        .per_tuple
        .iter()
        .filter(|t| t.tuple.primes() != witness_pair.as_slice())
        .all(|t| t.count <= 1);

    let binary = Command::new(env!("CARGO_BIN_EXE_rudin"))
        .args(["paper-examples", "--seed", "0"])
        .env_remove("RUDIN_SEED")
        .output()
        .expect("binary is runnable");

    let passed = general.overall == 2
        && monotone.overall == 2
        && witness_count == 2
        && others_ok
        && binary.status.code() == Some(0);
    verdict(
        1,
        "repeated-points family: general = monotone = 2, witness antichain 2, \
         all other pairs <= 1, paper-examples exits 0",
        passed,
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn acceptance_2_published_formula_returns_one_on_the_same_family() {
    let start = Instant::now();
    let fixture = repeated_points_counterexample();
    let published = izuchi_published_corank(&fixture.reference.family)
        .expect("fixture is monotone with two variables");
    verdict(
        2,
        "published two-variable formula reports 1 where the true co-rank is 2",
        published.overall == 1,
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn acceptance_3_distinct_points_corank_is_one_with_singleton_index_sets() {
    let start = Instant::now();
    let fixture = distinct_points_example();
    let general = corank_general(&fixture.family);
    let monotone =
        corank_monotone(&fixture.family, &fixture.increasing).expect("fixture is monotone");
    let singleton_i = monotone.per_tuple.iter().all(|t| match &t.detail {
        MethodDetail::Monotone { r1, i_set, .. } => i_set == &vec![*r1],
        _ => false,
    });
    verdict(
        3,
        "distinct-points family: co-rank 1 and I = {r1} for every tuple",
        general.overall == 1 && monotone.overall == 1 && singleton_i,
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn acceptance_4_antichain_count_matches_both_numeric_rank_oracles() {
    let start = Instant::now();
    let outcome = cross_oracle_battery(SEED, 200);
    verdict(
        4,
        &format!(
            "200 random single-point modules: antichain = nakayama = randomized r \
             ({})",
            outcome.detail
        ),
        outcome.passed,
        start,
        Duration::from_secs(60),
    );
}

#[test]
fn acceptance_5_monotone_route_agrees_with_the_general_route() {
    let start = Instant::now();
    let outcome = monotone_general_battery(SEED, 100);
    verdict(
        5,
        &format!(
            "100 random monotone families: closed-form = antichain route ({})",
            outcome.detail
        ),
        outcome.passed,
        start,
        Duration::from_secs(10),
    );
}

#[test]
fn acceptance_6_operator_identities_hold_at_1e_8() {
    let start = Instant::now();
    let outcomes = [
        projection_identity_battery(SEED, 50),
        star_cyclic_battery(SEED.wrapping_add(1), 50),
        quotient_cyclic_battery(SEED.wrapping_add(2), 30),
        annihilation_battery(SEED.wrapping_add(3), 30),
    ];
    let passed = outcomes.iter().all(|o| o.passed);
    let detail = outcomes
        .iter()
        .map(|o| format!("{}: {}", o.name, o.detail))
        .collect::<Vec<_>>()
        .join("; ");
    verdict(
        6,
        &format!("projection/star-cyclic/quotient-cyclic/annihilation ({detail})"),
        passed,
        start,
        Duration::from_secs(120),
    );
}

#[test]
fn acceptance_7_lattice_laws_and_factorization_round_trips() {
    let start = Instant::now();
    let lattice = lattice_law_battery(SEED, 500);
    let factorization = factorization_battery(SEED.wrapping_add(1), 500);
    verdict(
        7,
        &format!(
            "500 random products: gcd/lcm laws and factorization round trips \
             ({}; {})",
            lattice.detail, factorization.detail
        ),
        lattice.passed && factorization.passed,
        start,
        Duration::from_secs(5),
    );
}

#[test]
fn acceptance_8_growing_window_coranks_increase_without_bound() {
    let start = Instant::now();
    let coranks: Vec<usize> = (1..=5)
        .map(|w| {
            let report = corank_general(&growing_window_family(w));
            assert!(
                report.truncated_window,
                "window [-{w},{w}] truncation must flag its clipped zero sets"
            );
            report.overall
        })
        .collect();
    let expected: Vec<usize> = (1..=5).map(|w| 2 * w + 1).collect();
    let nondecreasing = coranks.windows(2).all(|p| p[0] <= p[1]);
    verdict(
        8,
        &format!(
            "window truncations [-W,W], W=1..5: co-ranks {coranks:?} \
             (expected {expected:?}, strictly growing)"
        ),
        coranks == expected && nondecreasing,
        start,
        Duration::from_secs(5),
    );
}
