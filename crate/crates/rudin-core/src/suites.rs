//! Batched cross-checks between the symbolic and numeric routes, exposed
//! as named batteries so callers can pin instance counts. Each battery
//! drives its own seeded generator; a battery passes only if every
//! instance does, and the detail string carries either the tally or the
//! first counterexample found.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blaschke::BlaschkeProduct;
use crate::corank::{corank_general, corank_monotone, izuchi_published_corank, pareto_maximal};
use crate::numerics::{
    assemble_point_module, nakayama_corank, randomized_min_generators, required_truncation,
    verify_annihilation, verify_projection_identity, verify_quotient_cyclic, verify_star_cyclic,
};
use crate::sampling;

/// Result of one battery.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn tally(name: &str, instances: usize, failure: Option<String>) -> Self {
        match failure {
            None => Self {
                name: name.to_string(),
                passed: true,
                detail: format!("{instances}/{instances} instances agreed"),
            },
            Some(detail) => Self {
                name: name.to_string(),
                passed: false,
                detail,
            },
        }
    }
}

/// Runs `instances` cases of `case`, stopping at the first failure.
fn run_battery(
    name: &str,
    seed: u64,
    instances: usize,
    mut case: impl FnMut(&mut ChaCha8Rng, usize) -> Result<(), String>,
) -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..instances {
        if let Err(why) = case(&mut rng, i) {
            return CheckOutcome::tally(name, instances, Some(format!("instance {i}: {why}")));
        }
    }
    CheckOutcome::tally(name, instances, None)
}

/// gcd/lcm lattice laws on random product pairs.
pub fn lattice_law_battery(seed: u64, instances: usize) -> CheckOutcome {
    run_battery("algebra: gcd/lcm lattice laws", seed, instances, |rng, _| {
        let phi = sampling::blaschke_product(rng, 5, 0.9);
        let psi = sampling::blaschke_product(rng, 5, 0.9);
        let gcd = phi.gcd(&psi);
        let lcm = phi.lcm(&psi);
        if !gcd.divides(&phi) || !gcd.divides(&psi) {
            return Err(format!("gcd({phi}, {psi}) = {gcd} does not divide both"));
        }
        if !phi.divides(&lcm) || !psi.divides(&lcm) {
            return Err(format!("lcm({phi}, {psi}) = {lcm} not divisible by both"));
        }
        if gcd.mul(&lcm) != phi.mul(&psi) {
            return Err(format!("gcd·lcm ≠ φ·ψ for ({phi}, {psi})"));
        }
        if gcd != psi.gcd(&phi) || lcm != psi.lcm(&phi) {
            return Err(format!("gcd/lcm not symmetric on ({phi}, {psi})"));
        }
        if phi.gcd(&phi) != phi || phi.lcm(&phi) != phi {
            return Err(format!("gcd/lcm not idempotent on {phi}"));
        }
        let through = phi.mul(&psi).quotient(&psi).map_err(|e| e.to_string())?;
        if through != phi {
            return Err(format!("(φ·ψ)/ψ ≠ φ for ({phi}, {psi})"));
        }
        Ok(())
    })
}

/// Prime-power factorizations reassemble the product, and orders add
/// under multiplication.
pub fn factorization_battery(seed: u64, instances: usize) -> CheckOutcome {
    run_battery("algebra: factorization round trips", seed, instances, |rng, _| {
        let phi = sampling::blaschke_product(rng, 6, 0.9);
        let psi = sampling::blaschke_product(rng, 4, 0.9);
        let rebuilt = BlaschkeProduct::from_zeros(
            phi.prime_power_factors()
                .into_iter()
                .map(|f| (f.base, f.exponent)),
        );
        if rebuilt != phi {
            return Err(format!("factors of {phi} reassembled into {rebuilt}"));
        }
        let product = phi.mul(&psi);
        for (p, _) in phi.zeros() {
            if product.order(p) != phi.order(p) + psi.order(p) {
                return Err(format!("orders at {p} do not add in {phi}·{psi}"));
            }
        }
        if product.degree() != phi.degree() + psi.degree() {
            return Err(format!("degrees do not add in {phi}·{psi}"));
        }
        Ok(())
    })
}

/// Exact evaluation has unit modulus on the circle.
pub fn boundary_modulus_battery(seed: u64, instances: usize) -> CheckOutcome {
    run_battery("algebra: boundary modulus", seed, instances, |rng, _| {
        let phi = sampling::blaschke_product(rng, 6, 0.9);
        for _ in 0..4 {
            let theta = std::f64::consts::TAU * rng.random::<f64>();
            let z = num_complex::Complex64::new(theta.cos(), theta.sin());
            let m = phi.evaluate(z).norm();
            if (m - 1.0).abs() > 1e-10 {
                return Err(format!("|{phi}({z})| = {m}"));
            }
        }
        Ok(())
    })
}

/// Norm and diagonal-coefficient identities of the single-point vectors.
pub fn projection_identity_battery(seed: u64, instances: usize) -> CheckOutcome {
    run_battery("operators: projection identities", seed, instances, |rng, _| {
        let alpha = sampling::disc_point(rng, 0.9);
        let m = rng.random_range(1..=4);
        match verify_projection_identity(alpha, m) {
            Ok(true) => Ok(()),
            Ok(false) => Err(format!("identities failed at α = {alpha}, m = {m}")),
            Err(e) => Err(format!("α = {alpha}, m = {m}: {e}")),
        }
    })
}

/// The shifted generator spans its model space.
pub fn star_cyclic_battery(seed: u64, instances: usize) -> CheckOutcome {
    run_battery("operators: star-cyclic generator", seed, instances, |rng, _| {
        let phi = sampling::blaschke_product(rng, 5, 0.85);
        match verify_star_cyclic(&phi) {
            Ok(true) => Ok(()),
            Ok(false) => Err(format!("cyclicity failed for {phi}")),
            Err(e) => Err(format!("{phi}: {e}")),
        }
    })
}

/// The multiplied-down generator spans the quotient-by-gcd space.
pub fn quotient_cyclic_battery(seed: u64, instances: usize) -> CheckOutcome {
    run_battery("operators: quotient star-cyclic", seed, instances, |rng, _| {
        let phi = sampling::blaschke_product(rng, 4, 0.85);
        // bias ψ toward sharing factors with φ so all three regimes occur
        let shared = if rng.random_bool(0.7) {
            let factors = phi.prime_power_factors();
            let pick = rng.random_range(0..factors.len());
            let f = factors[pick];
            BlaschkeProduct::prime_power(f.base, rng.random_range(1..=f.exponent))
        } else {
            BlaschkeProduct::one()
        };
        let psi = shared.mul(&sampling::blaschke_product(rng, 2, 0.85));
        match verify_quotient_cyclic(&phi, &psi) {
            Ok(true) => Ok(()),
            Ok(false) => Err(format!("quotient cyclicity failed for φ = {phi}, ψ = {psi}")),
            Err(e) => Err(format!("φ = {phi}, ψ = {psi}: {e}")),
        }
    })
}

/// Componentwise divisibility collapses the tensor multiplier.
pub fn annihilation_battery(seed: u64, instances: usize) -> CheckOutcome {
    run_battery("operators: tensor annihilation", seed, instances, |rng, _| {
        let n = rng.random_range(1..=3);
        let xi: Vec<BlaschkeProduct> = (0..n)
            .map(|_| sampling::blaschke_product(rng, 2, 0.8))
            .collect();
        let divisible = rng.random_range(0..n);
        let eta: Vec<BlaschkeProduct> = xi
            .iter()
            .enumerate()
            .map(|(j, x)| {
                let extra = sampling::blaschke_product(rng, 2, 0.8);
                if j == divisible {
                    x.mul(&extra)
                } else {
                    extra
                }
            })
            .collect();
        match verify_annihilation(&xi, &eta) {
            Ok(true) => Ok(()),
            Ok(false) => Err(format!("annihilation failed for ξ = {xi:?}")),
            Err(e) => Err(format!("ξ = {xi:?}: {e}")),
        }
    })
}

/// The three oracles for single-point tuples: Pareto antichain size,
/// local generator count, randomized generation level.
pub fn cross_oracle_battery(seed: u64, instances: usize) -> CheckOutcome {
    let truncation = required_truncation(0.8, 3);
    run_battery("oracles: antichain vs nakayama vs randomized", seed, instances, |rng, i| {
        let n = rng.random_range(2..=3);
        let point: Vec<_> = (0..n).map(|_| sampling::disc_point(rng, 0.8)).collect();
        let count = rng.random_range(1..=4);
        let tuples = sampling::order_tuples(rng, n, count, 3);
        let antichain = pareto_maximal(&tuples).map_err(|e| e.to_string())?.len();
        let module =
            assemble_point_module(&point, &tuples, truncation).map_err(|e| e.to_string())?;
        let nakayama = nakayama_corank(&module).map_err(|e| e.to_string())?;
        let randomized = randomized_min_generators(&module, 2, seed ^ (i as u64)).r();
        if nakayama != antichain || randomized != antichain {
            return Err(format!(
                "tuples {tuples:?}: antichain {antichain}, nakayama {nakayama}, randomized {randomized}"
            ));
        }
        Ok(())
    })
}

/// The closed-form monotone count equals the general antichain count,
/// tuple by tuple.
pub fn monotone_general_battery(seed: u64, instances: usize) -> CheckOutcome {
    run_battery("oracles: monotone route vs general route", seed, instances, |rng, _| {
        let n = rng.random_range(2..=3);
        let window_len = rng.random_range(1..=8);
        let (fam, increasing) = sampling::monotone_family(rng, n, window_len, 3, 2);
        let monotone = corank_monotone(&fam, &increasing).map_err(|e| e.to_string())?;
        let general = corank_general(&fam);
        if monotone.overall != general.overall {
            return Err(format!(
                "family {fam:?}: monotone {} vs general {}",
                monotone.overall, general.overall
            ));
        }
        for (m, g) in monotone.per_tuple.iter().zip(&general.per_tuple) {
            if m.tuple != g.tuple || m.count != g.count {
                return Err(format!(
                    "tuple {}: monotone count {} vs general {}",
                    m.tuple, m.count, g.count
                ));
            }
        }
        Ok(())
    })
}

/// On staggered families with all points distinct the published
/// two-variable formula matches the general route.
pub fn izuchi_agreement_battery(seed: u64, instances: usize) -> CheckOutcome {
    run_battery("oracles: published formula on distinct points", seed, instances, |rng, _| {
        let half_width = rng.random_range(0..=3);
        let fam = sampling::staggered_pair_family(rng, half_width);
        let published = izuchi_published_corank(&fam).map_err(|e| e.to_string())?;
        let general = corank_general(&fam);
        if published.overall != general.overall {
            return Err(format!(
                "staggered family: published {} vs general {}",
                published.overall, general.overall
            ));
        }
        Ok(())
    })
}

/// Default algebra suite (500 instances per battery).
pub fn algebra_suite(seed: u64) -> Vec<CheckOutcome> {
    vec![
        lattice_law_battery(seed, 500),
        factorization_battery(seed.wrapping_add(1), 500),
        boundary_modulus_battery(seed.wrapping_add(2), 500),
    ]
}

/// Default operator-identity suite.
pub fn operators_suite(seed: u64) -> Vec<CheckOutcome> {
    vec![
        projection_identity_battery(seed, 50),
        star_cyclic_battery(seed.wrapping_add(1), 50),
        quotient_cyclic_battery(seed.wrapping_add(2), 30),
        annihilation_battery(seed.wrapping_add(3), 30),
    ]
}

/// Default cross-oracle suite.
pub fn oracles_suite(seed: u64) -> Vec<CheckOutcome> {
    vec![
        cross_oracle_battery(seed, 200),
        monotone_general_battery(seed.wrapping_add(1), 100),
        izuchi_agreement_battery(seed.wrapping_add(2), 50),
    ]
}

/// Every suite, in order.
pub fn all_suites(seed: u64) -> Vec<CheckOutcome> {
    let mut out = algebra_suite(seed);
    out.extend(operators_suite(seed));
    out.extend(oracles_suite(seed));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_batteries_pass() {
        for outcome in [
            lattice_law_battery(11, 40),
            factorization_battery(12, 40),
            boundary_modulus_battery(13, 40),
            cross_oracle_battery(14, 10),
            monotone_general_battery(15, 10),
            izuchi_agreement_battery(16, 10),
        ] {
            assert!(outcome.passed, "{}: {}", outcome.name, outcome.detail);
        }
    }

    #[test]
    fn operator_batteries_pass_small() {
        for outcome in [
            projection_identity_battery(21, 6),
            star_cyclic_battery(22, 6),
            quotient_cyclic_battery(23, 4),
            annihilation_battery(24, 4),
        ] {
            assert!(outcome.passed, "{}: {}", outcome.name, outcome.detail);
        }
    }
}
