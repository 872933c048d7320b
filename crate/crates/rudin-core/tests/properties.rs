//! Property-based checks of the algebraic laws and the equivalence of the
//! counting routes on randomly generated instances.

use proptest::collection::vec;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rudin_core::sampling;
use rudin_core::{
    corank_general, corank_monotone, lambda_classes, order_tuples, pareto_maximal, zero_set,
    BlaschkeProduct, DiscPoint, OrderTuple, RudinFamily,
};

fn disc_point_strategy() -> impl Strategy<Value = DiscPoint> {
    (-0.85f64..0.85, -0.85f64..0.85)
        .prop_filter("inside the disc", |(re, im)| re * re + im * im < 0.72)
        .prop_map(|(re, im)| DiscPoint::new(re, im).unwrap())
}

fn product_strategy() -> impl Strategy<Value = BlaschkeProduct> {
    vec((disc_point_strategy(), 1u32..=3), 1..=4).prop_map(BlaschkeProduct::from_zeros)
}

/// Literal quadratic Pareto filter used as the test oracle.
fn brute_force_maximal(tuples: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let dominates = |a: &[u32], b: &[u32]| a.iter().zip(b).all(|(x, y)| x >= y);
    let mut out: Vec<Vec<u32>> = Vec::new();
    for t in tuples {
        if tuples
            .iter()
            .any(|s| s != t && dominates(s, t) && !dominates(t, s))
        {
            continue;
        }
        if !out.contains(t) {
            out.push(t.clone());
        }
    }
    out.sort();
    out
}

proptest! {
    #[test]
    fn pareto_matches_brute_force(
        raw in (1usize..=3).prop_flat_map(|n| vec(vec(1u32..=4, n..=n), 1..=8))
    ) {
        let tuples: Vec<OrderTuple> = raw
            .iter()
            .map(|t| OrderTuple::new(t.clone()).unwrap())
            .collect();
        let rep = pareto_maximal(&tuples).unwrap();
        let expected = brute_force_maximal(&raw);
        let got: Vec<Vec<u32>> = rep.tuples().iter().map(|t| t.entries().to_vec()).collect();
        prop_assert_eq!(got, expected);
        prop_assert!(rep.is_antichain());
        // coverage: every input tuple is dominated by some kept member
        for t in &tuples {
            prop_assert!(rep.tuples().iter().any(|m| m.dominates(t)));
        }
    }

    #[test]
    fn lattice_laws_hold(phi in product_strategy(), psi in product_strategy()) {
        let gcd = phi.gcd(&psi);
        let lcm = phi.lcm(&psi);
        prop_assert!(gcd.divides(&phi) && gcd.divides(&psi));
        prop_assert!(phi.divides(&lcm) && psi.divides(&lcm));
        prop_assert_eq!(gcd.mul(&lcm), phi.mul(&psi));
        prop_assert_eq!(phi.mul(&psi).quotient(&psi).unwrap(), phi.clone());
        let rebuilt = BlaschkeProduct::from_zeros(
            phi.prime_power_factors().into_iter().map(|f| (f.base, f.exponent)),
        );
        prop_assert_eq!(rebuilt, phi);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn monotone_route_equals_general_route(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = 2 + (seed % 2) as usize;
        let (fam, increasing) = sampling::monotone_family(&mut rng, n, 6, 3, 2);
        let monotone = corank_monotone(&fam, &increasing).unwrap();
        let general = corank_general(&fam);
        prop_assert_eq!(monotone.overall, general.overall);
        for (m, g) in monotone.per_tuple.iter().zip(&general.per_tuple) {
            prop_assert_eq!(&m.tuple, &g.tuple);
            prop_assert_eq!(m.count, g.count);
            prop_assert_eq!(&m.minimal_rep, &g.minimal_rep);
        }
    }

    #[test]
    fn corank_is_invariant_under_variable_permutation(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (fam, _) = sampling::monotone_family(&mut rng, 3, 5, 3, 2);
        let reversed = RudinFamily::new(
            fam.window(),
            (0..fam.n()).rev().map(|i| fam.variable(i).to_vec()).collect(),
        )
        .unwrap();
        let a = corank_general(&fam);
        let b = corank_general(&reversed);
        prop_assert_eq!(a.overall, b.overall);
        prop_assert_eq!(a.per_tuple.len(), b.per_tuple.len());
    }

    #[test]
    fn order_tuples_match_reconstructed_products(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (fam, _) = sampling::monotone_family(&mut rng, 2, 5, 3, 2);
        for class in lambda_classes(&fam) {
            let zs = zero_set(&fam, &class).unwrap();
            let tuples = order_tuples(&fam, &class).unwrap();
            // window members of Z sit in the middle of the tuple list
            let offset = usize::from(zs.left_unbounded);
            for (pos, &k) in zs.indices.iter().enumerate() {
                let from_products: Vec<u32> = class
                    .primes()
                    .iter()
                    .enumerate()
                    .map(|(i, p)| fam.phi(i, k).order(p))
                    .collect();
                prop_assert_eq!(tuples[offset + pos].entries(), from_products.as_slice());
            }
        }
    }
}
