//! Property tests for the trinomial splitting machinery.

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use tardy_core::arith::primes_up_to;
use tardy_core::polymod::{
    count_roots_mod_p, discriminant_oracle, pattern_evidence, splitting_report, PatternEvidence,
    TrinomialFamily,
};

fn fam(k: u32, a: u64) -> TrinomialFamily {
    TrinomialFamily::new(k, a).unwrap()
}

#[test]
fn root_counts_match_exhaustive_evaluation() {
    for k in 2..=6u32 {
        for a in [10u64, 14, 22, 26] {
            let f = fam(k, a);
            for p in primes_up_to(1000) {
                let poly = f.reduce_mod(p);
                let direct = (0..p).filter(|&x| poly.eval(x) == 0).count() as u32;
                assert_eq!(count_roots_mod_p(&f, p), direct, "k={k} a={a} p={p}");
            }
        }
    }
}

#[test]
fn closed_form_discriminant_equals_oracle() {
    for k in 2..=8u32 {
        for a in [10u64, 14, 22, 26, 202] {
            let f = fam(k, a);
            assert_eq!(
                f.discriminant(),
                discriminant_oracle(&f.expanded_coeffs()),
                "k={k} a={a}"
            );
        }
    }
}

#[test]
fn certified_families_show_no_reducibility_pattern() {
    for (k, a) in [(2u32, 10u64), (3, 14), (4, 14), (5, 22), (6, 26)] {
        let f = fam(k, a);
        assert!(f.certified_irreducible());
        assert!(f.linear_factor_excluded());
        assert_eq!(
            pattern_evidence(&f, 100),
            PatternEvidence::ConsistentWithIrreducible,
            "k={k} a={a}"
        );
    }
}

#[test]
fn ramification_matches_discriminant_divisibility() {
    for k in 2..=6u32 {
        for a in [10u64, 14, 202] {
            let f = fam(k, a);
            let disc = f.discriminant();
            for p in primes_up_to(500) {
                let divides = (&disc % BigInt::from(p)).is_zero();
                let report = splitting_report(&f, p);
                assert_eq!(divides, !report.squarefree_mod_p, "k={k} a={a} p={p}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn degree_pattern_sums_to_k(k in 2u32..=8, a in 1u64..5000, p_idx in 0usize..95) {
        let primes = primes_up_to(500);
        let p = primes[p_idx];
        let f = fam(k, a);
        let report = splitting_report(&f, p);
        let total: u32 = report.degree_pattern.iter().sum();
        prop_assert_eq!(total, k);
        if report.squarefree_mod_p {
            let ones = report.degree_pattern.iter().filter(|&&d| d == 1).count() as u32;
            prop_assert_eq!(ones, report.root_count);
            prop_assert_eq!(count_roots_mod_p(&f, p), report.root_count);
        }
    }
}
