//! Empirical splitting densities over the primes up to a limit. For a family
//! with full symmetric Galois group S_k the rootless fraction tends to the
//! proportion of fixed-point-free permutations and the fully-split fraction
//! to 1/k!.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::arith::primes_up_to;
use crate::polymod::{count_roots_mod_p, splits_completely_mod_p, TrinomialFamily};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityReport {
    #[serde(with = "crate::serde_util::dec")]
    pub p_limit: u64,
    #[serde(with = "crate::serde_util::dec")]
    pub sample_size: u64,
    pub fraction_rootless: f64,
    pub fraction_split: f64,
}

/// Fractions of primes p <= p_limit (skipping divisors of the discriminant)
/// where f_k has no root, and where it splits completely.
pub fn splitting_density(fam: &TrinomialFamily, p_limit: u64) -> DensityReport {
    let disc = fam.discriminant();
    let mut sample = 0u64;
    let mut rootless = 0u64;
    let mut split = 0u64;
    for p in primes_up_to(p_limit) {
        if (&disc % BigInt::from(p)).is_zero() {
            continue;
        }
        sample += 1;
        let roots = count_roots_mod_p(fam, p);
        if roots == 0 {
            rootless += 1;
        }
        if roots == fam.k() && splits_completely_mod_p(fam, p) {
            split += 1;
        }
    }
    let denom = sample.max(1) as f64;
    DensityReport {
        p_limit,
        sample_size: sample,
        fraction_rootless: rootless as f64 / denom,
        fraction_split: split as f64 / denom,
    }
}
