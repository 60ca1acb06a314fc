//! Residue classes a (mod m) whose smallest totient preimage is provably
//! large relative to m, together with explicit witnesses showing the class is
//! occupied: a = 2q for a prime q = 1 (mod 3), m = 12p for a prime p chosen by
//! its Frobenius splitting pattern, and witness n = r^L for a prime r picked
//! by CRT.

mod density;
mod pipeline;
mod structural;

use std::collections::BTreeMap;

use serde::Serialize;

pub use density::{splitting_density, DensityReport};
pub use pipeline::{
    build_tardy_class, construct_tardy, find_admissible_q, find_distinguishing_primes,
    find_frobenius_prime, find_totient_witness, pair_product, passes_small_base_exclusion,
    PipelineStats, TardyParams, TardyRun,
};
pub use structural::{structural_min_search, SearchMethod, StructuralSearchReport};

/// A certified output of the construction pipeline.
///
/// Invariants, re-verified on assembly: a = 2q and m = 12p with q = 1 (mod 3)
/// and q > L; each distinguishing prime divides its own discriminant exactly
/// once and no other; f_k is rootless mod p for 2 <= k <= L-1 while f_L
/// splits completely; and the witness root is a nonzero root of f_L mod p.
#[derive(Debug, Clone, Serialize)]
pub struct TardyClass {
    #[serde(rename = "L", with = "crate::serde_util::dec")]
    pub(crate) l: u32,
    #[serde(with = "crate::serde_util::dec")]
    pub(crate) q: u64,
    #[serde(with = "crate::serde_util::dec")]
    pub(crate) p: u64,
    #[serde(with = "crate::serde_util::dec")]
    pub(crate) a: u64,
    #[serde(with = "crate::serde_util::dec")]
    pub(crate) m: u64,
    #[serde(with = "crate::serde_util::dec_map")]
    pub(crate) distinguishing_primes: BTreeMap<u32, u64>,
    #[serde(with = "crate::serde_util::dec")]
    pub(crate) witness_root: u64,
}

impl TardyClass {
    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn distinguishing_primes(&self) -> &BTreeMap<u32, u64> {
        &self.distinguishing_primes
    }

    pub fn witness_root(&self) -> u64 {
        self.witness_root
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serialization cannot fail")
    }
}

/// Outcome of a bounded search for n with phi(n) = a (mod m). When
/// `smallest_hit` is absent, no n <= search_bound satisfies the congruence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowerBoundCertificate {
    #[serde(with = "crate::serde_util::dec")]
    pub a: u64,
    #[serde(with = "crate::serde_util::dec")]
    pub m: u64,
    #[serde(with = "crate::serde_util::dec")]
    pub search_bound: u64,
    #[serde(with = "crate::serde_util::dec_opt")]
    pub smallest_hit: Option<u64>,
    #[serde(with = "crate::serde_util::dec")]
    pub candidates_examined: u64,
    pub method: SearchMethod,
}

impl LowerBoundCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serialization cannot fail")
    }
}
