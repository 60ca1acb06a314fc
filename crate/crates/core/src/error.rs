use num_bigint::BigUint;

use crate::arith::ResidueClass;

/// Error type shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Factoring gave up before finding a full factorization. Never a wrong
    /// answer: raise the budget and retry.
    #[error("factoring effort exceeded on {n} (trial limit {trial_limit}, rho cap {rho_cap})")]
    FactorEffortExceeded {
        n: BigUint,
        trial_limit: u64,
        rho_cap: u64,
    },

    #[error("sieve limit {limit} exceeds the memory budget of {budget} entries")]
    MemoryBudget { limit: u64, budget: u64 },

    #[error("inconsistent congruences: {first} conflicts with {second}")]
    CrtConflict {
        first: ResidueClass,
        second: ResidueClass,
    },

    #[error("combined modulus of {first} and {second} overflows 64 bits")]
    CrtOverflow {
        first: ResidueClass,
        second: ResidueClass,
    },

    /// A bounded search ran out of room. Signals the cap was too small, not
    /// that no answer exists.
    #[error("search exhausted in {stage} (cap {cap})")]
    SearchExhausted { stage: &'static str, cap: u64 },

    #[error("class {a} (mod {m}) contains no even number")]
    NoEvenMember { a: u64, m: u64 },

    /// The local congruence system modulo 3 admits no residues coprime to the
    /// search progression; the caller must rebalance the linking factor first.
    #[error("no coprime local residues exist modulo 3^{beta} (multiplier {d}, target {a1})")]
    LocalClassObstruction { beta: u32, d: u64, a1: u64 },

    /// For odd exponents the value r^l - r^(l-1) is never congruent to 2q
    /// modulo 3 when q = 1 (mod 3), so no prime power witness exists.
    #[error("witness construction needs an even exponent; l = {l} is obstructed modulo 3")]
    OddExponentObstruction { l: u32 },

    #[error("invariant violation in {stage}: {detail}")]
    InvariantViolation {
        stage: &'static str,
        detail: String,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
