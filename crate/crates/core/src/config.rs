/// Effort bound for [`crate::arith::factorize`]: trial division first, then a
/// rho-style method that fails loudly once the iteration cap is spent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorBudget {
    pub trial_limit: u64,
    pub rho_iteration_cap: u64,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget {
            trial_limit: 1_000_000,
            rho_iteration_cap: 10_000_000,
        }
    }
}

/// Memory budget for sieve tables, counted in table entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SieveBudget {
    pub max_entries: u64,
}

impl Default for SieveBudget {
    fn default() -> Self {
        SieveBudget {
            max_entries: 1 << 28,
        }
    }
}

/// Configuration of the probabilistic primality test used above 2^64.
/// Below 2^64 the test is deterministic and these settings are ignored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimalityConfig {
    pub rounds: u32,
    pub seed: u64,
}

impl Default for PrimalityConfig {
    fn default() -> Self {
        PrimalityConfig {
            rounds: crate::arith::PROBABILISTIC_ROUNDS,
            seed: crate::arith::DEFAULT_PRIMALITY_SEED,
        }
    }
}
