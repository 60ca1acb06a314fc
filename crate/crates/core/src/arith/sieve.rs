//! Tabulated phi and lambda over 1..=limit, plus a plain prime sieve.

use num_integer::Integer;
use serde::Serialize;

use crate::config::SieveBudget;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SieveKind {
    Phi,
    Lambda,
}

/// A filled table of phi or lambda values, indexed 1..=limit.
#[derive(Debug, Clone)]
pub struct SieveTable {
    kind: SieveKind,
    limit: u64,
    values: Vec<u32>,
}

impl SieveTable {
    pub fn kind(&self) -> SieveKind {
        self.kind
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn get(&self, n: u64) -> u64 {
        assert!(n >= 1 && n <= self.limit, "index {n} outside 1..={}", self.limit);
        self.values[n as usize] as u64
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        (1..=self.limit).map(move |n| (n, self.values[n as usize] as u64))
    }
}

fn check_budget(limit: u64, budget: &SieveBudget) -> Result<()> {
    if limit == 0 {
        return Err(Error::InvalidInput("sieve limit must be >= 1".into()));
    }
    if limit > budget.max_entries || limit >= u32::MAX as u64 {
        return Err(Error::MemoryBudget {
            limit,
            budget: budget.max_entries.min(u32::MAX as u64 - 1),
        });
    }
    Ok(())
}

/// Smallest prime factor for every index in 2..=limit; spf[p] = p at primes.
fn spf_table(limit: usize) -> Vec<u32> {
    let mut spf = vec![0u32; limit + 1];
    for i in 2..=limit {
        if spf[i] == 0 {
            let mut j = i;
            while j <= limit {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    spf
}

pub fn phi_sieve(limit: u64, budget: &SieveBudget) -> Result<SieveTable> {
    check_budget(limit, budget)?;
    let n = limit as usize;
    let spf = spf_table(n);
    let mut values = vec![0u32; n + 1];
    if n >= 1 {
        values[1] = 1;
    }
    for i in 2..=n {
        let p = spf[i] as usize;
        let m = i / p;
        values[i] = if m % p == 0 {
            values[m] * p as u32
        } else {
            values[m] * (p as u32 - 1)
        };
    }
    Ok(SieveTable {
        kind: SieveKind::Phi,
        limit,
        values,
    })
}

pub fn lambda_sieve(limit: u64, budget: &SieveBudget) -> Result<SieveTable> {
    check_budget(limit, budget)?;
    let n = limit as usize;
    let spf = spf_table(n);
    let mut values = vec![0u32; n + 1];
    if n >= 1 {
        values[1] = 1;
    }
    for i in 2..=n {
        let p = spf[i] as u64;
        let mut rest = i as u64;
        let mut e = 0u32;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        let local = lambda_prime_power_u64(p, e);
        values[i] = local.lcm(&(values[rest as usize] as u64)) as u32;
    }
    Ok(SieveTable {
        kind: SieveKind::Lambda,
        limit,
        values,
    })
}

fn lambda_prime_power_u64(p: u64, e: u32) -> u64 {
    if p == 2 {
        match e {
            1 => 1,
            2 => 2,
            _ => 1u64 << (e - 2),
        }
    } else {
        p.pow(e - 1) * (p - 1)
    }
}

/// All primes <= limit, by a packed bitset sieve.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![0u64; n / 64 + 1];
    let get = |bits: &[u64], i: usize| bits[i >> 6] >> (i & 63) & 1 == 1;
    let mut primes = Vec::new();
    for i in 2..=n {
        if !get(&composite, i) {
            primes.push(i as u64);
            let mut j = i as u128 * i as u128;
            while j <= n as u128 {
                composite[(j as usize) >> 6] |= 1 << (j as usize & 63);
                j += i as u128;
            }
        }
    }
    primes
}
