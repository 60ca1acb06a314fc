//! Exact factorization: trial division up to the budgeted limit, then Brent's
//! cycle-finding rho. Exceeding the budget is an error, never a wrong answer.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::primality::{addmod, is_prime, is_prime_u64, mulmod};
use crate::arith::sieve::primes_up_to;
use crate::config::FactorBudget;
use crate::error::{Error, Result};

/// A positive integer together with its complete prime factorization.
///
/// Invariants: the primes are strictly increasing, every exponent is at least
/// one, and the product of the prime powers reproduces `n`. `n = 1` carries an
/// empty factor list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: BigUint,
    factors: Vec<(BigUint, u32)>,
}

impl Factorization {
    fn from_map(n: BigUint, map: BTreeMap<BigUint, u32>) -> Self {
        let factors: Vec<(BigUint, u32)> = map.into_iter().collect();
        debug_assert!(Self::check(&n, &factors));
        Factorization { n, factors }
    }

    fn check(n: &BigUint, factors: &[(BigUint, u32)]) -> bool {
        let mut prod = BigUint::one();
        let mut prev: Option<&BigUint> = None;
        for (p, e) in factors {
            if *e == 0 || !is_prime(p) {
                return false;
            }
            if let Some(q) = prev {
                if q >= p {
                    return false;
                }
            }
            prod *= p.pow(*e);
            prev = Some(p);
        }
        prod == *n
    }

    pub fn n(&self) -> &BigUint {
        &self.n
    }

    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    /// Re-runs the invariant checks, including primality of every factor.
    pub fn verify(&self) -> bool {
        Self::check(&self.n, &self.factors)
    }

    /// Exponent of `p` in `n` (zero when `p` does not divide `n`).
    pub fn exponent_of(&self, p: &BigUint) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| q == p)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    /// Factor pairs as u64 values, when all of them fit.
    pub fn factors_u64(&self) -> Option<Vec<(u64, u32)>> {
        self.factors
            .iter()
            .map(|(p, e)| p.to_u64().map(|p| (p, *e)))
            .collect()
    }
}

/// Factors any u64 completely. Trial division by the small primes, then rho;
/// no budget is needed at this width.
pub fn factorize_u64(n: u64) -> Factorization {
    assert!(n >= 1, "factorize_u64 requires n >= 1");
    let mut map: BTreeMap<BigUint, u32> = BTreeMap::new();
    let mut rem = n;
    for p in [2u64, 3, 5] {
        while rem % p == 0 {
            *map.entry(BigUint::from(p)).or_insert(0) += 1;
            rem /= p;
        }
    }
    // wheel over 7, 11, 13, ... up to 2^20; rho covers the rest
    let mut d = 7u64;
    while d <= 1 << 20 && d * d <= rem {
        while rem % d == 0 {
            *map.entry(BigUint::from(d)).or_insert(0) += 1;
            rem /= d;
        }
        d += if d % 6 == 1 { 4 } else { 2 };
    }
    split_u64(rem, &mut map);
    Factorization::from_map(BigUint::from(n), map)
}

fn split_u64(n: u64, map: &mut BTreeMap<BigUint, u32>) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        *map.entry(BigUint::from(n)).or_insert(0) += 1;
        return;
    }
    let d = pollard_brent_u64(n);
    split_u64(d, map);
    split_u64(n / d, map);
}

/// Brent's rho on an odd composite with no factor below 2^20.
fn pollard_brent_u64(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let step = |x: u64| addmod(mulmod(x, x, n), c, n);
        let mut x = 2u64;
        let mut ys = 0u64;
        let mut y = 2u64;
        let mut q = 1u64;
        let mut g = 1u64;
        let mut r = 1u64;
        let batch = 128u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = step(y);
            }
            let mut k = 0u64;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..batch.min(r - k) {
                    y = step(y);
                    q = mulmod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += batch;
            }
            r <<= 1;
        }
        if g == n {
            g = 1;
            while g == 1 {
                ys = step(ys);
                g = x.abs_diff(ys).gcd(&n);
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

/// Full factorization under an explicit effort budget.
pub fn factorize(n: &BigUint, budget: &FactorBudget) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::InvalidInput("factorize requires n >= 1".into()));
    }
    if let Some(small) = n.to_u64() {
        return Ok(factorize_u64(small));
    }
    let mut map: BTreeMap<BigUint, u32> = BTreeMap::new();
    let mut rem = n.clone();
    for p in primes_up_to(budget.trial_limit) {
        let bp = BigUint::from(p);
        while (&rem % &bp).is_zero() {
            *map.entry(bp.clone()).or_insert(0) += 1;
            rem /= &bp;
        }
        if rem.is_one() {
            break;
        }
    }
    if !rem.is_one() {
        let mut iterations = budget.rho_iteration_cap;
        split_big(rem, budget, &mut iterations, &mut map).map_err(|_| {
            Error::FactorEffortExceeded {
                n: n.clone(),
                trial_limit: budget.trial_limit,
                rho_cap: budget.rho_iteration_cap,
            }
        })?;
    }
    Ok(Factorization::from_map(n.clone(), map))
}

fn split_big(
    n: BigUint,
    budget: &FactorBudget,
    iterations: &mut u64,
    map: &mut BTreeMap<BigUint, u32>,
) -> std::result::Result<(), ()> {
    if n.is_one() {
        return Ok(());
    }
    if let Some(small) = n.to_u64() {
        split_u64(small, map);
        return Ok(());
    }
    if is_prime(&n) {
        *map.entry(n).or_insert(0) += 1;
        return Ok(());
    }
    let d = pollard_brent_big(&n, iterations).ok_or(())?;
    let q = &n / &d;
    split_big(d, budget, iterations, map)?;
    split_big(q, budget, iterations, map)
}

fn pollard_brent_big(n: &BigUint, iterations: &mut u64) -> Option<BigUint> {
    let one = BigUint::one();
    let mut c = BigUint::from(1u32);
    loop {
        let step = |x: &BigUint| (x * x + &c) % n;
        let mut x = BigUint::from(2u32);
        let mut ys = BigUint::zero();
        let mut y = BigUint::from(2u32);
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut r = 1u64;
        let batch = 128u64;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0u64;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..batch.min(r - k) {
                    if *iterations == 0 {
                        return None;
                    }
                    *iterations -= 1;
                    y = step(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += batch;
            }
            r <<= 1;
        }
        if &g == n {
            g = one.clone();
            while g.is_one() {
                if *iterations == 0 {
                    return None;
                }
                *iterations -= 1;
                ys = step(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
            }
        }
        if &g != n {
            return Some(g);
        }
        c += 1u32;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(f: &Factorization) -> Vec<(u64, u32)> {
        f.factors_u64().unwrap()
    }

    #[test]
    fn one_has_empty_factor_list() {
        let f = factorize_u64(1);
        assert!(f.factors().is_empty());
        assert!(f.verify());
    }

    #[test]
    fn small_examples() {
        assert_eq!(pairs(&factorize_u64(5348)), vec![(2, 2), (7, 1), (191, 1)]);
        assert_eq!(pairs(&factorize_u64(57)), vec![(3, 1), (19, 1)]);
        assert_eq!(pairs(&factorize_u64(1024)), vec![(2, 10)]);
    }

    #[test]
    fn u64_semiprime() {
        // two 31-bit primes
        let n = 2_147_483_647u64 * 2_147_483_629;
        let f = factorize_u64(n);
        assert_eq!(pairs(&f), vec![(2_147_483_629, 1), (2_147_483_647, 1)]);
        assert!(f.verify());
    }

    #[test]
    fn big_path_roundtrip() {
        let n = BigUint::parse_bytes(b"340282366920938463463374607431768211297", 10).unwrap();
        let f = factorize(&n, &FactorBudget::default()).unwrap();
        assert!(f.verify());
        assert_eq!(f.n(), &n);
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        // product of two ~100-bit primes; rho with no iterations must fail
        let p = BigUint::parse_bytes(b"1267650600228229401496703205653", 10).unwrap();
        let q = BigUint::parse_bytes(b"1267650600228229401496703205361", 10).unwrap();
        let n = &p * &q;
        let tight = FactorBudget {
            trial_limit: 1000,
            rho_iteration_cap: 10,
        };
        match factorize(&n, &tight) {
            Err(Error::FactorEffortExceeded { .. }) => {}
            other => panic!("expected effort error, got {other:?}"),
        }
    }
}
