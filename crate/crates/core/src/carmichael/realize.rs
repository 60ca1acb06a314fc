//! Turning a plan into an explicit witness n = p1 p2, plus the top-level
//! construction entry point and the sieve-backed brute-force reference.

use num_bigint::BigUint;
use num_integer::Integer;
use serde::Serialize;

use crate::arith::{
    carmichael_lambda, factorize, is_prime_u64, lambda_sieve, next_prime_in_class, ResidueClass,
};
use crate::carmichael::plan::{build_plan, LambdaPlan};
use crate::config::{FactorBudget, SieveBudget};
use crate::error::{Error, Result};

/// The realized witness: p_i = d lam_i + 1 prime, gcd(lam1, lam2) = 1, so
/// gcd(p1 - 1, p2 - 1) = d and lambda(p1 p2) = d lam1 lam2.
#[derive(Debug, Clone, Serialize)]
pub struct LambdaWitness {
    #[serde(with = "crate::serde_util::dec")]
    pub p1: u64,
    #[serde(with = "crate::serde_util::dec")]
    pub p2: u64,
    #[serde(with = "crate::serde_util::dec")]
    pub lam1_val: u64,
    #[serde(with = "crate::serde_util::dec")]
    pub lam2_val: u64,
    #[serde(with = "crate::serde_util::dec")]
    pub n: BigUint,
    #[serde(with = "crate::serde_util::dec")]
    pub lambda_n: BigUint,
}

impl LambdaWitness {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serialization cannot fail")
    }
}

/// Searches lifts lam_i = class_i + t_i m1 for the first pair giving two
/// distinct primes with coprime lam values. Pairs (t1, t2) are taken in
/// lexicographic order of (max, min, t1), which makes the output a pure
/// function of the plan. `cap` bounds each t_i.
pub fn realize_witness(plan: &LambdaPlan, cap: u64) -> Result<LambdaWitness> {
    let m1 = plan.m1;
    let c1 = plan.lambda1_class.residue();
    let c2 = plan.lambda2_class.residue();
    let mut t_max = 0u64;
    while t_max <= cap {
        let mut pairs: Vec<(u64, u64)> = Vec::with_capacity(2 * t_max as usize + 1);
        for v in 0..t_max {
            pairs.push((v, t_max));
            pairs.push((t_max, v));
        }
        pairs.push((t_max, t_max));
        for (t1, t2) in pairs {
            let (Some(lam1), Some(lam2)) = (lift(c1, t1, m1), lift(c2, t2, m1)) else {
                continue;
            };
            let Some(candidate) = try_pair(plan, lam1, lam2) else {
                continue;
            };
            return finish_witness(plan, candidate);
        }
        t_max += 1;
    }
    Err(Error::SearchExhausted {
        stage: "realize_witness",
        cap,
    })
}

fn lift(class: u64, t: u64, m1: u64) -> Option<u64> {
    t.checked_mul(m1)?.checked_add(class)
}

fn try_pair(plan: &LambdaPlan, lam1: u64, lam2: u64) -> Option<(u64, u64, u64, u64)> {
    let p1 = plan.d.checked_mul(lam1)?.checked_add(1)?;
    let p2 = plan.d.checked_mul(lam2)?.checked_add(1)?;
    if p1 == p2 || !is_prime_u64(p1) || !is_prime_u64(p2) {
        return None;
    }
    if lam1.gcd(&lam2) != 1 {
        return None;
    }
    Some((p1, p2, lam1, lam2))
}

fn finish_witness(
    plan: &LambdaPlan,
    (p1, p2, lam1, lam2): (u64, u64, u64, u64),
) -> Result<LambdaWitness> {
    let fail = |detail: String| Error::InvariantViolation {
        stage: "realize_witness",
        detail,
    };
    debug_assert_eq!((p1 - 1).gcd(&(p2 - 1)), plan.d);
    let n = BigUint::from(p1) * BigUint::from(p2);
    let lambda_n = BigUint::from(plan.d) * BigUint::from(lam1) * BigUint::from(lam2);
    // independent recomputation from the factorization of n
    let recomputed = carmichael_lambda(&factorize(&n, &FactorBudget::default())?);
    if recomputed != lambda_n {
        return Err(fail(format!("lambda({n}) != d lam1 lam2")));
    }
    if &lambda_n % plan.m_orig != BigUint::from(plan.a_orig % plan.m_orig) {
        return Err(fail(format!("lambda({n}) misses {} (mod {})", plan.a_orig, plan.m_orig)));
    }
    if n >= BigUint::from(plan.m_orig).pow(13) {
        return Err(fail(format!("witness {n} is not below m^13")));
    }
    Ok(LambdaWitness {
        p1,
        p2,
        lam1_val: lam1,
        lam2_val: lam2,
        n,
        lambda_n,
    })
}

/// Which construction produced the witness.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessDetail {
    /// n = 1: lambda(1) = 1 already lies in the class.
    Unit,
    /// a = 0: n is the least prime 1 (mod m), so lambda(n) = n - 1.
    Prime {
        #[serde(with = "crate::serde_util::dec")]
        p: u64,
    },
    /// The general two-prime construction.
    Semiprime {
        plan: LambdaPlan,
        witness: LambdaWitness,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstructOutcome {
    #[serde(with = "crate::serde_util::dec")]
    pub n: BigUint,
    #[serde(with = "crate::serde_util::dec")]
    pub lambda_n: BigUint,
    #[serde(flatten)]
    pub detail: WitnessDetail,
}

/// Default lift cap for the realizer.
pub fn default_realize_cap(m1: u64) -> u64 {
    m1.saturating_mul(10_000)
}

/// Produces n with lambda(n) = a (mod m), for any class that contains an even
/// number plus the classes a = 1 (mod m) covered by n = 1.
pub fn construct(
    a: u64,
    m: u64,
    realize_cap: Option<u64>,
    prime_cap: Option<u64>,
) -> Result<ConstructOutcome> {
    if m == 0 {
        return Err(Error::InvalidInput("modulus must be positive".into()));
    }
    let a = a % m;
    // n = 1 covers every class containing lambda = 1, including a = 1 with
    // even m where the general path has nothing to offer
    if 1 % m == a {
        return Ok(ConstructOutcome {
            n: BigUint::from(1u32),
            lambda_n: BigUint::from(1u32),
            detail: WitnessDetail::Unit,
        });
    }
    if a == 0 {
        let cap = prime_cap.unwrap_or_else(|| default_prime_cap(m));
        let p = next_prime_in_class(ResidueClass::new(1, m)?, 2, cap)?;
        let lambda_n = BigUint::from(p - 1);
        debug_assert!((p - 1) % m == 0);
        return Ok(ConstructOutcome {
            n: BigUint::from(p),
            lambda_n,
            detail: WitnessDetail::Prime { p },
        });
    }
    let plan = build_plan(a, m)?;
    let cap = realize_cap.unwrap_or_else(|| default_realize_cap(plan.m1));
    let witness = realize_witness(&plan, cap)?;
    Ok(ConstructOutcome {
        n: witness.n.clone(),
        lambda_n: witness.lambda_n.clone(),
        detail: WitnessDetail::Semiprime { plan, witness },
    })
}

fn default_prime_cap(m: u64) -> u64 {
    m.saturating_mul(m).saturating_mul(10_000)
}

/// Least n <= bound with lambda(n) = a (mod m), by sieve scan.
pub fn brute_least_witness(
    a: u64,
    m: u64,
    bound: u64,
    budget: &SieveBudget,
) -> Result<Option<u64>> {
    if m == 0 {
        return Err(Error::InvalidInput("modulus must be positive".into()));
    }
    let table = lambda_sieve(bound, budget)?;
    let hit = table
        .iter()
        .find(|(_, lam)| lam % m == a % m)
        .map(|(n, _)| n);
    Ok(hit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_for_two_mod_four() {
        let plan = build_plan(2, 4).unwrap();
        let w = realize_witness(&plan, 1000).unwrap();
        assert_eq!((w.p1, w.p2), (3, 11));
        assert_eq!((w.lam1_val, w.lam2_val), (1, 5));
        assert_eq!(w.n, BigUint::from(33u32));
        assert_eq!(w.lambda_n, BigUint::from(10u32));
    }

    #[test]
    fn construct_zero_class() {
        let out = construct(0, 4, None, None).unwrap();
        assert_eq!(out.n, BigUint::from(5u32));
        assert_eq!(out.lambda_n, BigUint::from(4u32));
    }

    #[test]
    fn construct_unit_class() {
        let out = construct(1, 2, None, None).unwrap();
        assert_eq!(out.n, BigUint::from(1u32));
        let out = construct(1, 100, None, None).unwrap();
        assert_eq!(out.n, BigUint::from(1u32));
        let out = construct(0, 1, None, None).unwrap();
        assert_eq!(out.n, BigUint::from(1u32));
    }

    #[test]
    fn construct_rejects_odd_classes_of_even_moduli() {
        match construct(3, 6, None, None) {
            Err(Error::NoEvenMember { a: 3, m: 6 }) => {}
            other => panic!("expected NoEvenMember, got {other:?}"),
        }
    }

    #[test]
    fn rebalanced_instance_verifies() {
        // the p = 3 obstruction class: plan carries aux = 5
        let out = construct(10, 18, None, None).unwrap();
        match &out.detail {
            WitnessDetail::Semiprime { plan, witness } => {
                assert_eq!(plan.aux, 5);
                assert_eq!(&out.lambda_n % 18u64, BigUint::from(10u32));
                assert_eq!((witness.p1 - 1).gcd(&(witness.p2 - 1)), plan.d);
            }
            other => panic!("expected semiprime witness, got {other:?}"),
        }
    }

    #[test]
    fn brute_reference_examples() {
        let budget = SieveBudget::default();
        assert_eq!(brute_least_witness(4, 6, 100, &budget).unwrap(), Some(5));
        assert_eq!(brute_least_witness(0, 1, 1, &budget).unwrap(), Some(1));
        assert_eq!(brute_least_witness(3, 6, 100_000, &budget).unwrap(), None);
    }

    #[test]
    fn realizer_cap_exhaustion() {
        let plan = build_plan(2, 4).unwrap();
        match realize_witness(&plan, 0) {
            Err(Error::SearchExhausted { stage, .. }) => assert_eq!(stage, "realize_witness"),
            other => panic!("expected exhaustion, got {other:?}"),
        }
    }
}
