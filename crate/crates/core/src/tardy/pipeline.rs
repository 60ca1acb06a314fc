//! The construction pipeline: pick q, pick the Frobenius prime p, assemble
//! the class a = 2q (mod 12p), build the witness n = r^L, and certify the
//! lower bound by structural search.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{
    crt_combine, factorize, is_prime_u64, mulmod, next_prime_in_class, powmod, primes_up_to,
    ResidueClass,
};
use crate::config::{FactorBudget, SieveBudget};
use crate::error::{Error, Result};
use crate::polymod::{
    count_roots_mod_p, roots_mod_p, splits_completely_mod_p, TrinomialFamily,
};
use crate::tardy::structural::structural_min_search;
use crate::tardy::{LowerBoundCertificate, TardyClass};

/// Product over all pairs 2 <= j < k <= l of (j-1)^(j-1) k^k - j^j (k-1)^(k-1).
/// Any prime shared by two of the discriminants divides 2q times this value,
/// which is why exact divisors of a single discriminant can be distinguished.
pub fn pair_product(l: u32) -> BigUint {
    assert!((3..=16).contains(&l), "l must lie in 3..=16");
    let mut acc = BigInt::one();
    for j in 2..l {
        for k in j + 1..=l {
            let factor = BigInt::from(j - 1).pow(j - 1) * BigInt::from(k).pow(k)
                - BigInt::from(j).pow(j) * BigInt::from(k - 1).pow(k - 1);
            // positive because (x-1)^(x-1) x^-x is decreasing
            assert!(factor.is_positive());
            acc *= factor;
        }
    }
    acc.to_biguint().expect("product of positive factors")
}

/// For each k = 2..=l, the smallest prime p_k (not 2, not q) that divides the
/// discriminant of f_k exactly once and divides no other discriminant in the
/// family. `None` when some k admits no such prime.
pub fn find_distinguishing_primes(
    q: u64,
    l: u32,
    budget: &FactorBudget,
) -> Result<Option<BTreeMap<u32, u64>>> {
    let a = 2 * q;
    let mut discs: Vec<BigInt> = Vec::new();
    let mut factored: Vec<Vec<(BigUint, u32)>> = Vec::new();
    for k in 2..=l {
        let fam = TrinomialFamily::new(k, a)?;
        let disc = fam.discriminant();
        let f = factorize(disc.magnitude(), budget)?;
        factored.push(f.factors().to_vec());
        discs.push(disc);
    }
    let q_big = BigUint::from(q);
    let two = BigUint::from(2u32);
    let mut out = BTreeMap::new();
    for (idx, k) in (2..=l).enumerate() {
        let mut chosen: Option<u64> = None;
        for (prime, exp) in &factored[idx] {
            if *exp != 1 || *prime == two || *prime == q_big {
                continue;
            }
            let divides_other = discs
                .iter()
                .enumerate()
                .any(|(j, d)| j != idx && (d % BigInt::from(prime.clone())).is_zero());
            if divides_other {
                continue;
            }
            let small = prime.to_u64().ok_or_else(|| {
                Error::InvalidInput(format!("distinguishing prime {prime} exceeds 64 bits"))
            })?;
            chosen = Some(small);
            break; // factors are sorted, so the first valid one is smallest
        }
        match chosen {
            Some(p_k) => {
                out.insert(k, p_k);
            }
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

/// Smallest prime q in (max(l, q_min), q_max] with q = 1 (mod 3) for which
/// distinguishing primes exist for every k = 2..=l.
pub fn find_admissible_q(l: u32, q_min: u64, q_max: u64, budget: &FactorBudget) -> Result<u64> {
    let mut q = q_min.max(l as u64) + 1;
    while q <= q_max {
        if q % 3 == 1
            && is_prime_u64(q)
            && find_distinguishing_primes(q, l, budget)?.is_some()
        {
            return Ok(q);
        }
        q += 1;
    }
    Err(Error::SearchExhausted {
        stage: "admissible_q",
        cap: q_max,
    })
}

/// Smallest prime p in [p_min, p_max], coprime to 6a and every discriminant,
/// such that f_k is rootless mod p for all 2 <= k <= l-1 while f_l splits
/// completely. Exhaustion means the range was too small, not nonexistence:
/// such primes have positive density.
pub fn find_frobenius_prime(l: u32, a: u64, p_min: u64, p_max: u64) -> Result<u64> {
    assert!(l >= 3, "need at least the pair f_2, f_l");
    let fams: Vec<TrinomialFamily> = (2..=l)
        .map(|k| TrinomialFamily::new(k, a))
        .collect::<Result<_>>()?;
    let discs: Vec<BigInt> = fams.iter().map(|f| f.discriminant()).collect();
    let six_a = BigInt::from(6u32) * BigInt::from(a);
    let mut p = p_min.max(2);
    while p <= p_max {
        if is_prime_u64(p) && frobenius_pattern_at(p, l, &fams, &discs, &six_a) {
            return Ok(p);
        }
        p += 1;
    }
    Err(Error::SearchExhausted {
        stage: "frobenius_prime",
        cap: p_max,
    })
}

fn frobenius_pattern_at(
    p: u64,
    l: u32,
    fams: &[TrinomialFamily],
    discs: &[BigInt],
    six_a: &BigInt,
) -> bool {
    let p_big = BigInt::from(p);
    if (six_a % &p_big).is_zero() {
        return false;
    }
    if discs.iter().any(|d| (d % &p_big).is_zero()) {
        return false;
    }
    for fam in &fams[..(l - 2) as usize] {
        if count_roots_mod_p(fam, p) != 0 {
            return false;
        }
    }
    splits_completely_mod_p(&fams[(l - 2) as usize], p)
}

/// True iff p divides r^e - r^(e-1) - a for no prime r <= r_limit and no
/// exponent e in [l, exp_max]. Used to discard primes that would admit very
/// small prime-power solutions.
pub fn passes_small_base_exclusion(
    p: u64,
    a: u64,
    l: u32,
    r_limit: u64,
    exp_max: u32,
) -> bool {
    let a_mod = a % p;
    for r in primes_up_to(r_limit) {
        let rp = r % p;
        let mut pw = powmod(rp, l as u64 - 1, p); // r^(e-1) at e = l
        for _ in l..=exp_max {
            // r^e - r^(e-1) - a = pw (r - 1) - a (mod p)
            let val = (mulmod(pw, (rp + p - 1) % p, p) + p - a_mod) % p;
            if val == 0 {
                return false;
            }
            pw = mulmod(pw, rp, p);
        }
    }
    true
}

/// Default exponent ceiling for the small-base exclusion scan.
pub fn default_exclusion_exponent(l: u32) -> u32 {
    (4.0 * l as f64 * (1e6f64).ln()).ceil() as u32
}

/// Assembles the class a = 2q (mod 12p) after re-verifying every invariant.
/// l = 3 (or any odd l >= 3) is accepted for diagnostics; witnesses require
/// an even exponent.
pub fn build_tardy_class(l: u32, q: u64, p: u64, budget: &FactorBudget) -> Result<TardyClass> {
    let fail = |detail: String| Error::InvariantViolation {
        stage: "build_tardy_class",
        detail,
    };
    if l < 3 {
        return Err(Error::InvalidInput("l must be at least 3".into()));
    }
    if !is_prime_u64(q) || q % 3 != 1 || q <= l as u64 {
        return Err(fail(format!("q = {q} is not a prime > {l} with q = 1 (mod 3)")));
    }
    let a = 2 * q;
    if !is_prime_u64(p) {
        return Err(fail(format!("p = {p} is not prime")));
    }
    if (6u128 * a as u128) % p as u128 == 0 {
        return Err(fail(format!("p = {p} divides 6a")));
    }
    let distinguishing = find_distinguishing_primes(q, l, budget)?
        .ok_or_else(|| fail(format!("no distinguishing primes for q = {q}")))?;
    for k in 2..=l {
        let fam = TrinomialFamily::new(k, a)?;
        if (fam.discriminant() % BigInt::from(p)).is_zero() {
            return Err(fail(format!("p divides the discriminant of f_{k}")));
        }
        if k < l {
            let roots = count_roots_mod_p(&fam, p);
            if roots != 0 {
                return Err(fail(format!("f_{k} has {roots} roots mod p")));
            }
        } else if !splits_completely_mod_p(&fam, p) {
            return Err(fail(format!("f_{l} does not split completely mod p")));
        }
    }
    let f_l = TrinomialFamily::new(l, a)?.reduce_mod(p);
    let roots = roots_mod_p(&f_l);
    let witness_root = *roots
        .first()
        .ok_or_else(|| fail("no root of f_l despite full splitting".into()))?;
    if witness_root == 0 || f_l.eval(witness_root) != 0 {
        return Err(fail(format!("bad witness root {witness_root}")));
    }
    let m = p
        .checked_mul(12)
        .ok_or(Error::Overflow("m = 12p"))?;
    Ok(TardyClass {
        l,
        q,
        p,
        a,
        m,
        distinguishing_primes: distinguishing,
        witness_root,
    })
}

/// The least prime r with r = x0 (mod p), r = 3 (mod 4), r = 2 (mod 3), and
/// the witness n = r^L, whose totient r^(L-1)(r-1) is checked exactly against
/// a (mod m). Requires even L: for odd L the value r^L - r^(L-1) can only be
/// 0 or 1 mod 3, never a = 2q = 2 (mod 3).
pub fn find_totient_witness(tc: &TardyClass, cap: u64) -> Result<(u64, BigUint)> {
    if tc.l % 2 == 1 {
        return Err(Error::OddExponentObstruction { l: tc.l });
    }
    let class = crt_combine(&[
        ResidueClass::new(tc.witness_root, tc.p)?,
        ResidueClass::new(3, 4)?,
        ResidueClass::new(2, 3)?,
    ])?;
    debug_assert_eq!(class.modulus(), tc.m);
    let r = next_prime_in_class(class, 2, cap)?;
    let n = BigUint::from(r).pow(tc.l);
    let phi = BigUint::from(r).pow(tc.l - 1) * (r - 1);
    if &phi % tc.m != BigUint::from(tc.a % tc.m) {
        return Err(Error::InvariantViolation {
            stage: "find_totient_witness",
            detail: format!("phi(r^L) for r = {r} misses the class"),
        });
    }
    Ok((r, n))
}

/// Knobs for the end-to-end run.
#[derive(Debug, Clone)]
pub struct TardyParams {
    pub l: u32,
    pub q_min: u64,
    pub q_max: u64,
    pub p_min: u64,
    pub p_max: u64,
    /// Structural certificate bound; defaults to m^2.
    pub verify_bound: Option<u64>,
    /// Cap for the witness prime search; defaults to 10^4 m^2.
    pub witness_cap: Option<u64>,
    pub exclusion_r_limit: u64,
    pub exclusion_exponent: Option<u32>,
    pub factor_budget: FactorBudget,
    pub sieve_budget: SieveBudget,
}

impl TardyParams {
    pub fn for_exponent(l: u32) -> Self {
        TardyParams {
            l,
            q_min: l as u64,
            q_max: 10_000,
            p_min: 5,
            p_max: 1_000_000,
            verify_bound: None,
            witness_cap: None,
            exclusion_r_limit: 1_000,
            exclusion_exponent: None,
            factor_budget: FactorBudget::default(),
            sieve_budget: SieveBudget::default(),
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct PipelineStats {
    pub frobenius_primes_considered: u64,
    pub rejected_by_exclusion: u64,
    pub rejected_by_certificate: u64,
}

/// Full pipeline output: the certified class, its explicit witness, and the
/// structural lower-bound certificate.
#[derive(Debug, Clone, Serialize)]
pub struct TardyRun {
    pub class: TardyClass,
    #[serde(with = "crate::serde_util::dec")]
    pub witness_prime: u64,
    #[serde(with = "crate::serde_util::dec")]
    pub witness: BigUint,
    #[serde(with = "crate::serde_util::dec")]
    pub witness_phi: BigUint,
    pub certificate: LowerBoundCertificate,
    pub stats: PipelineStats,
}

/// Runs the whole construction. Frobenius primes are taken in increasing
/// order; ones failing the small-base exclusion or whose certificate finds a
/// hit below the verify bound are skipped.
pub fn construct_tardy(params: &TardyParams) -> Result<TardyRun> {
    if params.l < 4 || params.l % 2 != 0 {
        return Err(Error::InvalidInput(format!(
            "exponent must be even and at least 4, got {}",
            params.l
        )));
    }
    let q = find_admissible_q(params.l, params.q_min, params.q_max, &params.factor_budget)?;
    let a = 2 * q;
    let exp_max = params
        .exclusion_exponent
        .unwrap_or_else(|| default_exclusion_exponent(params.l));
    let mut stats = PipelineStats::default();
    let mut p_cursor = params.p_min;
    loop {
        let p = find_frobenius_prime(params.l, a, p_cursor, params.p_max)?;
        p_cursor = p + 1;
        stats.frobenius_primes_considered += 1;
        if !passes_small_base_exclusion(p, a, params.l, params.exclusion_r_limit, exp_max) {
            stats.rejected_by_exclusion += 1;
            continue;
        }
        let class = build_tardy_class(params.l, q, p, &params.factor_budget)?;
        let witness_cap = params
            .witness_cap
            .unwrap_or_else(|| class.m.saturating_mul(class.m).saturating_mul(10_000));
        let (r, n) = find_totient_witness(&class, witness_cap)?;
        let bound = params
            .verify_bound
            .unwrap_or_else(|| class.m.saturating_mul(class.m));
        let report = structural_min_search(class.a, class.m, bound, &params.sieve_budget)?;
        if report.certificate.smallest_hit.is_some() {
            stats.rejected_by_certificate += 1;
            continue;
        }
        let phi = BigUint::from(r).pow(params.l - 1) * (r - 1);
        return Ok(TardyRun {
            class,
            witness_prime: r,
            witness: n,
            witness_phi: phi,
            certificate: report.certificate,
            stats,
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn budget() -> FactorBudget {
        FactorBudget::default()
    }

    #[test]
    fn pair_products() {
        assert_eq!(pair_product(3), BigUint::from(11u32));
        assert_eq!(pair_product(4), BigUint::from(480_260u32));
        for l in 3..=16 {
            assert!(pair_product(l) > BigUint::zero());
        }
    }

    #[test]
    fn distinguishing_primes_for_q7() {
        let map = find_distinguishing_primes(7, 3, &budget()).unwrap().unwrap();
        assert_eq!(map.get(&2), Some(&3)); // 57 = 3 * 19
        assert_eq!(map.get(&3), Some(&191)); // 5348 = 2^2 * 7 * 191
    }

    #[test]
    fn admissible_q_search() {
        assert_eq!(find_admissible_q(3, 3, 20, &budget()).unwrap(), 7);
        match find_admissible_q(3, 3, 5, &budget()) {
            Err(Error::SearchExhausted { stage, .. }) => assert_eq!(stage, "admissible_q"),
            other => panic!("expected exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn frobenius_prime_satisfies_conditions() {
        let p = find_frobenius_prime(3, 14, 5, 100_000).unwrap();
        let f2 = TrinomialFamily::new(2, 14u64).unwrap();
        let f3 = TrinomialFamily::new(3, 14u64).unwrap();
        assert_eq!(count_roots_mod_p(&f2, p), 0);
        assert!(splits_completely_mod_p(&f3, p));
    }

    #[test]
    fn frobenius_range_too_small() {
        match find_frobenius_prime(3, 14, 2, 3) {
            Err(Error::SearchExhausted { stage, .. }) => assert_eq!(stage, "frobenius_prime"),
            other => panic!("expected exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn small_base_exclusion_detects_hits() {
        // 2^4 - 2^3 - 14 = -6 = 0 (mod 3)
        assert!(!passes_small_base_exclusion(3, 14, 3, 10, 10));
    }

    #[test]
    fn exclusion_is_monotone_in_the_ranges() {
        let p = 1009;
        let wide = passes_small_base_exclusion(p, 14, 3, 1000, 100);
        let narrow = passes_small_base_exclusion(p, 14, 3, 100, 50);
        if wide {
            assert!(narrow);
        }
    }

    #[test]
    fn diagnostic_class_at_l3() {
        let p = find_frobenius_prime(3, 14, 5, 100_000).unwrap();
        let class = build_tardy_class(3, 7, p, &budget()).unwrap();
        assert_eq!(class.a(), 14);
        assert_eq!(class.m(), 12 * p);
        let f3 = TrinomialFamily::new(3, 14u64).unwrap().reduce_mod(p);
        assert_eq!(f3.eval(class.witness_root()), 0);
        // odd exponent: witness construction must refuse
        match find_totient_witness(&class, 1 << 40) {
            Err(Error::OddExponentObstruction { l: 3 }) => {}
            other => panic!("expected obstruction, got {other:?}"),
        }
    }

    #[test]
    fn rejects_odd_or_small_exponent() {
        let mut params = TardyParams::for_exponent(5);
        assert!(matches!(
            construct_tardy(&params),
            Err(Error::InvalidInput(_))
        ));
        params.l = 2;
        assert!(matches!(
            construct_tardy(&params),
            Err(Error::InvalidInput(_))
        ));
    }
}

