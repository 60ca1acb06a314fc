//! Normalization and the per-prime-power local residue analysis behind the
//! two-prime construction of n with lambda(n) = a (mod m).
//!
//! The witness has the shape n = p1 p2 with p_i = d lam_i + 1 prime and
//! gcd(lam1, lam2) = 1, so lambda(n) = d lam1 lam2. Solving
//! d lam1 lam2 = a (mod M) splits into one congruence per prime power of
//! m1 = M / gcd(a, M), each handled by one of three cases.
//!
//! One wrinkle the three cases alone cannot absorb: at p = 3 the
//! primitive-root case is empty (every primitive root mod 3^beta is -1 mod 3,
//! so the progression d lam1 + 1 would always be divisible by 3). When that
//! configuration shows up, the linking factor d is multiplied by an auxiliary
//! prime aux = 2 (mod 3) coprime to M, which flips the residue a d^2 mod 3
//! and lands the instance in the generic case instead. `aux` stays 1
//! everywhere else.

use num_integer::Integer;
use serde::Serialize;

use crate::arith::{
    crt_combine, factorize_u64, is_prime_u64, mod_inverse_u64, mulmod, primitive_root_prime_power,
    ResidueClass,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    DividesD,
    Generic,
    PrimitiveRoot,
}

/// Chosen residues for lam1, lam2 modulo one prime power p^beta of m1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LocalResidues {
    #[serde(with = "crate::serde_util::dec")]
    pub p: u64,
    #[serde(with = "crate::serde_util::dec")]
    pub beta: u32,
    pub case_tag: CaseTag,
    #[serde(with = "crate::serde_util::dec")]
    pub lam1_res: u64,
    #[serde(with = "crate::serde_util::dec")]
    pub lam2_res: u64,
}

/// The normalized instance: m doubled if odd, then M = 2^alpha m for
/// alpha = v2(a), d = gcd(a, M), a1 = a/d, m1 = M/d.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Normalized {
    pub a: u64,
    pub m: u64,
    pub alpha: u32,
    pub big_m: u64,
    pub d: u64,
    pub a1: u64,
    pub m1: u64,
}

/// Errors with NoEvenMember when a is odd and m even: that class holds no
/// even number, so no value of lambda past n = 2 can land in it.
pub fn normalize_instance(a: u64, m: u64) -> Result<Normalized> {
    if m < 2 || a == 0 || a >= m {
        return Err(Error::InvalidInput(format!(
            "normalize_instance needs 1 <= a <= m-1, got a = {a}, m = {m}"
        )));
    }
    let (a, m) = if m % 2 == 1 {
        // exactly one of a, a + m is even
        (if a % 2 == 0 { a } else { a + m }, 2 * m)
    } else {
        if a % 2 == 1 {
            return Err(Error::NoEvenMember { a, m });
        }
        (a, m)
    };
    let alpha = a.trailing_zeros();
    let big_m = m
        .checked_shl(alpha)
        .filter(|v| v >> alpha == m)
        .ok_or(Error::Overflow("M = 2^alpha m"))?;
    let d = a.gcd(&big_m);
    let a1 = a / d;
    let m1 = big_m / d;
    debug_assert!(d % 2 == 0 && a1 % 2 == 1 && m1 % 2 == 0);
    Ok(Normalized {
        a,
        m,
        alpha,
        big_m,
        d,
        a1,
        m1,
    })
}

/// Residues for lam1, lam2 modulo p^beta given the (effective) linking factor
/// d and target a1. In every case lam1 lam2 = a1 (mod p^beta) and neither
/// d lam_i + 1 is divisible by p.
pub fn local_residues(p: u64, beta: u32, d: u64, a1: u64) -> Result<LocalResidues> {
    let pb = p
        .checked_pow(beta)
        .ok_or(Error::Overflow("p^beta in local_residues"))?;
    let d_red = d % pb;
    let a1_red = a1 % pb;
    if d % p == 0 {
        // d lam + 1 = 1 (mod p) regardless of lam
        debug_assert!(a1 % p != 0);
        return Ok(LocalResidues {
            p,
            beta,
            case_tag: CaseTag::DividesD,
            lam1_res: a1_red,
            lam2_res: 1 % pb,
        });
    }
    assert!(p % 2 == 1, "p = 2 always divides the even linking factor");
    let t = mulmod(a1 % p, mulmod(d % p, d % p, p), p);
    if t != p - 1 {
        // generic: lam1 = a1 d, lam2 = d^-1, and d lam1 + 1 = a1 d^2 + 1 != 0
        let d_inv = mod_inverse_u64(d_red, pb).expect("p does not divide d");
        return Ok(LocalResidues {
            p,
            beta,
            case_tag: CaseTag::Generic,
            lam1_res: mulmod(a1_red, d_red, pb),
            lam2_res: d_inv,
        });
    }
    if p == 3 {
        // every primitive root mod 3^beta is -1 mod 3, so d lam1 + 1 would
        // always be divisible by 3; the caller must rebalance d first
        return Err(Error::LocalClassObstruction { beta, d, a1 });
    }
    let rho = primitive_root_prime_power(p, beta);
    let rho_inv = mod_inverse_u64(rho, pb).expect("rho is a unit");
    let d_inv = mod_inverse_u64(d_red, pb).expect("p does not divide d");
    debug_assert!((rho + 1) % p != 0, "-1 is not a primitive root for p > 3");
    debug_assert!((1 + p - rho_inv % p) % p != 0, "1 is not a primitive root");
    Ok(LocalResidues {
        p,
        beta,
        case_tag: CaseTag::PrimitiveRoot,
        lam1_res: mulmod(rho, d_inv, pb),
        lam2_res: mulmod(mulmod(a1_red, d_red, pb), rho_inv, pb),
    })
}

/// The assembled plan: normalization data, the per-prime-power locals, and
/// the CRT classes for lam1 and lam2 modulo m1.
///
/// `d` is the effective linking factor including `aux`; d/aux = gcd(a, M).
/// `a1` is the effective target: lam1 lam2 = a1 (mod m1) makes
/// d lam1 lam2 = a (mod M).
#[derive(Debug, Clone, Serialize)]
pub struct LambdaPlan {
    #[serde(with = "crate::serde_util::dec")]
    pub a_orig: u64,
    #[serde(with = "crate::serde_util::dec")]
    pub m_orig: u64,
    #[serde(with = "crate::serde_util::dec")]
    pub a: u64,
    #[serde(with = "crate::serde_util::dec")]
    pub m: u64,
    #[serde(with = "crate::serde_util::dec")]
    pub alpha: u32,
    #[serde(rename = "M", with = "crate::serde_util::dec")]
    pub big_m: u64,
    #[serde(with = "crate::serde_util::dec")]
    pub d: u64,
    #[serde(with = "crate::serde_util::dec")]
    pub aux: u64,
    #[serde(with = "crate::serde_util::dec")]
    pub a1: u64,
    #[serde(with = "crate::serde_util::dec")]
    pub m1: u64,
    pub locals: Vec<LocalResidues>,
    pub lambda1_class: ResidueClass,
    pub lambda2_class: ResidueClass,
}

impl LambdaPlan {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serialization cannot fail")
    }
}

pub fn build_plan(a: u64, m: u64) -> Result<LambdaPlan> {
    let norm = normalize_instance(a, m)?;
    let mut d = norm.d;
    let mut a1 = norm.a1;
    let m1 = norm.m1;

    // rebalance when the p = 3 primitive-root configuration would appear
    let mut aux = 1u64;
    if m1 % 3 == 0 && d % 3 != 0 && mulmod(a1 % 3, d % 3 * (d % 3) % 3, 3) == 2 {
        aux = pick_aux_prime(norm.big_m)?;
        d = d.checked_mul(aux).ok_or(Error::Overflow("d * aux"))?;
        let aux_inv = mod_inverse_u64(aux % m1, m1).expect("aux is coprime to m1");
        a1 = mulmod(a1 % m1, aux_inv, m1);
        debug_assert!(a1 % 2 == 1);
    }

    let mut locals = Vec::new();
    let mut classes1 = Vec::new();
    let mut classes2 = Vec::new();
    for (p, beta) in factorize_u64(m1)
        .factors_u64()
        .expect("m1 fits in u64")
    {
        let local = local_residues(p, beta, d, a1)?;
        let pb = p.pow(beta);
        classes1.push(ResidueClass::new(local.lam1_res, pb)?);
        classes2.push(ResidueClass::new(local.lam2_res, pb)?);
        locals.push(local);
    }
    let lambda1_class = crt_combine(&classes1)?;
    let lambda2_class = crt_combine(&classes2)?;

    let plan = LambdaPlan {
        a_orig: a,
        m_orig: m,
        a: norm.a,
        m: norm.m,
        alpha: norm.alpha,
        big_m: norm.big_m,
        d,
        aux,
        a1,
        m1,
        locals,
        lambda1_class,
        lambda2_class,
    };
    verify_plan(&plan)?;
    Ok(plan)
}

/// Smallest prime aux = 2 (mod 3) coprime to M.
fn pick_aux_prime(big_m: u64) -> Result<u64> {
    let mut c = 5u64;
    loop {
        if c % 3 == 2 && is_prime_u64(c) && big_m % c != 0 {
            return Ok(c);
        }
        c = c.checked_add(2).ok_or(Error::Overflow("aux search"))?;
    }
}

fn verify_plan(plan: &LambdaPlan) -> Result<()> {
    let fail = |detail: String| Error::InvariantViolation {
        stage: "build_plan",
        detail,
    };
    let m1 = plan.m1;
    if plan.lambda1_class.modulus() != m1 || plan.lambda2_class.modulus() != m1 {
        return Err(fail("class moduli differ from m1".into()));
    }
    let l1 = plan.lambda1_class.residue();
    let l2 = plan.lambda2_class.residue();
    if mulmod(l1, l2, m1) != plan.a1 % m1 {
        return Err(fail(format!("lam1 lam2 != a1 (mod {m1})")));
    }
    for (lam, name) in [(l1, "lam1"), (l2, "lam2")] {
        let val = (plan.d as u128 * lam as u128 + 1) % m1 as u128;
        if (val as u64).gcd(&m1) != 1 {
            return Err(fail(format!("d {name} + 1 shares a factor with m1")));
        }
    }
    // d lam1 lam2 = a (mod M): holds for the class representatives because
    // d m1 = aux M and d a1 = a (mod M)
    let big_m = plan.big_m;
    let prod = mulmod(mulmod(plan.d % big_m, l1 % big_m, big_m), l2 % big_m, big_m);
    if prod != plan.a % big_m {
        return Err(fail(format!("d lam1 lam2 != a (mod {big_m})")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_examples() {
        let n = normalize_instance(2, 4).unwrap();
        assert_eq!((n.alpha, n.big_m, n.d, n.a1, n.m1), (1, 8, 2, 1, 4));

        let n = normalize_instance(6, 9).unwrap();
        assert_eq!(n.m, 18);
        assert_eq!((n.alpha, n.big_m, n.d, n.a1, n.m1), (1, 36, 6, 1, 6));

        match normalize_instance(3, 6) {
            Err(Error::NoEvenMember { a: 3, m: 6 }) => {}
            other => panic!("expected NoEvenMember, got {other:?}"),
        }
    }

    #[test]
    fn local_case_divides_d() {
        let loc = local_residues(2, 2, 2, 1).unwrap();
        assert_eq!(loc.case_tag, CaseTag::DividesD);
        assert_eq!((loc.lam1_res, loc.lam2_res), (1, 1));
    }

    #[test]
    fn local_case_generic() {
        // a1 d^2 = 4 = 1 (mod 3)
        let loc = local_residues(3, 1, 2, 1).unwrap();
        assert_eq!(loc.case_tag, CaseTag::Generic);
        assert_eq!((loc.lam1_res, loc.lam2_res), (2, 2));
    }

    #[test]
    fn local_case_primitive_root() {
        // a1 d^2 = 4 = -1 (mod 5), rho_5 = 2
        let loc = local_residues(5, 1, 2, 1).unwrap();
        assert_eq!(loc.case_tag, CaseTag::PrimitiveRoot);
        assert_eq!((loc.lam1_res, loc.lam2_res), (1, 1));
    }

    #[test]
    fn local_obstruction_at_three() {
        // a1 d^2 = 5 * 4 = 2 = -1 (mod 3)
        match local_residues(3, 2, 2, 5) {
            Err(Error::LocalClassObstruction { .. }) => {}
            other => panic!("expected obstruction, got {other:?}"),
        }
    }

    #[test]
    fn plan_for_two_mod_four() {
        let plan = build_plan(2, 4).unwrap();
        assert_eq!(plan.aux, 1);
        assert_eq!(plan.lambda1_class, ResidueClass::new(1, 4).unwrap());
        assert_eq!(plan.lambda2_class, ResidueClass::new(1, 4).unwrap());
        assert_eq!(plan.locals.len(), 1);
        assert_eq!(plan.locals[0].case_tag, CaseTag::DividesD);
    }

    #[test]
    fn plan_rebalances_the_three_obstruction() {
        // a = 10, m = 18: d = 2, a1 = 5, m1 = 18, and a1 d^2 = 2 (mod 3)
        let plan = build_plan(10, 18).unwrap();
        assert_eq!(plan.aux, 5);
        assert_eq!(plan.d, 10);
        assert_eq!(plan.a1, 1);
        // the 3-adic local must now be generic
        let three = plan.locals.iter().find(|l| l.p == 3).unwrap();
        assert_eq!(three.case_tag, CaseTag::Generic);
    }

    #[test]
    fn plans_cover_all_admissible_classes_up_to_60() {
        for m in 2..=60u64 {
            for a in 1..m {
                let admissible = a % 2 == 0 || m % 2 == 1;
                if !admissible || a == 0 {
                    continue;
                }
                let plan = build_plan(a, m);
                assert!(plan.is_ok(), "a={a} m={m}: {plan:?}");
            }
        }
    }
}
