//! Splitting behavior of the trinomials modulo primes: root counts through
//! gcd(X^p - X, f), full degree patterns through distinct-degree
//! factorization, and root extraction.
//!
//! For a prime p unramified in the splitting field, the degree pattern of
//! f mod p is the cycle type of the Frobenius element at p.

use num_bigint::BigInt;
use serde::Serialize;

use crate::polymod::poly::PolyModP;
use crate::polymod::trinomial::TrinomialFamily;

/// Factor-degree data of f_k mod p.
///
/// `degree_pattern` lists irreducible factor degrees with multiplicity and
/// always sums to k. When `squarefree_mod_p` holds, the number of 1s in the
/// pattern equals `root_count`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplittingReport {
    #[serde(with = "crate::serde_util::dec")]
    pub p: u64,
    pub root_count: u32,
    pub degree_pattern: Vec<u32>,
    pub squarefree_mod_p: bool,
}

/// Number of distinct roots of f_k mod p, as deg gcd(X^p - X, f_k).
pub fn count_roots_mod_p(fam: &TrinomialFamily, p: u64) -> u32 {
    count_roots_poly(&fam.reduce_mod(p))
}

pub(crate) fn count_roots_poly(f: &PolyModP) -> u32 {
    linear_part(f).degree().unwrap_or(0) as u32
}

/// gcd(X^p - X, f): the product of (X - r) over the distinct roots r.
fn linear_part(f: &PolyModP) -> PolyModP {
    let p = f.modulus();
    let x = PolyModP::x(p);
    let xp = x.pow_mod(p, f);
    xp.sub(&x).gcd(f)
}

/// True iff f_k splits into k distinct linear factors mod p.
pub fn splits_completely_mod_p(fam: &TrinomialFamily, p: u64) -> bool {
    let f = fam.reduce_mod(p);
    is_squarefree(&f) && count_roots_poly(&f) == fam.k()
}

fn is_squarefree(f: &PolyModP) -> bool {
    f.gcd(&f.derivative()).degree() == Some(0)
}

/// Full degree pattern and squarefree flag of f_k mod p.
pub fn splitting_report(fam: &TrinomialFamily, p: u64) -> SplittingReport {
    let f = fam.reduce_mod(p);
    let squarefree = is_squarefree(&f);
    let root_count = count_roots_poly(&f);
    let mut degree_pattern = Vec::new();
    for (part, multiplicity) in squarefree_decomposition(&f) {
        for (deg, count) in distinct_degree_pattern(&part) {
            for _ in 0..count * multiplicity {
                degree_pattern.push(deg);
            }
        }
    }
    degree_pattern.sort_unstable();
    SplittingReport {
        p,
        root_count,
        degree_pattern,
        squarefree_mod_p: squarefree,
    }
}

/// Musser-style squarefree decomposition over GF(p): pairs of a monic
/// squarefree polynomial and its multiplicity in f.
pub(crate) fn squarefree_decomposition(f: &PolyModP) -> Vec<(PolyModP, u32)> {
    let p = f.modulus();
    let mut out = Vec::new();
    let f = f.make_monic();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let deriv = f.derivative();
    if deriv.is_zero() {
        // f = g(X^p) = g(X)^p over the prime field
        for (part, m) in squarefree_decomposition(&f.pth_root()) {
            out.push((part, m * p as u32));
        }
        return out;
    }
    let mut c = f.gcd(&deriv);
    let mut w = f.divrem(&c).0;
    let mut i = 1u32;
    while w.degree() > Some(0) {
        let y = w.gcd(&c);
        let z = w.divrem(&y).0;
        if z.degree() > Some(0) {
            out.push((z, i));
        }
        c = c.divrem(&y).0;
        w = y;
        i += 1;
    }
    if c.degree() > Some(0) {
        for (part, m) in squarefree_decomposition(&c.pth_root()) {
            out.push((part, m * p as u32));
        }
    }
    out
}

/// Distinct-degree factorization of a monic squarefree f: pairs (d, count)
/// meaning `count` irreducible factors of degree d.
pub(crate) fn distinct_degree_pattern(f: &PolyModP) -> Vec<(u32, u32)> {
    let p = f.modulus();
    let mut f = f.make_monic();
    let mut out = Vec::new();
    let mut h = PolyModP::x(p);
    let mut d = 0u32;
    loop {
        let deg = match f.degree() {
            None | Some(0) => break,
            Some(deg) => deg,
        };
        if deg < 2 * (d as usize + 1) {
            // everything left is a single irreducible factor
            out.push((deg as u32, 1));
            break;
        }
        d += 1;
        h = h.pow_mod(p, &f);
        let g = h.sub(&PolyModP::x(p)).gcd(&f);
        if let Some(gd) = g.degree() {
            if gd > 0 {
                out.push((d, (gd / d as usize) as u32));
                f = f.divrem(&g).0;
                if f.degree().unwrap_or(0) > 0 {
                    h = h.rem(&f);
                }
            }
        }
    }
    out
}

/// All roots of f mod p, ascending. Deterministic: repeated gcd splitting with
/// the shifts delta = 1, 2, 3, ...
pub fn roots_mod_p(f: &PolyModP) -> Vec<u64> {
    let p = f.modulus();
    if p <= 3 {
        let mut roots: Vec<u64> = (0..p).filter(|&x| f.eval(x) == 0).collect();
        roots.sort_unstable();
        return roots;
    }
    let lin = linear_part(f);
    let mut roots = Vec::new();
    split_linear(&lin, &mut roots);
    roots.sort_unstable();
    roots
}

fn split_linear(g: &PolyModP, roots: &mut Vec<u64>) {
    let p = g.modulus();
    match g.degree() {
        None | Some(0) => {}
        Some(1) => {
            // monic x + c0 has the root -c0
            let c0 = g.coeffs()[0];
            roots.push((p - c0) % p);
        }
        Some(_) => {
            // split by gcd with (x + delta)^((p-1)/2) - 1 for successive shifts
            for delta in 0..p {
                if g.eval((p - delta) % p) == 0 {
                    // -delta is a root; divide it out to keep powers cheap
                    let lin = PolyModP::new(p, vec![delta, 1]);
                    roots.push((p - delta) % p);
                    split_linear(&g.divrem(&lin).0, roots);
                    return;
                }
                let base = PolyModP::new(p, vec![delta, 1]);
                let h = base.pow_mod((p - 1) / 2, g).sub(&PolyModP::constant(p, 1));
                let d = h.gcd(g);
                let dd = d.degree().unwrap_or(0);
                if dd > 0 && dd < g.degree().unwrap() {
                    split_linear(&d, roots);
                    split_linear(&g.divrem(&d).0, roots);
                    return;
                }
            }
            unreachable!("a product of distinct linear factors always splits")
        }
    }
}

/// Verdict from degree-pattern sampling. Never a proof of irreducibility; the
/// only certification in this crate is the a = 2q criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternEvidence {
    /// No nontrivial fixed partition of k is refined by every sampled pattern.
    ConsistentWithIrreducible,
    /// Some fixed factorization shape survives all samples.
    RationalFactorizationPossible,
    /// k too large for the partition scan.
    Unknown,
}

/// Samples splitting patterns at `count` deterministic primes not dividing the
/// discriminant and checks whether any fixed rational factorization shape is
/// compatible with all of them.
pub fn pattern_evidence(fam: &TrinomialFamily, count: usize) -> PatternEvidence {
    if fam.k() > 16 {
        return PatternEvidence::Unknown;
    }
    let disc = fam.discriminant();
    let mut patterns = Vec::new();
    let mut p = 1000u64;
    while patterns.len() < count {
        p = next_prime_above(p);
        if (disc.clone() % BigInt::from(p)).sign() == num_bigint::Sign::NoSign {
            continue;
        }
        patterns.push(splitting_report(fam, p).degree_pattern);
    }
    let k = fam.k();
    for partition in partitions_of(k) {
        if partition.len() == 1 {
            continue;
        }
        if patterns.iter().all(|pat| refines(pat, &partition)) {
            return PatternEvidence::RationalFactorizationPossible;
        }
    }
    PatternEvidence::ConsistentWithIrreducible
}

fn next_prime_above(n: u64) -> u64 {
    let mut c = n + 1;
    while !crate::arith::is_prime_u64(c) {
        c += 1;
    }
    c
}

fn partitions_of(k: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            rec(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}

/// Can the parts of `pattern` be grouped so the group sums are exactly
/// `target`? That is what a rational factorization with those degrees would
/// force on every unramified prime.
fn refines(pattern: &[u32], target: &[u32]) -> bool {
    fn assign(parts: &[u32], bins: &mut Vec<u32>, idx: usize) -> bool {
        if idx == parts.len() {
            return bins.iter().all(|&b| b == 0);
        }
        let mut tried = Vec::new();
        for b in 0..bins.len() {
            if bins[b] >= parts[idx] && !tried.contains(&bins[b]) {
                tried.push(bins[b]);
                bins[b] -= parts[idx];
                if assign(parts, bins, idx + 1) {
                    bins[b] += parts[idx];
                    return true;
                }
                bins[b] += parts[idx];
            }
        }
        false
    }
    let mut parts: Vec<u32> = pattern.to_vec();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    let mut bins = target.to_vec();
    assign(&parts, &mut bins, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(k: u32, a: u64) -> TrinomialFamily {
        TrinomialFamily::new(k, a).unwrap()
    }

    #[test]
    fn root_counts_for_quadratic() {
        let f = fam(2, 10);
        assert_eq!(count_roots_mod_p(&f, 7), 0);
        assert_eq!(count_roots_mod_p(&f, 41), 1); // double root at 21
        assert_eq!(count_roots_mod_p(&f, 5), 2); // roots 0 and 1
    }

    #[test]
    fn gcd_count_matches_exhaustive_evaluation() {
        for k in [2u32, 3, 4, 5] {
            for a in [10u64, 14] {
                let f = fam(k, a);
                for p in crate::arith::primes_up_to(200) {
                    let poly = f.reduce_mod(p);
                    let direct = (0..p).filter(|&x| poly.eval(x) == 0).count() as u32;
                    assert_eq!(count_roots_mod_p(&f, p), direct, "k={k} a={a} p={p}");
                }
            }
        }
    }

    #[test]
    fn split_detection() {
        let f = fam(2, 10);
        assert!(splits_completely_mod_p(&f, 5));
        assert!(!splits_completely_mod_p(&f, 7));
        assert!(!splits_completely_mod_p(&f, 41)); // ramified: double root
    }

    #[test]
    fn reports_for_quadratic() {
        let f = fam(2, 10);
        let r7 = splitting_report(&f, 7);
        assert_eq!(r7.degree_pattern, vec![2]);
        assert!(r7.squarefree_mod_p);

        let r5 = splitting_report(&f, 5);
        assert_eq!(r5.degree_pattern, vec![1, 1]);
        assert!(r5.squarefree_mod_p);

        let r41 = splitting_report(&f, 41);
        assert!(!r41.squarefree_mod_p);
        assert_eq!(r41.degree_pattern, vec![1, 1]);
        assert_eq!(r41.root_count, 1);
    }

    #[test]
    fn pattern_always_sums_to_k() {
        for k in 2..=6u32 {
            for a in [10u64, 14, 22] {
                let f = fam(k, a);
                for p in crate::arith::primes_up_to(100) {
                    let report = splitting_report(&f, p);
                    let total: u32 = report.degree_pattern.iter().sum();
                    assert_eq!(total, k, "k={k} a={a} p={p}");
                    if report.squarefree_mod_p {
                        let ones =
                            report.degree_pattern.iter().filter(|&&d| d == 1).count() as u32;
                        assert_eq!(ones, report.root_count);
                    }
                }
            }
        }
    }

    #[test]
    fn roots_are_actual_roots() {
        let f = fam(3, 14);
        for p in crate::arith::primes_up_to(500) {
            let poly = f.reduce_mod(p);
            let roots = roots_mod_p(&poly);
            let direct: Vec<u64> = (0..p).filter(|&x| poly.eval(x) == 0).collect();
            assert_eq!(roots, direct, "p = {p}");
        }
    }

    #[test]
    fn ramified_iff_discriminant_divisible() {
        for k in 2..=5u32 {
            for a in [10u64, 14, 26] {
                let f = fam(k, a);
                let disc = f.discriminant();
                for p in crate::arith::primes_up_to(300) {
                    let divides = (disc.clone() % BigInt::from(p)).sign() == num_bigint::Sign::NoSign;
                    let report = splitting_report(&f, p);
                    assert_eq!(divides, !report.squarefree_mod_p, "k={k} a={a} p={p}");
                }
            }
        }
    }

    #[test]
    fn evidence_for_certified_families() {
        assert_eq!(
            pattern_evidence(&fam(3, 14), 40),
            PatternEvidence::ConsistentWithIrreducible
        );
        assert_eq!(
            pattern_evidence(&fam(4, 14), 40),
            PatternEvidence::ConsistentWithIrreducible
        );
    }

    #[test]
    fn refinement_logic() {
        assert!(refines(&[1, 1, 2], &[2, 2]));
        assert!(refines(&[1, 1, 2], &[4]));
        assert!(!refines(&[3, 1], &[2, 2]));
    }
}
