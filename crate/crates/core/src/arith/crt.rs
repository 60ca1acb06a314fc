//! Residue classes and the Chinese remainder combination.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// The class of all integers congruent to `residue` modulo `modulus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ResidueClass {
    #[serde(with = "crate::serde_util::dec")]
    residue: u64,
    #[serde(with = "crate::serde_util::dec")]
    modulus: u64,
}

impl ResidueClass {
    /// The residue is reduced, so the invariant residue < modulus always holds.
    pub fn new(residue: u64, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidInput("modulus must be positive".into()));
        }
        Ok(ResidueClass {
            residue: residue % modulus,
            modulus,
        })
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn contains(&self, n: u64) -> bool {
        n % self.modulus == self.residue
    }
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.residue, self.modulus)
    }
}

/// The unique class modulo lcm of the moduli meeting every input class.
pub fn crt_combine(classes: &[ResidueClass]) -> Result<ResidueClass> {
    let (first, rest) = classes
        .split_first()
        .ok_or_else(|| Error::InvalidInput("crt_combine needs at least one class".into()))?;
    let mut acc = *first;
    for class in rest {
        acc = combine_pair(acc, *class)?;
    }
    Ok(acc)
}

fn combine_pair(a: ResidueClass, b: ResidueClass) -> Result<ResidueClass> {
    let (r1, m1) = (a.residue as i128, a.modulus as i128);
    let (r2, m2) = (b.residue as i128, b.modulus as i128);
    let g = (a.modulus).gcd(&b.modulus) as i128;
    if (r2 - r1).rem_euclid(g) != 0 {
        return Err(Error::CrtConflict {
            first: a,
            second: b,
        });
    }
    let lcm = (a.modulus / a.modulus.gcd(&b.modulus))
        .checked_mul(b.modulus)
        .ok_or(Error::CrtOverflow {
            first: a,
            second: b,
        })? as i128;
    // x = r1 + m1 * t where t = (r2 - r1)/g * inv(m1/g) modulo m2/g
    let m2g = m2 / g;
    let inv = mod_inverse(((m1 / g) % m2g + m2g) % m2g, m2g)
        .expect("m1/g and m2/g are coprime by construction");
    let t = ((r2 - r1) / g % m2g * inv) % m2g;
    let x = (r1 + m1 * t).rem_euclid(lcm);
    Ok(ResidueClass {
        residue: x as u64,
        modulus: lcm as u64,
    })
}

/// Inverse of a modulo m, when gcd(a, m) = 1. m = 1 yields 0.
pub(crate) fn mod_inverse(a: i128, m: i128) -> Option<i128> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a.rem_euclid(m), m);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m))
}

/// u64 front end for the modular inverse.
pub fn mod_inverse_u64(a: u64, m: u64) -> Option<u64> {
    mod_inverse(a as i128, m as i128).map(|x| x as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rc(r: u64, m: u64) -> ResidueClass {
        ResidueClass::new(r, m).unwrap()
    }

    #[test]
    fn single_class_is_identity() {
        assert_eq!(crt_combine(&[rc(1, 4)]).unwrap(), rc(1, 4));
    }

    #[test]
    fn combines_coprime_moduli() {
        let out = crt_combine(&[rc(1, 4), rc(2, 3)]).unwrap();
        assert_eq!(out, rc(5, 12));
    }

    #[test]
    fn conflict_names_the_pair() {
        match crt_combine(&[rc(1, 4), rc(2, 4)]) {
            Err(Error::CrtConflict { first, second }) => {
                assert_eq!(first, rc(1, 4));
                assert_eq!(second, rc(2, 4));
            }
            other => panic!("expected conflict, got {other:?}"),
        }
    }

    #[test]
    fn overlapping_moduli() {
        // x = 2 (mod 6), x = 8 (mod 10) -> x = 8 (mod 30)
        let out = crt_combine(&[rc(2, 6), rc(8, 10)]).unwrap();
        assert_eq!(out, rc(8, 30));
    }

    #[test]
    fn matches_brute_scan() {
        let inputs = [rc(3, 7), rc(1, 4), rc(4, 9)];
        let out = crt_combine(&inputs).unwrap();
        assert_eq!(out.modulus(), 252);
        let brute = (0..252u64)
            .find(|&x| inputs.iter().all(|c| c.contains(x)))
            .unwrap();
        assert_eq!(out.residue(), brute);
    }

    #[test]
    fn inverse() {
        assert_eq!(mod_inverse_u64(3, 7), Some(5));
        assert_eq!(mod_inverse_u64(2, 4), None);
        assert_eq!(mod_inverse_u64(5, 1), Some(0));
    }
}
