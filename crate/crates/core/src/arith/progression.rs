//! Primitive roots of odd prime powers and prime search in a residue class.

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::arith::crt::ResidueClass;
use crate::arith::factor::factorize_u64;
use crate::arith::primality::{is_prime_u64, powmod};
use crate::error::{Error, Result};

/// Smallest g whose multiplicative order modulo p^beta is phi(p^beta).
///
/// Requires p an odd prime with p^beta in u64 range; both are asserted.
pub fn primitive_root_prime_power(p: u64, beta: u32) -> u64 {
    assert!(p % 2 == 1 && is_prime_u64(p), "p must be an odd prime");
    let modulus = p.checked_pow(beta).expect("p^beta must fit in u64");
    let phi = modulus / p * (p - 1);
    let phi_primes: Vec<u64> = factorize_u64(phi)
        .factors_u64()
        .expect("phi fits in u64")
        .into_iter()
        .map(|(q, _)| q)
        .collect();
    'candidate: for g in 2..modulus {
        if g % p == 0 {
            continue;
        }
        for &q in &phi_primes {
            if powmod(g, phi / q, modulus) == 1 {
                continue 'candidate;
            }
        }
        return g;
    }
    unreachable!("every odd prime power has a primitive root")
}

/// Smallest prime >= start lying in the class, or SearchExhausted once
/// candidates pass `cap`. The cap bounds runtime; it says nothing about
/// existence beyond it.
pub fn next_prime_in_class(class: ResidueClass, start: u64, cap: u64) -> Result<u64> {
    let r = class.residue();
    let m = class.modulus();
    let exhausted = Err(Error::SearchExhausted {
        stage: "prime_in_class",
        cap,
    });
    let g = r.gcd(&m);
    if g > 1 {
        // every member is divisible by g, so g itself is the only possible prime
        if is_prime_u64(g) && g % m == r && g >= start && g <= cap {
            return Ok(g);
        }
        return exhausted;
    }
    // first member >= max(start, 2)
    let lo = start.max(2);
    let mut n = if lo <= r {
        r
    } else {
        let steps = (lo - r).div_ceil(m);
        match (steps as u128 * m as u128 + r as u128).to_u64() {
            Some(v) => v,
            None => return exhausted,
        }
    };
    if n < 2 {
        n = match n.checked_add(m) {
            Some(v) => v,
            None => return exhausted,
        };
    }
    while n <= cap {
        if is_prime_u64(n) {
            return Ok(n);
        }
        n = match n.checked_add(m) {
            Some(v) => v,
            None => break,
        };
    }
    exhausted
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rc(r: u64, m: u64) -> ResidueClass {
        ResidueClass::new(r, m).unwrap()
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(primitive_root_prime_power(3, 1), 2);
        assert_eq!(primitive_root_prime_power(3, 2), 2);
        assert_eq!(primitive_root_prime_power(7, 1), 3);
        assert_eq!(primitive_root_prime_power(5, 1), 2);
    }

    #[test]
    fn primitive_root_has_full_order() {
        for (p, beta) in [(3u64, 3u32), (5, 2), (11, 1), (13, 2)] {
            let g = primitive_root_prime_power(p, beta);
            let modulus = p.pow(beta);
            let phi = modulus / p * (p - 1);
            let mut seen = 1u64;
            let mut x = g;
            while x != 1 {
                x = (x as u128 * g as u128 % modulus as u128) as u64;
                seen += 1;
            }
            assert_eq!(seen, phi, "order of {g} mod {p}^{beta}");
        }
    }

    #[test]
    fn prime_search_examples() {
        assert_eq!(next_prime_in_class(rc(1, 4), 2, 10_000).unwrap(), 5);
        assert_eq!(next_prime_in_class(rc(11, 12), 2, 10_000).unwrap(), 11);
        assert_eq!(next_prime_in_class(rc(2, 3), 2, 10_000).unwrap(), 2);
        assert_eq!(next_prime_in_class(rc(2, 3), 3, 10_000).unwrap(), 5);
    }

    #[test]
    fn shared_factor_classes() {
        // 3 (mod 12): only the prime 3 itself lives here
        assert_eq!(next_prime_in_class(rc(3, 12), 2, 100).unwrap(), 3);
        match next_prime_in_class(rc(3, 12), 4, 100) {
            Err(Error::SearchExhausted { .. }) => {}
            other => panic!("expected exhaustion, got {other:?}"),
        }
        // 6 (mod 12) contains no primes at all
        assert!(next_prime_in_class(rc(6, 12), 2, 1_000_000).is_err());
    }

    #[test]
    fn cap_forces_exhaustion() {
        match next_prime_in_class(rc(1, 4), 6, 12) {
            Err(Error::SearchExhausted { cap, .. }) => assert_eq!(cap, 12),
            other => panic!("expected exhaustion, got {other:?}"),
        }
    }
}
