//! Euler's totient and the Carmichael function from a factorization.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::arith::factor::{factorize_u64, Factorization};

/// phi(n) = prod p^(e-1) (p-1) over the factorization.
pub fn euler_phi(f: &Factorization) -> BigUint {
    let mut acc = BigUint::one();
    for (p, e) in f.factors() {
        acc *= p.pow(e - 1) * (p - 1u32);
    }
    acc
}

/// lambda(n): the exponent of the multiplicative group mod n.
///
/// lambda(2) = 1, lambda(4) = 2, lambda(2^e) = 2^(e-2) for e >= 3, and
/// lambda(p^e) = p^(e-1)(p-1) for odd p; the total is the lcm over the
/// prime powers. lambda(1) = 1 by convention.
pub fn carmichael_lambda(f: &Factorization) -> BigUint {
    let mut acc = BigUint::one();
    for (p, e) in f.factors() {
        acc = acc.lcm(&lambda_prime_power(p, *e));
    }
    acc
}

fn lambda_prime_power(p: &BigUint, e: u32) -> BigUint {
    if *p == BigUint::from(2u32) {
        match e {
            1 => BigUint::one(),
            2 => BigUint::from(2u32),
            _ => BigUint::one() << (e - 2),
        }
    } else {
        p.pow(e - 1) * (p - 1u32)
    }
}

pub fn euler_phi_u64(n: u64) -> u64 {
    use num_traits::ToPrimitive;
    euler_phi(&factorize_u64(n)).to_u64().expect("phi(n) <= n")
}

pub fn carmichael_lambda_u64(n: u64) -> u64 {
    use num_traits::ToPrimitive;
    carmichael_lambda(&factorize_u64(n))
        .to_u64()
        .expect("lambda(n) <= n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi_u64(1), 1);
        assert_eq!(euler_phi_u64(13), 12);
        assert_eq!(euler_phi_u64(12), 4);
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(carmichael_lambda_u64(1), 1);
        assert_eq!(carmichael_lambda_u64(2), 1);
        assert_eq!(carmichael_lambda_u64(8), 2);
        assert_eq!(carmichael_lambda_u64(35), 12);
    }

    #[test]
    fn phi_matches_coprime_count_small() {
        use num_integer::Integer;
        for n in 1..=500u64 {
            let count = (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64;
            assert_eq!(euler_phi_u64(n), count, "n = {n}");
        }
    }

    #[test]
    fn lambda_matches_maximal_unit_order_small() {
        use num_integer::Integer;
        for n in 1..=300u64 {
            let mut max_order = 1u64;
            for u in 1..=n {
                if u.gcd(&n) != 1 {
                    continue;
                }
                let mut x = u % n.max(1);
                let mut ord = 1u64;
                while x % n != 1 % n {
                    x = x * u % n;
                    ord += 1;
                }
                max_order = max_order.max(ord);
            }
            assert_eq!(carmichael_lambda_u64(n), max_order, "n = {n}");
        }
    }
}
