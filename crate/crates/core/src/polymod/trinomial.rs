//! The trinomial family f_k(X) = X^k - X^(k-1) - a: irreducibility criterion,
//! closed-form discriminant, and reduction mod p.

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::polymod::poly::PolyModP;

/// The pair (k, a) denoting X^k - X^(k-1) - a.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrinomialFamily {
    k: u32,
    a: BigUint,
}

impl TrinomialFamily {
    /// Degrees are capped at 64; the constructions only ever need small k.
    pub fn new(k: u32, a: impl Into<BigUint>) -> Result<Self> {
        let a = a.into();
        if !(2..=64).contains(&k) {
            return Err(Error::InvalidInput(format!("k = {k} outside 2..=64")));
        }
        if a == BigUint::from(0u32) {
            return Err(Error::InvalidInput("a must be positive".into()));
        }
        Ok(TrinomialFamily { k, a })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn a(&self) -> &BigUint {
        &self.a
    }

    /// True iff a = 2q with q > 3 prime. Such trinomials are irreducible over
    /// the rationals for every k >= 2, because any monic factorization would
    /// force an integer linear factor that `linear_factor_excluded` rules out.
    pub fn certified_irreducible(&self) -> bool {
        let two = BigUint::from(2u32);
        if (&self.a % &two) != BigUint::from(0u32) {
            return false;
        }
        let q = &self.a / &two;
        q > BigUint::from(3u32) && is_prime(&q)
    }

    /// Exhausts the candidate integer roots x0 with x0^(k-1) dividing 2:
    /// {1, -1, 2, -2} for k = 2 and {1, -1} for k >= 3. True iff none of them
    /// satisfies a = x0^(k-1) (x0 - 1).
    pub fn linear_factor_excluded(&self) -> bool {
        let candidates: &[i64] = if self.k == 2 {
            &[1, -1, 2, -2]
        } else {
            &[1, -1]
        };
        let a = BigInt::from(self.a.clone());
        for &x0 in candidates {
            let v = BigInt::from(x0).pow(self.k - 1) * (BigInt::from(x0) - 1);
            if v == a {
                return false;
            }
        }
        true
    }

    /// Closed-form discriminant of f_k. Specializes the general trinomial
    /// discriminant to X^k + A X^s + B with A = -1, s = k - 1, B = -a.
    pub fn discriminant(&self) -> BigInt {
        let a = BigInt::from(self.a.clone());
        general_trinomial_discriminant(self.k, self.k - 1, &BigInt::from(-1), &(-a))
    }

    /// Coefficients of the expanded polynomial, lowest degree first.
    pub fn expanded_coeffs(&self) -> Vec<BigInt> {
        let mut coeffs = vec![BigInt::from(0); self.k as usize + 1];
        coeffs[0] = -BigInt::from(self.a.clone());
        coeffs[self.k as usize - 1] = BigInt::from(-1);
        coeffs[self.k as usize] = BigInt::from(1);
        coeffs
    }

    pub fn reduce_mod(&self, p: u64) -> PolyModP {
        let mut coeffs = vec![0u64; self.k as usize + 1];
        let a_mod = (&self.a % p).to_u64().unwrap();
        coeffs[0] = (p - a_mod) % p;
        coeffs[self.k as usize - 1] = p - 1;
        coeffs[self.k as usize] = 1 % p;
        PolyModP::new(p, coeffs)
    }
}

/// Discriminant of X^n + A X^s + B for 1 <= s <= n-1 with gcd(n, s) = 1:
/// (-1)^(n(n-1)/2) B^(s-1) (n^n B^(n-s) + (-1)^(n-1) s^s (n-s)^(n-s) A^n).
fn general_trinomial_discriminant(n: u32, s: u32, a: &BigInt, b: &BigInt) -> BigInt {
    assert!(s >= 1 && s < n);
    let lead = BigInt::from(n).pow(n) * b.pow(n - s);
    let tail = BigInt::from(s).pow(s) * BigInt::from(n - s).pow(n - s) * a.pow(n);
    let inner = if (n - 1) % 2 == 0 {
        lead + tail
    } else {
        lead - tail
    };
    let out = b.pow(s - 1) * inner;
    if (n as u64 * (n as u64 - 1) / 2) % 2 == 1 {
        -out
    } else {
        out
    }
}
