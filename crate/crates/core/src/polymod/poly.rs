//! Dense univariate polynomial arithmetic over GF(p) for 64-bit primes.

use crate::arith::{mulmod, powmod};

/// Coefficients are stored lowest degree first, reduced mod p, with no
/// trailing zeros; the empty vector is the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyModP {
    p: u64,
    coeffs: Vec<u64>,
}

impl PolyModP {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        assert!(p >= 2);
        for c in &mut coeffs {
            *c %= p;
        }
        let mut out = PolyModP { p, coeffs };
        out.trim();
        out
    }

    pub fn zero(p: u64) -> Self {
        PolyModP { p, coeffs: vec![] }
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::new(p, vec![c])
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let p = self.p;
        let mut coeffs = vec![0u64; self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in coeffs.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = rhs.coeffs.get(i).copied().unwrap_or(0);
            *c = (a + b) % p;
        }
        Self::new(p, coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let p = self.p;
        let mut coeffs = vec![0u64; self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in coeffs.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = rhs.coeffs.get(i).copied().unwrap_or(0);
            *c = (a + p - b) % p;
        }
        Self::new(p, coeffs)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p;
        let mut coeffs = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + mulmod(a, b, p)) % p;
            }
        }
        Self::new(p, coeffs)
    }

    pub fn mul_scalar(&self, c: u64) -> Self {
        let p = self.p;
        Self::new(p, self.coeffs.iter().map(|&a| mulmod(a, c % p, p)).collect())
    }

    /// Quotient and remainder; the divisor must be nonzero.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let p = self.p;
        let dd = divisor.coeffs.len();
        if self.coeffs.len() < dd {
            return (Self::zero(p), self.clone());
        }
        let lead_inv = powmod(divisor.leading(), p - 2, p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; self.coeffs.len() - dd + 1];
        for i in (0..quot.len()).rev() {
            let top = rem[i + dd - 1];
            if top == 0 {
                continue;
            }
            let q = mulmod(top, lead_inv, p);
            quot[i] = q;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                let sub = mulmod(q, dc, p);
                rem[i + j] = (rem[i + j] + p - sub) % p;
            }
        }
        rem.truncate(dd - 1);
        (Self::new(p, quot), Self::new(p, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.divrem(divisor).1
    }

    pub fn make_monic(&self) -> Self {
        if self.is_zero() || self.leading() == 1 {
            return self.clone();
        }
        self.mul_scalar(powmod(self.leading(), self.p - 2, self.p))
    }

    /// Monic gcd; gcd(0, g) is monic g.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// self^exp modulo f, by square and multiply.
    pub fn pow_mod(&self, mut exp: u64, f: &Self) -> Self {
        let mut base = self.rem(f);
        let mut acc = Self::constant(self.p, 1).rem(f);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).rem(f);
            }
            base = base.mul(&base).rem(f);
            exp >>= 1;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulmod(i as u64 % p, c, p))
            .collect();
        Self::new(p, coeffs)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p;
        let x = x % p;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (mulmod(acc, x, p) + c) % p;
        }
        acc
    }

    /// p-th root of a polynomial whose derivative vanishes: every exponent is
    /// a multiple of p and coefficients are Frobenius-fixed in GF(p).
    pub fn pth_root(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let step = self.p as usize;
        let coeffs = self.coeffs.iter().step_by(step).copied().collect();
        Self::new(self.p, coeffs)
    }
}
