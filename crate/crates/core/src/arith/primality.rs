//! Primality testing: deterministic strong-pseudoprime witnesses below 2^64,
//! a seeded probabilistic test above so results stay reproducible.

use num_bigint::{BigUint, RandBigInt};
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use crate::config::PrimalityConfig;

/// Witness set that makes the strong-pseudoprime test exact for all n < 2^64.
const MR_BASES_U64: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Round count of the probabilistic test above 2^64.
pub const PROBABILISTIC_ROUNDS: u32 = 64;

/// Seed from which the probabilistic bases are drawn.
pub const DEFAULT_PRIMALITY_SEED: u64 = 42;

#[inline]
pub(crate) fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[inline]
pub(crate) fn addmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

pub(crate) fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic and exact over the whole u64 range.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in MR_BASES_U64 {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'base: for &b in MR_BASES_U64.iter() {
        let mut x = powmod(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

/// Primality with the default probabilistic configuration above 2^64.
pub fn is_prime(n: &BigUint) -> bool {
    is_prime_with(n, &PrimalityConfig::default())
}

/// Exact below 2^64; above, a strong-pseudoprime test whose bases come from a
/// ChaCha20 stream seeded by `cfg.seed`, run for `cfg.rounds` rounds.
pub fn is_prime_with(n: &BigUint, cfg: &PrimalityConfig) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for p in MR_BASES_U64 {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let low = BigUint::from(2u32);
    let high = n - 1u32;
    let mut rng = ChaCha20Rng::seed_from_u64(cfg.seed);
    'round: for _ in 0..cfg.rounds {
        let base = rng.gen_biguint_range(&low, &high);
        let mut x = base.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'round;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert!(!is_prime_u64(0));
        assert!(!is_prime_u64(1));
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(3));
        assert!(!is_prime_u64(4));
        assert!(is_prime_u64(1_000_000_007));
    }

    #[test]
    fn carmichael_number_is_composite() {
        // 561 = 3 * 11 * 17 fools the Fermat test but not this one.
        assert!(!is_prime_u64(561));
    }

    #[test]
    fn agrees_with_trial_division_below_10k() {
        let naive = |n: u64| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
        for n in 0..10_000u64 {
            assert_eq!(is_prime_u64(n), naive(n), "n = {n}");
        }
    }

    #[test]
    fn large_u64_boundary() {
        assert!(is_prime_u64(18_446_744_073_709_551_557)); // largest prime < 2^64
        assert!(!is_prime_u64(u64::MAX));
    }

    #[test]
    fn biguint_path() {
        // 2^89 - 1 is a Mersenne prime.
        let m89 = (BigUint::from(1u32) << 89) - 1u32;
        assert!(is_prime(&m89));
        let composite = &m89 * 3u32;
        assert!(!is_prime(&composite));
        // Delegates to the exact test when the value fits in u64.
        assert!(is_prime(&BigUint::from(561u32)) == false);
    }
}
