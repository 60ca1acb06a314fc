//! Exact integer arithmetic kernels: primality, factorization, phi, lambda,
//! sieves, CRT, primitive roots, and prime search in arithmetic progressions.
//!
//! Everything here is a pure function of its inputs; finished values are
//! immutable and safe to share across threads.

mod crt;
mod factor;
mod primality;
mod progression;
mod sieve;
mod totient;

pub use crt::{crt_combine, mod_inverse_u64, ResidueClass};
pub use factor::{factorize, factorize_u64, Factorization};
pub use primality::{
    is_prime, is_prime_u64, is_prime_with, DEFAULT_PRIMALITY_SEED, PROBABILISTIC_ROUNDS,
};
pub use progression::{next_prime_in_class, primitive_root_prime_power};
pub use sieve::{lambda_sieve, phi_sieve, primes_up_to, SieveKind, SieveTable};
pub use totient::{carmichael_lambda, carmichael_lambda_u64, euler_phi, euler_phi_u64};

pub(crate) use primality::{mulmod, powmod};
