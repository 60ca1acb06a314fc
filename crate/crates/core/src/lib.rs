//! Desk-scale constructions around two questions about residue classes:
//! which classes a (mod m) have their smallest totient preimage N(a, m) far
//! larger than m, and how small a witness every admissible class of
//! Carmichael values L(a, m) admits.
//!
//! - [`arith`]: primality, factorization, phi, lambda, sieves, CRT, primitive
//!   roots, and prime search in progressions.
//! - [`polymod`]: the trinomial family X^k - X^(k-1) - a, its discriminant in
//!   closed form with an independent resultant oracle, and splitting behavior
//!   modulo primes.
//! - [`tardy`]: the pipeline that builds classes a = 2q (mod 12p) whose
//!   totient preimages below m^2 are certified absent while an explicit
//!   witness n = r^L exists.
//! - [`carmichael`]: the two-prime construction of n with
//!   lambda(n) = a (mod m) and n < m^13.
//!
//! Every certified claim pairs a fast route with an independent check:
//! closed-form discriminants against resultants, gcd root counts against
//! exhaustive evaluation, structural searches against full sieve scans, and
//! constructed witnesses against recomputation from scratch.

pub mod arith;
pub mod carmichael;
pub mod config;
pub mod error;
pub mod polymod;
pub mod serde_util;
pub mod tardy;

pub use arith::{Factorization, ResidueClass, SieveTable};
pub use carmichael::{ConstructOutcome, LambdaPlan, LambdaWitness};
pub use config::{FactorBudget, PrimalityConfig, SieveBudget};
pub use error::{Error, Result};
pub use polymod::{SplittingReport, TrinomialFamily};
pub use tardy::{LowerBoundCertificate, TardyClass, TardyRun};
