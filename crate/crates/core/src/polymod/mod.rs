//! The trinomial family X^k - X^(k-1) - a: irreducibility, discriminants, and
//! splitting behavior modulo primes.

mod poly;
mod resultant;
mod splitting;
mod trinomial;

pub use poly::PolyModP;
pub use resultant::{discriminant_oracle, resultant};
pub use splitting::{
    count_roots_mod_p, pattern_evidence, roots_mod_p, splits_completely_mod_p, splitting_report,
    PatternEvidence, SplittingReport,
};
pub use trinomial::TrinomialFamily;
