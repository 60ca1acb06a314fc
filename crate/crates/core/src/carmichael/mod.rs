//! Constructive witnesses for Carmichael-function values in residue classes:
//! for any a (mod m) containing an even number (or the unit classes hit by
//! n = 1), an explicit n = p1 p2 with lambda(n) = a (mod m) and n < m^13.

mod plan;
mod realize;

pub use plan::{build_plan, local_residues, normalize_instance, CaseTag, LambdaPlan,
    LocalResidues, Normalized};
pub use realize::{
    brute_least_witness, construct, default_realize_cap, realize_witness, ConstructOutcome,
    LambdaWitness, WitnessDetail,
};
