//! Noncommutative localization in executable form: Ore fractions, the
//! failure of the Ore condition for free group rings, Σ-membership,
//! Cramer factorizations and linearization of rational functions.

mod certificate;
mod cramer;
mod ore;

pub use certificate::{ore_failure_certificate, pair_map_kernel, KernelReport, OreFailureCertificate};
pub use cramer::{
    cramer_factorize, rational_closure_linearize, sigma_member, sigma_member_laurent, CramerWitness, Linearization,
    SigmaVerdict,
};
pub use ore::{
    ore_add, ore_eq, ore_mul, ore_neg, spot_check, FreeGroupNonzero, GroupElements, NonzeroElements, OreFraction, OreSet,
    PowersOf,
};
