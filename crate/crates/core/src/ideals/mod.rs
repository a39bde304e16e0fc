//! Crisp and fuzzy ideal families, primeness, and the ordered structures built on them.

pub mod crisp;
pub mod family;
pub mod lattice;
pub mod monoid;

pub use crisp::{
    enumerate_crisp_ideals, is_crisp_ideal, is_crisp_prime, is_crisp_quasi_prime, is_crisp_semiprime,
    is_fully_crisp_prime, is_fully_crisp_quasi_prime, CrispIdealFamily, IdealKind,
};
pub use family::{
    enumerate_fuzzy_family, enumerate_fuzzy_ideals, enumerate_fuzzy_left_ideals, totally_ordered, FamilyStrategy,
    FuzzyFamilyKind, FuzzyIdealFamily,
};
pub use lattice::{
    is_fully_fuzzy_prime, is_fully_fuzzy_quasi_prime, is_fuzzy_prime, is_fuzzy_quasi_prime, is_fuzzy_semiprime,
    left_ideal_profile, FuzzyIdealLattice, LeftIdealProfile, PrimeViolation,
};
pub use monoid::{idempotent_left_ideal_monoid, quasi_prime_semilattice, LawViolation, MonoidTable, Semilattice};
