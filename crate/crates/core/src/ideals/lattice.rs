use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::crisp::CrispSubset;
use crate::error::{Error, Result};
use crate::fuzzy::FuzzySubset;
use crate::grade::GradeChain;
use crate::harness::registry::Hypothesis;
use crate::ideals::crisp::{enumerate_crisp_ideals, IdealKind};
use crate::ideals::family::{enumerate_fuzzy_ideals, enumerate_fuzzy_left_ideals, FuzzyIdealFamily};
use crate::laws::{has_left_identity, is_ag_groupoid};
use crate::table::CayleyTable;

/// The fuzzy left and two-sided ideal families of one table over one chain,
/// with their pairwise products computed on first use.
pub struct FuzzyIdealLattice {
    table: CayleyTable,
    left: FuzzyIdealFamily,
    two_sided: FuzzyIdealFamily,
    left_products: OnceLock<Vec<FuzzySubset>>,
    two_sided_products: OnceLock<Vec<FuzzySubset>>,
}

/// `g∘h ⊆ f` with neither `g ⊆ f` nor `h ⊆ f`; indices into the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeViolation {
    pub g: usize,
    pub h: usize,
}

impl FuzzyIdealLattice {
    pub fn new(t: &CayleyTable, chain: GradeChain) -> Result<Self> {
        Ok(FuzzyIdealLattice {
            table: t.clone(),
            left: enumerate_fuzzy_left_ideals(t, chain)?,
            two_sided: enumerate_fuzzy_ideals(t, chain)?,
            left_products: OnceLock::new(),
            two_sided_products: OnceLock::new(),
        })
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn chain(&self) -> GradeChain {
        self.left.chain
    }

    pub fn left(&self) -> &FuzzyIdealFamily {
        &self.left
    }

    pub fn two_sided(&self) -> &FuzzyIdealFamily {
        &self.two_sided
    }

    fn products<'a>(&'a self, family: &FuzzyIdealFamily, cell: &'a OnceLock<Vec<FuzzySubset>>) -> &'a [FuzzySubset] {
        cell.get_or_init(|| {
            let m = &family.members;
            (0..m.len() * m.len())
                .into_par_iter()
                .map(|ij| m[ij / m.len()].compose(&m[ij % m.len()], &self.table))
                .collect()
        })
    }

    /// Row-major `g∘h` over the left-ideal family.
    pub fn left_products(&self) -> &[FuzzySubset] {
        self.products(&self.left, &self.left_products)
    }

    /// Row-major `g∘h` over the two-sided family.
    pub fn two_sided_products(&self) -> &[FuzzySubset] {
        self.products(&self.two_sided, &self.two_sided_products)
    }

    fn check_member(&self, f: &FuzzySubset, family: &FuzzyIdealFamily) -> Result<()> {
        f.check_table(&self.table)?;
        if f.chain() != family.chain {
            return Err(Error::ChainMismatch {
                expected: family.chain.resolution(),
                found: f.chain().resolution(),
            });
        }
        if !family.contains(f) {
            return Err(Error::usage(format!("{f} is not a fuzzy {} ideal", family.kind)));
        }
        Ok(())
    }

    fn violation_over(f: &FuzzySubset, members: &[FuzzySubset], products: &[FuzzySubset]) -> Option<PrimeViolation> {
        let m = members.len();
        (0..m).filter(|&g| !members[g].le(f)).find_map(|g| {
            (0..m)
                .find(|&h| !members[h].le(f) && products[g * m + h].le(f))
                .map(|h| PrimeViolation { g, h })
        })
    }

    /// `f` must be a fuzzy ideal. The pair indexes the two-sided family.
    pub fn prime_violation(&self, f: &FuzzySubset) -> Result<Option<PrimeViolation>> {
        self.check_member(f, &self.two_sided)?;
        Ok(Self::violation_over(
            f,
            &self.two_sided.members,
            self.two_sided_products(),
        ))
    }

    /// `f` must be a fuzzy left ideal. The pair indexes the left family.
    pub fn quasi_prime_violation(&self, f: &FuzzySubset) -> Result<Option<PrimeViolation>> {
        self.check_member(f, &self.left)?;
        Ok(Self::violation_over(f, &self.left.members, self.left_products()))
    }

    /// The first left ideal `g` with `g∘g ⊆ f` and `g ⊄ f`.
    pub fn semiprime_violation(&self, f: &FuzzySubset) -> Result<Option<usize>> {
        self.check_member(f, &self.left)?;
        let m = self.left.len();
        let products = self.left_products();
        Ok((0..m).find(|&g| !self.left.members[g].le(f) && products[g * m + g].le(f)))
    }

    pub fn is_prime(&self, f: &FuzzySubset) -> Result<bool> {
        Ok(self.prime_violation(f)?.is_none())
    }

    pub fn is_quasi_prime(&self, f: &FuzzySubset) -> Result<bool> {
        Ok(self.quasi_prime_violation(f)?.is_none())
    }

    pub fn is_semiprime(&self, f: &FuzzySubset) -> Result<bool> {
        Ok(self.semiprime_violation(f)?.is_none())
    }

    /// Index of the first fuzzy ideal that is not prime.
    pub fn first_non_prime(&self) -> Option<usize> {
        let products = self.two_sided_products();
        let members = &self.two_sided.members;
        (0..members.len())
            .into_par_iter()
            .find_first(|&i| Self::violation_over(&members[i], members, products).is_some())
    }

    /// Index of the first fuzzy left ideal that is not quasi-prime.
    pub fn first_non_quasi_prime(&self) -> Option<usize> {
        let products = self.left_products();
        let members = &self.left.members;
        (0..members.len())
            .into_par_iter()
            .find_first(|&i| Self::violation_over(&members[i], members, products).is_some())
    }

    pub fn fully_prime(&self) -> bool {
        self.first_non_prime().is_none()
    }

    pub fn fully_quasi_prime(&self) -> bool {
        self.first_non_quasi_prime().is_none()
    }

    /// Indices of the quasi-prime members of the left family.
    pub fn quasi_prime_members(&self) -> Vec<usize> {
        let products = self.left_products();
        let members = &self.left.members;
        (0..members.len())
            .into_par_iter()
            .filter(|&i| Self::violation_over(&members[i], members, products).is_none())
            .collect()
    }
}

pub fn is_fuzzy_prime(f: &FuzzySubset, t: &CayleyTable, chain: GradeChain) -> Result<bool> {
    FuzzyIdealLattice::new(t, chain)?.is_prime(f)
}

pub fn is_fuzzy_quasi_prime(f: &FuzzySubset, t: &CayleyTable, chain: GradeChain) -> Result<bool> {
    FuzzyIdealLattice::new(t, chain)?.is_quasi_prime(f)
}

pub fn is_fuzzy_semiprime(f: &FuzzySubset, t: &CayleyTable, chain: GradeChain) -> Result<bool> {
    FuzzyIdealLattice::new(t, chain)?.is_semiprime(f)
}

pub fn is_fully_fuzzy_prime(t: &CayleyTable, chain: GradeChain) -> Result<bool> {
    Ok(FuzzyIdealLattice::new(t, chain)?.fully_prime())
}

pub fn is_fully_fuzzy_quasi_prime(t: &CayleyTable, chain: GradeChain) -> Result<bool> {
    Ok(FuzzyIdealLattice::new(t, chain)?.fully_quasi_prime())
}

pub(crate) fn require_ag_left_identity(t: &CayleyTable) -> Result<()> {
    if !is_ag_groupoid(t) || !has_left_identity(t) {
        return Err(Error::Hypothesis(Hypothesis::AgLeftIdentity));
    }
    Ok(())
}

/// Four properties of the left ideals of an AG-groupoid with left identity,
/// each computed on its own.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LeftIdealProfile {
    /// `AA = A` for every crisp left ideal.
    pub crisp_idempotent: bool,
    /// `f∘f = f` for every fuzzy left ideal.
    pub fuzzy_idempotent: bool,
    /// `f∘g = f∩g` for every pair of fuzzy left ideals.
    pub product_is_meet: bool,
    /// Every fuzzy left ideal is semiprime.
    pub semiprime: bool,
}

impl LeftIdealProfile {
    pub fn as_array(&self) -> [bool; 4] {
        [
            self.crisp_idempotent,
            self.fuzzy_idempotent,
            self.product_is_meet,
            self.semiprime,
        ]
    }

    pub fn all_equal(&self) -> bool {
        let a = self.as_array();
        a.iter().all(|&b| b == a[0])
    }
}

pub fn left_ideal_profile(t: &CayleyTable, chain: GradeChain) -> Result<LeftIdealProfile> {
    require_ag_left_identity(t)?;
    let lattice = FuzzyIdealLattice::new(t, chain)?;
    profile_of(&lattice)
}

pub(crate) fn profile_of(lattice: &FuzzyIdealLattice) -> Result<LeftIdealProfile> {
    let t = lattice.table();
    let crisp: Vec<CrispSubset> = enumerate_crisp_ideals(t, IdealKind::Left)?.members;
    let members = &lattice.left().members;
    let m = members.len();
    let products = lattice.left_products();
    Ok(LeftIdealProfile {
        crisp_idempotent: crisp.iter().all(|a| a.product(a, t) == *a),
        fuzzy_idempotent: (0..m).all(|i| products[i * m + i] == members[i]),
        product_is_meet: (0..m * m).all(|ij| products[ij] == members[ij / m].meet(&members[ij % m])),
        semiprime: members
            .iter()
            .all(|f| (0..m).all(|g| members[g].le(f) || !products[g * m + g].le(f))),
    })
}
