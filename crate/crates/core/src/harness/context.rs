use std::collections::HashSet;
use std::sync::OnceLock;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::fuzzy::{all_fuzzy_subsets, fuzzy_space_size, FuzzySubset};
use crate::grade::GradeChain;
use crate::harness::registry::{Domain, Hypothesis};
use crate::ideals::family::{enumerate_fuzzy_family, FamilyStrategy, FuzzyFamilyKind};
use crate::ideals::lattice::FuzzyIdealLattice;
use crate::laws::{structure_flags, StructureFlags};
use crate::table::CayleyTable;

/// Quantifier limits. Beyond `subset_limit` fuzzy subsets, or `tuple_limit`
/// tuples, a check draws `samples` seeded samples instead.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub subset_limit: u64,
    pub tuple_limit: u64,
    pub samples: u64,
    pub seed: u64,
}

impl Budget {
    pub const DEFAULT_SEED: u64 = 0x5eed;

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_samples(mut self, samples: u64) -> Self {
        self.samples = samples;
        self
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            subset_limit: 20_000,
            tuple_limit: 20_000,
            samples: 1_000,
            seed: Self::DEFAULT_SEED,
        }
    }
}

/// SplitMix64 finalizer over the combined inputs.
pub(crate) fn mix_seed(seed: u64, parts: &[u64]) -> u64 {
    let mut z = seed;
    for &p in parts {
        z = z
            .wrapping_add(0x9e37_79b9_7f4a_7c15)
            .wrapping_add(p.wrapping_mul(0xd6e8_feb8_6659_fd93));
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^= z >> 31;
    }
    z
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HypothesisStatus {
    Holds,
    Fails,
    /// Deciding it would exceed the budget.
    Undecidable,
}

/// A quantification domain, materialized. `exact` means every member of the
/// domain is present rather than a sample.
#[derive(Clone, Debug)]
pub struct DomainMembers {
    pub members: Vec<FuzzySubset>,
    pub exact: bool,
}

const DOMAIN_SLOTS: usize = 9;

fn slot(d: Domain) -> usize {
    match d {
        Domain::All => 0,
        Domain::Left => 1,
        Domain::Right => 2,
        Domain::TwoSided => 3,
        Domain::Subgroupoid => 4,
        Domain::Bi => 5,
        Domain::Idempotent => 6,
        Domain::IdempotentLeft => 7,
        Domain::LeftOrRight => 8,
    }
}

/// Everything the checks need about one table over one chain, computed lazily
/// and shared across statements.
pub struct StructureContext {
    pub index: usize,
    pub table: CayleyTable,
    pub chain: GradeChain,
    pub budget: Budget,
    pub flags: StructureFlags,
    pub top: FuzzySubset,
    universe: DomainMembers,
    domains: [OnceLock<Option<DomainMembers>>; DOMAIN_SLOTS],
    lattice: OnceLock<Option<FuzzyIdealLattice>>,
    product_gate: OnceLock<HypothesisStatus>,
}

impl StructureContext {
    pub fn new(index: usize, table: CayleyTable, chain: GradeChain, budget: Budget) -> Self {
        let n = table.order();
        let universe = if fuzzy_space_size(n, chain) <= budget.subset_limit {
            DomainMembers {
                members: all_fuzzy_subsets(n, chain).collect(),
                exact: true,
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(
                budget.seed,
                &[u64::MAX, index as u64, chain.resolution() as u64],
            ));
            let mut members: Vec<FuzzySubset> = (0..budget.samples)
                .map(|_| FuzzySubset::random(n, chain, &mut rng))
                .collect();
            members.sort();
            members.dedup();
            DomainMembers { members, exact: false }
        };
        StructureContext {
            index,
            flags: structure_flags(&table),
            top: FuzzySubset::full(n, chain),
            table,
            chain,
            budget,
            universe,
            domains: Default::default(),
            lattice: OnceLock::new(),
            product_gate: OnceLock::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn universe(&self) -> &DomainMembers {
        &self.universe
    }

    pub fn compose(&self, f: &FuzzySubset, g: &FuzzySubset) -> FuzzySubset {
        f.compose(g, &self.table)
    }

    /// `None` when the ideal families are too large to materialize.
    pub fn lattice(&self) -> Option<&FuzzyIdealLattice> {
        self.lattice
            .get_or_init(|| FuzzyIdealLattice::new(&self.table, self.chain).ok())
            .as_ref()
    }

    /// `None` when the domain is too large to materialize.
    pub fn domain(&self, d: Domain) -> Option<&DomainMembers> {
        self.domains[slot(d)].get_or_init(|| self.build_domain(d)).as_ref()
    }

    fn family(&self, kind: FuzzyFamilyKind) -> Option<DomainMembers> {
        let members = match kind {
            FuzzyFamilyKind::Left => self.lattice()?.left().members.clone(),
            FuzzyFamilyKind::TwoSided => self.lattice()?.two_sided().members.clone(),
            _ => {
                enumerate_fuzzy_family(&self.table, self.chain, kind, FamilyStrategy::LevelChain)
                    .ok()?
                    .members
            }
        };
        Some(DomainMembers { members, exact: true })
    }

    fn build_domain(&self, d: Domain) -> Option<DomainMembers> {
        let idempotents = |src: &DomainMembers| DomainMembers {
            members: src
                .members
                .iter()
                .filter(|f| self.compose(f, f) == **f)
                .cloned()
                .collect(),
            exact: src.exact,
        };
        match d {
            Domain::All => Some(self.universe.clone()),
            Domain::Left => self.family(FuzzyFamilyKind::Left),
            Domain::Right => self.family(FuzzyFamilyKind::Right),
            Domain::TwoSided => self.family(FuzzyFamilyKind::TwoSided),
            Domain::Subgroupoid => self.family(FuzzyFamilyKind::Subgroupoid),
            Domain::Bi => self.family(FuzzyFamilyKind::Bi),
            Domain::Idempotent => Some(idempotents(&self.universe)),
            Domain::IdempotentLeft => Some(idempotents(self.domain(Domain::Left)?)),
            Domain::LeftOrRight => {
                let mut members = self.domain(Domain::Left)?.members.clone();
                members.extend(self.domain(Domain::Right)?.members.iter().cloned());
                members.sort();
                members.dedup();
                Some(DomainMembers { members, exact: true })
            }
        }
    }

    /// Whether `f` belongs to the domain, decided directly.
    pub fn admits(&self, d: Domain, f: &FuzzySubset) -> bool {
        if f.order() != self.order() || f.chain() != self.chain {
            return false;
        }
        let t = &self.table;
        let idempotent = || self.compose(f, f) == *f;
        match d {
            Domain::All => true,
            Domain::Left => FuzzyFamilyKind::Left.admits(f, t),
            Domain::Right => FuzzyFamilyKind::Right.admits(f, t),
            Domain::TwoSided => FuzzyFamilyKind::TwoSided.admits(f, t),
            Domain::Subgroupoid => FuzzyFamilyKind::Subgroupoid.admits(f, t),
            Domain::Bi => FuzzyFamilyKind::Bi.admits(f, t),
            Domain::Idempotent => idempotent(),
            Domain::IdempotentLeft => FuzzyFamilyKind::Left.admits(f, t) && idempotent(),
            Domain::LeftOrRight => FuzzyFamilyKind::Left.admits(f, t) || FuzzyFamilyKind::Right.admits(f, t),
        }
    }

    pub fn hypothesis(&self, h: Hypothesis) -> HypothesisStatus {
        let ag = self.flags.is_ag;
        let ag_li = ag && !self.flags.left_identities.is_empty();
        let status = |b: bool| {
            if b {
                HypothesisStatus::Holds
            } else {
                HypothesisStatus::Fails
            }
        };
        match h {
            Hypothesis::None => HypothesisStatus::Holds,
            Hypothesis::Ag => status(ag),
            Hypothesis::AgLeftIdentity => status(ag_li),
            Hypothesis::CommutativeSemigroup => status(self.flags.is_commutative && self.flags.is_associative),
            Hypothesis::ProductGate if !ag => HypothesisStatus::Fails,
            Hypothesis::ProductGate => *self.product_gate.get_or_init(|| self.decide_product_gate()),
            Hypothesis::AgLeftIdentityFullyQuasiPrime if !ag_li => HypothesisStatus::Fails,
            Hypothesis::AgLeftIdentityFullyQuasiPrime => match self.lattice() {
                Some(l) => status(l.fully_quasi_prime()),
                None => HypothesisStatus::Undecidable,
            },
        }
    }

    fn decide_product_gate(&self) -> HypothesisStatus {
        let u = &self.universe;
        let pairs = (u.members.len() as u64).saturating_mul(u.members.len() as u64);
        if !u.exact || pairs > self.budget.tuple_limit {
            return HypothesisStatus::Undecidable;
        }
        let products: HashSet<FuzzySubset> = u
            .members
            .iter()
            .flat_map(|f| u.members.iter().map(move |g| self.compose(f, g)))
            .collect();
        if products.len() == u.members.len() {
            HypothesisStatus::Holds
        } else {
            HypothesisStatus::Fails
        }
    }
}
