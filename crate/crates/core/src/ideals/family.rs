use std::fmt;

use serde::Serialize;

use crate::crisp::CrispSubset;
use crate::error::{Error, Result};
use crate::fuzzy::{all_fuzzy_subsets, fuzzy_space_size, FuzzySubset};
use crate::grade::GradeChain;
use crate::ideals::crisp::{enumerate_crisp_ideals, IdealKind};
use crate::predicates::{
    is_fuzzy_bi_ideal, is_fuzzy_ideal, is_fuzzy_interior_ideal, is_fuzzy_left_ideal, is_fuzzy_right_ideal,
    is_fuzzy_subgroupoid,
};
use crate::table::CayleyTable;

/// Largest fuzzy space the direct filter will walk.
pub const DIRECT_FILTER_LIMIT: u64 = 20_000;
/// Largest family the level-chain construction will materialize.
pub const LEVEL_CHAIN_LIMIT: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FuzzyFamilyKind {
    Left,
    Right,
    TwoSided,
    Subgroupoid,
    Bi,
    Interior,
}

impl FuzzyFamilyKind {
    pub fn crisp_kind(self) -> IdealKind {
        match self {
            FuzzyFamilyKind::Left => IdealKind::Left,
            FuzzyFamilyKind::Right => IdealKind::Right,
            FuzzyFamilyKind::TwoSided => IdealKind::TwoSided,
            FuzzyFamilyKind::Subgroupoid => IdealKind::Subgroupoid,
            FuzzyFamilyKind::Bi => IdealKind::Bi,
            FuzzyFamilyKind::Interior => IdealKind::Interior,
        }
    }

    pub fn from_crisp_kind(kind: IdealKind) -> Self {
        match kind {
            IdealKind::Left => FuzzyFamilyKind::Left,
            IdealKind::Right => FuzzyFamilyKind::Right,
            IdealKind::TwoSided => FuzzyFamilyKind::TwoSided,
            IdealKind::Subgroupoid => FuzzyFamilyKind::Subgroupoid,
            IdealKind::Bi => FuzzyFamilyKind::Bi,
            IdealKind::Interior => FuzzyFamilyKind::Interior,
        }
    }

    /// The pointwise predicate this family collects.
    pub fn admits(self, f: &FuzzySubset, t: &CayleyTable) -> bool {
        match self {
            FuzzyFamilyKind::Left => is_fuzzy_left_ideal(f, t).is_ok(),
            FuzzyFamilyKind::Right => is_fuzzy_right_ideal(f, t).is_ok(),
            FuzzyFamilyKind::TwoSided => is_fuzzy_ideal(f, t).is_ok(),
            FuzzyFamilyKind::Subgroupoid => is_fuzzy_subgroupoid(f, t).is_ok(),
            FuzzyFamilyKind::Bi => is_fuzzy_bi_ideal(f, t).is_ok(),
            FuzzyFamilyKind::Interior => is_fuzzy_interior_ideal(f, t).is_ok(),
        }
    }
}

impl fmt::Display for FuzzyFamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.crisp_kind().name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyStrategy {
    /// Filter every fuzzy subset through the pointwise predicate.
    Direct,
    /// Stack descending chains of crisp ideals, one per positive level.
    LevelChain,
}

/// Every chain-valued fuzzy subset of one kind, sorted by grade vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzyIdealFamily {
    pub kind: FuzzyFamilyKind,
    pub chain: GradeChain,
    pub members: Vec<FuzzySubset>,
}

impl FuzzyIdealFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, f: &FuzzySubset) -> bool {
        self.position(f).is_some()
    }

    pub fn position(&self, f: &FuzzySubset) -> Option<usize> {
        self.members.binary_search(f).ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, FuzzySubset> {
        self.members.iter()
    }
}

pub fn enumerate_fuzzy_family(
    t: &CayleyTable,
    chain: GradeChain,
    kind: FuzzyFamilyKind,
    strategy: FamilyStrategy,
) -> Result<FuzzyIdealFamily> {
    let members = match strategy {
        FamilyStrategy::Direct => direct(t, chain, kind)?,
        FamilyStrategy::LevelChain => level_chains(t, chain, kind)?,
    };
    Ok(FuzzyIdealFamily { kind, chain, members })
}

pub fn enumerate_fuzzy_left_ideals(t: &CayleyTable, chain: GradeChain) -> Result<FuzzyIdealFamily> {
    enumerate_fuzzy_family(t, chain, FuzzyFamilyKind::Left, FamilyStrategy::LevelChain)
}

pub fn enumerate_fuzzy_ideals(t: &CayleyTable, chain: GradeChain) -> Result<FuzzyIdealFamily> {
    enumerate_fuzzy_family(t, chain, FuzzyFamilyKind::TwoSided, FamilyStrategy::LevelChain)
}

fn direct(t: &CayleyTable, chain: GradeChain, kind: FuzzyFamilyKind) -> Result<Vec<FuzzySubset>> {
    if fuzzy_space_size(t.order(), chain) > DIRECT_FILTER_LIMIT {
        return Err(Error::Capability {
            what: "direct fuzzy family filter",
            order: t.order(),
            bound: max_order_within(chain, DIRECT_FILTER_LIMIT),
        });
    }
    Ok(all_fuzzy_subsets(t.order(), chain)
        .filter(|f| kind.admits(f, t))
        .collect())
}

fn max_order_within(chain: GradeChain, limit: u64) -> usize {
    (0..)
        .take_while(|&n| fuzzy_space_size(n, chain) <= limit)
        .last()
        .unwrap_or(0)
}

/// `f(x)` is the number of levels whose set contains `x`. The levels run
/// `L_1 ⊇ L_2 ⊇ .. ⊇ L_k`, each an ideal of the kind or empty.
fn level_chains(t: &CayleyTable, chain: GradeChain, kind: FuzzyFamilyKind) -> Result<Vec<FuzzySubset>> {
    let mut sets = vec![CrispSubset::empty(t.order())];
    sets.extend(enumerate_crisp_ideals(t, kind.crisp_kind())?.members);
    let depth = chain.resolution() as usize;
    let mut out = Vec::new();
    let mut stack: Vec<CrispSubset> = Vec::with_capacity(depth);
    extend_chains(&sets, depth, &mut stack, &mut out, t.order(), chain)?;
    out.sort();
    Ok(out)
}

fn extend_chains(
    sets: &[CrispSubset],
    depth: usize,
    stack: &mut Vec<CrispSubset>,
    out: &mut Vec<FuzzySubset>,
    order: usize,
    chain: GradeChain,
) -> Result<()> {
    if stack.len() == depth {
        if out.len() == LEVEL_CHAIN_LIMIT {
            return Err(Error::Capability {
                what: "level-chain fuzzy family",
                order,
                bound: LEVEL_CHAIN_LIMIT,
            });
        }
        let levels = (0..order)
            .map(|x| stack.iter().filter(|s| s.contains(x)).count() as u8)
            .collect();
        out.push(FuzzySubset::from_raw(chain, levels));
        return Ok(());
    }
    for s in sets {
        if stack.last().is_none_or(|above| s.is_subset(above)) {
            stack.push(*s);
            extend_chains(sets, depth, stack, out, order, chain)?;
            stack.pop();
        }
    }
    Ok(())
}

/// `Ok` when every pair is comparable under `⊆`, else the first incomparable pair.
pub fn totally_ordered(members: &[FuzzySubset]) -> Result<(), (usize, usize)> {
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            if !members[i].le(&members[j]) && !members[j].le(&members[i]) {
                return Err((i, j));
            }
        }
    }
    Ok(())
}
