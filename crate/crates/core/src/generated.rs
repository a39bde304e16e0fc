//! The fuzzy left ideal generated by a fuzzy point.

use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyPoint, FuzzySubset};
use crate::grade::GradeChain;
use crate::harness::registry::Hypothesis;
use crate::laws::{has_left_identity, is_ag_groupoid};
use crate::table::CayleyTable;

/// `⟨a_λ⟩_L` in closed form: `λ` on `Sa = {ba : b ∈ S}`, 0 elsewhere.
///
/// The closed form is only valid in an AG-groupoid with a left identity, so
/// both are enforced. [`generated_left_ideal_oracle`] covers the general case.
pub fn generated_left_ideal(p: &FuzzyPoint, t: &CayleyTable, chain: GradeChain) -> Result<FuzzySubset> {
    check_point(p, t, chain)?;
    if !is_ag_groupoid(t) {
        return Err(Error::Hypothesis(Hypothesis::Ag));
    }
    if !has_left_identity(t) {
        return Err(Error::Hypothesis(Hypothesis::AgLeftIdentity));
    }
    let mut levels = vec![0u8; t.order()];
    for b in t.elements() {
        levels[t.op(b, p.anchor())] = p.height().level();
    }
    Ok(FuzzySubset::from_raw(chain, levels))
}

/// Least fuzzy left ideal containing the point, by fixpoint iteration.
pub fn generated_left_ideal_oracle(p: &FuzzyPoint, t: &CayleyTable, chain: GradeChain) -> Result<FuzzySubset> {
    check_point(p, t, chain)?;
    Ok(left_ideal_closure(&p.to_subset(t.order(), chain)?, t).0)
}

fn check_point(p: &FuzzyPoint, t: &CayleyTable, chain: GradeChain) -> Result<()> {
    if p.anchor() >= t.order() {
        return Err(Error::ElementOutOfRange {
            element: p.anchor(),
            order: t.order(),
        });
    }
    if !chain.contains(p.height()) {
        return Err(Error::GradeOutOfRange {
            level: p.height().level() as usize,
            resolution: chain.resolution(),
        });
    }
    Ok(())
}

/// Raises `g(xy)` to `g(y)` until nothing changes. Returns the fixpoint and
/// the number of sweeps, the last of which changes nothing.
pub fn left_ideal_closure(seed: &FuzzySubset, t: &CayleyTable) -> (FuzzySubset, usize) {
    let mut levels = seed.levels();
    let mut rounds = 0;
    loop {
        rounds += 1;
        let mut changed = false;
        for x in t.elements() {
            for y in t.elements() {
                let xy = t.op(x, y);
                if levels[y] > levels[xy] {
                    levels[xy] = levels[y];
                    changed = true;
                }
            }
        }
        if !changed {
            return (FuzzySubset::from_raw(seed.chain(), levels), rounds);
        }
    }
}
