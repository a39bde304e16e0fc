//! Pointwise fuzzy-ideal predicates.
//!
//! Each check scans its variables lexicographically and returns the first
//! tuple where the required inequality fails. Subset and table must share a
//! carrier; a mismatch panics.

use std::fmt;

use serde::Serialize;

use crate::fuzzy::FuzzySubset;
use crate::grade::Grade;
use crate::table::{CayleyTable, Element};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FuzzyProperty {
    /// `f(ab) ≥ f(a) ∧ f(b)`
    Subgroupoid,
    /// `f(ab) ≥ f(b)`
    LeftIdeal,
    /// `f(ab) ≥ f(a)`
    RightIdeal,
    /// `f((xy)z) ≥ f(x) ∧ f(z)`, on top of being a subgroupoid
    BiIdeal,
    /// `f((xa)y) ≥ f(a)`
    InteriorIdeal,
}

impl FuzzyProperty {
    /// The image element and the grade it must reach, at `xs`.
    fn requirement(self, f: &FuzzySubset, t: &CayleyTable, xs: &[Element]) -> (Element, Grade) {
        match self {
            FuzzyProperty::Subgroupoid => (t.op(xs[0], xs[1]), f.grade(xs[0]).min(f.grade(xs[1]))),
            FuzzyProperty::LeftIdeal => (t.op(xs[0], xs[1]), f.grade(xs[1])),
            FuzzyProperty::RightIdeal => (t.op(xs[0], xs[1]), f.grade(xs[0])),
            FuzzyProperty::BiIdeal => (t.op(t.op(xs[0], xs[1]), xs[2]), f.grade(xs[0]).min(f.grade(xs[2]))),
            FuzzyProperty::InteriorIdeal => (t.op(t.op(xs[0], xs[1]), xs[2]), f.grade(xs[1])),
        }
    }

    fn arity(self) -> usize {
        match self {
            FuzzyProperty::BiIdeal | FuzzyProperty::InteriorIdeal => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for FuzzyProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FuzzyProperty::Subgroupoid => "fuzzy AG-subgroupoid",
            FuzzyProperty::LeftIdeal => "fuzzy left ideal",
            FuzzyProperty::RightIdeal => "fuzzy right ideal",
            FuzzyProperty::BiIdeal => "fuzzy bi-ideal",
            FuzzyProperty::InteriorIdeal => "fuzzy interior ideal",
        })
    }
}

/// The grade at `image` is `actual`, below the `required` grade.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredicateWitness {
    pub property: FuzzyProperty,
    pub elements: Vec<Element>,
    pub image: Element,
    pub actual: Grade,
    pub required: Grade,
}

impl PredicateWitness {
    pub fn recheck(&self, f: &FuzzySubset, t: &CayleyTable) -> bool {
        if self.elements.len() != self.property.arity() || self.elements.iter().any(|&e| e >= t.order()) {
            return false;
        }
        let (image, required) = self.property.requirement(f, t, &self.elements);
        image == self.image && required == self.required && f.grade(image) == self.actual && self.actual < required
    }
}

impl fmt::Display for PredicateWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let els: Vec<String> = self.elements.iter().map(|e| e.to_string()).collect();
        write!(
            f,
            "not a {} at ({}): grade {} at {} is below {}",
            self.property,
            els.join(","),
            self.actual,
            self.image,
            self.required
        )
    }
}

fn scan(f: &FuzzySubset, t: &CayleyTable, property: FuzzyProperty) -> Result<(), PredicateWitness> {
    assert_eq!(f.order(), t.order(), "fuzzy subset and table disagree on the carrier");
    let mut xs = vec![0; property.arity()];
    loop {
        let (image, required) = property.requirement(f, t, &xs);
        let actual = f.grade(image);
        if actual < required {
            return Err(PredicateWitness {
                property,
                elements: xs,
                image,
                actual,
                required,
            });
        }
        if !crate::laws::next_tuple(&mut xs, t.order()) {
            return Ok(());
        }
    }
}

pub fn is_fuzzy_subgroupoid(f: &FuzzySubset, t: &CayleyTable) -> Result<(), PredicateWitness> {
    scan(f, t, FuzzyProperty::Subgroupoid)
}

pub fn is_fuzzy_left_ideal(f: &FuzzySubset, t: &CayleyTable) -> Result<(), PredicateWitness> {
    scan(f, t, FuzzyProperty::LeftIdeal)
}

pub fn is_fuzzy_right_ideal(f: &FuzzySubset, t: &CayleyTable) -> Result<(), PredicateWitness> {
    scan(f, t, FuzzyProperty::RightIdeal)
}

/// Two-sided: left first, then right.
pub fn is_fuzzy_ideal(f: &FuzzySubset, t: &CayleyTable) -> Result<(), PredicateWitness> {
    is_fuzzy_left_ideal(f, t)?;
    is_fuzzy_right_ideal(f, t)
}

pub fn is_fuzzy_bi_ideal(f: &FuzzySubset, t: &CayleyTable) -> Result<(), PredicateWitness> {
    is_fuzzy_subgroupoid(f, t)?;
    scan(f, t, FuzzyProperty::BiIdeal)
}

pub fn is_fuzzy_interior_ideal(f: &FuzzySubset, t: &CayleyTable) -> Result<(), PredicateWitness> {
    scan(f, t, FuzzyProperty::InteriorIdeal)
}

/// `f∘f = f`.
pub fn is_fuzzy_idempotent(f: &FuzzySubset, t: &CayleyTable) -> bool {
    f.check_table(t)
        .expect("fuzzy subset and table disagree on the carrier");
    f.compose(f, t) == *f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::all_fuzzy_subsets;
    use crate::grade::GradeChain;

    fn k(r: u8) -> GradeChain {
        GradeChain::new(r).unwrap()
    }

    #[test]
    fn top_passes_everything() {
        for t in [
            CayleyTable::z3sub(),
            CayleyTable::left_zero(3),
            CayleyTable::constant(2, 1),
        ] {
            let s = FuzzySubset::full(t.order(), k(2));
            assert!(is_fuzzy_subgroupoid(&s, &t).is_ok());
            assert!(is_fuzzy_ideal(&s, &t).is_ok());
            assert!(is_fuzzy_bi_ideal(&s, &t).is_ok());
            assert!(is_fuzzy_interior_ideal(&s, &t).is_ok());
        }
    }

    #[test]
    fn z3sub_singleton_is_not_a_subgroupoid() {
        let t = CayleyTable::z3sub();
        let f = FuzzySubset::indicator(3, k(1), &[1]);
        let w = is_fuzzy_subgroupoid(&f, &t).unwrap_err();
        assert_eq!(w.elements, vec![1, 1]);
        assert_eq!(w.image, 0);
        assert_eq!((w.actual, w.required), (Grade(0), Grade(1)));
        assert!(w.recheck(&f, &t));
        assert!(!w.recheck(&FuzzySubset::full(3, k(1)), &t));
    }

    #[test]
    fn idempotence_on_z3sub() {
        let t = CayleyTable::z3sub();
        assert!(is_fuzzy_idempotent(&FuzzySubset::full(3, k(2)), &t));
        assert!(is_fuzzy_idempotent(&FuzzySubset::zero(3, k(2)), &t));
        let f = FuzzySubset::indicator(3, k(1), &[1]);
        assert!(!is_fuzzy_idempotent(&f, &t));
        assert_eq!(f.compose(&f, &t), FuzzySubset::indicator(3, k(1), &[0]));
    }

    #[test]
    fn every_witness_rechecks() {
        let t = CayleyTable::left_zero(3);
        for f in all_fuzzy_subsets(3, k(2)) {
            for check in [
                is_fuzzy_subgroupoid,
                is_fuzzy_left_ideal,
                is_fuzzy_right_ideal,
                is_fuzzy_bi_ideal,
                is_fuzzy_interior_ideal,
            ] {
                if let Err(w) = check(&f, &t) {
                    assert!(w.recheck(&f, &t), "{w}");
                }
            }
        }
    }
}
