//! Structural identities of a finite magma, decided exhaustively.
//!
//! Every check walks its variable tuples in lexicographic order and reports
//! the first failing tuple as a [`Witness`].

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::crisp::CrispSubset;
use crate::error::Error;
use crate::table::{CayleyTable, Element};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    /// `(ab)c = (cb)a`
    LeftInvertive,
    /// `(ab)(cd) = (ac)(bd)`
    Medial,
    /// `(ab)(cd) = (dc)(ba)`
    Paramedial,
    /// `a(bc) = b(ac)`
    LeftPermutable,
    /// `(ab)c = a(bc)`
    Associative,
    /// `ab = ba`
    Commutative,
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::LeftInvertive,
        Identity::Medial,
        Identity::Paramedial,
        Identity::LeftPermutable,
        Identity::Associative,
        Identity::Commutative,
    ];

    pub fn arity(self) -> usize {
        match self {
            Identity::Commutative => 2,
            Identity::LeftInvertive | Identity::LeftPermutable | Identity::Associative => 3,
            Identity::Medial | Identity::Paramedial => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Identity::LeftInvertive => "left-invertive",
            Identity::Medial => "medial",
            Identity::Paramedial => "paramedial",
            Identity::LeftPermutable => "left-permutable",
            Identity::Associative => "associative",
            Identity::Commutative => "commutative",
        }
    }

    pub fn equation(self) -> &'static str {
        match self {
            Identity::LeftInvertive => "(ab)c = (cb)a",
            Identity::Medial => "(ab)(cd) = (ac)(bd)",
            Identity::Paramedial => "(ab)(cd) = (dc)(ba)",
            Identity::LeftPermutable => "a(bc) = b(ac)",
            Identity::Associative => "(ab)c = a(bc)",
            Identity::Commutative => "ab = ba",
        }
    }

    /// Evaluates both sides at `xs`, which must have length [`Identity::arity`].
    pub fn sides(self, t: &CayleyTable, xs: &[Element]) -> (Element, Element) {
        assert_eq!(
            xs.len(),
            self.arity(),
            "{} takes {} variables",
            self.name(),
            self.arity()
        );
        let m = |a, b| t.op(a, b);
        match self {
            Identity::LeftInvertive => {
                let [a, b, c] = [xs[0], xs[1], xs[2]];
                (m(m(a, b), c), m(m(c, b), a))
            }
            Identity::Medial => {
                let [a, b, c, d] = [xs[0], xs[1], xs[2], xs[3]];
                (m(m(a, b), m(c, d)), m(m(a, c), m(b, d)))
            }
            Identity::Paramedial => {
                let [a, b, c, d] = [xs[0], xs[1], xs[2], xs[3]];
                (m(m(a, b), m(c, d)), m(m(d, c), m(b, a)))
            }
            Identity::LeftPermutable => {
                let [a, b, c] = [xs[0], xs[1], xs[2]];
                (m(a, m(b, c)), m(b, m(a, c)))
            }
            Identity::Associative => {
                let [a, b, c] = [xs[0], xs[1], xs[2]];
                (m(m(a, b), c), m(a, m(b, c)))
            }
            Identity::Commutative => (m(xs[0], xs[1]), m(xs[1], xs[0])),
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "aux" => return Ok(Identity::LeftPermutable),
            "left-invertive-law" | "ag" => return Ok(Identity::LeftInvertive),
            _ => {}
        }
        Identity::ALL.into_iter().find(|id| id.name() == s).ok_or_else(|| {
            let names: Vec<_> = Identity::ALL.iter().map(|i| i.name()).collect();
            Error::usage(format!("unknown identity {s:?}; expected one of {}", names.join(", ")))
        })
    }
}

/// A tuple at which an identity fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub identity: Identity,
    pub elements: Vec<Element>,
    pub lhs: Element,
    pub rhs: Element,
}

impl Witness {
    /// Re-evaluates the identity at the recorded tuple.
    pub fn recheck(&self, t: &CayleyTable) -> bool {
        if self.elements.len() != self.identity.arity() || self.elements.iter().any(|&e| e >= t.order()) {
            return false;
        }
        let (lhs, rhs) = self.identity.sides(t, &self.elements);
        lhs == self.lhs && rhs == self.rhs && lhs != rhs
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let els: Vec<String> = self.elements.iter().map(|e| e.to_string()).collect();
        write!(
            f,
            "{} fails at ({}): lhs={} rhs={}",
            self.identity,
            els.join(","),
            self.lhs,
            self.rhs
        )
    }
}

/// Steps `xs` to the next tuple in lexicographic order; false after the last.
pub(crate) fn next_tuple(xs: &mut [usize], base: usize) -> bool {
    for slot in xs.iter_mut().rev() {
        *slot += 1;
        if *slot < base {
            return true;
        }
        *slot = 0;
    }
    false
}

pub fn check_identity(t: &CayleyTable, identity: Identity) -> Result<(), Witness> {
    let mut xs = vec![0; identity.arity()];
    loop {
        let (lhs, rhs) = identity.sides(t, &xs);
        if lhs != rhs {
            return Err(Witness {
                identity,
                elements: xs,
                lhs,
                rhs,
            });
        }
        if !next_tuple(&mut xs, t.order()) {
            return Ok(());
        }
    }
}

pub fn check_left_invertive(t: &CayleyTable) -> Result<(), Witness> {
    check_identity(t, Identity::LeftInvertive)
}

pub fn check_medial(t: &CayleyTable) -> Result<(), Witness> {
    check_identity(t, Identity::Medial)
}

pub fn check_paramedial(t: &CayleyTable) -> Result<(), Witness> {
    check_identity(t, Identity::Paramedial)
}

/// `a(bc) = b(ac)`.
pub fn check_aux_identity(t: &CayleyTable) -> Result<(), Witness> {
    check_identity(t, Identity::LeftPermutable)
}

pub fn is_ag_groupoid(t: &CayleyTable) -> bool {
    check_left_invertive(t).is_ok()
}

pub fn left_identities(t: &CayleyTable) -> Vec<Element> {
    t.elements()
        .filter(|&e| t.elements().all(|x| t.op(e, x) == x))
        .collect()
}

pub fn right_identities(t: &CayleyTable) -> Vec<Element> {
    t.elements()
        .filter(|&e| t.elements().all(|x| t.op(x, e) == x))
        .collect()
}

pub fn has_left_identity(t: &CayleyTable) -> bool {
    t.elements().any(|e| t.elements().all(|x| t.op(e, x) == x))
}

pub fn idempotent_elements(t: &CayleyTable) -> CrispSubset {
    CrispSubset::from_predicate(t.order(), |a| t.op(a, a) == a)
}

pub fn is_commutative_semigroup(t: &CayleyTable) -> bool {
    check_identity(t, Identity::Commutative).is_ok() && check_identity(t, Identity::Associative).is_ok()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureFlags {
    pub is_ag: bool,
    pub left_identities: Vec<Element>,
    pub right_identities: Vec<Element>,
    pub is_commutative: bool,
    pub is_associative: bool,
    pub idempotent_elements: CrispSubset,
}

pub fn structure_flags(t: &CayleyTable) -> StructureFlags {
    StructureFlags {
        is_ag: is_ag_groupoid(t),
        left_identities: left_identities(t),
        right_identities: right_identities(t),
        is_commutative: check_identity(t, Identity::Commutative).is_ok(),
        is_associative: check_identity(t, Identity::Associative).is_ok(),
        idempotent_elements: idempotent_elements(t),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force reference: collect every failing tuple with nested loops.
    fn failing_triples(
        t: &CayleyTable,
        lhs: impl Fn(usize, usize, usize) -> usize,
        rhs: impl Fn(usize, usize, usize) -> usize,
    ) -> Vec<[usize; 3]> {
        let n = t.order();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if lhs(a, b, c) != rhs(a, b, c) {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn z3sub_passes_the_ag_identities() {
        let t = CayleyTable::z3sub();
        let m = |a, b| t.op(a, b);
        assert!(failing_triples(&t, |a, b, c| m(m(a, b), c), |a, b, c| m(m(c, b), a)).is_empty());
        assert!(check_left_invertive(&t).is_ok());
        assert!(check_medial(&t).is_ok());
        assert!(check_paramedial(&t).is_ok());
        assert!(check_aux_identity(&t).is_ok());
    }

    #[test]
    fn left_zero_witnesses() {
        let t = CayleyTable::left_zero(2);
        let m = |a, b| t.op(a, b);
        let reference = failing_triples(&t, |a, b, c| m(m(a, b), c), |a, b, c| m(m(c, b), a));
        let w = check_left_invertive(&t).unwrap_err();
        assert_eq!(w.elements, reference[0].to_vec());
        assert_eq!(w.elements, vec![0, 0, 1]);
        assert_eq!((w.lhs, w.rhs), (0, 1));
        assert!(w.recheck(&t));

        let w = check_aux_identity(&t).unwrap_err();
        assert_eq!(w.elements, vec![0, 1, 0]);
        assert_eq!((w.lhs, w.rhs), (0, 1));
        assert!(w.recheck(&t));
    }

    #[test]
    fn left_zero_is_medial() {
        // (ab)(cd) = a = (ac)(bd) for every quadruple.
        let t = CayleyTable::left_zero(2);
        assert!(check_medial(&t).is_ok());
        assert!(check_paramedial(&t).is_err());
    }

    #[test]
    fn commutative_associative_tables_are_ag() {
        for n in 1..5 {
            let t = CayleyTable::addition_mod(n);
            assert!(check_left_invertive(&t).is_ok());
            assert!(check_aux_identity(&t).is_ok());
            assert_eq!(left_identities(&t), vec![0]);
        }
    }

    #[test]
    fn order_one_passes_everything() {
        let t = CayleyTable::trivial();
        for id in Identity::ALL {
            assert!(check_identity(&t, id).is_ok());
        }
    }

    #[test]
    fn identities_and_idempotents() {
        assert_eq!(left_identities(&CayleyTable::z3sub()), vec![0]);
        assert!(left_identities(&CayleyTable::left_zero(2)).is_empty());
        assert_eq!(left_identities(&CayleyTable::right_zero(3)), vec![0, 1, 2]);
        assert_eq!(idempotent_elements(&CayleyTable::z3sub()).members(), vec![0]);
        assert_eq!(idempotent_elements(&CayleyTable::addition_mod(3)).members(), vec![0]);
        assert_eq!(idempotent_elements(&CayleyTable::constant(2, 0)).members(), vec![0]);
    }

    #[test]
    fn witness_recheck_rejects_tampering() {
        let t = CayleyTable::left_zero(2);
        let mut w = check_left_invertive(&t).unwrap_err();
        w.elements = vec![0, 0, 0];
        assert!(!w.recheck(&t));
        w.elements = vec![0, 0, 9];
        assert!(!w.recheck(&t));
    }

    #[test]
    fn identity_names_parse() {
        for id in Identity::ALL {
            assert_eq!(id.name().parse::<Identity>().unwrap(), id);
        }
        assert_eq!("aux".parse::<Identity>().unwrap(), Identity::LeftPermutable);
        assert!("distributive".parse::<Identity>().is_err());
    }
}
