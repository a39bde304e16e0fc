use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

macro_rules! statements {
    ($($variant:ident => $name:literal),* $(,)?) => {
        /// A checkable statement about finite AG-groupoids and their fuzzy subsets.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum StatementId { $($variant),* }

        impl StatementId {
            pub const ALL: &'static [StatementId] = &[$(StatementId::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self { $(StatementId::$variant => $name),* }
            }
        }
    };
}

statements! {
    P1 => "P1", C1 => "C1", T1a => "T1a", T1b => "T1b", P2Fwd => "P2-fwd", P2Rev => "P2-rev",
    L1i => "L1i", L1ii => "L1ii", L1iii => "L1iii", L1iv => "L1iv", L2 => "L2", L3 => "L3", L4 => "L4",
    P3 => "P3", C2 => "C2", T2 => "T2", T3 => "T3", P4 => "P4", T4i => "T4i", T4ii => "T4ii", T5 => "T5",
    L5 => "L5", L6 => "L6", R1 => "R1", R2 => "R2", L7 => "L7", L8 => "L8", L9 => "L9", L10 => "L10",
    P5i => "P5i", P5ii => "P5ii", L11 => "L11", L12 => "L12", P6 => "P6", C3 => "C3", T6 => "T6",
    T7 => "T7", P7 => "P7", T8 => "T8", C4 => "C4", T9 => "T9",
}

impl StatementId {
    /// Position in [`StatementId::ALL`].
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn statement(self) -> &'static Statement {
        &REGISTRY[self.index()]
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StatementId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StatementId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::usage(format!("unknown statement id `{s}`")))
    }
}

impl Serialize for StatementId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// The structures a statement speaks about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Hypothesis {
    None,
    Ag,
    AgLeftIdentity,
    CommutativeSemigroup,
    /// AG-groupoid in which every chain-valued fuzzy subset is a product of two.
    ProductGate,
    AgLeftIdentityFullyQuasiPrime,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hypothesis::None => "none",
            Hypothesis::Ag => "AG-groupoid",
            Hypothesis::AgLeftIdentity => "AG-groupoid with left identity",
            Hypothesis::CommutativeSemigroup => "commutative semigroup",
            Hypothesis::ProductGate => "AG-groupoid with F(S) = F(S)∘F(S) over the chain",
            Hypothesis::AgLeftIdentityFullyQuasiPrime => "AG-groupoid with left identity, fully fuzzy quasi-prime",
        })
    }
}

/// A quantification domain for one variable of a statement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Domain {
    All,
    Left,
    Right,
    TwoSided,
    Subgroupoid,
    Bi,
    Idempotent,
    IdempotentLeft,
    LeftOrRight,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// A universally quantified claim about tuples drawn from the domains.
    Tuple(&'static [Domain]),
    /// A claim about the structure as a whole.
    Structure,
}

#[derive(Clone, Copy, Debug)]
pub struct Statement {
    pub id: StatementId,
    pub hypothesis: Hypothesis,
    pub shape: Shape,
    pub claim: &'static str,
}

use Domain::*;
use Hypothesis::{Ag, AgLeftIdentity as AgLi, AgLeftIdentityFullyQuasiPrime as Fqp};

const fn st(id: StatementId, hypothesis: Hypothesis, shape: Shape, claim: &'static str) -> Statement {
    Statement {
        id,
        hypothesis,
        shape,
        claim,
    }
}

const ALL3: Shape = Shape::Tuple(&[All, All, All]);
const ALL4: Shape = Shape::Tuple(&[All, All, All, All]);

pub static REGISTRY: [Statement; 41] = [
    st(StatementId::P1, Ag, ALL3, "(f∘g)∘h = (h∘g)∘f"),
    st(StatementId::C1, Ag, ALL4, "(f∘g)∘(h∘k) = (f∘h)∘(g∘k)"),
    st(StatementId::T1a, AgLi, ALL3, "f∘(g∘h) = g∘(f∘h)"),
    st(StatementId::T1b, AgLi, ALL4, "(f∘g)∘(h∘k) = (k∘h)∘(g∘f)"),
    st(
        StatementId::P2Fwd,
        Hypothesis::CommutativeSemigroup,
        ALL3,
        "(f∘g)∘h = f∘(h∘g)",
    ),
    st(
        StatementId::P2Rev,
        Hypothesis::ProductGate,
        Shape::Structure,
        "(f∘g)∘h = f∘(h∘g) for all f, g, h forces a commutative semigroup",
    ),
    st(
        StatementId::L1i,
        Ag,
        Shape::Tuple(&[All]),
        "fuzzy AG-subgroupoid ⇔ f∘f ⊆ f",
    ),
    st(
        StatementId::L1ii,
        Ag,
        Shape::Tuple(&[All]),
        "fuzzy left ideal ⇔ S∘f ⊆ f",
    ),
    st(
        StatementId::L1iii,
        Ag,
        Shape::Tuple(&[All]),
        "fuzzy right ideal ⇔ f∘S ⊆ f",
    ),
    st(
        StatementId::L1iv,
        Ag,
        Shape::Tuple(&[All]),
        "fuzzy ideal ⇔ S∘f ⊆ f and f∘S ⊆ f",
    ),
    st(
        StatementId::L2,
        Ag,
        Shape::Tuple(&[All, All]),
        "f∩g stays a fuzzy AG-subgroupoid, left, right or two-sided ideal",
    ),
    st(StatementId::L3, AgLi, Shape::Tuple(&[]), "S∘S = S"),
    st(
        StatementId::L4,
        AgLi,
        Shape::Tuple(&[Left]),
        "S∘f = f for fuzzy left ideals",
    ),
    st(
        StatementId::P3,
        AgLi,
        Shape::Tuple(&[Left, Left, All, All]),
        "f∘g = h∘k implies g∘f = k∘h for fuzzy left ideals f, k",
    ),
    st(
        StatementId::C2,
        Ag,
        Shape::Structure,
        "(f∘g)∘h = g∘(f∘h) for all f, g, h ⇔ (f∘g)∘h = g∘(h∘f) for all f, g, h",
    ),
    st(
        StatementId::T2,
        Ag,
        Shape::Structure,
        "{f : f∘h = f} is a commutative monoid with identity h, for idempotent h",
    ),
    st(
        StatementId::T3,
        AgLi,
        Shape::Structure,
        "⟨a_λ⟩_L is λ on Sa and 0 elsewhere",
    ),
    st(
        StatementId::P4,
        Ag,
        Shape::Tuple(&[IdempotentLeft]),
        "idempotent fuzzy left ideals are fuzzy ideals",
    ),
    st(
        StatementId::T4i,
        AgLi,
        Shape::Tuple(&[Idempotent]),
        "S∘f is idempotent for idempotent f",
    ),
    st(
        StatementId::T4ii,
        AgLi,
        Shape::Tuple(&[Idempotent, Left]),
        "idempotent f commutes with every fuzzy left ideal",
    ),
    st(
        StatementId::T5,
        AgLi,
        Shape::Structure,
        "idempotent fuzzy left ideals form a commutative monoid with identity S",
    ),
    st(
        StatementId::L5,
        AgLi,
        Shape::Tuple(&[Right]),
        "fuzzy right ideals are fuzzy ideals",
    ),
    st(
        StatementId::L6,
        AgLi,
        Shape::Tuple(&[Left]),
        "f∪(f∘S) and f∪(f∘f) are fuzzy ideals for fuzzy left ideals f",
    ),
    st(
        StatementId::R1,
        AgLi,
        Shape::Tuple(&[Idempotent]),
        "an idempotent fuzzy subset is a fuzzy left ideal ⇔ it is a fuzzy right ideal",
    ),
    st(
        StatementId::R2,
        AgLi,
        Shape::Tuple(&[Right]),
        "f∪(S∘f) and f∪(f∘f) are fuzzy ideals for fuzzy right ideals f",
    ),
    st(
        StatementId::L7,
        Ag,
        Shape::Tuple(&[Subgroupoid]),
        "a fuzzy AG-subgroupoid is a fuzzy bi-ideal ⇔ (f∘S)∘f ⊆ f",
    ),
    st(
        StatementId::L8,
        AgLi,
        Shape::Tuple(&[Right, Right]),
        "f∘g is a fuzzy bi-ideal for fuzzy right ideals f, g",
    ),
    st(
        StatementId::L9,
        Ag,
        Shape::Tuple(&[Bi, Bi]),
        "f∩g is a fuzzy bi-ideal for fuzzy bi-ideals f, g",
    ),
    st(
        StatementId::L10,
        Ag,
        Shape::Tuple(&[Subgroupoid]),
        "a fuzzy AG-subgroupoid is a fuzzy interior ideal ⇔ (S∘f)∘S ⊆ f",
    ),
    st(
        StatementId::P5i,
        Ag,
        Shape::Tuple(&[IdempotentLeft]),
        "idempotent fuzzy left ideals are fuzzy bi-ideals",
    ),
    st(
        StatementId::P5ii,
        Ag,
        Shape::Tuple(&[IdempotentLeft]),
        "idempotent fuzzy left ideals are fuzzy interior ideals",
    ),
    st(
        StatementId::L11,
        AgLi,
        Shape::Tuple(&[All]),
        "fuzzy right ideal ⇔ fuzzy interior ideal",
    ),
    st(
        StatementId::L12,
        AgLi,
        Shape::Tuple(&[Left]),
        "a fuzzy left ideal that is a fuzzy interior ideal is a fuzzy bi-ideal",
    ),
    st(
        StatementId::P6,
        AgLi,
        Shape::Tuple(&[LeftOrRight]),
        "f∘f is a fuzzy ideal for fuzzy left or right ideals f",
    ),
    st(
        StatementId::C3,
        AgLi,
        Shape::Tuple(&[Left]),
        "f∘f is a fuzzy bi-ideal and interior ideal for fuzzy left ideals f",
    ),
    st(
        StatementId::T6,
        Ag,
        Shape::Tuple(&[TwoSided]),
        "fuzzy ideals are fuzzy bi-ideals and fuzzy interior ideals",
    ),
    st(
        StatementId::T7,
        AgLi,
        Shape::Structure,
        "fully fuzzy prime ⇔ fuzzy ideals are idempotent and totally ordered",
    ),
    st(
        StatementId::P7,
        Fqp,
        Shape::Tuple(&[Left]),
        "fuzzy left ideals are idempotent",
    ),
    st(
        StatementId::T8,
        Fqp,
        Shape::Tuple(&[Left, Left]),
        "f∘g = f∩g for fuzzy left ideals f, g",
    ),
    st(
        StatementId::C4,
        Fqp,
        Shape::Structure,
        "fuzzy quasi-prime ideals form a semilattice under ∘",
    ),
    st(
        StatementId::T9,
        AgLi,
        Shape::Structure,
        "left ideals idempotent ⇔ fuzzy left ideals idempotent ⇔ f∘g = f∩g ⇔ fuzzy left ideals semiprime",
    ),
];

pub fn registry() -> &'static [Statement] {
    &REGISTRY
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_complete_and_aligned() {
        assert_eq!(StatementId::ALL.len(), 41);
        for (i, s) in REGISTRY.iter().enumerate() {
            assert_eq!(s.id.index(), i);
            assert_eq!(StatementId::ALL[i], s.id);
        }
        let names: Vec<&str> = StatementId::ALL.iter().map(|s| s.as_str()).collect();
        let expected = "P1 C1 T1a T1b P2-fwd P2-rev L1i L1ii L1iii L1iv L2 L3 L4 P3 C2 T2 T3 P4 T4i T4ii T5 \
                        L5 L6 R1 R2 L7 L8 L9 L10 P5i P5ii L11 L12 P6 C3 T6 T7 P7 T8 C4 T9";
        assert_eq!(names, expected.split_whitespace().collect::<Vec<_>>());
    }

    #[test]
    fn ids_parse() {
        for id in StatementId::ALL {
            assert_eq!(id.as_str().parse::<StatementId>().unwrap(), *id);
        }
        assert_eq!("p2-FWD".parse::<StatementId>().unwrap(), StatementId::P2Fwd);
        assert!("T10".parse::<StatementId>().is_err());
    }
}
