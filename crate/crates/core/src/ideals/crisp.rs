use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::crisp::CrispSubset;
use crate::error::{Error, Result};
use crate::table::CayleyTable;

/// Crisp subsets are enumerated as bit masks; beyond this order that stops being feasible.
pub const MAX_SUBSET_ORDER: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealKind {
    /// `SA ⊆ A`
    Left,
    /// `AS ⊆ A`
    Right,
    TwoSided,
    /// `(SA)S ⊆ A`
    Interior,
    /// `AA ⊆ A` and `(AS)A ⊆ A`
    Bi,
    /// `AA ⊆ A`
    Subgroupoid,
}

impl IdealKind {
    pub const ALL: [IdealKind; 6] = [
        IdealKind::Left,
        IdealKind::Right,
        IdealKind::TwoSided,
        IdealKind::Interior,
        IdealKind::Bi,
        IdealKind::Subgroupoid,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdealKind::Left => "left",
            IdealKind::Right => "right",
            IdealKind::TwoSided => "two-sided",
            IdealKind::Interior => "interior",
            IdealKind::Bi => "bi",
            IdealKind::Subgroupoid => "subgroupoid",
        }
    }
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdealKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ideal" | "two" => return Ok(IdealKind::TwoSided),
            "bi-ideal" => return Ok(IdealKind::Bi),
            _ => {}
        }
        IdealKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::usage(format!("unknown ideal kind `{s}`")))
    }
}

/// Whether `a` satisfies the containment of `kind`. The empty set passes
/// every containment; callers that want ideals proper exclude it.
pub fn satisfies_containment(a: &CrispSubset, t: &CayleyTable, kind: IdealKind) -> bool {
    let s = CrispSubset::full(t.order());
    match kind {
        IdealKind::Left => s.product(a, t).is_subset(a),
        IdealKind::Right => a.product(&s, t).is_subset(a),
        IdealKind::TwoSided => s.product(a, t).is_subset(a) && a.product(&s, t).is_subset(a),
        IdealKind::Interior => s.product(a, t).product(&s, t).is_subset(a),
        IdealKind::Bi => a.product(a, t).is_subset(a) && a.product(&s, t).product(a, t).is_subset(a),
        IdealKind::Subgroupoid => a.product(a, t).is_subset(a),
    }
}

/// A non-empty subset satisfying the containment of `kind`.
pub fn is_crisp_ideal(a: &CrispSubset, t: &CayleyTable, kind: IdealKind) -> bool {
    a.order() == t.order() && !a.is_empty() && satisfies_containment(a, t, kind)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrispIdealFamily {
    pub kind: IdealKind,
    pub members: Vec<CrispSubset>,
}

impl CrispIdealFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: &CrispSubset) -> bool {
        self.members.binary_search(a).is_ok()
    }
}

/// All non-empty ideals of `kind`, in ascending bit-mask order.
pub fn enumerate_crisp_ideals(t: &CayleyTable, kind: IdealKind) -> Result<CrispIdealFamily> {
    if t.order() > MAX_SUBSET_ORDER {
        return Err(Error::Capability {
            what: "crisp subset enumeration",
            order: t.order(),
            bound: MAX_SUBSET_ORDER,
        });
    }
    let members = CrispSubset::all(t.order())
        .skip(1)
        .filter(|a| satisfies_containment(a, t, kind))
        .collect();
    Ok(CrispIdealFamily { kind, members })
}

fn require(p: &CrispSubset, t: &CayleyTable, kind: IdealKind) -> Result<()> {
    if p.order() != t.order() {
        return Err(Error::CarrierMismatch {
            expected: t.order(),
            found: p.order(),
        });
    }
    if !is_crisp_ideal(p, t, kind) {
        return Err(Error::usage(format!("{p} is not a {kind} ideal")));
    }
    Ok(())
}

/// `AB ⊆ P` forces `A ⊆ P` or `B ⊆ P` for all `A, B` in the family.
fn prime_over(p: &CrispSubset, t: &CayleyTable, family: &CrispIdealFamily) -> bool {
    family.members.iter().all(|a| {
        a.is_subset(p)
            || family
                .members
                .iter()
                .all(|b| b.is_subset(p) || !a.product(b, t).is_subset(p))
    })
}

/// `P` must be a two-sided ideal; quantifies over two-sided ideals.
pub fn is_crisp_prime(p: &CrispSubset, t: &CayleyTable) -> Result<bool> {
    require(p, t, IdealKind::TwoSided)?;
    Ok(prime_over(p, t, &enumerate_crisp_ideals(t, IdealKind::TwoSided)?))
}

/// `P` must be a left ideal; quantifies over left ideals.
pub fn is_crisp_quasi_prime(p: &CrispSubset, t: &CayleyTable) -> Result<bool> {
    require(p, t, IdealKind::Left)?;
    Ok(prime_over(p, t, &enumerate_crisp_ideals(t, IdealKind::Left)?))
}

/// `AA ⊆ P` forces `A ⊆ P` for every left ideal `A`.
pub fn is_crisp_semiprime(p: &CrispSubset, t: &CayleyTable) -> Result<bool> {
    require(p, t, IdealKind::Left)?;
    let family = enumerate_crisp_ideals(t, IdealKind::Left)?;
    Ok(family
        .members
        .iter()
        .all(|a| a.is_subset(p) || !a.product(a, t).is_subset(p)))
}

pub fn is_fully_crisp_prime(t: &CayleyTable) -> Result<bool> {
    let family = enumerate_crisp_ideals(t, IdealKind::TwoSided)?;
    Ok(family.members.iter().all(|p| prime_over(p, t, &family)))
}

pub fn is_fully_crisp_quasi_prime(t: &CayleyTable) -> Result<bool> {
    let family = enumerate_crisp_ideals(t, IdealKind::Left)?;
    Ok(family.members.iter().all(|p| prime_over(p, t, &family)))
}
