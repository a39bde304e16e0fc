use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fuzzy::FuzzySubset;
use crate::grade::GradeChain;
use crate::harness::registry::Hypothesis;
use crate::ideals::lattice::{require_ag_left_identity, FuzzyIdealLattice};
use crate::table::CayleyTable;

/// A defining law that a constructed structure failed, with the members involved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawViolation {
    pub law: &'static str,
    pub members: Vec<FuzzySubset>,
}

impl fmt::Display for LawViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.members.iter().map(|s| format!("[{s}]")).collect();
        write!(f, "{} fails at {}", self.law, m.join(", "))
    }
}

fn violation(law: &'static str, members: &[&FuzzySubset]) -> Error {
    Error::Law(Box::new(LawViolation {
        law,
        members: members.iter().map(|f| (*f).clone()).collect(),
    }))
}

/// `op[i*m + j]` is the index of `elements[i]∘elements[j]`; `elements` must be sorted.
fn operation_table(elements: &[FuzzySubset], products: impl Fn(usize, usize) -> FuzzySubset) -> Result<Vec<usize>> {
    let m = elements.len();
    let mut op = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            let p = products(i, j);
            match elements.binary_search(&p) {
                Ok(k) => op.push(k),
                Err(_) => return Err(violation("closure", &[&elements[i], &elements[j]])),
            }
        }
    }
    Ok(op)
}

fn check_commutative_associative(elements: &[FuzzySubset], op: &[usize]) -> Result<()> {
    let m = elements.len();
    for i in 0..m {
        for j in 0..m {
            if op[i * m + j] != op[j * m + i] {
                return Err(violation("commutativity", &[&elements[i], &elements[j]]));
            }
            for k in 0..m {
                if op[op[i * m + j] * m + k] != op[i * m + op[j * m + k]] {
                    return Err(violation("associativity", &[&elements[i], &elements[j], &elements[k]]));
                }
            }
        }
    }
    Ok(())
}

/// A finite commutative monoid of fuzzy subsets under `∘`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonoidTable {
    elements: Vec<FuzzySubset>,
    op: Vec<usize>,
    identity: usize,
}

impl MonoidTable {
    pub fn elements(&self) -> &[FuzzySubset] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn op(&self, i: usize, j: usize) -> usize {
        self.op[i * self.elements.len() + j]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// Index rows of the operation table.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.op
            .chunks(self.elements.len().max(1))
            .map(<[usize]>::to_vec)
            .collect()
    }

    /// Law checks performed on construction: `m² + m³ + m`.
    pub fn checks_performed(&self) -> u64 {
        let m = self.len() as u64;
        m * m + m * m * m + m
    }
}

/// The idempotent fuzzy left ideals under `∘`, with `S` as the identity.
pub fn idempotent_left_ideal_monoid(t: &CayleyTable, chain: GradeChain) -> Result<MonoidTable> {
    require_ag_left_identity(t)?;
    monoid_of(&FuzzyIdealLattice::new(t, chain)?)
}

pub(crate) fn monoid_of(lattice: &FuzzyIdealLattice) -> Result<MonoidTable> {
    let t = lattice.table();
    let family = &lattice.left().members;
    let m = family.len();
    let products = lattice.left_products();
    let elements: Vec<FuzzySubset> = (0..m)
        .filter(|&i| products[i * m + i] == family[i])
        .map(|i| family[i].clone())
        .collect();
    let op = operation_table(&elements, |i, j| elements[i].compose(&elements[j], t))?;
    check_commutative_associative(&elements, &op)?;
    let top = FuzzySubset::full(t.order(), lattice.chain());
    let Ok(identity) = elements.binary_search(&top) else {
        return Err(violation("identity", &[&top]));
    };
    let n = elements.len();
    for i in 0..n {
        if op[identity * n + i] != i || op[i * n + identity] != i {
            return Err(violation("identity", &[&top, &elements[i]]));
        }
    }
    Ok(MonoidTable { elements, op, identity })
}

/// A finite commutative idempotent semigroup of fuzzy subsets under `∘`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Semilattice {
    elements: Vec<FuzzySubset>,
    op: Vec<usize>,
}

impl Semilattice {
    pub fn elements(&self) -> &[FuzzySubset] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn op(&self, i: usize, j: usize) -> usize {
        self.op[i * self.elements.len() + j]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.op
            .chunks(self.elements.len().max(1))
            .map(<[usize]>::to_vec)
            .collect()
    }
}

/// The fuzzy quasi-prime left ideals under `∘`. Along the way every pair of
/// fuzzy left ideals must satisfy `f∘g = f∩g`.
pub fn quasi_prime_semilattice(t: &CayleyTable, chain: GradeChain) -> Result<Semilattice> {
    require_ag_left_identity(t)?;
    semilattice_of(&FuzzyIdealLattice::new(t, chain)?)
}

pub(crate) fn semilattice_of(lattice: &FuzzyIdealLattice) -> Result<Semilattice> {
    if !lattice.fully_quasi_prime() {
        return Err(Error::Hypothesis(Hypothesis::AgLeftIdentityFullyQuasiPrime));
    }
    let t = lattice.table();
    let family = &lattice.left().members;
    let m = family.len();
    let products = lattice.left_products();
    for ij in 0..m * m {
        let (f, g) = (&family[ij / m], &family[ij % m]);
        if products[ij] != f.meet(g) {
            return Err(violation("product equals intersection", &[f, g]));
        }
    }
    let elements: Vec<FuzzySubset> = lattice
        .quasi_prime_members()
        .into_iter()
        .map(|i| family[i].clone())
        .collect();
    let op = operation_table(&elements, |i, j| elements[i].compose(&elements[j], t))?;
    check_commutative_associative(&elements, &op)?;
    for (i, e) in elements.iter().enumerate() {
        if op[i * elements.len() + i] != i {
            return Err(violation("idempotence", &[e]));
        }
    }
    Ok(Semilattice { elements, op })
}
