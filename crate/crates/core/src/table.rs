//! Finite magmas given by their Cayley tables.
//!
//! The carrier of a table of order `n` is `{0, .., n-1}`; row `a` lists the
//! products `a·0, .., a·(n-1)`. Every entry is in range, so the operation is
//! total by construction.

use std::fmt;

use crate::error::{Error, Result};

/// A carrier element, identified by its 0-based index.
pub type Element = usize;

/// Largest carrier accepted anywhere in the crate. Subsets are stored as
/// `u64` masks, so this is a hard ceiling.
pub const MAX_ORDER: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CayleyTable {
    order: usize,
    entries: Vec<u8>,
}

impl CayleyTable {
    /// Builds a table from its row-major entries.
    pub fn new(order: usize, entries: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::usage("a Cayley table needs at least one element"));
        }
        if order > MAX_ORDER {
            return Err(Error::Capability {
                what: "cayley table",
                order,
                bound: MAX_ORDER,
            });
        }
        if entries.len() != order * order {
            return Err(Error::usage(format!(
                "order {order} needs {} entries, got {}",
                order * order,
                entries.len()
            )));
        }
        if let Some(&bad) = entries.iter().find(|&&e| e >= order) {
            return Err(Error::ElementOutOfRange { element: bad, order });
        }
        Ok(CayleyTable {
            order,
            entries: entries.into_iter().map(|e| e as u8).collect(),
        })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let order = rows.len();
        if let Some(row) = rows.iter().find(|r| r.len() != order) {
            return Err(Error::usage(format!(
                "row of length {} in a table of order {order}",
                row.len()
            )));
        }
        Self::new(order, rows.concat())
    }

    /// Tabulates `op` over the carrier. Panics if `op` leaves the carrier.
    pub fn from_fn(order: usize, mut op: impl FnMut(Element, Element) -> Element) -> Self {
        let entries = (0..order)
            .flat_map(|a| (0..order).map(move |b| (a, b)))
            .map(|(a, b)| op(a, b))
            .collect();
        Self::new(order, entries).expect("operation leaves the carrier")
    }

    /// Internal constructor for entries already known to be in range.
    pub(crate) fn from_raw(order: usize, entries: Vec<u8>) -> Self {
        debug_assert_eq!(entries.len(), order * order);
        debug_assert!(entries.iter().all(|&e| (e as usize) < order));
        CayleyTable { order, entries }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// The product `a·b`. Indices must be in range.
    #[inline]
    pub fn op(&self, a: Element, b: Element) -> Element {
        self.entries[a * self.order + b] as Element
    }

    /// Checked version of [`CayleyTable::op`].
    pub fn apply(&self, a: Element, b: Element) -> Result<Element> {
        for x in [a, b] {
            if x >= self.order {
                return Err(Error::ElementOutOfRange {
                    element: x,
                    order: self.order,
                });
            }
        }
        Ok(self.op(a, b))
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<Element>> {
        self.entries
            .chunks(self.order)
            .map(|row| row.iter().map(|&e| e as Element).collect())
            .collect()
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    // Fixtures.

    /// `a·b = (b − a) mod n`. An AG-groupoid with left identity 0.
    pub fn subtraction_mod(n: usize) -> Self {
        Self::from_fn(n, |a, b| (b + n - a) % n)
    }

    /// The three-element subtraction groupoid used throughout the tests.
    pub fn z3sub() -> Self {
        Self::subtraction_mod(3)
    }

    pub fn addition_mod(n: usize) -> Self {
        Self::from_fn(n, |a, b| (a + b) % n)
    }

    /// `a·b = a`.
    pub fn left_zero(n: usize) -> Self {
        Self::from_fn(n, |a, _| a)
    }

    /// `a·b = b`.
    pub fn right_zero(n: usize) -> Self {
        Self::from_fn(n, |_, b| b)
    }

    pub fn constant(n: usize, c: Element) -> Self {
        Self::from_fn(n, |_, _| c)
    }

    pub fn trivial() -> Self {
        Self::constant(1, 0)
    }
}

/// Writes the Cayley-table text format: the order, then one row per line.
impl fmt::Display for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.order)?;
        for row in self.entries.chunks(self.order) {
            let mut first = true;
            for e in row {
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{e}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CayleyTable{:?}", self.rows())
    }
}

impl serde::Serialize for CayleyTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}
