use std::fmt;

use crate::table::{CayleyTable, Element, MAX_ORDER};

/// A subset of the carrier `{0, .., order-1}`, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrispSubset {
    order: usize,
    mask: u64,
}

impl CrispSubset {
    pub fn empty(order: usize) -> Self {
        assert!(order <= MAX_ORDER);
        CrispSubset { order, mask: 0 }
    }

    pub fn full(order: usize) -> Self {
        assert!(order <= MAX_ORDER);
        let mask = if order == 64 { u64::MAX } else { (1u64 << order) - 1 };
        CrispSubset { order, mask }
    }

    pub fn from_mask(order: usize, mask: u64) -> Self {
        let full = Self::full(order).mask;
        assert_eq!(mask & !full, 0, "mask has bits outside the carrier");
        CrispSubset { order, mask }
    }

    pub fn from_members(order: usize, members: impl IntoIterator<Item = Element>) -> Self {
        let mut s = Self::empty(order);
        for m in members {
            s.insert(m);
        }
        s
    }

    pub fn from_predicate(order: usize, pred: impl Fn(Element) -> bool) -> Self {
        Self::from_members(order, (0..order).filter(|&x| pred(x)))
    }

    pub fn singleton(order: usize, x: Element) -> Self {
        Self::from_members(order, [x])
    }

    pub fn insert(&mut self, x: Element) {
        assert!(x < self.order, "element {x} outside carrier of order {}", self.order);
        self.mask |= 1 << x;
    }

    #[inline]
    pub fn contains(&self, x: Element) -> bool {
        x < self.order && self.mask >> x & 1 == 1
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn members(&self) -> Vec<Element> {
        (0..self.order).filter(|&x| self.contains(x)).collect()
    }

    pub fn is_subset(&self, other: &CrispSubset) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn union(&self, other: &CrispSubset) -> CrispSubset {
        CrispSubset {
            order: self.order,
            mask: self.mask | other.mask,
        }
    }

    pub fn intersection(&self, other: &CrispSubset) -> CrispSubset {
        CrispSubset {
            order: self.order,
            mask: self.mask & other.mask,
        }
    }

    /// The complex product `AB = {ab : a ∈ A, b ∈ B}`.
    pub fn product(&self, other: &CrispSubset, t: &CayleyTable) -> CrispSubset {
        let mut out = CrispSubset::empty(t.order());
        for a in self.members() {
            for b in other.members() {
                out.insert(t.op(a, b));
            }
        }
        out
    }

    /// All subsets of a carrier, in ascending mask order.
    pub fn all(order: usize) -> impl Iterator<Item = CrispSubset> {
        assert!(order < 64);
        (0..1u64 << order).map(move |mask| CrispSubset { order, mask })
    }
}

impl fmt::Display for CrispSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.members().iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", m.join(","))
    }
}

impl fmt::Debug for CrispSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.order)
    }
}

impl serde::Serialize for CrispSubset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.members().serialize(s)
    }
}
