//! Enumeration of finite AG-groupoids.
//!
//! [`enumerate`] fills the Cayley table cell by cell in row-major order and,
//! after each assignment, re-checks only the left-invertive instances that
//! involve the new cell. [`enumerate_naive`] scans the whole space of tables
//! and is kept as an independent oracle for small orders.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::canonical::canonical_form;
use crate::error::{Error, Result};
use crate::format::EnumSummary;
use crate::laws::{check_left_invertive, has_left_identity};
use crate::table::CayleyTable;

/// Default bound on the order accepted by [`enumerate`].
pub const DEFAULT_ENUM_BOUND: usize = 5;
/// No configuration can raise the bound past this.
pub const MAX_ENUM_ORDER: usize = 6;
pub const NAIVE_MAX_ORDER: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumSpec {
    pub order: usize,
    pub require_left_identity: bool,
    pub up_to_isomorphism: bool,
    pub limit: Option<usize>,
    pub bound: usize,
}

impl EnumSpec {
    pub fn new(order: usize) -> Self {
        EnumSpec {
            order,
            require_left_identity: false,
            up_to_isomorphism: false,
            limit: None,
            bound: DEFAULT_ENUM_BOUND,
        }
    }

    pub fn left_identity(mut self, yes: bool) -> Self {
        self.require_left_identity = yes;
        self
    }

    pub fn up_to_iso(mut self, yes: bool) -> Self {
        self.up_to_isomorphism = yes;
        self
    }

    pub fn limit(mut self, limit: Option<usize>) -> Self {
        self.limit = limit;
        self
    }

    pub fn bound(mut self, bound: usize) -> Self {
        self.bound = bound;
        self
    }

    fn validate(&self, max: usize, what: &'static str) -> Result<()> {
        if self.order == 0 {
            return Err(Error::usage("order must be at least 1"));
        }
        let bound = self.bound.min(max);
        if self.order > bound {
            return Err(Error::Capability {
                what,
                order: self.order,
                bound,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumResult {
    /// Lexicographically sorted; canonical forms when enumerating up to isomorphism.
    pub tables: Vec<CayleyTable>,
    pub count_labeled: u64,
    pub count_iso_classes: Option<u64>,
    /// False only when `limit` cut the output short.
    pub exhausted: bool,
}

impl EnumResult {
    pub fn summary(&self) -> EnumSummary {
        EnumSummary {
            count_labeled: self.count_labeled,
            count_iso: self.count_iso_classes,
            exhausted: self.exhausted,
        }
    }
}

const UNSET: u8 = u8::MAX;

struct Search {
    n: usize,
    cells: Vec<u8>,
}

impl Search {
    fn new(n: usize) -> Self {
        Search {
            n,
            cells: vec![UNSET; n * n],
        }
    }

    #[inline]
    fn get(&self, a: usize, b: usize) -> u8 {
        self.cells[a * self.n + b]
    }

    /// Whether setting cell `(a, b)` completed a violated instance of `(xy)z = (zy)x`.
    ///
    /// An instance reads the cells `(x,y)`, `(xy,z)`, `(z,y)` and `(zy,x)`; each
    /// case below pins the new cell to one of those positions.
    fn violates(&self, a: usize, b: usize) -> bool {
        let n = self.n;
        let v = self.get(a, b);
        let get = |x: u8, y: usize| -> u8 {
            if x == UNSET {
                UNSET
            } else {
                self.get(x as usize, y)
            }
        };
        // (x, y) = (a, b)
        for z in 0..n {
            let lhs = get(v, z);
            let rhs = get(self.get(z, b), a);
            if lhs != UNSET && rhs != UNSET && lhs != rhs {
                return true;
            }
        }
        // (z, y) = (a, b)
        for x in 0..n {
            let rhs = get(v, x);
            let lhs = get(self.get(x, b), a);
            if lhs != UNSET && rhs != UNSET && lhs != rhs {
                return true;
            }
        }
        for x in 0..n {
            for y in 0..n {
                // (xy, z) = (a, b): lhs is the new cell.
                if self.get(x, y) as usize == a {
                    let rhs = get(self.get(b, y), x);
                    if rhs != UNSET && rhs != v {
                        return true;
                    }
                }
                // (zy, x) = (a, b) with z := x here: rhs is the new cell.
                if self.get(x, y) as usize == a {
                    let lhs = get(self.get(b, y), x);
                    if lhs != UNSET && lhs != v {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Depth-first completion from cell `idx`; `emit` returns false to stop.
    fn run(&mut self, idx: usize, emit: &mut dyn FnMut(&[u8]) -> bool) -> bool {
        let n = self.n;
        if idx == n * n {
            return emit(&self.cells);
        }
        let (a, b) = (idx / n, idx % n);
        for v in 0..n as u8 {
            self.cells[idx] = v;
            if !self.violates(a, b) && !self.run(idx + 1, emit) {
                self.cells[idx] = UNSET;
                return false;
            }
        }
        self.cells[idx] = UNSET;
        true
    }
}

/// Consistent assignments of the first row, in lexicographic order.
fn first_rows(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut s = Search::new(n);
    fn go(s: &mut Search, idx: usize, out: &mut Vec<Vec<u8>>) {
        let n = s.n;
        if idx == n {
            out.push(s.cells[..n].to_vec());
            return;
        }
        for v in 0..n as u8 {
            s.cells[idx] = v;
            if !s.violates(0, idx) {
                go(s, idx + 1, out);
            }
        }
        s.cells[idx] = UNSET;
    }
    go(&mut s, 0, &mut out);
    out
}

fn accept(n: usize, cells: &[u8], need_left_identity: bool) -> Option<CayleyTable> {
    let t = CayleyTable::from_raw(n, cells.to_vec());
    (!need_left_identity || has_left_identity(&t)).then_some(t)
}

/// All labeled tables matching the flags, in lexicographic order, stopping
/// once `stop_after` tables are found.
fn labeled(n: usize, need_left_identity: bool, stop_after: Option<usize>) -> Vec<CayleyTable> {
    if let Some(cap) = stop_after {
        let mut out = Vec::new();
        let mut s = Search::new(n);
        s.run(0, &mut |cells| {
            if let Some(t) = accept(n, cells, need_left_identity) {
                out.push(t);
            }
            out.len() < cap
        });
        return out;
    }
    first_rows(n)
        .into_par_iter()
        .map(|row| {
            let mut s = Search::new(n);
            s.cells[..n].copy_from_slice(&row);
            let mut out = Vec::new();
            s.run(n, &mut |cells| {
                out.extend(accept(n, cells, need_left_identity));
                true
            });
            out
        })
        .flatten()
        .collect()
}

fn iso_classes(tables: &[CayleyTable]) -> Result<Vec<CayleyTable>> {
    let forms = tables.par_iter().map(canonical_form).collect::<Result<BTreeSet<_>>>()?;
    Ok(forms.into_iter().collect())
}

fn finish(spec: &EnumSpec, all: Vec<CayleyTable>, truncated_labeled: bool) -> Result<EnumResult> {
    if spec.up_to_isomorphism {
        let count_labeled = all.len() as u64;
        let mut classes = iso_classes(&all)?;
        let count_iso = classes.len() as u64;
        let exhausted = spec.limit.is_none_or(|l| classes.len() <= l);
        if let Some(l) = spec.limit {
            classes.truncate(l);
        }
        return Ok(EnumResult {
            tables: classes,
            count_labeled,
            count_iso_classes: Some(count_iso),
            exhausted,
        });
    }
    let mut tables = all;
    let mut exhausted = true;
    if let Some(l) = spec.limit {
        if tables.len() > l || truncated_labeled {
            exhausted = tables.len() <= l && !truncated_labeled;
            tables.truncate(l);
        }
    }
    Ok(EnumResult {
        count_labeled: tables.len() as u64,
        tables,
        count_iso_classes: None,
        exhausted,
    })
}

/// Enumerates AG-groupoids of `spec.order`.
///
/// Without a limit the search tree is split by first row and explored in
/// parallel; output order does not depend on the worker count. Under a limit,
/// labeled enumeration stops early while isomorphism-class enumeration still
/// searches everything and truncates the sorted class list.
pub fn enumerate(spec: &EnumSpec) -> Result<EnumResult> {
    spec.validate(MAX_ENUM_ORDER, "enumeration")?;
    let n = spec.order;
    match spec.limit {
        Some(l) if !spec.up_to_isomorphism => {
            // One extra table tells whether the limit actually truncated.
            let found = labeled(n, spec.require_left_identity, Some(l + 1));
            let truncated = found.len() > l;
            finish(spec, found, truncated)
        }
        _ => finish(spec, labeled(n, spec.require_left_identity, None), false),
    }
}

/// Generates every table of the order and filters it. Orders up to 3 only.
pub fn enumerate_naive(spec: &EnumSpec) -> Result<EnumResult> {
    spec.validate(NAIVE_MAX_ORDER, "naive enumeration")?;
    let n = spec.order;
    let cells = n * n;
    let mut entries = vec![0usize; cells];
    let mut all = Vec::new();
    loop {
        let t = CayleyTable::new(n, entries.clone())?;
        if check_left_invertive(&t).is_ok() && (!spec.require_left_identity || has_left_identity(&t)) {
            all.push(t);
        }
        if !crate::laws::next_tuple(&mut entries, n) {
            break;
        }
    }
    finish(spec, all, false)
}
