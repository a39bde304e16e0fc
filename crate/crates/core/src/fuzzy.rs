//! Chain-valued fuzzy subsets and the sup-min product.
//!
//! Literal format: `k=<resolution>; <level_0> <level_1> ... <level_{n-1}>`.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::crisp::CrispSubset;
use crate::error::{Error, Result};
use crate::format::tokens;
use crate::grade::{Grade, GradeChain};
use crate::table::{CayleyTable, Element};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FuzzySubset {
    chain: GradeChain,
    grades: Vec<Grade>,
}

impl FuzzySubset {
    pub fn new(chain: GradeChain, levels: &[usize]) -> Result<Self> {
        let grades = levels.iter().map(|&l| chain.grade(l)).collect::<Result<Vec<_>>>()?;
        Self::from_grades(chain, grades)
    }

    pub fn from_grades(chain: GradeChain, grades: Vec<Grade>) -> Result<Self> {
        if grades.is_empty() {
            return Err(Error::usage("a fuzzy subset needs a non-empty carrier"));
        }
        if let Some(g) = grades.iter().find(|g| !chain.contains(**g)) {
            return Err(Error::GradeOutOfRange {
                level: g.level() as usize,
                resolution: chain.resolution(),
            });
        }
        Ok(FuzzySubset { chain, grades })
    }

    pub(crate) fn from_raw(chain: GradeChain, levels: Vec<u8>) -> Self {
        debug_assert!(levels.iter().all(|&l| l <= chain.resolution()));
        FuzzySubset {
            chain,
            grades: levels.into_iter().map(Grade).collect(),
        }
    }

    pub fn constant(order: usize, chain: GradeChain, g: Grade) -> Self {
        assert!(chain.contains(g));
        FuzzySubset {
            chain,
            grades: vec![g; order],
        }
    }

    pub fn zero(order: usize, chain: GradeChain) -> Self {
        Self::constant(order, chain, Grade::ZERO)
    }

    /// The whole carrier as a fuzzy subset: grade 1 everywhere.
    pub fn full(order: usize, chain: GradeChain) -> Self {
        Self::constant(order, chain, chain.top())
    }

    /// Grade 1 on members of `a`, 0 elsewhere.
    pub fn characteristic(a: &CrispSubset, chain: GradeChain) -> Self {
        FuzzySubset {
            chain,
            grades: (0..a.order())
                .map(|x| if a.contains(x) { chain.top() } else { Grade::ZERO })
                .collect(),
        }
    }

    pub fn indicator(order: usize, chain: GradeChain, members: &[Element]) -> Self {
        Self::characteristic(&CrispSubset::from_members(order, members.iter().copied()), chain)
    }

    pub fn random(order: usize, chain: GradeChain, rng: &mut impl Rng) -> Self {
        FuzzySubset {
            chain,
            grades: (0..order)
                .map(|_| Grade(rng.random_range(0..=chain.resolution())))
                .collect(),
        }
    }

    pub fn chain(&self) -> GradeChain {
        self.chain
    }

    /// Size of the carrier.
    pub fn order(&self) -> usize {
        self.grades.len()
    }

    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }

    #[inline]
    pub fn grade(&self, x: Element) -> Grade {
        self.grades[x]
    }

    pub fn levels(&self) -> Vec<u8> {
        self.grades.iter().map(|g| g.0).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.grades.iter().all(|g| g.0 == 0)
    }

    pub fn is_full(&self) -> bool {
        self.grades.iter().all(|&g| g == self.chain.top())
    }

    pub fn support(&self) -> CrispSubset {
        CrispSubset::from_predicate(self.order(), |x| self.grades[x].is_positive())
    }

    pub(crate) fn check_compatible(&self, other: &FuzzySubset) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::CarrierMismatch {
                expected: self.order(),
                found: other.order(),
            });
        }
        if self.chain != other.chain {
            return Err(Error::ChainMismatch {
                expected: self.chain.resolution(),
                found: other.chain.resolution(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_table(&self, t: &CayleyTable) -> Result<()> {
        if self.order() != t.order() {
            return Err(Error::CarrierMismatch {
                expected: t.order(),
                found: self.order(),
            });
        }
        Ok(())
    }

    /// Sup-min product without compatibility checks.
    pub(crate) fn compose(&self, g: &FuzzySubset, t: &CayleyTable) -> FuzzySubset {
        let n = t.order();
        let mut out = vec![Grade::ZERO; n];
        for y in 0..n {
            let fy = self.grades[y];
            if fy.0 == 0 {
                continue;
            }
            for z in 0..n {
                let m = fy.min(g.grades[z]);
                let x = t.op(y, z);
                if m > out[x] {
                    out[x] = m;
                }
            }
        }
        FuzzySubset {
            chain: self.chain,
            grades: out,
        }
    }

    pub(crate) fn meet(&self, g: &FuzzySubset) -> FuzzySubset {
        FuzzySubset {
            chain: self.chain,
            grades: self.grades.iter().zip(&g.grades).map(|(a, b)| *a.min(b)).collect(),
        }
    }

    pub(crate) fn join(&self, g: &FuzzySubset) -> FuzzySubset {
        FuzzySubset {
            chain: self.chain,
            grades: self.grades.iter().zip(&g.grades).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    /// Pointwise `≤`. Carriers must match.
    pub(crate) fn le(&self, g: &FuzzySubset) -> bool {
        self.grades.iter().zip(&g.grades).all(|(a, b)| a <= b)
    }
}

/// `(f∘g)(x) = max { min(f(y), g(z)) : yz = x }`, and 0 when `x` has no factorization.
pub fn product(f: &FuzzySubset, g: &FuzzySubset, t: &CayleyTable) -> Result<FuzzySubset> {
    f.check_compatible(g)?;
    f.check_table(t)?;
    Ok(f.compose(g, t))
}

pub fn union(f: &FuzzySubset, g: &FuzzySubset) -> Result<FuzzySubset> {
    f.check_compatible(g)?;
    Ok(f.join(g))
}

pub fn intersection(f: &FuzzySubset, g: &FuzzySubset) -> Result<FuzzySubset> {
    f.check_compatible(g)?;
    Ok(f.meet(g))
}

pub fn subset_of(f: &FuzzySubset, g: &FuzzySubset) -> Result<bool> {
    f.check_compatible(g)?;
    Ok(f.le(g))
}

/// The carrier itself, as the fuzzy subset that is 1 everywhere.
pub fn top(t: &CayleyTable, chain: GradeChain) -> FuzzySubset {
    FuzzySubset::full(t.order(), chain)
}

pub fn characteristic(a: &CrispSubset, chain: GradeChain) -> FuzzySubset {
    FuzzySubset::characteristic(a, chain)
}

/// `{x : f(x) ≥ threshold}` for a positive threshold.
pub fn level_set(f: &FuzzySubset, threshold: Grade) -> Result<CrispSubset> {
    if !threshold.is_positive() {
        return Err(Error::usage("level-set threshold must be positive"));
    }
    if !f.chain.contains(threshold) {
        return Err(Error::GradeOutOfRange {
            level: threshold.level() as usize,
            resolution: f.chain.resolution(),
        });
    }
    Ok(CrispSubset::from_predicate(f.order(), |x| f.grade(x) >= threshold))
}

/// The fuzzy subset that is `height` at `anchor` and 0 elsewhere. The height is positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FuzzyPoint {
    anchor: Element,
    height: Grade,
}

impl FuzzyPoint {
    pub fn new(anchor: Element, height: Grade) -> Result<Self> {
        if !height.is_positive() {
            return Err(Error::usage("a fuzzy point needs a positive height"));
        }
        Ok(FuzzyPoint { anchor, height })
    }

    pub fn anchor(&self) -> Element {
        self.anchor
    }

    pub fn height(&self) -> Grade {
        self.height
    }

    pub fn to_subset(&self, order: usize, chain: GradeChain) -> Result<FuzzySubset> {
        union_of_points(std::slice::from_ref(self), order, chain)
    }
}

impl fmt::Display for FuzzyPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.anchor, self.height)
    }
}

/// `{ a_{f(a)} : f(a) > 0 }`, by ascending anchor.
pub fn fuzzy_points_of(f: &FuzzySubset) -> Vec<FuzzyPoint> {
    f.grades
        .iter()
        .enumerate()
        .filter(|(_, g)| g.is_positive())
        .map(|(a, &g)| FuzzyPoint { anchor: a, height: g })
        .collect()
}

/// Pointwise maximum of the given points.
pub fn union_of_points(points: &[FuzzyPoint], order: usize, chain: GradeChain) -> Result<FuzzySubset> {
    let mut grades = vec![Grade::ZERO; order];
    for p in points {
        if p.anchor >= order {
            return Err(Error::ElementOutOfRange {
                element: p.anchor,
                order,
            });
        }
        if !chain.contains(p.height) {
            return Err(Error::GradeOutOfRange {
                level: p.height.level() as usize,
                resolution: chain.resolution(),
            });
        }
        grades[p.anchor] = grades[p.anchor].max(p.height);
    }
    FuzzySubset::from_grades(chain, grades)
}

/// Every fuzzy subset of an `order`-element carrier, lexicographically.
pub fn all_fuzzy_subsets(order: usize, chain: GradeChain) -> impl Iterator<Item = FuzzySubset> {
    let k = chain.resolution();
    let mut next = Some(vec![0u8; order]);
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur.clone();
        let mut advanced = false;
        for slot in succ.iter_mut().rev() {
            if *slot < k {
                *slot += 1;
                advanced = true;
                break;
            }
            *slot = 0;
        }
        if advanced {
            next = Some(succ);
        }
        Some(FuzzySubset::from_raw(chain, cur))
    })
}

/// `(k+1)^n`, saturating.
pub fn fuzzy_space_size(order: usize, chain: GradeChain) -> u64 {
    (chain.len() as u64).saturating_pow(order as u32)
}

impl fmt::Display for FuzzySubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={};", self.chain.resolution())?;
        for g in &self.grades {
            write!(f, " {}", g.0)?;
        }
        Ok(())
    }
}

impl fmt::Debug for FuzzySubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}

impl serde::Serialize for FuzzySubset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn literal_err(column: usize, message: impl Into<String>) -> Error {
    Error::Format {
        line: 1,
        column,
        message: message.into(),
    }
}

/// Parses `k=<resolution>; <levels...>`.
pub fn parse_fuzzy_literal(text: &str) -> Result<FuzzySubset> {
    let text = text.strip_suffix('\n').unwrap_or(text);
    let text = text.strip_suffix('\r').unwrap_or(text);
    if text.contains('\n') {
        return Err(Error::Format {
            line: 2,
            column: 1,
            message: "a fuzzy literal is a single line".into(),
        });
    }
    let lead = text.len() - text.trim_start().len();
    let body = &text[lead..];
    let col_of = |byte: usize| text[..byte].chars().count() + 1;
    if !body.starts_with("k=") {
        return Err(literal_err(col_of(lead), "expected `k=<resolution>;`"));
    }
    let Some(semi) = body.find(';') else {
        return Err(literal_err(col_of(text.len()), "missing `;` after the resolution"));
    };
    let k_start = lead + 2;
    let k_text = text[k_start..lead + semi].trim_end();
    if k_text.is_empty() || !k_text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(literal_err(
            col_of(k_start),
            format!("resolution must be a positive integer, found {k_text:?}"),
        ));
    }
    let k: u8 = match k_text.parse() {
        Ok(k) if k >= 1 => k,
        _ => {
            return Err(literal_err(
                col_of(k_start),
                format!("resolution {k_text} must be in 1..=255"),
            ))
        }
    };
    let chain = GradeChain::new(k)?;
    let rest_start = lead + semi + 1;
    let offset = col_of(rest_start) - 1;
    let toks = tokens(&text[rest_start..]);
    if toks.is_empty() {
        return Err(literal_err(col_of(text.len()), "expected at least one grade level"));
    }
    let mut levels = Vec::with_capacity(toks.len());
    for (col, tok) in toks {
        let col = col + offset;
        if !tok.bytes().all(|b| b.is_ascii_digit()) {
            return Err(literal_err(col, format!("expected a grade level, found {tok:?}")));
        }
        match tok.parse::<u16>() {
            Ok(l) if l <= k as u16 => levels.push(l as u8),
            _ => return Err(literal_err(col, format!("grade {tok} outside chain k={k}"))),
        }
    }
    Ok(FuzzySubset::from_raw(chain, levels))
}

impl FromStr for FuzzySubset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_fuzzy_literal(s)
    }
}
