//! Exact membership grades on a finite chain.
//!
//! A chain of resolution `k` has the levels `0, 1, .., k`, read as
//! `0, 1/k, .., 1`. Only `min`, `max` and comparisons are ever applied to
//! grades, and the chain is closed under all three.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct GradeChain {
    resolution: u8,
}

impl GradeChain {
    pub const DEFAULT_RESOLUTION: u8 = 2;

    pub fn new(resolution: u8) -> Result<Self> {
        if resolution == 0 {
            return Err(Error::usage("grade chain resolution must be at least 1"));
        }
        Ok(GradeChain { resolution })
    }

    /// The two-level chain `{0, 1}` of crisp membership.
    pub fn crisp() -> Self {
        GradeChain { resolution: 1 }
    }

    pub fn resolution(self) -> u8 {
        self.resolution
    }

    pub fn bottom(self) -> Grade {
        Grade(0)
    }

    pub fn top(self) -> Grade {
        Grade(self.resolution)
    }

    /// Number of levels, `k + 1`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(self) -> usize {
        self.resolution as usize + 1
    }

    pub fn grade(self, level: usize) -> Result<Grade> {
        if level > self.resolution as usize {
            return Err(Error::GradeOutOfRange {
                level,
                resolution: self.resolution,
            });
        }
        Ok(Grade(level as u8))
    }

    pub fn contains(self, g: Grade) -> bool {
        g.0 <= self.resolution
    }

    pub fn levels(self) -> impl Iterator<Item = Grade> {
        (0..=self.resolution).map(Grade)
    }

    /// Levels strictly above zero.
    pub fn positive_levels(self) -> impl Iterator<Item = Grade> {
        (1..=self.resolution).map(Grade)
    }
}

impl Default for GradeChain {
    fn default() -> Self {
        GradeChain {
            resolution: Self::DEFAULT_RESOLUTION,
        }
    }
}

impl fmt::Display for GradeChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L_{}", self.resolution)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Grade(pub(crate) u8);

impl Grade {
    pub const ZERO: Grade = Grade(0);

    pub fn level(self) -> u8 {
        self.0
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_basics() {
        let c = GradeChain::new(2).unwrap();
        assert_eq!(c.levels().count(), 3);
        assert_eq!(c.top(), Grade(2));
        assert!(c.grade(3).is_err());
        assert!(GradeChain::new(0).is_err());
        assert_eq!(GradeChain::default().resolution(), 2);
        assert!(Grade(1).max(Grade(2)) == Grade(2) && Grade(1).min(Grade(2)) == Grade(1));
    }
}
