use std::fmt::Write as _;

use serde::Serialize;

use crate::fuzzy::FuzzySubset;
use crate::harness::context::Budget;
use crate::harness::registry::{Hypothesis, StatementId};
use crate::table::{CayleyTable, Element};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Verified,
    Falsified,
    SkippedNoPopulation,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Verified => "verified",
            Verdict::Falsified => "falsified",
            Verdict::SkippedNoPopulation => "skipped-no-population",
        }
    }
}

/// A counterexample: the structure, the fuzzy subsets involved, and the
/// carrier elements where the failure shows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckWitness {
    pub table: CayleyTable,
    pub subsets: Vec<FuzzySubset>,
    pub elements: Vec<Element>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub statement: StatementId,
    pub claim: &'static str,
    pub hypothesis: Hypothesis,
    /// Resolution `k` of the grade chain the check ran over.
    pub chain: u8,
    pub population: String,
    pub structures_tested: u64,
    pub structures_falsified: u64,
    pub instances_checked: u64,
    pub hypothesis_excluded: u64,
    pub budget_excluded: u64,
    /// Every instance on every tested structure was covered.
    pub exhaustive: bool,
    pub verdict: Verdict,
    pub witness: Option<CheckWitness>,
    /// Present when any instance was sampled.
    pub seed: Option<u64>,
    pub note: Option<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub verified: u64,
    pub falsified: u64,
    pub skipped: u64,
}

impl SuiteSummary {
    pub fn of(reports: &[CheckReport]) -> Self {
        let mut s = SuiteSummary::default();
        for r in reports {
            match r.verdict {
                Verdict::Verified => s.verified += 1,
                Verdict::Falsified => s.falsified += 1,
                Verdict::SkippedNoPopulation => s.skipped += 1,
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub population: String,
    pub orders: Vec<usize>,
    pub chains: Vec<u8>,
    pub structures_per_order: Vec<usize>,
    pub seed: u64,
    pub budget: Budget,
    pub reports: Vec<CheckReport>,
    pub summary: SuiteSummary,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("suite reports always serialize");
        s.push('\n');
        s
    }

    pub fn falsified(&self) -> impl Iterator<Item = &CheckReport> {
        self.reports.iter().filter(|r| r.verdict == Verdict::Falsified)
    }

    /// One line per report, then the totals.
    pub fn summary_table(&self) -> String {
        summary_table(&self.reports, self.summary)
    }
}

pub fn summary_table(reports: &[CheckReport], summary: SuiteSummary) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<7} {:>2}  {:<22} {:>10} {:>12} {:>8} {:>8}  mode",
        "id", "k", "verdict", "structures", "instances", "hyp-excl", "bud-excl"
    );
    for r in reports {
        let _ = writeln!(
            out,
            "{:<7} {:>2}  {:<22} {:>10} {:>12} {:>8} {:>8}  {}",
            r.statement.as_str(),
            r.chain,
            r.verdict.as_str(),
            r.structures_tested,
            r.instances_checked,
            r.hypothesis_excluded,
            r.budget_excluded,
            if r.exhaustive { "exhaustive" } else { "sampled" }
        );
    }
    let _ = writeln!(
        out,
        "verified={} falsified={} skipped={}",
        summary.verified, summary.falsified, summary.skipped
    );
    for r in reports.iter().filter(|r| r.verdict == Verdict::Falsified) {
        if let Some(w) = &r.witness {
            let subsets: Vec<String> = w.subsets.iter().map(|f| format!("[{f}]")).collect();
            let rows: Vec<String> = w.table.rows().iter().map(|r| format!("{r:?}")).collect();
            let _ = writeln!(
                out,
                "{} at k={}: table {} subsets {} :: {}",
                r.statement,
                r.chain,
                rows.join(""),
                subsets.join(" "),
                w.detail
            );
        }
    }
    out
}
