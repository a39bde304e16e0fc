//! Runs every registered statement over populations of finite structures and
//! grade chains, and reports verdicts with re-checkable witnesses.

pub mod checks;
pub mod context;
pub mod quantify;
pub mod registry;
pub mod report;

use rayon::prelude::*;

use crate::enumerate::{enumerate, EnumSpec};
use crate::error::{Error, Result};
use crate::grade::GradeChain;
use crate::table::CayleyTable;

pub use checks::{evaluate, tuple_finding, Finding, Outcome, Violation};
pub use context::{Budget, HypothesisStatus, StructureContext};
pub use registry::{registry, Domain, Hypothesis, Shape, Statement, StatementId};
pub use report::{summary_table, CheckReport, CheckWitness, SuiteReport, SuiteSummary, Verdict};

/// The structures a check runs over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Population {
    /// Every AG-groupoid of each order, one per isomorphism class.
    Enumerated {
        orders: Vec<usize>,
    },
    Explicit {
        label: String,
        tables: Vec<CayleyTable>,
    },
}

impl Population {
    pub fn tables(&self) -> Result<Vec<CayleyTable>> {
        match self {
            Population::Enumerated { orders } => Ok(ag_population(orders)?.into_iter().flatten().collect()),
            Population::Explicit { tables, .. } => Ok(tables.clone()),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Population::Enumerated { orders } => {
                format!("AG-groupoids up to isomorphism, orders {orders:?}")
            }
            Population::Explicit { label, tables } => format!("{label} ({} tables)", tables.len()),
        }
    }
}

/// AG-groupoids up to isomorphism, one list per order.
fn ag_population(orders: &[usize]) -> Result<Vec<Vec<CayleyTable>>> {
    orders
        .iter()
        .map(|&n| Ok(enumerate(&EnumSpec::new(n).up_to_iso(true))?.tables))
        .collect()
}

#[derive(Clone, Debug)]
pub struct CheckSpec {
    pub statement: StatementId,
    pub chain: GradeChain,
    pub population: Population,
    pub budget: Budget,
    /// Replaces the registered hypothesis filter.
    pub hypothesis: Option<Hypothesis>,
}

impl CheckSpec {
    pub fn new(statement: StatementId, chain: GradeChain, population: Population) -> Self {
        CheckSpec {
            statement,
            chain,
            population,
            budget: Budget::default(),
            hypothesis: None,
        }
    }

    pub fn budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn hypothesis(mut self, h: Hypothesis) -> Self {
        self.hypothesis = Some(h);
        self
    }
}

fn note_for(id: StatementId) -> Option<String> {
    match id {
        StatementId::T2 => Some(
            "only the monoid structure of {f : f∘h = f} is checked; the accompanying claim that h is a right \
             identity of S itself is not a statement about F(S) and is not tested"
                .to_string(),
        ),
        StatementId::P2Rev => Some(
            "the product hypothesis is decided over the chain-valued fuzzy subsets, which may differ from the \
             unrestricted [0,1] condition"
                .to_string(),
        ),
        StatementId::T3 => Some("instances count (structure, anchor, level) triples".to_string()),
        _ => None,
    }
}

fn check_over(
    id: StatementId,
    hypothesis: Hypothesis,
    contexts: &[StructureContext],
    population: &str,
    chain: GradeChain,
    seed: u64,
) -> Result<CheckReport> {
    let outcomes: Vec<Result<(HypothesisStatus, Outcome)>> = contexts
        .par_iter()
        .map(|ctx| {
            let status = ctx.hypothesis(hypothesis);
            if status != HypothesisStatus::Holds {
                return Ok((status, Outcome::default()));
            }
            Ok((status, evaluate(id, ctx)?))
        })
        .collect();
    let statement = id.statement();
    let mut report = CheckReport {
        statement: id,
        claim: statement.claim,
        hypothesis,
        chain: chain.resolution(),
        population: population.to_string(),
        structures_tested: 0,
        structures_falsified: 0,
        instances_checked: 0,
        hypothesis_excluded: 0,
        budget_excluded: 0,
        exhaustive: true,
        verdict: Verdict::SkippedNoPopulation,
        witness: None,
        seed: None,
        note: note_for(id),
    };
    for (ctx, outcome) in contexts.iter().zip(outcomes) {
        let (status, outcome) = outcome?;
        match status {
            HypothesisStatus::Fails => report.hypothesis_excluded += 1,
            HypothesisStatus::Undecidable => {
                report.budget_excluded += 1;
                report.exhaustive = false;
            }
            HypothesisStatus::Holds if outcome.excluded => {
                report.budget_excluded += 1;
                report.exhaustive = false;
            }
            HypothesisStatus::Holds => {
                report.structures_tested += 1;
                report.instances_checked += outcome.instances;
                report.exhaustive &= outcome.exact;
                if outcome.sampled {
                    report.seed = Some(seed);
                }
                if let Some(v) = outcome.violation {
                    report.structures_falsified += 1;
                    if report.witness.is_none() {
                        report.witness = Some(CheckWitness {
                            table: ctx.table.clone(),
                            subsets: v.subsets,
                            elements: v.elements,
                            detail: v.detail,
                        });
                    }
                }
            }
        }
    }
    report.verdict = if report.structures_tested == 0 {
        Verdict::SkippedNoPopulation
    } else if report.structures_falsified > 0 {
        Verdict::Falsified
    } else {
        Verdict::Verified
    };
    Ok(report)
}

fn contexts(tables: &[CayleyTable], chain: GradeChain, budget: Budget) -> Vec<StructureContext> {
    tables
        .par_iter()
        .enumerate()
        .map(|(i, t)| StructureContext::new(i, t.clone(), chain, budget))
        .collect()
}

pub fn run_check(spec: &CheckSpec) -> Result<CheckReport> {
    let tables = spec.population.tables()?;
    let ctxs = contexts(&tables, spec.chain, spec.budget);
    let hypothesis = spec.hypothesis.unwrap_or(spec.statement.statement().hypothesis);
    check_over(
        spec.statement,
        hypothesis,
        &ctxs,
        &spec.population.describe(),
        spec.chain,
        spec.budget.seed,
    )
}

/// Every selected statement over the enumerated AG-groupoids of `orders`,
/// for each chain. Reports are ordered by chain, then by registry position.
pub fn run_suite(
    orders: &[usize],
    chains: &[GradeChain],
    ids: Option<&[StatementId]>,
    budget: Budget,
) -> Result<SuiteReport> {
    let per_order = ag_population(orders)?;
    let tables: Vec<CayleyTable> = per_order.iter().flatten().cloned().collect();
    let population = Population::Enumerated {
        orders: orders.to_vec(),
    }
    .describe();
    let selected: Vec<StatementId> = StatementId::ALL
        .iter()
        .copied()
        .filter(|id| ids.is_none_or(|ids| ids.contains(id)))
        .collect();
    let mut reports = Vec::new();
    if !tables.is_empty() {
        for &chain in chains {
            let ctxs = contexts(&tables, chain, budget);
            for &id in &selected {
                reports.push(check_over(
                    id,
                    id.statement().hypothesis,
                    &ctxs,
                    &population,
                    chain,
                    budget.seed,
                )?);
            }
        }
    }
    Ok(SuiteReport {
        tool: "agw",
        version: env!("CARGO_PKG_VERSION"),
        population,
        orders: orders.to_vec(),
        chains: chains.iter().map(|c| c.resolution()).collect(),
        structures_per_order: per_order.iter().map(Vec::len).collect(),
        seed: budget.seed,
        budget,
        summary: SuiteSummary::of(&reports),
        reports,
    })
}

/// The two-element magma `a·b = 1` iff `a = b = 0`, which is not medial.
pub fn nor_magma() -> CayleyTable {
    CayleyTable::from_fn(2, |a, b| usize::from(a == 0 && b == 0))
}

/// Statements run with their hypothesis filter removed over structures that
/// violate it. Each report must come back falsified.
pub fn negative_control() -> Result<Vec<CheckReport>> {
    let crisp = GradeChain::crisp();
    let explicit = |label: &str, t: CayleyTable| Population::Explicit {
        label: label.to_string(),
        tables: vec![t],
    };
    let specs = [
        CheckSpec::new(
            StatementId::P1,
            crisp,
            explicit("left-zero magma of order 2", CayleyTable::left_zero(2)),
        )
        .hypothesis(Hypothesis::None),
        CheckSpec::new(
            StatementId::C1,
            crisp,
            explicit("non-medial magma of order 2", nor_magma()),
        )
        .hypothesis(Hypothesis::None),
        CheckSpec::new(
            StatementId::L3,
            crisp,
            explicit(
                "constant AG-groupoid of order 2 without left identity",
                CayleyTable::constant(2, 0),
            ),
        )
        .hypothesis(Hypothesis::Ag),
    ];
    specs.iter().map(run_check).collect()
}

/// Re-evaluates a report's witness from scratch: the hypothesis must hold on
/// the witness table, each subset must lie in its domain, and the claim must
/// fail there.
pub fn recheck(report: &CheckReport) -> Result<bool> {
    let Some(w) = &report.witness else {
        return Ok(false);
    };
    let chain = GradeChain::new(report.chain)?;
    let budget = Budget::default().with_seed(report.seed.unwrap_or(Budget::DEFAULT_SEED));
    let ctx = StructureContext::new(0, w.table.clone(), chain, budget);
    if ctx.hypothesis(report.hypothesis) != HypothesisStatus::Holds {
        return Ok(false);
    }
    if w.subsets.iter().any(|f| f.order() != ctx.order() || f.chain() != chain) {
        return Err(Error::usage("witness subsets do not match the witness table"));
    }
    match report.statement.statement().shape {
        Shape::Tuple(domains) => {
            if w.subsets.len() != domains.len() || !domains.iter().zip(&w.subsets).all(|(&d, f)| ctx.admits(d, f)) {
                return Ok(false);
            }
            let refs: Vec<_> = w.subsets.iter().collect();
            Ok(tuple_finding(report.statement, &ctx, &refs).is_some())
        }
        Shape::Structure => Ok(evaluate(report.statement, &ctx)?.violation.is_some()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn crisp() -> GradeChain {
        GradeChain::crisp()
    }

    #[test]
    fn degenerate_population() {
        let spec = CheckSpec::new(StatementId::P1, crisp(), Population::Enumerated { orders: vec![1] });
        let r = run_check(&spec).unwrap();
        assert_eq!(r.verdict, Verdict::Verified);
        assert_eq!(r.structures_tested, 1);
        assert_eq!(r.instances_checked, 8);
        assert!(r.exhaustive && r.seed.is_none());
    }

    #[test]
    fn negative_control_fails_with_valid_witnesses() {
        let reports = negative_control().unwrap();
        assert_eq!(reports.len(), 3);
        for r in &reports {
            assert_eq!(r.verdict, Verdict::Falsified, "{}", r.statement);
            assert!(recheck(r).unwrap(), "{}", r.statement);
        }
        let p1 = reports[0].witness.as_ref().unwrap();
        assert_eq!(p1.subsets.len(), 3);
    }

    #[test]
    fn left_identity_filter_matters() {
        let pop = Population::Enumerated { orders: vec![1, 2, 3] };
        let filtered = run_check(&CheckSpec::new(StatementId::L3, crisp(), pop.clone())).unwrap();
        assert_eq!(filtered.verdict, Verdict::Verified);
        assert!(filtered.hypothesis_excluded > 0);
        let open = run_check(&CheckSpec::new(StatementId::L3, crisp(), pop).hypothesis(Hypothesis::Ag)).unwrap();
        assert_eq!(open.verdict, Verdict::Falsified);
        assert!(recheck(&open).unwrap());
    }

    #[test]
    fn suite_filters_and_orders() {
        let budget = Budget::default();
        let chains = [crisp(), GradeChain::default()];
        let r = run_suite(&[1, 2], &chains, Some(&[StatementId::T7]), budget).unwrap();
        assert_eq!(r.reports.len(), 2);
        assert!(r.reports.iter().all(|x| x.statement == StatementId::T7));
        assert_eq!(r.reports[0].chain, 1);
        let empty = run_suite(&[], &chains, None, budget).unwrap();
        assert!(empty.reports.is_empty());
    }

    #[test]
    fn tampered_witness_fails_recheck() {
        let mut r = negative_control().unwrap().remove(0);
        let w = r.witness.as_mut().unwrap();
        w.table = CayleyTable::z3sub();
        w.subsets = vec![crate::fuzzy::FuzzySubset::zero(3, crisp()); 3];
        r.hypothesis = Hypothesis::Ag;
        assert!(!recheck(&r).unwrap());
    }
}
