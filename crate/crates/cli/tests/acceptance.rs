//! Acceptance criteria, one line of output each. Runs without the libtest
//! harness so the lines always print.

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use agw_core::harness::{negative_control, recheck, run_check, CheckSpec, Population, StatementId, Verdict};
use agw_core::ideals::{
    enumerate_crisp_ideals, idempotent_left_ideal_monoid, is_crisp_prime, is_crisp_quasi_prime, is_crisp_semiprime,
    is_fully_crisp_prime, is_fully_crisp_quasi_prime, left_ideal_profile, FuzzyIdealLattice, IdealKind,
};
use agw_core::laws::{has_left_identity, is_ag_groupoid};
use agw_core::{
    characteristic, check_aux_identity, check_medial, check_paramedial, enumerate, enumerate_naive,
    generated_left_ideal, generated_left_ideal_oracle, is_fuzzy_bi_ideal, is_fuzzy_ideal, is_fuzzy_interior_ideal,
    is_fuzzy_left_ideal, is_fuzzy_right_ideal, is_fuzzy_subgroupoid, product, subset_of, top, CayleyTable, CrispSubset,
    EnumSpec, FuzzyPoint, FuzzySubset, GradeChain,
};

const ENUMERATION_BUDGET: Duration = Duration::from_secs(10);
const ALGEBRA_BUDGET: Duration = Duration::from_secs(120);
const MIN_SAMPLES: u64 = 1000;

type Criterion = fn() -> Result<String, String>;

fn chain(k: u8) -> GradeChain {
    GradeChain::new(k).unwrap()
}

fn labeled(n: usize) -> Vec<CayleyTable> {
    enumerate(&EnumSpec::new(n)).unwrap().tables
}

fn with_left_identity(orders: std::ops::RangeInclusive<usize>) -> Vec<CayleyTable> {
    orders
        .flat_map(|n| enumerate(&EnumSpec::new(n).left_identity(true)).unwrap().tables)
        .collect()
}

fn all_subsets(n: usize, k: u8) -> Vec<FuzzySubset> {
    let c = chain(k);
    let mut out = Vec::new();
    let mut levels = vec![0usize; n];
    loop {
        out.push(FuzzySubset::new(c, &levels).unwrap());
        let Some(i) = (0..n).rev().find(|&i| levels[i] < k as usize) else {
            return out;
        };
        levels[i] += 1;
        levels[i + 1..].iter_mut().for_each(|l| *l = 0);
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn verified(id: StatementId, k: u8, population: Population) -> Result<agw_core::harness::CheckReport, String> {
    let report = run_check(&CheckSpec::new(id, chain(k), population)).map_err(|e| format!("{id} k={k}: {e}"))?;
    ensure(report.verdict == Verdict::Verified, || {
        format!("{id} k={k}: {:?} {:?}", report.verdict, report.witness)
    })?;
    Ok(report)
}

fn enumeration_oracle() -> Result<String, String> {
    let start = Instant::now();
    let mut sets = 0;
    for n in 1..=3 {
        for (li, iso) in [(false, false), (true, false), (false, true), (true, true)] {
            let spec = EnumSpec::new(n).left_identity(li).up_to_iso(iso);
            let fast = enumerate(&spec).map_err(|e| e.to_string())?;
            let naive = enumerate_naive(&spec).map_err(|e| e.to_string())?;
            ensure(fast == naive, || {
                format!("order {n} left_identity={li} up_to_iso={iso} differ")
            })?;
            sets += 1;
        }
    }
    let took = start.elapsed();
    ensure(took < ENUMERATION_BUDGET, || format!("took {took:?}"))?;
    Ok(format!("{sets} flag settings identical in {:.2}s", took.as_secs_f64()))
}

fn structural_laws() -> Result<String, String> {
    let mut tables = 0;
    let mut with_li = 0;
    for n in 1..=4 {
        for t in labeled(n) {
            tables += 1;
            check_medial(&t).map_err(|w| format!("{t:?}: {w}"))?;
            if has_left_identity(&t) {
                with_li += 1;
                check_paramedial(&t).map_err(|w| format!("{t:?}: {w}"))?;
                check_aux_identity(&t).map_err(|w| format!("{t:?}: {w}"))?;
            }
        }
    }
    Ok(format!(
        "{tables} labeled tables medial, {with_li} with left identity paramedial and left-permutable"
    ))
}

fn product_algebra() -> Result<String, String> {
    let start = Instant::now();
    let mut instances = 0;
    for id in [StatementId::P1, StatementId::C1] {
        let r = verified(id, 1, Population::Enumerated { orders: vec![1, 2, 3] })?;
        ensure(r.exhaustive, || format!("{id} k=1 was not exhaustive"))?;
        instances += r.instances_checked;
        let r = verified(id, 2, Population::Enumerated { orders: vec![4] })?;
        ensure(r.instances_checked >= MIN_SAMPLES * r.structures_tested, || {
            format!(
                "{id} k=2 order 4: {} instances over {} structures",
                r.instances_checked, r.structures_tested
            )
        })?;
        instances += r.instances_checked;
    }
    let took = start.elapsed();
    ensure(took < ALGEBRA_BUDGET, || format!("took {took:?}"))?;
    Ok(format!(
        "{instances} instances, zero violations, {:.2}s",
        took.as_secs_f64()
    ))
}

fn generated_ideals() -> Result<String, String> {
    let mut cases = 0;
    for t in with_left_identity(1..=4) {
        for k in [1, 2] {
            let c = chain(k);
            for a in t.elements() {
                for g in c.positive_levels() {
                    let p = FuzzyPoint::new(a, g).unwrap();
                    let closed = generated_left_ideal(&p, &t, c).map_err(|e| e.to_string())?;
                    let oracle = generated_left_ideal_oracle(&p, &t, c).map_err(|e| e.to_string())?;
                    ensure(closed == oracle, || {
                        format!("{t:?} a={a} λ={}: {closed} vs {oracle}", g.level())
                    })?;
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} (structure, anchor, level, k) cases agree"))
}

fn pointwise_equivalences() -> Result<String, String> {
    let mut cases = 0;
    for n in 1..=3 {
        let tables = labeled(n);
        for k in [1, 2] {
            let subsets = all_subsets(n, k);
            for t in &tables {
                let s = top(t, chain(k));
                let p = |f: &FuzzySubset, g: &FuzzySubset| product(f, g, t).unwrap();
                let le = |f: &FuzzySubset, g: &FuzzySubset| subset_of(f, g).unwrap();
                for f in &subsets {
                    let forms = [
                        ("subgroupoid", is_fuzzy_subgroupoid(f, t).is_ok(), le(&p(f, f), f)),
                        ("left", is_fuzzy_left_ideal(f, t).is_ok(), le(&p(&s, f), f)),
                        ("right", is_fuzzy_right_ideal(f, t).is_ok(), le(&p(f, &s), f)),
                        (
                            "two-sided",
                            is_fuzzy_ideal(f, t).is_ok(),
                            le(&p(&s, f), f) && le(&p(f, &s), f),
                        ),
                        (
                            "bi",
                            is_fuzzy_bi_ideal(f, t).is_ok(),
                            le(&p(f, f), f) && le(&p(&p(f, &s), f), f),
                        ),
                        (
                            "interior",
                            is_fuzzy_interior_ideal(f, t).is_ok(),
                            le(&p(&p(&s, f), &s), f),
                        ),
                    ];
                    for (name, pointwise, inclusion) in forms {
                        ensure(pointwise == inclusion, || {
                            format!("{t:?} f=[{f}] {name}: pointwise {pointwise}, inclusion {inclusion}")
                        })?;
                        cases += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{cases} predicate/inclusion pairs agree"))
}

fn ordered_structures() -> Result<String, String> {
    let mut structures = 0;
    for k in [1, 2] {
        for id in [StatementId::T7, StatementId::P7, StatementId::T8, StatementId::T9] {
            let r = verified(id, k, Population::Enumerated { orders: vec![1, 2, 3] })?;
            ensure(r.exhaustive, || format!("{id} k={k} was not exhaustive"))?;
        }
        for t in with_left_identity(1..=3) {
            let profile = left_ideal_profile(&t, chain(k)).map_err(|e| e.to_string())?;
            ensure(profile.all_equal(), || {
                format!("{t:?} k={k}: profile {:?}", profile.as_array())
            })?;
            structures += 1;
        }
    }
    Ok(format!("T7, P7, T8, T9 verified; {structures} profiles uniform"))
}

fn monoid_axioms(rows: &[Vec<usize>], identity: usize) -> bool {
    let m = rows.len();
    (0..m).all(|a| rows[identity][a] == a && rows[a][identity] == a)
        && (0..m).all(|a| (0..m).all(|b| rows[a][b] < m && rows[a][b] == rows[b][a]))
        && (0..m).all(|a| (0..m).all(|b| (0..m).all(|c| rows[rows[a][b]][c] == rows[a][rows[b][c]])))
}

fn monoid_constructions() -> Result<String, String> {
    let mut monoids = 0;
    for k in [1, 2] {
        for t in with_left_identity(1..=3) {
            let m = idempotent_left_ideal_monoid(&t, chain(k)).map_err(|e| format!("{t:?}: {e}"))?;
            ensure(m.elements()[m.identity()] == top(&t, chain(k)), || {
                format!("{t:?}: identity is not top")
            })?;
            ensure(monoid_axioms(&m.rows(), m.identity()), || format!("{t:?}: axioms fail"))?;
            monoids += 1;
        }
        verified(StatementId::T5, k, Population::Enumerated { orders: vec![1, 2, 3] })?;
        verified(StatementId::T2, k, Population::Enumerated { orders: vec![1, 2, 3] })?;
    }
    Ok(format!("{monoids} monoids with identity top; T2 and T5 verified"))
}

fn crisp_fuzzy_bridge() -> Result<String, String> {
    let c = GradeChain::crisp();
    let mut checks = 0;
    for n in 1..=3 {
        for t in labeled(n) {
            let subsets: Vec<CrispSubset> = CrispSubset::all(n).collect();
            for a in &subsets {
                let ca = characteristic(a, c);
                for b in &subsets {
                    let lhs = product(&ca, &characteristic(b, c), &t).unwrap();
                    ensure(lhs == characteristic(&a.product(b, &t), c), || {
                        format!("{t:?}: C_{a}∘C_{b}")
                    })?;
                    checks += 1;
                }
                if a.is_empty() {
                    continue;
                }
                for kind in IdealKind::ALL {
                    let crisp = agw_core::ideals::is_crisp_ideal(a, &t, kind);
                    let fuzzy = agw_core::ideals::FuzzyFamilyKind::from_crisp_kind(kind).admits(&ca, &t);
                    ensure(crisp == fuzzy, || {
                        format!("{t:?}: {a} {kind}: crisp {crisp}, fuzzy {fuzzy}")
                    })?;
                    checks += 1;
                }
            }
            if !(is_ag_groupoid(&t) && has_left_identity(&t)) {
                continue;
            }
            let lattice = FuzzyIdealLattice::new(&t, c).map_err(|e| e.to_string())?;
            for p in enumerate_crisp_ideals(&t, IdealKind::TwoSided).unwrap().members {
                let fuzzy = lattice.is_prime(&characteristic(&p, c)).map_err(|e| e.to_string())?;
                ensure(is_crisp_prime(&p, &t).unwrap() == fuzzy, || format!("{t:?}: prime {p}"))?;
                checks += 1;
            }
            for p in enumerate_crisp_ideals(&t, IdealKind::Left).unwrap().members {
                let cp = characteristic(&p, c);
                let quasi = lattice.is_quasi_prime(&cp).map_err(|e| e.to_string())?;
                let semi = lattice.is_semiprime(&cp).map_err(|e| e.to_string())?;
                ensure(is_crisp_quasi_prime(&p, &t).unwrap() == quasi, || {
                    format!("{t:?}: quasi-prime {p}")
                })?;
                ensure(is_crisp_semiprime(&p, &t).unwrap() == semi, || {
                    format!("{t:?}: semiprime {p}")
                })?;
                checks += 2;
            }
            ensure(is_fully_crisp_prime(&t).unwrap() == lattice.fully_prime(), || {
                format!("{t:?}: fully prime")
            })?;
            ensure(
                is_fully_crisp_quasi_prime(&t).unwrap() == lattice.fully_quasi_prime(),
                || format!("{t:?}: fully quasi-prime"),
            )?;
            checks += 2;
        }
    }
    Ok(format!("{checks} crisp/fuzzy decisions agree at k=1"))
}

fn negative_control_fails() -> Result<String, String> {
    let reports = negative_control().map_err(|e| e.to_string())?;
    let p1 = reports
        .iter()
        .find(|r| r.statement == StatementId::P1)
        .ok_or("no P1 report")?;
    ensure(
        p1.witness
            .as_ref()
            .is_some_and(|w| w.table == CayleyTable::left_zero(2)),
        || "P1 witness is not on the left-zero magma".into(),
    )?;
    for r in &reports {
        ensure(r.verdict == Verdict::Falsified, || {
            format!("{} came back {:?}", r.statement, r.verdict)
        })?;
        ensure(recheck(r).map_err(|e| e.to_string())?, || {
            format!("{} witness fails recheck", r.statement)
        })?;
    }
    Ok(format!("{} controls falsified with rechecked witnesses", reports.len()))
}

fn deterministic_suite() -> Result<String, String> {
    let dir = tempfile::TempDir::new().map_err(|e| e.to_string())?;
    let run = |name: &str, jobs: &str| -> Result<Vec<u8>, String> {
        let out = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_agw"))
            .args([
                "suite", "--orders", "1,2,3", "--k", "1,2", "--seed", "77", "--jobs", jobs, "--out",
            ])
            .arg(&out)
            .output()
            .map_err(|e| e.to_string())?
            .status;
        ensure(status.code() == Some(0), || format!("suite exited with {status}"))?;
        std::fs::read(&out).map_err(|e| e.to_string())
    };
    let a = run("a.json", "1")?;
    let b = run("b.json", "3")?;
    ensure(a == b, || "reports differ".into())?;
    Ok(format!("two {}-byte reports identical", a.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 10] = [
        ("enumeration oracle equivalence", enumeration_oracle),
        ("structural-law suite", structural_laws),
        ("fuzzy-subset product algebra", product_algebra),
        ("generated left ideal vs closure oracle", generated_ideals),
        ("pointwise and product-inclusion forms", pointwise_equivalences),
        ("ordered-structure statements", ordered_structures),
        ("monoid constructions", monoid_constructions),
        ("crisp/fuzzy bridge", crisp_fuzzy_bridge),
        ("negative control", negative_control_fails),
        ("suite determinism", deterministic_suite),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
