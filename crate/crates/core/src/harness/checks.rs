//! Per-statement evaluators.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyPoint, FuzzySubset};
use crate::generated::{generated_left_ideal, generated_left_ideal_oracle};
use crate::harness::context::{mix_seed, StructureContext};
use crate::harness::quantify::sweep;
use crate::harness::registry::{Domain, Shape, StatementId};
use crate::ideals::family::totally_ordered;
use crate::ideals::lattice::profile_of;
use crate::ideals::monoid::{monoid_of, semilattice_of};
use crate::laws::{check_identity, Identity};
use crate::predicates::{
    is_fuzzy_bi_ideal, is_fuzzy_ideal, is_fuzzy_interior_ideal, is_fuzzy_left_ideal, is_fuzzy_right_ideal,
    is_fuzzy_subgroupoid, PredicateWitness,
};
use crate::table::{CayleyTable, Element};

type Predicate = fn(&FuzzySubset, &CayleyTable) -> Result<(), PredicateWitness>;

/// Why one instance fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub elements: Vec<Element>,
    pub detail: String,
}

/// A failing instance together with the fuzzy subsets it involves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub subsets: Vec<FuzzySubset>,
    pub elements: Vec<Element>,
    pub detail: String,
}

/// The result of checking one statement on one structure.
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub instances: u64,
    /// Every instance of the statement on this structure was covered.
    pub exact: bool,
    pub sampled: bool,
    /// The domains did not fit the budget, so nothing was evaluated.
    pub excluded: bool,
    pub violation: Option<Violation>,
}

impl Outcome {
    fn excluded() -> Self {
        Outcome {
            excluded: true,
            ..Outcome::default()
        }
    }

    fn exact(instances: u64, violation: Option<Violation>) -> Self {
        Outcome {
            instances,
            exact: true,
            violation,
            ..Outcome::default()
        }
    }
}

fn differ(lhs: &FuzzySubset, rhs: &FuzzySubset, what: &str) -> Option<Finding> {
    (0..lhs.order())
        .find(|&x| lhs.grade(x) != rhs.grade(x))
        .map(|x| Finding {
            elements: vec![x],
            detail: format!("{what}: grade {} vs {} at {x}", lhs.grade(x), rhs.grade(x)),
        })
}

/// `a ⊆ b` fails.
fn excess(a: &FuzzySubset, b: &FuzzySubset, what: &str) -> Option<Finding> {
    (0..a.order()).find(|&x| a.grade(x) > b.grade(x)).map(|x| Finding {
        elements: vec![x],
        detail: format!("{what} fails: grade {} above {} at {x}", a.grade(x), b.grade(x)),
    })
}

fn holds(res: Result<(), PredicateWitness>, what: &str) -> Option<Finding> {
    res.err().map(|w| Finding {
        elements: w.elements.clone(),
        detail: format!("{what}: {w}"),
    })
}

/// The pointwise predicate and its product form must agree.
fn equivalence(pointwise: Result<(), PredicateWitness>, product: Option<Finding>) -> Option<Finding> {
    match (pointwise, product) {
        (Ok(()), None) | (Err(_), Some(_)) => None,
        (Ok(()), Some(p)) => Some(Finding {
            elements: p.elements,
            detail: format!("pointwise test passes but {}", p.detail),
        }),
        (Err(w), None) => Some(Finding {
            elements: w.elements.clone(),
            detail: format!("product form holds but {w}"),
        }),
    }
}

/// Two predicates that must agree.
fn same_verdict(a: Result<(), PredicateWitness>, b: Result<(), PredicateWitness>) -> Option<Finding> {
    match (a, b) {
        (Ok(()), Ok(())) | (Err(_), Err(_)) => None,
        (Err(w), Ok(())) | (Ok(()), Err(w)) => Some(Finding {
            elements: w.elements.clone(),
            detail: format!("only one side holds; {w}"),
        }),
    }
}

/// Evaluates one tuple of a tuple-shaped statement. `Some` is a counterexample.
pub fn tuple_finding(id: StatementId, ctx: &StructureContext, fs: &[&FuzzySubset]) -> Option<Finding> {
    use StatementId::*;
    let t = &ctx.table;
    let s = &ctx.top;
    let c = |a: &FuzzySubset, b: &FuzzySubset| ctx.compose(a, b);
    match id {
        P1 => differ(
            &c(&c(fs[0], fs[1]), fs[2]),
            &c(&c(fs[2], fs[1]), fs[0]),
            "(f∘g)∘h vs (h∘g)∘f",
        ),
        C1 => differ(
            &c(&c(fs[0], fs[1]), &c(fs[2], fs[3])),
            &c(&c(fs[0], fs[2]), &c(fs[1], fs[3])),
            "(f∘g)∘(h∘k) vs (f∘h)∘(g∘k)",
        ),
        T1a => differ(
            &c(fs[0], &c(fs[1], fs[2])),
            &c(fs[1], &c(fs[0], fs[2])),
            "f∘(g∘h) vs g∘(f∘h)",
        ),
        T1b => differ(
            &c(&c(fs[0], fs[1]), &c(fs[2], fs[3])),
            &c(&c(fs[3], fs[2]), &c(fs[1], fs[0])),
            "(f∘g)∘(h∘k) vs (k∘h)∘(g∘f)",
        ),
        P2Fwd => differ(
            &c(&c(fs[0], fs[1]), fs[2]),
            &c(fs[0], &c(fs[2], fs[1])),
            "(f∘g)∘h vs f∘(h∘g)",
        ),
        L1i => equivalence(
            is_fuzzy_subgroupoid(fs[0], t),
            excess(&c(fs[0], fs[0]), fs[0], "f∘f ⊆ f"),
        ),
        L1ii => equivalence(is_fuzzy_left_ideal(fs[0], t), excess(&c(s, fs[0]), fs[0], "S∘f ⊆ f")),
        L1iii => equivalence(is_fuzzy_right_ideal(fs[0], t), excess(&c(fs[0], s), fs[0], "f∘S ⊆ f")),
        L1iv => equivalence(
            is_fuzzy_ideal(fs[0], t),
            excess(&c(s, fs[0]), fs[0], "S∘f ⊆ f").or_else(|| excess(&c(fs[0], s), fs[0], "f∘S ⊆ f")),
        ),
        L2 => {
            let (f, g) = (fs[0], fs[1]);
            let meet = f.meet(g);
            let checks: [Predicate; 4] = [
                is_fuzzy_subgroupoid,
                is_fuzzy_left_ideal,
                is_fuzzy_right_ideal,
                is_fuzzy_ideal,
            ];
            checks
                .into_iter()
                .filter(|p| p(f, t).is_ok() && p(g, t).is_ok())
                .find_map(|p| holds(p(&meet, t), "f∩g"))
        }
        L3 => differ(&c(s, s), s, "S∘S vs S"),
        L4 => differ(&c(s, fs[0]), fs[0], "S∘f vs f"),
        P3 => {
            let (f, k, g, h) = (fs[0], fs[1], fs[2], fs[3]);
            if c(f, g) == c(h, k) {
                differ(&c(g, f), &c(k, h), "f∘g = h∘k but g∘f vs k∘h")
            } else {
                None
            }
        }
        P4 => holds(is_fuzzy_ideal(fs[0], t), "f"),
        T4i => {
            let p = c(s, fs[0]);
            differ(&c(&p, &p), &p, "(S∘f)∘(S∘f) vs S∘f")
        }
        T4ii => differ(&c(fs[0], fs[1]), &c(fs[1], fs[0]), "f∘g vs g∘f"),
        L5 => holds(is_fuzzy_ideal(fs[0], t), "f"),
        R1 => same_verdict(is_fuzzy_left_ideal(fs[0], t), is_fuzzy_right_ideal(fs[0], t)),
        L6 => holds(is_fuzzy_ideal(&fs[0].join(&c(fs[0], s)), t), "f∪(f∘S)")
            .or_else(|| holds(is_fuzzy_ideal(&fs[0].join(&c(fs[0], fs[0])), t), "f∪(f∘f)")),
        R2 => holds(is_fuzzy_ideal(&fs[0].join(&c(s, fs[0])), t), "f∪(S∘f)")
            .or_else(|| holds(is_fuzzy_ideal(&fs[0].join(&c(fs[0], fs[0])), t), "f∪(f∘f)")),
        L7 => equivalence(
            is_fuzzy_bi_ideal(fs[0], t),
            excess(&c(&c(fs[0], s), fs[0]), fs[0], "(f∘S)∘f ⊆ f"),
        ),
        L8 => holds(is_fuzzy_bi_ideal(&c(fs[0], fs[1]), t), "f∘g"),
        L9 => holds(is_fuzzy_bi_ideal(&fs[0].meet(fs[1]), t), "f∩g"),
        L10 => equivalence(
            is_fuzzy_interior_ideal(fs[0], t),
            excess(&c(&c(s, fs[0]), s), fs[0], "(S∘f)∘S ⊆ f"),
        ),
        P5i => holds(is_fuzzy_bi_ideal(fs[0], t), "f"),
        P5ii => holds(is_fuzzy_interior_ideal(fs[0], t), "f"),
        L11 => same_verdict(is_fuzzy_right_ideal(fs[0], t), is_fuzzy_interior_ideal(fs[0], t)),
        L12 => {
            if is_fuzzy_interior_ideal(fs[0], t).is_ok() {
                holds(is_fuzzy_bi_ideal(fs[0], t), "f")
            } else {
                None
            }
        }
        P6 => holds(is_fuzzy_ideal(&c(fs[0], fs[0]), t), "f∘f"),
        C3 => {
            let p = c(fs[0], fs[0]);
            holds(is_fuzzy_bi_ideal(&p, t), "f∘f").or_else(|| holds(is_fuzzy_interior_ideal(&p, t), "f∘f"))
        }
        T6 => holds(is_fuzzy_bi_ideal(fs[0], t), "f").or_else(|| holds(is_fuzzy_interior_ideal(fs[0], t), "f")),
        P7 => differ(&c(fs[0], fs[0]), fs[0], "f∘f vs f"),
        T8 => differ(&c(fs[0], fs[1]), &fs[0].meet(fs[1]), "f∘g vs f∩g"),
        P2Rev | C2 | T2 | T3 | T5 | T7 | C4 | T9 => unreachable!("{id} is a structure-level statement"),
    }
}

/// Checks `id` on one structure whose hypothesis already holds.
pub fn evaluate(id: StatementId, ctx: &StructureContext) -> Result<Outcome> {
    let seed = mix_seed(
        ctx.budget.seed,
        &[id.index() as u64, ctx.index as u64, ctx.chain.resolution() as u64],
    );
    match id.statement().shape {
        Shape::Tuple(domains) => {
            if id == StatementId::P3 && ctx.universe().exact {
                return Ok(grouped_p3(ctx));
            }
            evaluate_tuples(id, ctx, domains, seed)
        }
        Shape::Structure => evaluate_structure(id, ctx),
    }
}

fn evaluate_tuples(id: StatementId, ctx: &StructureContext, domains: &[Domain], seed: u64) -> Result<Outcome> {
    let mut members = Vec::with_capacity(domains.len());
    for &d in domains {
        match ctx.domain(d) {
            Some(m) => members.push(m),
            None => return Ok(Outcome::excluded()),
        }
    }
    let slices: Vec<&[FuzzySubset]> = members.iter().map(|m| m.members.as_slice()).collect();
    let run = sweep(&slices, ctx.budget.tuple_limit, ctx.budget.samples, seed, |fs| {
        tuple_finding(id, ctx, fs)
    });
    Ok(Outcome {
        instances: run.instances,
        exact: !run.sampled && members.iter().all(|m| m.exact),
        sampled: run.sampled,
        excluded: false,
        violation: run.failure.map(|(idx, finding)| Violation {
            subsets: idx.iter().zip(&slices).map(|(&i, d)| d[i].clone()).collect(),
            elements: finding.elements,
            detail: finding.detail,
        }),
    })
}

/// Exact check of the left-ideal cancellation statement. For each pair of
/// left ideals `(f, k)`, every `g` is keyed by `f∘g` and every `h` by `h∘k`;
/// keys that meet must carry a single value of `g∘f` and `k∘h`.
fn grouped_p3(ctx: &StructureContext) -> Outcome {
    let Some(left) = ctx.domain(Domain::Left) else {
        return Outcome::excluded();
    };
    let left = &left.members;
    let all = &ctx.universe().members;
    let times_all: Vec<(Vec<FuzzySubset>, Vec<FuzzySubset>)> = left
        .iter()
        .map(|m| {
            (
                all.iter().map(|g| ctx.compose(m, g)).collect(),
                all.iter().map(|g| ctx.compose(g, m)).collect(),
            )
        })
        .collect();
    let per_pair = (all.len() * all.len()) as u64;
    let mut instances = 0;
    for (fi, f) in left.iter().enumerate() {
        for (ki, k) in left.iter().enumerate() {
            instances += per_pair;
            let (f_then, then_f) = &times_all[fi];
            let (k_then, then_k) = &times_all[ki];
            // h ↦ (h∘k, k∘h), grouped by h∘k in ascending h.
            let mut by_key: HashMap<&FuzzySubset, Vec<usize>> = HashMap::new();
            for (h, hk) in then_k.iter().enumerate() {
                by_key.entry(hk).or_default().push(h);
            }
            for g in 0..all.len() {
                let Some(hs) = by_key.get(&f_then[g]) else { continue };
                if let Some(&h) = hs.iter().find(|&&h| k_then[h] != then_f[g]) {
                    let finding = differ(&then_f[g], &k_then[h], "f∘g = h∘k but g∘f vs k∘h")
                        .expect("values differ by construction");
                    return Outcome::exact(
                        instances,
                        Some(Violation {
                            subsets: vec![f.clone(), k.clone(), all[g].clone(), all[h].clone()],
                            elements: finding.elements,
                            detail: finding.detail,
                        }),
                    );
                }
            }
        }
    }
    Outcome::exact(instances, None)
}

fn evaluate_structure(id: StatementId, ctx: &StructureContext) -> Result<Outcome> {
    use StatementId::*;
    let t = &ctx.table;
    match id {
        P2Rev => {
            let u = ctx.universe();
            let n = u.members.len() as u64;
            if !u.exact || n.saturating_pow(3) > ctx.budget.tuple_limit {
                return Ok(Outcome::excluded());
            }
            let d = u.members.as_slice();
            let run = sweep(&[d, d, d], u64::MAX, 0, 0, |fs| tuple_finding(P2Fwd, ctx, fs));
            let violation = match run.failure {
                Some(_) => None,
                None => [Identity::Commutative, Identity::Associative]
                    .into_iter()
                    .find_map(|law| check_identity(t, law).err())
                    .map(|w| Violation {
                        subsets: vec![],
                        elements: w.elements.clone(),
                        detail: format!("(f∘g)∘h = f∘(h∘g) holds for every triple, yet {w}"),
                    }),
            };
            Ok(Outcome::exact(run.instances, violation))
        }
        C2 => {
            let u = ctx.universe();
            let n = u.members.len() as u64;
            if !u.exact || n.saturating_pow(3) > ctx.budget.tuple_limit {
                return Ok(Outcome::excluded());
            }
            let d = u.members.as_slice();
            let c = |a: &FuzzySubset, b: &FuzzySubset| ctx.compose(a, b);
            let first = sweep(&[d, d, d], u64::MAX, 0, 0, |fs| {
                differ(
                    &c(&c(fs[0], fs[1]), fs[2]),
                    &c(fs[1], &c(fs[0], fs[2])),
                    "(f∘g)∘h vs g∘(f∘h)",
                )
            });
            let second = sweep(&[d, d, d], u64::MAX, 0, 0, |fs| {
                differ(
                    &c(&c(fs[0], fs[1]), fs[2]),
                    &c(fs[1], &c(fs[2], fs[0])),
                    "(f∘g)∘h vs g∘(h∘f)",
                )
            });
            let instances = first.instances + second.instances;
            let violation = match (first.failure, second.failure) {
                (Some((idx, f)), None) | (None, Some((idx, f))) => Some(Violation {
                    subsets: idx.iter().map(|&i| d[i].clone()).collect(),
                    elements: f.elements,
                    detail: format!("only one of the two identities holds for all triples; {}", f.detail),
                }),
                _ => None,
            };
            Ok(Outcome::exact(instances, violation))
        }
        T2 => Ok(idempotent_stabilizers(ctx)),
        T3 => {
            let mut instances = 0;
            for a in t.elements() {
                for lambda in ctx.chain.positive_levels() {
                    instances += 1;
                    let p = FuzzyPoint::new(a, lambda)?;
                    let closed = generated_left_ideal(&p, t, ctx.chain)?;
                    let oracle = generated_left_ideal_oracle(&p, t, ctx.chain)?;
                    if let Some(f) = differ(&closed, &oracle, &format!("closed form vs least left ideal over {p}")) {
                        return Ok(Outcome::exact(
                            instances,
                            Some(Violation {
                                subsets: vec![closed, oracle],
                                elements: vec![a],
                                detail: f.detail,
                            }),
                        ));
                    }
                }
            }
            Ok(Outcome::exact(instances, None))
        }
        T5 => {
            let Some(lattice) = ctx.lattice() else {
                return Ok(Outcome::excluded());
            };
            match monoid_of(lattice) {
                Ok(m) => Ok(Outcome::exact(m.checks_performed(), None)),
                Err(Error::Law(v)) => Ok(Outcome::exact(1, Some(law_violation(*v)))),
                Err(e) => Err(e),
            }
        }
        T7 => {
            let Some(lattice) = ctx.lattice() else {
                return Ok(Outcome::excluded());
            };
            let ideals = &lattice.two_sided().members;
            let m = ideals.len();
            let products = lattice.two_sided_products();
            let non_prime = lattice.first_non_prime();
            let non_idempotent = (0..m).find(|&i| products[i * m + i] != ideals[i]);
            let unordered = totally_ordered(ideals).err();
            let instances = (m * m * m + m + m * m) as u64;
            let fully_prime = non_prime.is_none();
            let right = non_idempotent.is_none() && unordered.is_none();
            if fully_prime == right {
                return Ok(Outcome::exact(instances, None));
            }
            let mut subsets = Vec::new();
            if let Some(i) = non_prime {
                subsets.push(ideals[i].clone());
                if let Ok(Some(pv)) = lattice.prime_violation(&ideals[i]) {
                    subsets.extend([ideals[pv.g].clone(), ideals[pv.h].clone()]);
                }
            }
            if let Some(i) = non_idempotent {
                subsets.push(ideals[i].clone());
            }
            if let Some((i, j)) = unordered {
                subsets.extend([ideals[i].clone(), ideals[j].clone()]);
            }
            Ok(Outcome::exact(
                instances,
                Some(Violation {
                    subsets,
                    elements: vec![],
                    detail: format!(
                        "fully prime = {fully_prime}, ideals idempotent = {}, totally ordered = {}",
                        non_idempotent.is_none(),
                        unordered.is_none()
                    ),
                }),
            ))
        }
        C4 => {
            let Some(lattice) = ctx.lattice() else {
                return Ok(Outcome::excluded());
            };
            let m = lattice.left().len() as u64;
            match semilattice_of(lattice) {
                Ok(s) => {
                    let q = s.len() as u64;
                    Ok(Outcome::exact(m * m + q * q + q * q * q + q, None))
                }
                Err(Error::Law(v)) => Ok(Outcome::exact(1, Some(law_violation(*v)))),
                Err(e) => Err(e),
            }
        }
        T9 => {
            let Some(lattice) = ctx.lattice() else {
                return Ok(Outcome::excluded());
            };
            let p = profile_of(lattice)?;
            let m = lattice.left().len() as u64;
            let violation = (!p.all_equal()).then(|| Violation {
                subsets: vec![],
                elements: vec![],
                detail: format!(
                    "crisp left ideals idempotent = {}, fuzzy left ideals idempotent = {}, f∘g = f∩g = {}, all semiprime = {}",
                    p.crisp_idempotent, p.fuzzy_idempotent, p.product_is_meet, p.semiprime
                ),
            });
            Ok(Outcome::exact(4 * m * m, violation))
        }
        _ => unreachable!("{id} is a tuple statement"),
    }
}

fn law_violation(v: crate::ideals::monoid::LawViolation) -> Violation {
    Violation {
        detail: v.to_string(),
        subsets: v.members,
        elements: vec![],
    }
}

/// For each idempotent `h`, `Q = {f : f∘h = f}` must be a commutative monoid
/// under `∘` with identity `h`.
fn idempotent_stabilizers(ctx: &StructureContext) -> Outcome {
    let u = ctx.universe();
    if !u.exact {
        return Outcome::excluded();
    }
    let Some(idempotents) = ctx.domain(Domain::Idempotent) else {
        return Outcome::excluded();
    };
    let mut instances = 0u64;
    let fail = |instances, subsets: Vec<&FuzzySubset>, law: &str| {
        Outcome::exact(
            instances,
            Some(Violation {
                subsets: subsets.into_iter().cloned().collect(),
                elements: vec![],
                detail: format!("{law} fails in {{f : f∘h = f}}"),
            }),
        )
    };
    for h in &idempotents.members {
        let q: Vec<&FuzzySubset> = u.members.iter().filter(|f| ctx.compose(f, h) == **f).collect();
        let m = q.len();
        let find = |f: &FuzzySubset| q.binary_search_by(|p| (*p).cmp(f)).ok();
        let Some(hi) = find(h) else {
            return fail(instances + 1, vec![h], "membership of h");
        };
        let mut op = vec![0usize; m * m];
        for i in 0..m {
            for j in 0..m {
                instances += 1;
                match find(&ctx.compose(q[i], q[j])) {
                    Some(k) => op[i * m + j] = k,
                    None => return fail(instances, vec![h, q[i], q[j]], "closure"),
                }
            }
        }
        for i in 0..m {
            instances += 1;
            if op[hi * m + i] != i || op[i * m + hi] != i {
                return fail(instances, vec![h, q[i]], "identity");
            }
            for j in 0..m {
                if op[i * m + j] != op[j * m + i] {
                    return fail(instances, vec![h, q[i], q[j]], "commutativity");
                }
                for k in 0..m {
                    instances += 1;
                    if op[op[i * m + j] * m + k] != op[i * m + op[j * m + k]] {
                        return fail(instances, vec![h, q[i], q[j], q[k]], "associativity");
                    }
                }
            }
        }
    }
    Outcome::exact(instances, None)
}
