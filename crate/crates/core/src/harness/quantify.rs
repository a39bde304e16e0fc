//! Universal quantification over finite domains: exhaustive when the tuple
//! count fits the budget, seeded sampling otherwise.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fuzzy::FuzzySubset;

/// What one quantified run found.
#[derive(Clone, Debug, Default)]
pub struct Sweep<V> {
    pub instances: u64,
    pub sampled: bool,
    /// The first failing tuple, as indices into the domains, with its verdict.
    pub failure: Option<(Vec<usize>, V)>,
}

/// Evaluates `eval` on tuples from `domains` until one fails.
pub fn sweep<V>(
    domains: &[&[FuzzySubset]],
    tuple_limit: u64,
    samples: u64,
    seed: u64,
    mut eval: impl FnMut(&[&FuzzySubset]) -> Option<V>,
) -> Sweep<V> {
    let total = domains
        .iter()
        .try_fold(1u64, |acc, d| acc.checked_mul(d.len() as u64))
        .unwrap_or(u64::MAX);
    let mut out = Sweep {
        instances: 0,
        sampled: false,
        failure: None,
    };
    if total == 0 {
        return out;
    }
    let mut tuple: Vec<&FuzzySubset> = Vec::with_capacity(domains.len());
    let mut probe = |idx: &[usize], out: &mut Sweep<V>| -> bool {
        tuple.clear();
        tuple.extend(idx.iter().zip(domains).map(|(&i, d)| &d[i]));
        out.instances += 1;
        if let Some(v) = eval(&tuple) {
            out.failure = Some((idx.to_vec(), v));
            return true;
        }
        false
    };
    if total <= tuple_limit {
        let mut idx = vec![0usize; domains.len()];
        loop {
            if probe(&idx, &mut out) {
                return out;
            }
            if !next_tuple_mixed(&mut idx, domains) {
                return out;
            }
        }
    }
    out.sampled = true;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut idx = vec![0usize; domains.len()];
    for _ in 0..samples {
        for (slot, d) in idx.iter_mut().zip(domains) {
            *slot = rng.random_range(0..d.len());
        }
        if probe(&idx, &mut out) {
            return out;
        }
    }
    out
}

/// Odometer step over domains of differing sizes.
fn next_tuple_mixed(idx: &mut [usize], domains: &[&[FuzzySubset]]) -> bool {
    for i in (0..idx.len()).rev() {
        idx[i] += 1;
        if idx[i] < domains[i].len() {
            return true;
        }
        idx[i] = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::all_fuzzy_subsets;
    use crate::grade::GradeChain;

    fn subsets(n: usize) -> Vec<FuzzySubset> {
        all_fuzzy_subsets(n, GradeChain::crisp()).collect()
    }

    #[test]
    fn exhaustive_counts_every_tuple() {
        let a = subsets(2);
        let b = subsets(1);
        let s = sweep::<()>(&[&a, &b, &a], 1_000, 10, 0, |_| None);
        assert_eq!(s.instances, 4 * 2 * 4);
        assert!(!s.sampled);
        let nullary = sweep::<()>(&[], 1_000, 10, 0, |_| None);
        assert_eq!(nullary.instances, 1);
    }

    #[test]
    fn first_failure_is_lexicographic() {
        let a = subsets(2);
        let s = sweep(&[&a, &a], 1_000, 10, 0, |t| {
            (t[0].is_full() && !t[1].is_zero()).then_some(())
        });
        assert_eq!(s.failure.unwrap().0, vec![3, 1]);
        assert_eq!(s.instances, 3 * 4 + 2);
    }

    #[test]
    fn sampling_is_seeded() {
        let a = subsets(3);
        let run = |seed| {
            let mut seen = Vec::new();
            let s = sweep::<()>(&[&a, &a, &a, &a], 100, 25, seed, |t| {
                seen.push(t.iter().map(|f| f.levels()).collect::<Vec<_>>());
                None
            });
            assert!(s.sampled);
            assert_eq!(s.instances, 25);
            seen
        };
        assert_eq!(run(3), run(3));
        assert_ne!(run(3), run(4));
    }

    #[test]
    fn empty_domain_is_vacuous() {
        let a = subsets(1);
        let s = sweep::<()>(&[&a, &[]], 100, 5, 0, |_| Some(()));
        assert_eq!(s.instances, 0);
        assert!(s.failure.is_none());
    }
}
