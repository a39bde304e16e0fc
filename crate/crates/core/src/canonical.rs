//! Isomorphism-class representatives by brute-force relabeling.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::table::CayleyTable;

/// Largest order accepted by [`canonical_form`]; 6! = 720 relabelings.
pub const DEFAULT_CANONICAL_BOUND: usize = 6;

/// The table obtained by renaming every element `x` to `perm[x]`.
pub fn relabel(t: &CayleyTable, perm: &[usize]) -> CayleyTable {
    let n = t.order();
    let mut entries = vec![0u8; n * n];
    for a in 0..n {
        for b in 0..n {
            entries[perm[a] * n + perm[b]] = perm[t.op(a, b)] as u8;
        }
    }
    CayleyTable::from_raw(n, entries)
}

/// Lexicographically least relabeling of `t`.
pub fn canonical_form(t: &CayleyTable) -> Result<CayleyTable> {
    canonical_form_bounded(t, DEFAULT_CANONICAL_BOUND)
}

pub fn canonical_form_bounded(t: &CayleyTable, bound: usize) -> Result<CayleyTable> {
    let n = t.order();
    if n > bound {
        return Err(Error::Capability {
            what: "canonical form",
            order: n,
            bound,
        });
    }
    let mut best = t.entries().to_vec();
    let mut scratch = vec![0u8; n * n];
    for perm in (0..n).permutations(n) {
        for a in 0..n {
            for b in 0..n {
                scratch[perm[a] * n + perm[b]] = perm[t.op(a, b)] as u8;
            }
        }
        if scratch < best {
            best.copy_from_slice(&scratch);
        }
    }
    Ok(CayleyTable::from_raw(n, best))
}

pub fn is_isomorphic(a: &CayleyTable, b: &CayleyTable) -> Result<bool> {
    if a.order() != b.order() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn order_one_is_fixed() {
        let t = CayleyTable::trivial();
        assert_eq!(canonical_form(&t).unwrap(), t);
    }

    #[test]
    fn z3sub_swap_has_same_form() {
        let t = CayleyTable::z3sub();
        let swapped = relabel(&t, &[1, 0, 2]);
        assert_ne!(swapped, t);
        // Reference: minimum over all six relabelings computed independently.
        let mut all: Vec<CayleyTable> = (0..3).permutations(3).map(|p| relabel(&t, &p)).collect();
        all.sort();
        assert_eq!(canonical_form(&t).unwrap(), all[0]);
        assert_eq!(canonical_form(&swapped).unwrap(), all[0]);
    }

    #[test]
    fn left_and_right_zero_differ() {
        let l = canonical_form(&CayleyTable::left_zero(2)).unwrap();
        let r = canonical_form(&CayleyTable::right_zero(2)).unwrap();
        assert_ne!(l, r);
        // Each is fixed by the swap, so each is its own form.
        assert_eq!(l, CayleyTable::left_zero(2));
        assert_eq!(r, CayleyTable::right_zero(2));
    }

    #[test]
    fn bound_is_enforced() {
        let t = CayleyTable::addition_mod(7);
        assert!(matches!(
            canonical_form(&t),
            Err(Error::Capability { order: 7, bound: 6, .. })
        ));
        assert!(canonical_form_bounded(&CayleyTable::addition_mod(3), 2).is_err());
    }

    fn arb_table() -> impl Strategy<Value = CayleyTable> {
        (1usize..5).prop_flat_map(|n| {
            proptest::collection::vec(0..n, n * n).prop_map(move |e| CayleyTable::new(n, e).unwrap())
        })
    }

    proptest! {
        #[test]
        fn canonical_form_is_idempotent(t in arb_table()) {
            let c = canonical_form(&t).unwrap();
            prop_assert_eq!(canonical_form(&c).unwrap(), c.clone());
            prop_assert!(c <= t);
        }

        #[test]
        fn canonical_form_is_relabeling_invariant(t in arb_table(), seed in any::<u64>()) {
            let n = t.order();
            let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
            let p = &perms[(seed as usize) % perms.len()];
            prop_assert_eq!(canonical_form(&relabel(&t, p)).unwrap(), canonical_form(&t).unwrap());
        }
    }
}
