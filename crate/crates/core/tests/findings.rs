use agw_core::harness::{recheck, run_check, CheckSpec, Population, StatementId, Verdict};
use agw_core::laws::{check_identity, is_ag_groupoid, right_identities, Identity};
use agw_core::{enumerate, CayleyTable, EnumSpec, GradeChain};

fn order_four() -> Population {
    Population::Enumerated { orders: vec![4] }
}

/// An AG-groupoid with left identity 3 whose left ideal {0,2} is not a right ideal.
fn witness_table() -> CayleyTable {
    CayleyTable::from_rows(&[vec![0, 0, 0, 0], vec![0, 0, 0, 2], vec![0, 0, 0, 1], vec![0, 1, 2, 3]]).unwrap()
}

#[test]
fn commuting_with_idempotents_fails_at_order_four() {
    for k in [1, 2] {
        let r = run_check(&CheckSpec::new(
            StatementId::T4ii,
            GradeChain::new(k).unwrap(),
            order_four(),
        ))
        .unwrap();
        assert_eq!(r.verdict, Verdict::Falsified);
        assert!(recheck(&r).unwrap());
        assert_eq!(r.witness.unwrap().table, witness_table());
    }
}

#[test]
fn left_ideal_union_with_square_fails_at_order_four() {
    for k in [1, 2] {
        let r = run_check(&CheckSpec::new(
            StatementId::L6,
            GradeChain::new(k).unwrap(),
            order_four(),
        ))
        .unwrap();
        assert_eq!(r.verdict, Verdict::Falsified);
        assert!(recheck(&r).unwrap());
        assert!(r.witness.unwrap().detail.starts_with("f∪(f∘f)"));
    }
}

#[test]
fn right_identity_forces_commutative_monoid() {
    for n in 1..=4 {
        for t in enumerate(&EnumSpec::new(n)).unwrap().tables {
            if right_identities(&t).is_empty() {
                continue;
            }
            assert!(is_ag_groupoid(&t));
            assert!(check_identity(&t, Identity::Associative).is_ok(), "{t:?}");
            assert!(check_identity(&t, Identity::Commutative).is_ok(), "{t:?}");
        }
    }
}

#[test]
fn statements_hold_below_order_four() {
    for k in [1, 2] {
        for &id in StatementId::ALL {
            let spec = CheckSpec::new(
                id,
                GradeChain::new(k).unwrap(),
                Population::Enumerated { orders: vec![1, 2, 3] },
            );
            let r = run_check(&spec).unwrap();
            assert_eq!(r.verdict, Verdict::Verified, "{id} k={k}: {:?}", r.witness);
        }
    }
}
