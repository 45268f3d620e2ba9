//! Property tests for the partition lattice, relational composition, and
//! the canonical set order.

use gx0_core::congruence::permutable_pair;
use gx0_core::{compose, ElemSet, Partition};
use proptest::prelude::*;

fn arb_partition(n: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..n, n).prop_map(|labels| Partition::from_labels(&labels))
}

proptest! {
    #[test]
    fn canonical_form_holds(p in arb_partition(8)) {
        for x in 0..p.carrier() {
            prop_assert!(p.leader_of(x) <= x);
            prop_assert_eq!(p.leader_of(p.leader_of(x)), p.leader_of(x));
        }
    }

    #[test]
    fn join_is_commutative_and_absorbing(p in arb_partition(7), q in arb_partition(7)) {
        let join = p.join(&q).unwrap();
        prop_assert_eq!(&join, &q.join(&p).unwrap());
        let meet = p.meet(&q).unwrap();
        prop_assert_eq!(&meet, &q.meet(&p).unwrap());
        prop_assert!(p.refines(&join) && q.refines(&join));
        prop_assert!(meet.refines(&p) && meet.refines(&q));
        // absorption
        prop_assert_eq!(&p.join(&meet).unwrap(), &p);
        prop_assert_eq!(&p.meet(&join).unwrap(), &p);
    }

    #[test]
    fn join_is_associative(p in arb_partition(6), q in arb_partition(6), r in arb_partition(6)) {
        let left = p.join(&q).unwrap().join(&r).unwrap();
        let right = p.join(&q.join(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn composition_of_equivalences_is_mirror_symmetric(
        p in arb_partition(7),
        q in arb_partition(7),
    ) {
        let pq = compose(&p, &q).unwrap();
        let qp = compose(&q, &p).unwrap();
        for a in 0..7 {
            for c in 0..7 {
                prop_assert_eq!(pq.contains(a, c), qp.contains(c, a));
            }
        }
        // both factors embed in the composition
        for a in 0..7 {
            prop_assert!(pq.contains(a, a));
            for b in 0..7 {
                if p.same(a, b) || q.same(a, b) {
                    prop_assert!(pq.contains(a, b));
                }
            }
        }
    }

    #[test]
    fn composition_matches_middle_element_search(
        p in arb_partition(6),
        q in arb_partition(6),
    ) {
        let pq = compose(&p, &q).unwrap();
        for a in 0..6 {
            for c in 0..6 {
                let expected = (0..6).any(|b| p.same(a, b) && q.same(b, c));
                prop_assert_eq!(pq.contains(a, c), expected);
            }
        }
    }

    #[test]
    fn permuting_with_identity_and_self(p in arb_partition(8)) {
        let id = Partition::identity(8);
        prop_assert!(permutable_pair(&p, &id).unwrap().permutes);
        prop_assert!(permutable_pair(&p, &p).unwrap().permutes);
        let all = Partition::universal(8);
        prop_assert!(permutable_pair(&p, &all).unwrap().permutes);
    }

    #[test]
    fn comparable_partitions_permute(p in arb_partition(8), q in arb_partition(8)) {
        let join = p.join(&q).unwrap();
        // p and join are comparable, so they must permute
        prop_assert!(permutable_pair(&p, &join).unwrap().permutes);
    }

    #[test]
    fn elemset_order_is_total_and_consistent(
        a in prop::collection::btree_set(0usize..16, 0..8),
        b in prop::collection::btree_set(0usize..16, 0..8),
    ) {
        let sa: ElemSet = a.iter().copied().collect();
        let sb: ElemSet = b.iter().copied().collect();
        let va: Vec<usize> = a.into_iter().collect();
        let vb: Vec<usize> = b.into_iter().collect();
        let expected = (va.len(), va).cmp(&(vb.len(), vb));
        prop_assert_eq!(sa.cmp(&sb), expected);
        prop_assert_eq!(sa == sb, sa.cmp(&sb).is_eq());
    }
}
