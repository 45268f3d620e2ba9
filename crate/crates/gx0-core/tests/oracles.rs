//! Cross-checks of every fast path against an independent brute-force
//! oracle: subgroup enumeration against a full subset scan, the principal
//! congruence enumerator against the partition filter (G-set and semigroup
//! sides), and ideal enumeration against a direct subset scan.

use gx0_core::congruence::permutable_pair;
use gx0_core::gset::CatalogBounds;
use gx0_core::semigroup::FiniteSemigroup;
use gx0_core::{
    builtin_groups, build_gx0, catalog, congruences_bruteforce, congruences_principal,
    gset_permutable, ideals, sg_congruences, sg_congruences_bruteforce, subgroups, ElemSet,
    FiniteGroup, DEFAULT_BOUNDS,
};

/// Every subset of the group that contains the identity and is closed under
/// product and inverse, found by scanning all 2^n subsets.
fn subgroups_by_subset_scan(g: &FiniteGroup) -> Vec<ElemSet> {
    let n = g.order();
    let mut found = Vec::new();
    for mask in 1u64..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if !members.contains(&g.identity()) {
            continue;
        }
        let closed = members.iter().all(|&a| {
            members.contains(&g.inverse_of(a))
                && members.iter().all(|&b| members.contains(&g.mul(a, b)))
        });
        if closed {
            found.push(members.into_iter().collect());
        }
    }
    found.sort();
    found
}

#[test]
fn subgroup_enumeration_matches_subset_scan() {
    for (name, g) in builtin_groups() {
        let fast: Vec<ElemSet> = subgroups(&g).iter().map(|h| h.members()).collect();
        let slow = subgroups_by_subset_scan(&g);
        assert_eq!(fast, slow, "subgroups of {name}");
    }
}

#[test]
fn expected_subgroup_counts() {
    let counts: Vec<(String, usize)> =
        builtin_groups().into_iter().map(|(name, g)| (name, subgroups(&g).len())).collect();
    let expected = [
        ("Z1", 1),
        ("Z2", 2),
        ("Z3", 2),
        ("Z4", 3),
        ("Z2xZ2", 5),
        ("Z5", 2),
        ("Z6", 4),
        ("S3", 6),
        ("Z7", 2),
        ("Z8", 4),
        ("Z2xZ4", 8),
        ("Z2xZ2xZ2", 16),
        ("D4", 10),
        ("Q8", 6),
    ];
    for ((name, count), (expected_name, expected_count)) in counts.iter().zip(expected) {
        assert_eq!(name, expected_name);
        assert_eq!(*count, expected_count, "subgroup count of {name}");
    }
}

#[test]
fn gset_congruence_enumerators_agree_across_the_catalog() {
    for ci in catalog(&DEFAULT_BOUNDS) {
        let principal = congruences_principal(&ci.gset);
        let brute = congruences_bruteforce(&ci.gset)
            .expect("default bounds stay within the brute-force cutoff");
        assert_eq!(principal, brute, "congruence enumerators disagree on {}", ci.id);
    }
}

#[test]
fn semigroup_congruence_enumerators_agree_up_to_order_ten() {
    let mut checked = 0;
    for ci in catalog(&DEFAULT_BOUNDS) {
        let built = build_gx0(&ci.gset);
        if built.order() > 10 {
            continue;
        }
        let principal = sg_congruences(built.semigroup());
        let brute = sg_congruences_bruteforce(built.semigroup()).unwrap();
        assert_eq!(principal, brute, "semigroup enumerators disagree on {}", ci.id);
        checked += 1;
    }
    assert!(checked > 50, "expected a substantial corpus below order 10, got {checked}");
}

#[test]
fn permutability_verdict_is_enumerator_independent() {
    for ci in catalog(&CatalogBounds::new(6, 6, 2)) {
        let fast = gset_permutable(&ci.gset);
        let congs = congruences_bruteforce(&ci.gset).unwrap();
        let mut slow = true;
        'outer: for (i, p) in congs.iter().enumerate() {
            for q in &congs[i + 1..] {
                if !permutable_pair(p, q).unwrap().permutes {
                    slow = false;
                    break 'outer;
                }
            }
        }
        assert_eq!(fast.permutable, slow, "verdicts disagree on {}", ci.id);
    }
}

/// All nonempty subsets closed under left and right multiplication, by
/// scanning all subsets.
fn ideals_by_subset_scan(s: &FiniteSemigroup) -> Vec<ElemSet> {
    let n = s.order();
    assert!(n <= 12);
    let mut found = Vec::new();
    for mask in 1u64..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let closed = members.iter().all(|&a| {
            (0..n).all(|t| {
                members.contains(&s.mul(t, a)) && members.contains(&s.mul(a, t))
            })
        });
        if closed {
            found.push(members.into_iter().collect());
        }
    }
    found.sort();
    found
}

#[test]
fn ideal_enumeration_matches_subset_scan() {
    for ci in catalog(&CatalogBounds::new(8, 8, 3)) {
        let built = build_gx0(&ci.gset);
        if built.order() > 12 {
            continue;
        }
        let fast = ideals(built.semigroup());
        let slow = ideals_by_subset_scan(built.semigroup());
        assert_eq!(fast, slow, "ideals disagree on {}", ci.id);
    }
    // and on a semigroup that is not a (G,X,0): the two-element left-zero band
    let left_zero = FiniteSemigroup::validate(&[vec![0, 0], vec![1, 1]]).unwrap();
    assert_eq!(ideals(&left_zero), ideals_by_subset_scan(&left_zero));
}
