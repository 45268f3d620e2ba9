//! The zero-augmented action semigroup (G,X,0) and finite-semigroup
//! machinery: congruences, permutability, ideals, orbit subsemigroups, and
//! segregation on the semigroup side.
//!
//! On `S = G ∪ X ∪ {0}` the product is the group product on `G`, the action
//! `x * g = x^g` for mixed pairs, and `0` whenever the right factor lies in
//! `X ∪ {0}`. Elements are laid out group part first (identity at index 0),
//! then carrier points in carrier order, zero last, so roles decode from
//! index ranges alone.
//!
//! Semigroup congruences are equivalences compatible with all left and right
//! translations, so the enumerators reuse the unary-map engine from the
//! congruence module with the 2n translation maps.

use alloc::vec::Vec;
use core::fmt;

use crate::congruence::{
    congruence_lattice, congruences_by_filter, is_congruence, scan_permutability,
    scan_segregation, CongruenceError, Permutability, Segregation, BRUTEFORCE_MAX_CARRIER,
};
use crate::gset::GSet;
use crate::partition::Partition;
use crate::set::ElemSet;

/// Where an element of a (G,X,0) semigroup came from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Role {
    /// A group element, with its index in the (identity-first) group.
    Group(usize),
    /// A carrier point, with its index in the carrier.
    Set(usize),
    Zero,
}

/// A finite semigroup as a full Cayley table, with the zero element and
/// element roles when known.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<usize>,
    zero: Option<usize>,
    roles: Option<Vec<Role>>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SemigroupError {
    Empty,
    NotSquare { row: usize, len: usize, expected: usize },
    EntryOutOfRange { row: usize, col: usize, value: usize },
    NotAssociative { i: usize, j: usize, k: usize },
    CarrierMismatch { left: usize, right: usize },
    NotAGSetCongruence,
    NotASemigroupCongruence,
    InvalidRoles,
}

impl fmt::Display for SemigroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SemigroupError::Empty => write!(f, "semigroup table is empty"),
            SemigroupError::NotSquare { row, len, expected } => {
                write!(f, "row {row} has {len} entries, expected {expected}")
            }
            SemigroupError::EntryOutOfRange { row, col, value } => {
                write!(f, "entry ({row},{col}) is {value}, out of range")
            }
            SemigroupError::NotAssociative { i, j, k } => {
                write!(f, "not associative at (i,j,k)=({i},{j},{k})")
            }
            SemigroupError::CarrierMismatch { left, right } => {
                write!(f, "carrier sizes differ: {left} vs {right}")
            }
            SemigroupError::NotAGSetCongruence => {
                write!(f, "partition is not a congruence of the underlying G-set")
            }
            SemigroupError::NotASemigroupCongruence => {
                write!(f, "partition is not a semigroup congruence")
            }
        }
    }
}

impl FiniteSemigroup {
    /// Validates associativity by a full triple scan and detects a zero
    /// element if one exists.
    pub fn validate(rows: &[Vec<usize>]) -> Result<FiniteSemigroup, SemigroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(SemigroupError::Empty);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(SemigroupError::NotSquare { row: i, len: row.len(), expected: n });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(SemigroupError::EntryOutOfRange { row: i, col: j, value: v });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if rows[rows[i][j]][k] != rows[i][rows[j][k]] {
                        return Err(SemigroupError::NotAssociative { i, j, k });
                    }
                }
            }
        }
        let zero = (0..n).find(|&z| (0..n).all(|s| rows[z][s] == z && rows[s][z] == z));
        let mut table = Vec::with_capacity(n * n);
        for row in rows {
            table.extend_from_slice(row);
        }
        Ok(FiniteSemigroup { order: n, table, zero, roles: None })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn roles(&self) -> Option<&[Role]> {
        self.roles.as_deref()
    }

    pub fn table_rows(&self) -> impl Iterator<Item = &[usize]> {
        self.table.chunks(self.order)
    }

    /// Attaches role tags, checking the role invariants: exactly one zero
    /// tag sitting on the zero element, back-references forming ranges,
    /// the group part closed with identity and inverses, and products
    /// landing in the right part (group·group in the group part, set·group
    /// in the set part, everything else zero).
    pub fn with_roles(mut self, roles: Vec<Role>) -> Result<FiniteSemigroup, SemigroupError> {
        let n = self.order;
        if roles.len() != n {
            return Err(SemigroupError::CarrierMismatch { left: roles.len(), right: n });
        }
        let bad = SemigroupError::InvalidRoles;
        let zero = self.zero.ok_or(bad)?;
        if roles[zero] != Role::Zero || roles.iter().filter(|r| **r == Role::Zero).count() != 1 {
            return Err(bad);
        }
        let group_part: Vec<usize> = (0..n)
            .filter(|&i| matches!(roles[i], Role::Group(_)))
            .collect();
        let set_part: Vec<usize> = (0..n).filter(|&i| matches!(roles[i], Role::Set(_))).collect();
        let mut group_refs: Vec<usize> = group_part
            .iter()
            .map(|&i| match roles[i] {
                Role::Group(r) => r,
                _ => unreachable!(),
            })
            .collect();
        group_refs.sort_unstable();
        let mut set_refs: Vec<usize> = set_part
            .iter()
            .map(|&i| match roles[i] {
                Role::Set(r) => r,
                _ => unreachable!(),
            })
            .collect();
        set_refs.sort_unstable();
        if group_refs != (0..group_part.len()).collect::<Vec<_>>()
            || set_refs != (0..set_part.len()).collect::<Vec<_>>()
        {
            return Err(bad);
        }
        for a in 0..n {
            for b in 0..n {
                let ok = match (roles[a], roles[b]) {
                    (Role::Group(_), Role::Group(_)) => {
                        matches!(roles[self.mul(a, b)], Role::Group(_))
                    }
                    (Role::Set(_), Role::Group(_)) => matches!(roles[self.mul(a, b)], Role::Set(_)),
                    _ => self.mul(a, b) == zero,
                };
                if !ok {
                    return Err(bad);
                }
            }
        }
        // the group part must be a group: a two-sided identity and inverses
        let identity = group_part
            .iter()
            .copied()
            .find(|&e| group_part.iter().all(|&g| self.mul(e, g) == g && self.mul(g, e) == g))
            .ok_or(bad)?;
        for &g in &group_part {
            if !group_part.iter().any(|&h| self.mul(g, h) == identity) {
                return Err(bad);
            }
        }
        self.roles = Some(roles);
        Ok(self)
    }

    /// All left and right translation maps, the unary operations whose
    /// compatible equivalences are exactly the semigroup congruences.
    pub fn translation_maps(&self) -> Vec<Vec<usize>> {
        let n = self.order;
        let mut maps = Vec::with_capacity(2 * n);
        for t in 0..n {
            maps.push((0..n).map(|x| self.mul(t, x)).collect());
        }
        for t in 0..n {
            maps.push((0..n).map(|x| self.mul(x, t)).collect());
        }
        maps
    }
}

/// The semigroup (G,X,0) of a G-set, remembering the layout.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Gx0 {
    gset: GSet,
    semigroup: FiniteSemigroup,
}

/// Builds the semigroup (G,X,0) on `|G| + |X| + 1` elements.
///
/// The acting group is relabeled identity-first if it is not already.
pub fn build_gx0(x: &GSet) -> Gx0 {
    let x = if x.group().identity() == 0 { x.clone() } else { x.canonicalized() };
    let n = x.group().order();
    let m = x.carrier();
    let order = n + m + 1;
    let zero = order - 1;
    let mut table = vec![zero; order * order];
    for g in 0..n {
        for h in 0..n {
            table[g * order + h] = x.group().mul(g, h);
        }
    }
    for p in 0..m {
        for g in 0..n {
            table[(n + p) * order + g] = n + x.act(p, g);
        }
    }
    // the zero row over group columns stays zero; every column in X ∪ {0}
    // is already zero
    let mut roles = Vec::with_capacity(order);
    roles.extend((0..n).map(Role::Group));
    roles.extend((0..m).map(Role::Set));
    roles.push(Role::Zero);
    let semigroup = FiniteSemigroup { order, table, zero: Some(zero), roles: Some(roles) };
    debug_assert!(
        FiniteSemigroup::validate(
            &semigroup.table_rows().map(<[usize]>::to_vec).collect::<Vec<_>>()
        )
        .is_ok()
    );
    Gx0 { gset: x, semigroup }
}

impl Gx0 {
    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.semigroup
    }

    pub fn gset(&self) -> &GSet {
        &self.gset
    }

    pub fn group_order(&self) -> usize {
        self.gset.group().order()
    }

    pub fn carrier(&self) -> usize {
        self.gset.carrier()
    }

    pub fn order(&self) -> usize {
        self.semigroup.order()
    }

    pub fn zero_index(&self) -> usize {
        self.semigroup.order() - 1
    }

    /// Semigroup index of carrier point `p`.
    pub fn set_index(&self, p: usize) -> usize {
        self.group_order() + p
    }

    /// Extends a G-set congruence to the semigroup: its blocks on the
    /// carrier part, everything else a singleton.
    pub fn lift_congruence(&self, p: &Partition) -> Result<Partition, SemigroupError> {
        if p.carrier() != self.carrier() {
            return Err(SemigroupError::CarrierMismatch {
                left: p.carrier(),
                right: self.carrier(),
            });
        }
        match is_congruence(&self.gset, p) {
            Ok(None) => {}
            _ => return Err(SemigroupError::NotAGSetCongruence),
        }
        let n = self.group_order();
        let mut labels: Vec<usize> = (0..self.order()).collect();
        for point in 0..self.carrier() {
            labels[n + point] = n + p.leader_of(point);
        }
        let lifted = Partition::from_labels(&labels);
        debug_assert_eq!(is_sg_congruence(&self.semigroup, &lifted), Ok(None));
        Ok(lifted)
    }

    /// Restricts a semigroup congruence to the carrier part. The result is
    /// always a congruence of the underlying G-set.
    pub fn restrict_congruence(&self, p: &Partition) -> Result<Partition, SemigroupError> {
        match is_sg_congruence(&self.semigroup, p)? {
            None => {}
            Some(_) => return Err(SemigroupError::NotASemigroupCongruence),
        }
        let points: Vec<usize> = (0..self.carrier()).map(|i| self.set_index(i)).collect();
        let restricted = p.restrict(&points);
        debug_assert_eq!(is_congruence(&self.gset, &restricted), Ok(None));
        Ok(restricted)
    }
}

/// A witness that `p` is not a semigroup congruence: `a ~ b` but translating
/// by `s` on the given side separates them.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SgViolation {
    pub a: usize,
    pub b: usize,
    pub s: usize,
    pub side: Side,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// Checks compatibility with every translation. `Ok(None)` means `p` is a
/// congruence.
pub fn is_sg_congruence(
    s: &FiniteSemigroup,
    p: &Partition,
) -> Result<Option<SgViolation>, SemigroupError> {
    let n = s.order();
    if p.carrier() != n {
        return Err(SemigroupError::CarrierMismatch { left: p.carrier(), right: n });
    }
    for a in 0..n {
        for b in a + 1..n {
            if !p.same(a, b) {
                continue;
            }
            for t in 0..n {
                if !p.same(s.mul(t, a), s.mul(t, b)) {
                    return Ok(Some(SgViolation { a, b, s: t, side: Side::Left }));
                }
                if !p.same(s.mul(a, t), s.mul(b, t)) {
                    return Ok(Some(SgViolation { a, b, s: t, side: Side::Right }));
                }
            }
        }
    }
    Ok(None)
}

/// All semigroup congruences via principal congruences and join closure.
pub fn sg_congruences(s: &FiniteSemigroup) -> Vec<Partition> {
    congruence_lattice(s.order(), &s.translation_maps())
}

/// All semigroup congruences by exhaustive partition filtering; the
/// cross-check oracle for [`sg_congruences`], feasible up to order 10.
pub fn sg_congruences_bruteforce(s: &FiniteSemigroup) -> Result<Vec<Partition>, CongruenceError> {
    if s.order() > BRUTEFORCE_MAX_CARRIER {
        return Err(CongruenceError::CarrierTooLarge {
            carrier: s.order(),
            max: BRUTEFORCE_MAX_CARRIER,
        });
    }
    Ok(congruences_by_filter(s.order(), &s.translation_maps()))
}

/// Whether every pair of semigroup congruences permutes.
pub fn sg_permutable(s: &FiniteSemigroup) -> Permutability {
    scan_permutability(&sg_congruences(s))
}

/// All two-sided ideals in canonical order (size, then lexicographic
/// members). Every ideal is a union of principal ideals, so the principal
/// ideals are closed under pairwise union to a fixpoint.
pub fn ideals(s: &FiniteSemigroup) -> Vec<ElemSet> {
    let n = s.order();
    let mut found = alloc::collections::BTreeSet::new();
    for a in 0..n {
        let mut ideal = ElemSet::singleton(a);
        loop {
            let mut grown = ideal;
            for x in ideal.iter() {
                for t in 0..n {
                    grown.insert(s.mul(t, x));
                    grown.insert(s.mul(x, t));
                }
            }
            if grown == ideal {
                break;
            }
            ideal = grown;
        }
        found.insert(ideal);
    }
    loop {
        let snapshot: Vec<ElemSet> = found.iter().copied().collect();
        let before = found.len();
        for (i, &a) in snapshot.iter().enumerate() {
            for &b in &snapshot[i + 1..] {
                found.insert(a.union(b));
            }
        }
        if found.len() == before {
            return found.into_iter().collect();
        }
    }
}

/// Verdict of the ideal-chain check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdealChain {
    pub chain: bool,
    /// The first incomparable pair in canonical order.
    pub witness: Option<(ElemSet, ElemSet)>,
}

/// Whether the ideals are totally ordered by inclusion.
pub fn ideals_form_chain(s: &FiniteSemigroup) -> IdealChain {
    let all = ideals(s);
    for (i, &a) in all.iter().enumerate() {
        for &b in &all[i + 1..] {
            if !a.is_subset(b) && !b.is_subset(a) {
                return IdealChain { chain: false, witness: Some((a, b)) };
            }
        }
    }
    IdealChain { chain: true, witness: None }
}

/// One (G,A,0) subsemigroup per orbit A, in orbit order.
pub fn orbit_subsemigroups(x: &GSet) -> Vec<Gx0> {
    x.orbits().blocks().iter().map(|block| build_gx0(&x.restrict_to(block))).collect()
}

/// The segregation condition stated on the semigroup: every congruence of
/// (G,X,0) linking two distinct orbits of X collapses their union. Agrees
/// with the G-set segregation verdict.
pub fn sg_segregated(x: &GSet) -> Segregation {
    let built = build_gx0(x);
    let congs = sg_congruences(built.semigroup());
    let shifted: Vec<Vec<usize>> = built
        .gset()
        .orbits()
        .blocks()
        .iter()
        .map(|block| block.iter().map(|&p| built.set_index(p)).collect())
        .collect();
    scan_segregation(&congs, &shifted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::{gset_permutable, is_segregated};
    use crate::group::FiniteGroup;
    use crate::partition::compose;
    use crate::testutil::{regular, two_fixed_points, z2_two_orbits};
    use alloc::string::ToString;

    #[test]
    fn paper_example_semigroup_table() {
        let built = build_gx0(&two_fixed_points());
        let s = built.semigroup();
        assert_eq!(s.order(), 4);
        assert_eq!(s.zero(), Some(3));
        // a*e = a, e*a = 0, a*b = 0
        assert_eq!(s.mul(1, 0), 1);
        assert_eq!(s.mul(0, 1), 3);
        assert_eq!(s.mul(1, 2), 3);
        let roles = s.roles().unwrap();
        assert_eq!(roles, [Role::Group(0), Role::Set(0), Role::Set(1), Role::Zero]);
    }

    #[test]
    fn build_size_and_action_rows_match() {
        let z2 = FiniteGroup::cyclic(2);
        let x = regular(&z2);
        let built = build_gx0(&x);
        assert_eq!(built.order(), 5);
        for p in 0..x.carrier() {
            for g in 0..2 {
                assert_eq!(
                    built.semigroup().mul(built.set_index(p), g),
                    built.set_index(x.act(p, g))
                );
            }
        }
    }

    #[test]
    fn role_products() {
        let built = build_gx0(&z2_two_orbits());
        let s = built.semigroup();
        let roles = s.roles().unwrap();
        let n = built.order();
        for a in 0..n {
            for b in 0..n {
                let expected = match (roles[a], roles[b]) {
                    (Role::Group(_), Role::Group(_)) => matches!(roles[s.mul(a, b)], Role::Group(_)),
                    (Role::Set(_), Role::Group(_)) => matches!(roles[s.mul(a, b)], Role::Set(_)),
                    _ => roles[s.mul(a, b)] == Role::Zero,
                };
                assert!(expected, "role product at ({a},{b})");
            }
        }
    }

    #[test]
    fn validate_accepts_left_zero_semigroup_without_zero() {
        let s = FiniteSemigroup::validate(&[vec![0, 0], vec![1, 1]]).unwrap();
        assert_eq!(s.zero(), None);
    }

    #[test]
    fn validate_rejects_non_associative_table() {
        // (1*0)*1 = 0*1 = 1 but 1*(0*1) = 1*1 = 0
        let err = FiniteSemigroup::validate(&[vec![0, 1], vec![0, 0]]).unwrap_err();
        assert_eq!(err, SemigroupError::NotAssociative { i: 1, j: 0, k: 1 });
    }

    #[test]
    fn every_build_output_validates() {
        for x in [two_fixed_points(), z2_two_orbits(), regular(&FiniteGroup::cyclic(3))] {
            let built = build_gx0(&x);
            let rows: Vec<Vec<usize>> =
                built.semigroup().table_rows().map(<[usize]>::to_vec).collect();
            let checked = FiniteSemigroup::validate(&rows).unwrap();
            assert_eq!(checked.zero(), Some(built.zero_index()));
        }
    }

    #[test]
    fn paper_congruences_alpha_and_beta() {
        let built = build_gx0(&two_fixed_points());
        let s = built.semigroup();
        // e=0, a=1, b=2, zero=3
        let alpha = Partition::from_labels(&[0, 1, 2, 1]); // {a,0},{b},{e}
        let beta = Partition::from_labels(&[0, 1, 2, 2]); // {b,0},{a},{e}
        assert_eq!(is_sg_congruence(s, &alpha).unwrap(), None);
        assert_eq!(is_sg_congruence(s, &beta).unwrap(), None);
        // (a,b) is reachable via alpha then beta, but not the other way
        let ab = compose(&alpha, &beta).unwrap();
        let ba = compose(&beta, &alpha).unwrap();
        assert!(ab.contains(1, 2));
        assert!(!ba.contains(1, 2));
        // both are produced by the enumerator
        let congs = sg_congruences(s);
        assert!(congs.contains(&alpha));
        assert!(congs.contains(&beta));
        assert_eq!(congs, sg_congruences_bruteforce(s).unwrap());
    }

    #[test]
    fn paper_semigroup_is_not_permutable() {
        // congruences of {e,a,b,0}: any class joining e to anything collapses
        // everything (e*t = 0 and x*a-type translations), so the lattice is
        // the universal relation plus the five partitions fixing {e}
        let built = build_gx0(&two_fixed_points());
        let congs = sg_congruences(built.semigroup());
        assert_eq!(congs.len(), 6);
        let report = sg_permutable(built.semigroup());
        assert!(!report.permutable);
        // canonical first failure: {b,0} reachable from b via {{1,2}} then
        // alpha but not the other way around
        let w = report.witness.unwrap();
        assert_eq!(w.first.to_string(), "{{0},{1,2},{3}}");
        assert_eq!(w.second.to_string(), "{{0},{1,3},{2}}");
        assert_eq!(w.pair, (2, 3));
    }

    #[test]
    fn one_element_semigroup_is_permutable() {
        let s = FiniteSemigroup::validate(&[vec![0]]).unwrap();
        assert!(sg_permutable(&s).permutable);
        assert_eq!(ideals(&s), vec![ElemSet::universe(1)]);
        assert!(ideals_form_chain(&s).chain);
    }

    #[test]
    fn regular_z2_build_is_permutable() {
        let built = build_gx0(&regular(&FiniteGroup::cyclic(2)));
        assert!(sg_permutable(built.semigroup()).permutable);
    }

    #[test]
    fn lift_and_restrict_roundtrip() {
        let x = z2_two_orbits();
        let built = build_gx0(&x);
        assert_eq!(
            built.lift_congruence(&Partition::identity(4)).unwrap(),
            Partition::identity(built.order())
        );
        for p in crate::congruence::congruences_principal(&x) {
            let lifted = built.lift_congruence(&p).unwrap();
            assert_eq!(is_sg_congruence(built.semigroup(), &lifted).unwrap(), None);
            assert_eq!(built.restrict_congruence(&lifted).unwrap(), p);
        }
        // non-congruences are rejected
        let bad = Partition::from_labels(&[0, 1, 0, 2]);
        assert_eq!(built.lift_congruence(&bad).unwrap_err(), SemigroupError::NotAGSetCongruence);
    }

    #[test]
    fn paper_lift_of_universal_and_restrictions() {
        let built = build_gx0(&two_fixed_points());
        let lifted = built.lift_congruence(&Partition::universal(2)).unwrap();
        assert_eq!(lifted.to_string(), "{{0},{1,2},{3}}");
        // restrict(alpha) = identity on X
        let alpha = Partition::from_labels(&[0, 1, 2, 1]);
        assert_eq!(built.restrict_congruence(&alpha).unwrap(), Partition::identity(2));
        // a partition that is not a semigroup congruence is rejected
        let bad = Partition::from_labels(&[0, 0, 1, 2]); // {e,a},{b},{0}
        assert_eq!(
            built.restrict_congruence(&bad).unwrap_err(),
            SemigroupError::NotASemigroupCongruence
        );
    }

    #[test]
    fn paper_example_ideals_and_chain_witness() {
        let built = build_gx0(&two_fixed_points());
        let all = ideals(built.semigroup());
        let shown: Vec<_> = all.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["{3}", "{1,3}", "{2,3}", "{1,2,3}", "{0,1,2,3}"]);
        let chain = ideals_form_chain(built.semigroup());
        assert!(!chain.chain);
        let (a, b) = chain.witness.unwrap();
        assert_eq!((a.to_string(), b.to_string()), ("{1,3}".into(), "{2,3}".into()));
    }

    #[test]
    fn ideals_of_transitive_permutable_build_form_a_chain() {
        let built = build_gx0(&regular(&FiniteGroup::cyclic(4)));
        let report = sg_permutable(built.semigroup());
        assert!(report.permutable);
        assert!(ideals_form_chain(built.semigroup()).chain);
    }

    #[test]
    fn orbit_subsemigroup_shapes() {
        let x = two_fixed_points();
        let subs = orbit_subsemigroups(&x);
        assert_eq!(subs.len(), 2);
        assert!(subs.iter().all(|b| b.order() == 3)); // |G| + 1 + 1

        let z2x = z2_two_orbits();
        let subs = orbit_subsemigroups(&z2x);
        assert_eq!(subs.len(), 2);
        assert!(subs.iter().all(|b| b.order() == 5));

        let transitive = regular(&FiniteGroup::cyclic(3));
        let subs = orbit_subsemigroups(&transitive);
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0], build_gx0(&transitive));
    }

    #[test]
    fn segregation_agrees_between_gset_and_semigroup() {
        for x in [two_fixed_points(), z2_two_orbits(), regular(&FiniteGroup::cyclic(2))] {
            assert_eq!(sg_segregated(&x).segregated, is_segregated(&x).segregated);
        }
        assert!(!sg_segregated(&z2_two_orbits()).segregated);
    }

    #[test]
    fn permutable_two_orbit_gset_with_non_permutable_semigroup() {
        // the headline non-equivalence: X permutable, (G,X,0) not
        let x = two_fixed_points();
        assert!(gset_permutable(&x).permutable);
        assert!(!sg_permutable(build_gx0(&x).semigroup()).permutable);
    }
}
