//! Finite right G-sets as action tables: orbits, stabilizers, transitivity,
//! coset actions, disjoint unions, and the bounded instance catalog.
//!
//! Every transitive G-set is isomorphic to the action on right cosets of a
//! point stabilizer, so the catalog enumerates coset actions of the built-in
//! groups and their disjoint unions. That covers the full range of desk-scale
//! instances without any isomorphism testing.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::group::{builtin_groups, subgroups, FiniteGroup, Subgroup};
use crate::set::ElemSet;

/// A right action of a finite group on `0..carrier`:
/// `action[x * group.order() + g]` is `x^g`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GSet {
    group: FiniteGroup,
    carrier: usize,
    action: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GSetError {
    EmptyCarrier,
    /// Row `point` has `len` entries where `expected` were required.
    RowMismatch { point: usize, len: usize, expected: usize },
    EntryOutOfRange { point: usize, g: usize, value: usize },
    IdentityAxiom { point: usize },
    Compatibility { point: usize, g: usize, h: usize },
    GroupMismatch,
}

impl fmt::Display for GSetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GSetError::EmptyCarrier => write!(f, "carrier must be non-empty"),
            GSetError::RowMismatch { point, len, expected } => {
                write!(f, "action row {point} has {len} entries, expected {expected}")
            }
            GSetError::EntryOutOfRange { point, g, value } => {
                write!(f, "action entry ({point},{g}) is {value}, out of carrier range")
            }
            GSetError::IdentityAxiom { point } => {
                write!(f, "identity axiom fails: {point}^e != {point}")
            }
            GSetError::Compatibility { point, g, h } => {
                write!(f, "compatibility fails at (x,g,h)=({point},{g},{h})")
            }
            GSetError::GroupMismatch => write!(f, "instances act over different groups"),
        }
    }
}

impl GSet {
    /// Validates the two G-set axioms, `x^e = x` and `(x^g)^h = x^(gh)`,
    /// reporting the first violation with a witness.
    pub fn validate(group: FiniteGroup, rows: &[Vec<usize>]) -> Result<GSet, GSetError> {
        let m = rows.len();
        let n = group.order();
        if m == 0 {
            return Err(GSetError::EmptyCarrier);
        }
        for (x, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GSetError::RowMismatch { point: x, len: row.len(), expected: n });
            }
            for (g, &v) in row.iter().enumerate() {
                if v >= m {
                    return Err(GSetError::EntryOutOfRange { point: x, g, value: v });
                }
            }
        }
        let e = group.identity();
        for (x, row) in rows.iter().enumerate() {
            if row[e] != x {
                return Err(GSetError::IdentityAxiom { point: x });
            }
        }
        for x in 0..m {
            for g in 0..n {
                for h in 0..n {
                    if rows[rows[x][g]][h] != rows[x][group.mul(g, h)] {
                        return Err(GSetError::Compatibility { point: x, g, h });
                    }
                }
            }
        }
        let mut action = Vec::with_capacity(m * n);
        for row in rows {
            action.extend_from_slice(row);
        }
        Ok(GSet { group, carrier: m, action })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn act(&self, x: usize, g: usize) -> usize {
        self.action[x * self.group.order() + g]
    }

    pub fn action_rows(&self) -> impl Iterator<Item = &[usize]> {
        self.action.chunks(self.group.order())
    }

    /// The action as one unary map per group element, for the congruence
    /// machinery.
    pub fn unary_maps(&self) -> Vec<Vec<usize>> {
        let n = self.group.order();
        (0..n)
            .map(|g| (0..self.carrier).map(|x| self.act(x, g)).collect())
            .collect()
    }

    pub fn orbits(&self) -> OrbitDecomposition {
        let mut seen = vec![false; self.carrier];
        let mut blocks = Vec::new();
        for start in 0..self.carrier {
            if seen[start] {
                continue;
            }
            let mut orbit = ElemSet::EMPTY;
            let mut stack = vec![start];
            seen[start] = true;
            orbit.insert(start);
            while let Some(x) = stack.pop() {
                for g in 0..self.group.order() {
                    let y = self.act(x, g);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.insert(y);
                        stack.push(y);
                    }
                }
            }
            blocks.push(orbit.to_vec());
        }
        OrbitDecomposition { blocks }
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().blocks.len() == 1
    }

    /// The stabilizer `{g : x^g = x}`, always a subgroup.
    pub fn stabilizer(&self, x: usize) -> Subgroup<'_> {
        assert!(x < self.carrier, "point out of carrier range");
        let members: ElemSet = (0..self.group.order()).filter(|&g| self.act(x, g) == x).collect();
        Subgroup::new(&self.group, members).expect("stabilizers are subgroups")
    }

    /// The sub-G-set on a sorted, action-closed list of points, re-indexed
    /// to `0..points.len()`.
    pub fn restrict_to(&self, points: &[usize]) -> GSet {
        let index_of = |y: usize| points.binary_search(&y).expect("restriction not action-closed");
        let mut action = Vec::with_capacity(points.len() * self.group.order());
        for &x in points {
            for g in 0..self.group.order() {
                action.push(index_of(self.act(x, g)));
            }
        }
        GSet { group: self.group.clone(), carrier: points.len(), action }
    }

    /// Identity-first relabeling of the acting group; the carrier order is
    /// untouched, the action columns are permuted to match.
    pub fn canonicalized(&self) -> GSet {
        let (group, old_to_new) = self.group.canonical_relabeled();
        let n = group.order();
        let mut new_to_old = vec![0usize; n];
        for (old, &new) in old_to_new.iter().enumerate() {
            new_to_old[new] = old;
        }
        let mut action = Vec::with_capacity(self.carrier * n);
        for x in 0..self.carrier {
            for g in 0..n {
                action.push(self.act(x, new_to_old[g]));
            }
        }
        GSet { group, carrier: self.carrier, action }
    }
}

/// Orbits as disjoint sorted blocks covering the carrier, ordered by least
/// element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitDecomposition {
    blocks: Vec<Vec<usize>>,
}

impl OrbitDecomposition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn count(&self) -> usize {
        self.blocks.len()
    }

    pub fn orbit_index_of(&self, x: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.binary_search(&x).is_ok())
            .expect("point not covered by orbits")
    }
}

/// The transitive action of `group` on the right cosets of `h` by right
/// multiplication. Cosets are indexed in order of their least representative;
/// the stabilizer of the coset `H` is `h` itself.
pub fn coset_action(group: &FiniteGroup, h: &Subgroup<'_>) -> GSet {
    let n = group.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for g in 0..n {
        if coset_of[g] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(g);
        for a in h.members().iter() {
            coset_of[group.mul(a, g)] = idx;
        }
    }
    let m = reps.len();
    let mut action = Vec::with_capacity(m * n);
    for &rep in &reps {
        for k in 0..n {
            action.push(coset_of[group.mul(rep, k)]);
        }
    }
    GSet { group: group.clone(), carrier: m, action }
}

/// Disjoint union over a shared group; carriers are re-indexed block by
/// block in the order given.
pub fn disjoint_union(parts: &[GSet]) -> Result<GSet, GSetError> {
    let first = parts.first().ok_or(GSetError::EmptyCarrier)?;
    let group = first.group().clone();
    let n = group.order();
    let mut action = Vec::new();
    let mut offset = 0;
    for part in parts {
        if part.group() != &group {
            return Err(GSetError::GroupMismatch);
        }
        for x in 0..part.carrier() {
            for g in 0..n {
                action.push(part.act(x, g) + offset);
            }
        }
        offset += part.carrier();
    }
    Ok(GSet { group, carrier: offset, action })
}

/// Enumeration bounds for the instance catalog.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CatalogBounds {
    pub max_group_order: usize,
    pub max_carrier: usize,
    pub max_orbits: usize,
}

impl CatalogBounds {
    pub fn new(max_group_order: usize, max_carrier: usize, max_orbits: usize) -> Self {
        CatalogBounds { max_group_order, max_carrier, max_orbits }
    }
}

/// Default desk-scale bounds.
pub const DEFAULT_BOUNDS: CatalogBounds =
    CatalogBounds { max_group_order: 8, max_carrier: 8, max_orbits: 3 };

/// A catalog entry: a deterministic instance id plus the instance itself.
///
/// Ids look like `S3[H1+H4]`: the built-in group name and the canonical
/// subgroup indices whose coset actions are united, in ascending order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CatalogInstance {
    pub id: String,
    pub gset: GSet,
}

/// Deterministic sequence of test instances: for every built-in group within
/// the order bound, every coset action on each of its subgroups, and every
/// multiset of at most `max_orbits` such actions with total carrier within
/// the carrier bound.
pub fn catalog(bounds: &CatalogBounds) -> Vec<CatalogInstance> {
    let mut out = Vec::new();
    for (name, group) in builtin_groups() {
        if group.order() > bounds.max_group_order {
            continue;
        }
        let subs = subgroups(&group);
        let actions: Vec<GSet> = subs.iter().map(|h| coset_action(&group, h)).collect();
        let mut chosen: Vec<usize> = Vec::new();
        collect_unions(&name, &actions, &mut chosen, 0, bounds, &mut out);
    }
    out
}

fn collect_unions(
    group_name: &str,
    actions: &[GSet],
    chosen: &mut Vec<usize>,
    first: usize,
    bounds: &CatalogBounds,
    out: &mut Vec<CatalogInstance>,
) {
    if !chosen.is_empty() {
        let parts: Vec<GSet> = chosen.iter().map(|&i| actions[i].clone()).collect();
        let union = disjoint_union(&parts).expect("same group by construction");
        if union.carrier() <= bounds.max_carrier {
            let mut id = String::from(group_name);
            id.push('[');
            for (k, i) in chosen.iter().enumerate() {
                if k > 0 {
                    id.push('+');
                }
                id.push_str(&format!("H{i}"));
            }
            id.push(']');
            out.push(CatalogInstance { id, gset: union });
        } else {
            // carriers only grow along this branch
            return;
        }
    }
    if chosen.len() == bounds.max_orbits {
        return;
    }
    for i in first..actions.len() {
        chosen.push(i);
        collect_unions(group_name, actions, chosen, i, bounds, out);
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::symmetric3;
    use crate::testutil::{regular, two_fixed_points, z2_two_orbits};

    #[test]
    fn two_fixed_points_is_valid_with_two_orbits() {
        let x = two_fixed_points();
        assert_eq!(x.orbits().blocks(), &[vec![0], vec![1]]);
        assert!(!x.is_transitive());
        // the stabilizer of a fixed point is all of G
        assert_eq!(x.stabilizer(0).len(), 1);
    }

    #[test]
    fn identity_axiom_violation_is_caught() {
        let err = GSet::validate(FiniteGroup::trivial(), &[vec![1], vec![0]]).unwrap_err();
        assert_eq!(err, GSetError::IdentityAxiom { point: 0 });
    }

    #[test]
    fn compatibility_violation_is_caught() {
        // Z2 acting with a non-involutive "swap": 0 -> 1 -> 2 -> 0 is not
        // compatible with g*g = e.
        let z3_like = vec![vec![0, 1], vec![1, 2], vec![2, 0]];
        let err = GSet::validate(FiniteGroup::cyclic(2), &z3_like).unwrap_err();
        assert!(matches!(err, GSetError::Compatibility { .. }));
    }

    #[test]
    fn s3_natural_action_validates() {
        let (s3, perms) = symmetric3();
        let rows: Vec<Vec<usize>> =
            (0..3).map(|x| (0..6).map(|g| perms[g][x]).collect()).collect();
        let x = GSet::validate(s3.clone(), &rows).unwrap();
        assert!(x.is_transitive());
        assert_eq!(x.stabilizer(0).len(), 2);
        // orbit-stabilizer: 3 * 2 = 6
        assert_eq!(x.orbits().blocks()[0].len() * x.stabilizer(0).len(), 6);
    }

    #[test]
    fn regular_action_is_transitive_with_trivial_stabilizers() {
        for (_, g) in builtin_groups() {
            let x = regular(&g);
            assert_eq!(x.carrier(), g.order());
            assert!(x.is_transitive());
            assert_eq!(x.stabilizer(0).len(), 1);
        }
    }

    #[test]
    fn coset_action_recovers_the_subgroup_as_stabilizer() {
        let (s3, _) = symmetric3();
        for h in subgroups(&s3) {
            let x = coset_action(&s3, &h);
            assert_eq!(x.carrier() * h.len(), s3.order());
            assert!(x.is_transitive());
            // coset 0 is H itself (its least representative is the identity)
            assert_eq!(x.stabilizer(0), h);
        }
    }

    #[test]
    fn one_point_action_from_full_subgroup() {
        let z4 = FiniteGroup::cyclic(4);
        let x = coset_action(&z4, &Subgroup::full(&z4));
        assert_eq!(x.carrier(), 1);
    }

    #[test]
    fn z2_two_orbit_instance() {
        let x = z2_two_orbits();
        let orbits = x.orbits();
        assert_eq!(orbits.blocks(), &[vec![0, 1], vec![2, 3]]);
        assert_eq!(orbits.orbit_index_of(3), 1);
        let a_part = x.restrict_to(&[0, 1]);
        assert!(a_part.is_transitive());
        assert_eq!(a_part.act(0, 1), 1);
    }

    #[test]
    fn catalog_contains_the_expected_instances() {
        // (1, 2, 2): the two-fixed-points instance over the trivial group
        let small = catalog(&CatalogBounds::new(1, 2, 2));
        assert!(small.iter().any(|ci| ci.id == "Z1[H0+H0]" && ci.gset == two_fixed_points()));

        // (2, 2, 1): the regular Z2 action
        let z2s = catalog(&CatalogBounds::new(2, 2, 1));
        assert!(z2s
            .iter()
            .any(|ci| ci.id == "Z2[H0]" && ci.gset == regular(&FiniteGroup::cyclic(2))));

        // (6, 3, 1): a copy of the natural S3 action (coset action on an
        // order-2 subgroup)
        let s3s = catalog(&CatalogBounds::new(6, 3, 1));
        let natural: Vec<&CatalogInstance> = s3s
            .iter()
            .filter(|ci| ci.id.starts_with("S3[") && ci.gset.carrier() == 3)
            .collect();
        assert_eq!(natural.len(), 3, "one per order-2 subgroup");
        for ci in natural {
            assert!(ci.gset.is_transitive());
            assert_eq!(ci.gset.stabilizer(0).len(), 2);
        }

        // the union of two regular Z2 actions is the two-orbit instance
        let z2u = catalog(&CatalogBounds::new(2, 4, 2));
        assert!(z2u.iter().any(|ci| ci.id == "Z2[H0+H0]" && ci.gset == z2_two_orbits()));
    }

    #[test]
    fn catalog_is_deterministic() {
        let a = catalog(&DEFAULT_BOUNDS);
        let b = catalog(&DEFAULT_BOUNDS);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x, y);
        }
    }

    #[test]
    fn orbit_stabilizer_theorem_across_catalog() {
        for ci in catalog(&CatalogBounds::new(6, 6, 2)) {
            let orbits = ci.gset.orbits();
            for x in 0..ci.gset.carrier() {
                let orbit_len = orbits.blocks()[orbits.orbit_index_of(x)].len();
                assert_eq!(
                    orbit_len * ci.gset.stabilizer(x).len(),
                    ci.gset.group().order(),
                    "orbit-stabilizer failed in {}",
                    ci.id
                );
            }
        }
    }

    #[test]
    fn orbits_are_action_closed() {
        for ci in catalog(&CatalogBounds::new(4, 6, 3)) {
            let orbits = ci.gset.orbits();
            for block in orbits.blocks() {
                for &x in block {
                    for g in 0..ci.gset.group().order() {
                        assert!(block.binary_search(&ci.gset.act(x, g)).is_ok());
                    }
                }
            }
        }
    }
}
