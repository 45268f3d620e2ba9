//! Finite groups given by Cayley tables, their subgroups, and subgroup
//! set-products.
//!
//! Groups are validated exhaustively (closure, associativity, identity,
//! inverses); nothing here assumes the input table is a group until the
//! checks have passed. Subgroup enumeration closes every subset generated
//! by at most two elements and then closes the result under pairwise joins,
//! which reaches every subgroup: each subgroup is a join of the cyclic
//! subgroups of its members.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::set::ElemSet;

/// A finite group as a full Cayley table over elements `0..order`.
///
/// `table[i * order + j]` is the product `i * j`. The identity index is
/// whatever the input table dictates; [`FiniteGroup::canonical_relabeled`]
/// produces the identity-first form used by serializers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GroupError {
    /// Row `row` has `len` entries where `expected` were required.
    NotSquare { row: usize, len: usize, expected: usize },
    NotClosed { row: usize, col: usize, value: usize },
    NotAssociative { i: usize, j: usize, k: usize },
    NoIdentity,
    NoInverse { elem: usize },
    NotASubgroup,
    DifferentParents,
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupError::NotSquare { row, len, expected } => {
                write!(f, "row {row} has {len} entries, expected {expected}")
            }
            GroupError::NotClosed { row, col, value } => {
                write!(f, "not closed: entry ({row},{col}) is {value}, out of range")
            }
            GroupError::NotAssociative { i, j, k } => {
                write!(f, "not associative at (i,j,k)=({i},{j},{k})")
            }
            GroupError::NoIdentity => write!(f, "no identity element"),
            GroupError::NoInverse { elem } => write!(f, "element {elem} has no inverse"),
            GroupError::NotASubgroup => write!(f, "member set is not a subgroup"),
            GroupError::DifferentParents => write!(f, "subgroups belong to different groups"),
        }
    }
}

impl FiniteGroup {
    /// Validates a Cayley table, checking the axioms in order: closure,
    /// associativity, identity, inverses. The first violated axiom is
    /// reported with a witness.
    pub fn validate(rows: &[Vec<usize>]) -> Result<FiniteGroup, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::NoIdentity);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotSquare { row: i, len: row.len(), expected: n });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::NotClosed { row: i, col: j, value: v });
                }
            }
        }
        let mul = |i: usize, j: usize| rows[i][j];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if mul(mul(i, j), k) != mul(i, mul(j, k)) {
                        return Err(GroupError::NotAssociative { i, j, k });
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or(GroupError::NoIdentity)?;
        let mut inverse = Vec::with_capacity(n);
        for x in 0..n {
            let inv = (0..n)
                .find(|&y| mul(x, y) == identity && mul(y, x) == identity)
                .ok_or(GroupError::NoInverse { elem: x })?;
            inverse.push(inv);
        }
        let mut table = Vec::with_capacity(n * n);
        for row in rows {
            table.extend_from_slice(row);
        }
        Ok(FiniteGroup { order: n, table, identity, inverse })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order + j]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse_of(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (i..self.order).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    pub fn table_rows(&self) -> impl Iterator<Item = &[usize]> {
        self.table.chunks(self.order)
    }

    /// Relabels elements so the identity has index 0, keeping all other
    /// elements in their original relative order. Returns the relabeled
    /// group and the old-to-new index map.
    pub fn canonical_relabeled(&self) -> (FiniteGroup, Vec<usize>) {
        let n = self.order;
        let mut old_to_new = vec![0usize; n];
        let mut next = 1;
        for old in 0..n {
            if old != self.identity {
                old_to_new[old] = next;
                next += 1;
            }
        }
        let mut new_to_old = vec![0usize; n];
        for (old, &new) in old_to_new.iter().enumerate() {
            new_to_old[new] = old;
        }
        let mut table = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = old_to_new[self.mul(new_to_old[i], new_to_old[j])];
            }
        }
        let inverse = (0..n).map(|i| old_to_new[self.inverse[new_to_old[i]]]).collect();
        (FiniteGroup { order: n, table, identity: 0, inverse }, old_to_new)
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::cyclic(1)
    }

    /// The cyclic group of order `n` with `i * j = (i + j) mod n`.
    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push((i + j) % n);
            }
        }
        let inverse = (0..n).map(|i| (n - i) % n).collect();
        FiniteGroup { order: n, table, identity: 0, inverse }
    }

    /// Direct product with elements indexed as `a * other.order + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let n = self.order * other.order;
        let mut table = Vec::with_capacity(n * n);
        for a1 in 0..self.order {
            for b1 in 0..other.order {
                for a2 in 0..self.order {
                    for b2 in 0..other.order {
                        table.push(self.mul(a1, a2) * other.order + other.mul(b1, b2));
                    }
                }
            }
        }
        let identity = self.identity * other.order + other.identity;
        let inverse = (0..n)
            .map(|i| self.inverse[i / other.order] * other.order + other.inverse[i % other.order])
            .collect();
        FiniteGroup { order: n, table, identity, inverse }
    }
}

/// Closes a generating set of permutations of `0..degree` under composition
/// and returns the group together with the element permutations.
///
/// Elements are sorted lexicographically, which puts the identity at index 0.
/// The product `g * h` is "apply `g`, then `h`", so `x ↦ perm[g][x]` is a
/// right action of the resulting group.
pub fn permutation_group(degree: usize, generators: &[Vec<usize>]) -> (FiniteGroup, Vec<Vec<usize>>) {
    let id: Vec<usize> = (0..degree).collect();
    let mut elems: Vec<Vec<usize>> = vec![id];
    let mut frontier = elems.clone();
    while let Some(p) = frontier.pop() {
        for g in generators {
            // q = p then g
            let q: Vec<usize> = (0..degree).map(|x| g[p[x]]).collect();
            if !elems.contains(&q) {
                elems.push(q.clone());
                frontier.push(q);
            }
        }
    }
    elems.sort();
    let n = elems.len();
    let index_of = |p: &[usize]| elems.iter().position(|q| q == p).unwrap();
    let mut rows = Vec::with_capacity(n);
    for g in &elems {
        let mut row = Vec::with_capacity(n);
        for h in &elems {
            let prod: Vec<usize> = (0..degree).map(|x| h[g[x]]).collect();
            row.push(index_of(&prod));
        }
        rows.push(row);
    }
    let group = FiniteGroup::validate(&rows).expect("closure of permutations is a group");
    (group, elems)
}

/// S3 as permutations of three points; index 0 is the identity.
pub fn symmetric3() -> (FiniteGroup, Vec<Vec<usize>>) {
    permutation_group(3, &[vec![1, 0, 2], vec![1, 2, 0]])
}

/// D4 as the symmetries of a square with corners `0..4` in cyclic order.
pub fn dihedral4() -> (FiniteGroup, Vec<Vec<usize>>) {
    permutation_group(4, &[vec![1, 2, 3, 0], vec![1, 0, 3, 2]])
}

/// The quaternion group, elements ordered 1, -1, i, -i, j, -j, k, -k.
pub fn quaternion8() -> FiniteGroup {
    // basis products (b1 * b2) as (sign, basis) over basis 0=1, 1=i, 2=j, 3=k
    const BASIS: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let encode = |neg: bool, basis: usize| basis * 2 + usize::from(neg);
    let mut rows = vec![vec![0usize; 8]; 8];
    for a in 0..8 {
        for b in 0..8 {
            let (neg, basis) = BASIS[a / 2][b / 2];
            rows[a][b] = encode(neg ^ ((a % 2 == 1) ^ (b % 2 == 1)), basis);
        }
    }
    FiniteGroup::validate(&rows).expect("quaternion table is a group")
}

/// Every group of order at most 8, up to isomorphism, with a display name.
/// The order of this list is fixed; catalog enumeration depends on it.
pub fn builtin_groups() -> Vec<(String, FiniteGroup)> {
    let z2 = FiniteGroup::cyclic(2);
    let z4 = FiniteGroup::cyclic(4);
    vec![
        (String::from("Z1"), FiniteGroup::trivial()),
        (String::from("Z2"), FiniteGroup::cyclic(2)),
        (String::from("Z3"), FiniteGroup::cyclic(3)),
        (String::from("Z4"), FiniteGroup::cyclic(4)),
        (String::from("Z2xZ2"), z2.direct_product(&z2)),
        (String::from("Z5"), FiniteGroup::cyclic(5)),
        (String::from("Z6"), FiniteGroup::cyclic(6)),
        (String::from("S3"), symmetric3().0),
        (String::from("Z7"), FiniteGroup::cyclic(7)),
        (String::from("Z8"), FiniteGroup::cyclic(8)),
        (String::from("Z2xZ4"), z2.direct_product(&z4)),
        (String::from("Z2xZ2xZ2"), z2.direct_product(&z2.direct_product(&z2))),
        (String::from("D4"), dihedral4().0),
        (String::from("Q8"), quaternion8()),
    ]
}

/// A subgroup of a specific parent group, held as a member bitmask.
///
/// Instances can only be built through the constructors here, so the
/// subgroup axioms always hold.
#[derive(Clone, Copy, Debug)]
pub struct Subgroup<'g> {
    group: &'g FiniteGroup,
    members: ElemSet,
}

impl<'g> Subgroup<'g> {
    /// Checks the member set for the subgroup axioms (identity, closure,
    /// inverses) and that its size divides the group order.
    pub fn new(group: &'g FiniteGroup, members: ElemSet) -> Result<Self, GroupError> {
        if !members.contains(group.identity()) {
            return Err(GroupError::NotASubgroup);
        }
        for a in members.iter() {
            if a >= group.order() || !members.contains(group.inverse_of(a)) {
                return Err(GroupError::NotASubgroup);
            }
            for b in members.iter() {
                if !members.contains(group.mul(a, b)) {
                    return Err(GroupError::NotASubgroup);
                }
            }
        }
        if group.order() % members.len() != 0 {
            return Err(GroupError::NotASubgroup);
        }
        Ok(Subgroup { group, members })
    }

    pub fn trivial(group: &'g FiniteGroup) -> Self {
        Subgroup { group, members: ElemSet::singleton(group.identity()) }
    }

    pub fn full(group: &'g FiniteGroup) -> Self {
        Subgroup { group, members: ElemSet::universe(group.order()) }
    }

    /// The subgroup generated by `seed`: the closure of `seed ∪ {e}` under
    /// the group product.
    pub fn generated(group: &'g FiniteGroup, seed: ElemSet) -> Self {
        let mut members = seed.union(ElemSet::singleton(group.identity()));
        loop {
            let mut grown = members;
            for a in members.iter() {
                for b in members.iter() {
                    grown.insert(group.mul(a, b));
                }
            }
            if grown == members {
                return Subgroup { group, members };
            }
            members = grown;
        }
    }

    pub fn members(&self) -> ElemSet {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn parent(&self) -> &'g FiniteGroup {
        self.group
    }

    fn same_parent(&self, other: &Subgroup<'_>) -> bool {
        core::ptr::eq(self.group, other.group) || self.group == other.group
    }
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.same_parent(other) && self.members == other.members
    }
}

impl Eq for Subgroup<'_> {}

impl fmt::Display for Subgroup<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.members, f)
    }
}

/// All subgroups of `group` in canonical order (size, then lexicographic
/// member list).
pub fn subgroups(group: &FiniteGroup) -> Vec<Subgroup<'_>> {
    let n = group.order();
    let mut found = alloc::collections::BTreeSet::new();
    found.insert(Subgroup::trivial(group).members());
    for a in 0..n {
        for b in a..n {
            let seed: ElemSet = [a, b].into_iter().collect();
            found.insert(Subgroup::generated(group, seed).members());
        }
    }
    // Close under pairwise joins so nothing beyond two generators is missed.
    loop {
        let snapshot: Vec<ElemSet> = found.iter().copied().collect();
        let before = found.len();
        for (i, &h) in snapshot.iter().enumerate() {
            for &k in &snapshot[i + 1..] {
                found.insert(Subgroup::generated(group, h.union(k)).members());
            }
        }
        if found.len() == before {
            break;
        }
    }
    found
        .into_iter()
        .map(|members| Subgroup { group, members })
        .collect()
}

/// The interval `[h0, G]`: every subgroup containing `h0`.
pub fn interval_subgroups<'g>(
    group: &'g FiniteGroup,
    h0: &Subgroup<'_>,
) -> Result<Vec<Subgroup<'g>>, GroupError> {
    Subgroup::new(group, h0.members())?;
    Ok(subgroups(group)
        .into_iter()
        .filter(|k| h0.members().is_subset(k.members()))
        .collect())
}

/// The element set `HK = {h * k : h ∈ H, k ∈ K}`. Not a subgroup in general.
pub fn set_product(h: &Subgroup<'_>, k: &Subgroup<'_>) -> Result<ElemSet, GroupError> {
    if !h.same_parent(k) {
        return Err(GroupError::DifferentParents);
    }
    let group = h.parent();
    let mut out = ElemSet::EMPTY;
    for a in h.members().iter() {
        for b in k.members().iter() {
            out.insert(group.mul(a, b));
        }
    }
    Ok(out)
}
