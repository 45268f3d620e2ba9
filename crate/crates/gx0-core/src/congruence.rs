//! Congruences of G-sets: compatibility checks, two independent enumerators,
//! pairwise permutability, and the segregation predicate.
//!
//! A G-set is a unary algebra whose operations are the maps `x ↦ x^g`, and a
//! semigroup congruence is exactly an equivalence compatible with all left
//! and right translations. Both therefore share one engine that works over an
//! arbitrary family of unary maps; the semigroup module passes translations.
//!
//! Two enumerators are kept deliberately distinct so they can cross-check
//! each other: a brute-force filter over all partitions (restricted growth
//! strings, feasible up to carriers around 10) and a principal-congruence
//! generator (close each pair under the maps, then join-close), which scales
//! to every desk-size instance.

use alloc::vec::Vec;
use core::fmt;

use crate::gset::GSet;
use crate::partition::{all_partitions, compose, CarrierMismatch, Partition, UnionFind};

/// Largest carrier the brute-force enumerator accepts (Bell(10) = 115975).
pub const BRUTEFORCE_MAX_CARRIER: usize = 10;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CongruenceError {
    CarrierMismatch { left: usize, right: usize },
    CarrierTooLarge { carrier: usize, max: usize },
}

impl fmt::Display for CongruenceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CongruenceError::CarrierMismatch { left, right } => {
                write!(f, "carrier sizes differ: {left} vs {right}")
            }
            CongruenceError::CarrierTooLarge { carrier, max } => {
                write!(f, "carrier {carrier} exceeds brute-force cutoff {max}")
            }
        }
    }
}

impl From<CarrierMismatch> for CongruenceError {
    fn from(e: CarrierMismatch) -> Self {
        CongruenceError::CarrierMismatch { left: e.left, right: e.right }
    }
}

// ---------------------------------------------------------------------------
// engine over a family of unary maps

/// Least `(a, b, op)` with `a ~ b` but `ops[op]` separating the pair, if any.
pub(crate) fn compatibility_witness(
    p: &Partition,
    ops: &[Vec<usize>],
) -> Option<(usize, usize, usize)> {
    let n = p.carrier();
    for a in 0..n {
        for b in a + 1..n {
            if !p.same(a, b) {
                continue;
            }
            for (op, map) in ops.iter().enumerate() {
                if !p.same(map[a], map[b]) {
                    return Some((a, b, op));
                }
            }
        }
    }
    None
}

/// The least congruence relating `a` and `b`: close under the maps and
/// transitivity.
///
/// Classic union-find congruence closure for unary operations: every merge
/// of two classes only requires merging the op-images of the two merged
/// representatives, because each class already had a single image class per
/// op before the merge.
pub(crate) fn principal_congruence(
    n: usize,
    ops: &[Vec<usize>],
    a: usize,
    b: usize,
) -> Partition {
    let mut uf = UnionFind::new(n);
    let mut pending = vec![(a, b)];
    while let Some((x, y)) = pending.pop() {
        if uf.union(x, y) {
            for map in ops {
                pending.push((map[x], map[y]));
            }
        }
    }
    uf.into_partition()
}

/// The full congruence lattice: identity plus the join-closure of all
/// principal congruences, in canonical order.
///
/// Every congruence is the join of the principal congruences of its pairs,
/// so closing the principal set under binary joins reaches the whole
/// lattice. New elements are joined against everything seen via a worklist.
pub(crate) fn congruence_lattice(n: usize, ops: &[Vec<usize>]) -> Vec<Partition> {
    let mut found = alloc::collections::BTreeSet::new();
    found.insert(Partition::identity(n));
    for a in 0..n {
        for b in a + 1..n {
            found.insert(principal_congruence(n, ops, a, b));
        }
    }
    let mut worklist: Vec<Partition> = found.iter().cloned().collect();
    while let Some(p) = worklist.pop() {
        let snapshot: Vec<Partition> = found.iter().cloned().collect();
        for q in snapshot {
            let join = p.join(&q).expect("equal carriers");
            if found.insert(join.clone()) {
                worklist.push(join);
            }
        }
    }
    found.into_iter().collect()
}

/// Every compatible partition, by filtering all partitions of the carrier.
pub(crate) fn congruences_by_filter(n: usize, ops: &[Vec<usize>]) -> Vec<Partition> {
    all_partitions(n)
        .filter(|p| compatibility_witness(p, ops).is_none())
        .collect()
}

// ---------------------------------------------------------------------------
// G-set surface

/// A witness that `p` is not a congruence: `a ~ b` but `a^g !~ b^g`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CongruenceViolation {
    pub a: usize,
    pub b: usize,
    pub g: usize,
}

/// Checks action-compatibility of `p`. `Ok(None)` means `p` is a congruence;
/// `Ok(Some(w))` carries the least violating triple.
pub fn is_congruence(
    x: &GSet,
    p: &Partition,
) -> Result<Option<CongruenceViolation>, CongruenceError> {
    if p.carrier() != x.carrier() {
        return Err(CongruenceError::CarrierMismatch { left: p.carrier(), right: x.carrier() });
    }
    Ok(compatibility_witness(p, &x.unary_maps()).map(|(a, b, g)| CongruenceViolation { a, b, g }))
}

/// All congruences by exhaustive partition filtering. Errors above the
/// Bell-number cutoff.
pub fn congruences_bruteforce(x: &GSet) -> Result<Vec<Partition>, CongruenceError> {
    if x.carrier() > BRUTEFORCE_MAX_CARRIER {
        return Err(CongruenceError::CarrierTooLarge {
            carrier: x.carrier(),
            max: BRUTEFORCE_MAX_CARRIER,
        });
    }
    Ok(congruences_by_filter(x.carrier(), &x.unary_maps()))
}

/// All congruences via principal congruences and join closure. Agrees with
/// [`congruences_bruteforce`] wherever both run, and scales well past it.
pub fn congruences_principal(x: &GSet) -> Vec<Partition> {
    congruence_lattice(x.carrier(), &x.unary_maps())
}

/// Outcome of a single `α ∘ β = β ∘ α` test.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairCheck {
    pub permutes: bool,
    /// Least pair reachable via `p` then `q` but not via `q` then `p`.
    pub witness: Option<(usize, usize)>,
}

/// Tests whether two partitions permute under relational composition.
pub fn permutable_pair(p: &Partition, q: &Partition) -> Result<PairCheck, CongruenceError> {
    let pq = compose(p, q)?;
    let qp = compose(q, p)?;
    match pq.least_pair_not_in(&qp) {
        None => Ok(PairCheck { permutes: true, witness: None }),
        some => Ok(PairCheck { permutes: false, witness: some }),
    }
}

/// Verdict of a full congruence-pair permutability scan.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutability {
    pub permutable: bool,
    pub witness: Option<PermutabilityWitness>,
    pub congruence_count: usize,
    pub pairs_checked: usize,
}

/// The first congruence pair (in canonical order) that fails to permute,
/// with the least element pair in `first ∘ second` missing from
/// `second ∘ first`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PermutabilityWitness {
    pub first: Partition,
    pub second: Partition,
    pub pair: (usize, usize),
}

/// Scans all unordered pairs from a canonically ordered congruence list.
pub(crate) fn scan_permutability(congruences: &[Partition]) -> Permutability {
    let mut pairs_checked = 0;
    for (i, p) in congruences.iter().enumerate() {
        for q in &congruences[i + 1..] {
            pairs_checked += 1;
            let check = permutable_pair(p, q).expect("carrier sizes agree within one lattice");
            if !check.permutes {
                return Permutability {
                    permutable: false,
                    witness: Some(PermutabilityWitness {
                        first: p.clone(),
                        second: q.clone(),
                        pair: check.witness.expect("failing pair has a witness"),
                    }),
                    congruence_count: congruences.len(),
                    pairs_checked,
                };
            }
        }
    }
    Permutability {
        permutable: true,
        witness: None,
        congruence_count: congruences.len(),
        pairs_checked,
    }
}

/// Whether every pair of congruences of `x` permutes.
pub fn gset_permutable(x: &GSet) -> Permutability {
    scan_permutability(&congruences_principal(x))
}

/// Verdict of the segregation check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Segregation {
    pub segregated: bool,
    pub witness: Option<SegregationWitness>,
}

/// A congruence that links two orbits without collapsing their union, with
/// the least pair from the union left unrelated.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SegregationWitness {
    pub congruence: Partition,
    pub orbit_a: Vec<usize>,
    pub orbit_b: Vec<usize>,
    pub pair: (usize, usize),
}

pub(crate) fn scan_segregation(
    congruences: &[Partition],
    orbits: &[Vec<usize>],
) -> Segregation {
    for p in congruences {
        for (i, a) in orbits.iter().enumerate() {
            for b in &orbits[i + 1..] {
                let linked =
                    a.iter().any(|&x| b.iter().any(|&y| p.same(x, y)));
                if !linked {
                    continue;
                }
                let mut union: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
                union.sort_unstable();
                let unrelated = union.iter().enumerate().find_map(|(k, &x)| {
                    union[k + 1..].iter().find(|&&y| !p.same(x, y)).map(|&y| (x, y))
                });
                if let Some(pair) = unrelated {
                    return Segregation {
                        segregated: false,
                        witness: Some(SegregationWitness {
                            congruence: p.clone(),
                            orbit_a: a.clone(),
                            orbit_b: b.clone(),
                            pair,
                        }),
                    };
                }
            }
        }
    }
    Segregation { segregated: true, witness: None }
}

/// Whether every congruence that links two distinct orbits collapses their
/// union into a single class.
pub fn is_segregated(x: &GSet) -> Segregation {
    scan_segregation(&congruences_principal(x), x.orbits().blocks())
}
