//! Partitions of an indexed carrier in canonical leader form, plus binary
//! relations and relational composition.
//!
//! The canonical form maps every element to the least element of its block,
//! so two partitions are equal iff their leader arrays are equal, and the
//! lexicographic order on leader arrays is the canonical report order.
//! Enumeration uses restricted growth strings, which visit partitions in
//! exactly that order.

use alloc::vec::Vec;
use core::fmt;

/// A partition of `{0, .., n-1}` with `leader[x]` the least member of the
/// block containing `x`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    leader: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CarrierMismatch {
    pub left: usize,
    pub right: usize,
}

impl fmt::Display for CarrierMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "carrier sizes differ: {} vs {}", self.left, self.right)
    }
}

impl Partition {
    /// The identity partition: every element in its own block.
    pub fn identity(n: usize) -> Partition {
        Partition { leader: (0..n).collect() }
    }

    /// The single-block partition relating everything.
    pub fn universal(n: usize) -> Partition {
        Partition { leader: vec![0; n] }
    }

    /// Builds the partition whose blocks are the equal-label classes of
    /// `labels`. Any label vector is accepted.
    pub fn from_labels(labels: &[usize]) -> Partition {
        let n = labels.len();
        let mut leader = vec![usize::MAX; n];
        for x in 0..n {
            if leader[x] != usize::MAX {
                continue;
            }
            for y in x..n {
                if labels[y] == labels[x] && leader[y] == usize::MAX {
                    leader[y] = x;
                }
            }
        }
        Partition { leader }
    }

    pub fn carrier(&self) -> usize {
        self.leader.len()
    }

    pub fn leader_of(&self, x: usize) -> usize {
        self.leader[x]
    }

    pub fn same(&self, x: usize, y: usize) -> bool {
        self.leader[x] == self.leader[y]
    }

    pub fn is_identity(&self) -> bool {
        self.leader.iter().enumerate().all(|(x, &l)| l == x)
    }

    pub fn is_universal(&self) -> bool {
        self.leader.iter().all(|&l| l == 0)
    }

    /// Blocks as sorted lists, ordered by least element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut index_of_leader = vec![usize::MAX; self.carrier()];
        for (x, &l) in self.leader.iter().enumerate() {
            if index_of_leader[l] == usize::MAX {
                index_of_leader[l] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[index_of_leader[l]].push(x);
        }
        blocks
    }

    pub fn block_count(&self) -> usize {
        self.leader.iter().enumerate().filter(|&(x, &l)| l == x).count()
    }

    /// True when every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.carrier() == coarser.carrier()
            && self.leader.iter().enumerate().all(|(x, &l)| coarser.same(x, l))
    }

    /// The least upper bound: union the blocks and re-close transitively.
    pub fn join(&self, other: &Partition) -> Result<Partition, CarrierMismatch> {
        check_carriers(self, other)?;
        let mut uf = UnionFind::new(self.carrier());
        for (x, &l) in self.leader.iter().enumerate() {
            uf.union(x, l);
        }
        for (x, &l) in other.leader.iter().enumerate() {
            uf.union(x, l);
        }
        Ok(uf.into_partition())
    }

    /// The greatest lower bound: blocks are intersections of blocks.
    pub fn meet(&self, other: &Partition) -> Result<Partition, CarrierMismatch> {
        check_carriers(self, other)?;
        let n = self.carrier();
        let mut leader = vec![usize::MAX; n];
        for x in 0..n {
            if leader[x] != usize::MAX {
                continue;
            }
            for y in x..n {
                if self.same(x, y) && other.same(x, y) && leader[y] == usize::MAX {
                    leader[y] = x;
                }
            }
        }
        Ok(Partition { leader })
    }

    /// Restriction to a sorted list of carrier points, re-indexed to
    /// `0..points.len()`.
    pub fn restrict(&self, points: &[usize]) -> Partition {
        let labels: Vec<usize> = points.iter().map(|&x| self.leader[x]).collect();
        Partition::from_labels(&labels)
    }

    /// The relation `{(x, y) : x ~ y}` as a bit matrix.
    pub fn to_relation(&self) -> BitRelation {
        let n = self.carrier();
        let mut rel = BitRelation::empty(n);
        for x in 0..n {
            for y in 0..n {
                if self.same(x, y) {
                    rel.insert(x, y);
                }
            }
        }
        rel
    }
}

impl fmt::Display for Partition {
    /// Serialized as `{{0,2},{1},{3}}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, block) in self.blocks().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (j, x) in block.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

fn check_carriers(p: &Partition, q: &Partition) -> Result<(), CarrierMismatch> {
    if p.carrier() == q.carrier() {
        Ok(())
    } else {
        Err(CarrierMismatch { left: p.carrier(), right: q.carrier() })
    }
}

/// Plain union-find; normalized to least-member leaders on extraction.
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while cur != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Merges the classes of `x` and `y`; the smaller root wins so leaders
    /// stay least members.
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
        self.parent[hi] = lo;
        true
    }

    pub fn same(&mut self, x: usize, y: usize) -> bool {
        self.find(x) == self.find(y)
    }

    pub fn into_partition(mut self) -> Partition {
        let n = self.parent.len();
        let leader = (0..n).map(|x| self.find(x)).collect();
        Partition { leader }
    }
}

/// Iterates every partition of `{0, .., n-1}` in canonical order via
/// restricted growth strings: `a[0] = 0` and `a[i] <= max(a[..i]) + 1`.
pub fn all_partitions(n: usize) -> AllPartitions {
    AllPartitions { labels: vec![0; n], max_prefix: vec![0; n], done: false }
}

pub struct AllPartitions {
    labels: Vec<usize>,
    // max_prefix[i] = max(labels[..=i]), maintained incrementally
    max_prefix: Vec<usize>,
    done: bool,
}

impl Iterator for AllPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let current = Partition::from_labels(&self.labels);
        let n = self.labels.len();
        // Advance to the next restricted growth string.
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.labels[i] <= self.max_prefix[i - 1] {
                self.labels[i] += 1;
                self.max_prefix[i] = self.max_prefix[i - 1].max(self.labels[i]);
                for j in i + 1..n {
                    self.labels[j] = 0;
                    self.max_prefix[j] = self.max_prefix[i];
                }
                break;
            }
        }
        Some(current)
    }
}

/// A binary relation on `{0, .., n-1}` as a row-major bit matrix (n <= 64).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitRelation {
    n: usize,
    rows: Vec<u64>,
}

impl BitRelation {
    pub fn empty(n: usize) -> BitRelation {
        debug_assert!(n <= 64);
        BitRelation { n, rows: vec![0; n] }
    }

    pub fn carrier(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, x: usize, y: usize) {
        self.rows[x] |= 1 << y;
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x] >> y & 1 == 1
    }

    /// Ordered pairs, lexicographically.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |x| {
            (0..self.n).filter_map(move |y| self.contains(x, y).then_some((x, y)))
        })
    }

    /// The least pair present in `self` but not in `other`.
    pub fn least_pair_not_in(&self, other: &BitRelation) -> Option<(usize, usize)> {
        for x in 0..self.n {
            let diff = self.rows[x] & !other.rows[x];
            if diff != 0 {
                return Some((x, diff.trailing_zeros() as usize));
            }
        }
        None
    }
}

/// Relational composition of two partitions:
/// `(x, z) ∈ compose(p, q)` iff some `y` has `x ~p y` and `y ~q z`.
pub fn compose(p: &Partition, q: &Partition) -> Result<BitRelation, CarrierMismatch> {
    check_carriers(p, q)?;
    let n = p.carrier();
    // q-block masks keyed by leader
    let mut q_mask = vec![0u64; n];
    for y in 0..n {
        q_mask[q.leader_of(y)] |= 1 << y;
    }
    // union the q-blocks met by each p-block, keyed by p-leader
    let mut row_for_leader = vec![0u64; n];
    for y in 0..n {
        row_for_leader[p.leader_of(y)] |= q_mask[q.leader_of(y)];
    }
    let mut rel = BitRelation::empty(n);
    for x in 0..n {
        rel.rows[x] = row_for_leader[p.leader_of(x)];
    }
    Ok(rel)
}
