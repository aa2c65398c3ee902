//! Brute-force enumeration of small posets, used as an independent check
//! on the generating-function counts.
//!
//! Everything here works by exhaustion over explicit strict-order relations
//! on `{0, .., n-1}` and is deliberately limited to very small n (the
//! labelled poset count is already 4231 at n = 5). The rest of the crate
//! never calls into this module to *produce* counts — only to cross-check
//! them.

use std::collections::{BTreeMap, HashSet};

use thiserror::Error;

/// Hard cap on the ground-set size accepted by the enumeration routines.
pub const MAX_ORACLE_POINTS: usize = 5;

/// Errors from the exhaustive enumerator.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    /// Requested ground set exceeds [`MAX_ORACLE_POINTS`].
    #[error("oracle supports at most {MAX_ORACLE_POINTS} points, got {0}")]
    TooManyPoints(usize),
}

/// A strict partial order on `{0, .., n-1}`, stored as a dense relation
/// matrix: `rel[x*n + y]` means `x < y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    rel: Vec<bool>,
}

impl Poset {
    /// Wraps a relation matrix, checking irreflexivity and transitivity
    /// (together these force antisymmetry).
    pub fn new(n: usize, rel: Vec<bool>) -> Self {
        assert_eq!(rel.len(), n * n);
        for x in 0..n {
            assert!(!rel[x * n + x], "relation must be irreflexive");
            for y in 0..n {
                if rel[x * n + y] {
                    assert!(!rel[y * n + x], "relation must be antisymmetric");
                    for z in 0..n {
                        if rel[y * n + z] {
                            assert!(rel[x * n + z], "relation must be transitive");
                        }
                    }
                }
            }
        }
        Poset { n, rel }
    }

    /// Ground-set size.
    pub fn len(&self) -> usize {
        self.n
    }

    /// Whether the ground set is empty.
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Strict comparability `x < y`.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.rel[x * self.n + y]
    }

    /// Bitmask of the strict down-set `{y : y < x}`.
    pub fn down_set(&self, x: usize) -> u32 {
        let mut mask = 0u32;
        for y in 0..self.n {
            if self.lt(y, x) {
                mask |= 1 << y;
            }
        }
        mask
    }

    /// Bitmask of the strict up-set `{y : x < y}`.
    pub fn up_set(&self, x: usize) -> u32 {
        let mut mask = 0u32;
        for y in 0..self.n {
            if self.lt(x, y) {
                mask |= 1 << y;
            }
        }
        mask
    }

    /// Sizes of the classes of points sharing both their down-set and
    /// their up-set ("duplicated holdings" classes).
    pub fn holdings_class_sizes(&self) -> Vec<usize> {
        let mut classes: BTreeMap<(u32, u32), usize> = BTreeMap::new();
        for x in 0..self.n {
            *classes.entry((self.down_set(x), self.up_set(x))).or_insert(0) += 1;
        }
        classes.into_values().collect()
    }

    /// Number of unordered pairs `{x, y}` with identical down-sets and
    /// identical up-sets.
    pub fn duplicated_pair_count(&self) -> usize {
        self.holdings_class_sizes()
            .into_iter()
            .map(|c| c * (c - 1) / 2)
            .sum()
    }

    /// Whether the order is an interval order: the down-sets must form a
    /// chain under inclusion. (Equivalently no induced 2+2; the up-sets
    /// then chain as well, which is asserted as a sanity check.)
    pub fn is_interval_order(&self) -> bool {
        let chains = |sets: &[u32]| {
            let mut sorted = sets.to_vec();
            sorted.sort_by_key(|m| m.count_ones());
            sorted.windows(2).all(|w| w[0] & !w[1] == 0)
        };
        let downs: Vec<u32> = (0..self.n).map(|x| self.down_set(x)).collect();
        let ups: Vec<u32> = (0..self.n).map(|x| self.up_set(x)).collect();
        let by_down = chains(&downs);
        assert_eq!(by_down, chains(&ups));
        by_down
    }

    /// Number of permutations of the ground set preserving the relation.
    pub fn automorphism_count(&self) -> usize {
        let mut count = 0;
        let mut perm: Vec<usize> = (0..self.n).collect();
        permute(&mut perm, 0, &mut |p| {
            if self.respects(p) {
                count += 1;
            }
        });
        count
    }

    fn respects(&self, perm: &[usize]) -> bool {
        for x in 0..self.n {
            for y in 0..self.n {
                if self.lt(x, y) != self.lt(perm[x], perm[y]) {
                    return false;
                }
            }
        }
        true
    }

    /// Relation matrix packed into a u64, row-major (`n ≤ 8`).
    fn packed(&self, perm: &[usize]) -> u64 {
        let mut bits = 0u64;
        for x in 0..self.n {
            for y in 0..self.n {
                if self.lt(perm[x], perm[y]) {
                    bits |= 1 << (x * self.n + y);
                }
            }
        }
        bits
    }

    /// Lexicographically minimal packed relation matrix over all
    /// relabelings — equal exactly for isomorphic posets.
    pub fn canonical_form(&self) -> u64 {
        let mut best = u64::MAX;
        let mut perm: Vec<usize> = (0..self.n).collect();
        permute(&mut perm, 0, &mut |p| {
            // p maps new labels to old; packed() reads through it.
            let packed = self.packed(p);
            if packed < best {
                best = packed;
            }
        });
        best
    }
}

/// Heap-style in-place permutation visitor.
fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Every labelled poset on `{0, .., n-1}`, built by extension: point m is
/// added to each poset on m points by choosing a down-closed set D of
/// predecessors and an up-closed set U of successors with `D × U` already
/// related.
pub fn enumerate_posets(n: usize) -> Result<Vec<Poset>, OracleError> {
    if n > MAX_ORACLE_POINTS {
        return Err(OracleError::TooManyPoints(n));
    }
    let mut current = vec![Poset::new(0, Vec::new())];
    for m in 0..n {
        let mut next = Vec::new();
        for p in &current {
            extend_poset(p, m, &mut next);
        }
        current = next;
    }
    Ok(current)
}

/// All extensions of an m-point poset by a new maximal-index point.
fn extend_poset(p: &Poset, m: usize, out: &mut Vec<Poset>) {
    let full = (1u32 << m) - 1;
    for down in 0..=full {
        if !is_down_closed(p, down) {
            continue;
        }
        // U must avoid D and everything below D, i.e. avoid D itself
        // (down-closure already pulls the rest in).
        let mut up = full & !down;
        loop {
            if is_up_closed(p, up) && dominates(p, down, up) {
                out.push(adjoin(p, m, down, up));
            }
            if up == 0 {
                break;
            }
            up = (up - 1) & (full & !down);
        }
    }
}

fn is_down_closed(p: &Poset, mask: u32) -> bool {
    for x in 0..p.n {
        if mask & (1 << x) != 0 && p.down_set(x) & !mask != 0 {
            return false;
        }
    }
    true
}

fn is_up_closed(p: &Poset, mask: u32) -> bool {
    for x in 0..p.n {
        if mask & (1 << x) != 0 && p.up_set(x) & !mask != 0 {
            return false;
        }
    }
    true
}

/// Whether every point of `down` is already below every point of `up`,
/// so that inserting the new point between them keeps transitivity.
fn dominates(p: &Poset, down: u32, up: u32) -> bool {
    for x in 0..p.n {
        if down & (1 << x) == 0 {
            continue;
        }
        for y in 0..p.n {
            if up & (1 << y) != 0 && !p.lt(x, y) {
                return false;
            }
        }
    }
    true
}

fn adjoin(p: &Poset, m: usize, down: u32, up: u32) -> Poset {
    let n = m + 1;
    let mut rel = vec![false; n * n];
    for x in 0..m {
        for y in 0..m {
            rel[x * n + y] = p.lt(x, y);
        }
        if down & (1 << x) != 0 {
            rel[x * n + m] = true;
        }
        if up & (1 << x) != 0 {
            rel[m * n + x] = true;
        }
    }
    Poset::new(n, rel)
}

/// Aggregate counts from one exhaustive sweep over all posets on n points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    /// Labelled posets that are interval orders.
    pub labelled_interval: u64,
    /// Isomorphism classes of interval orders.
    pub unlabelled_interval: u64,
    /// Isomorphism classes with no duplicated-holdings pair.
    pub rigid_unlabelled: u64,
    /// Isomorphism classes keyed by their duplicated-holdings pair count.
    pub pair_histogram: BTreeMap<usize, u64>,
}

/// Enumerates all posets on n points and tallies the interval orders,
/// labelled and up to isomorphism, plus the duplicated-pair histogram
/// over isomorphism classes.
pub fn oracle_census(n: usize) -> Result<Census, OracleError> {
    let posets = enumerate_posets(n)?;
    let mut labelled = 0u64;
    let mut seen: HashSet<u64> = HashSet::new();
    let mut rigid = 0u64;
    let mut histogram: BTreeMap<usize, u64> = BTreeMap::new();
    for p in &posets {
        if !p.is_interval_order() {
            continue;
        }
        labelled += 1;
        if seen.insert(p.canonical_form()) {
            let pairs = p.duplicated_pair_count();
            *histogram.entry(pairs).or_insert(0) += 1;
            if pairs == 0 {
                rigid += 1;
            }
        }
    }
    Ok(Census {
        labelled_interval: labelled,
        unlabelled_interval: seen.len() as u64,
        rigid_unlabelled: rigid,
        pair_histogram: histogram,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> Poset {
        let mut rel = vec![false; n * n];
        for x in 0..n {
            for y in x + 1..n {
                rel[x * n + y] = true;
            }
        }
        Poset::new(n, rel)
    }

    fn antichain(n: usize) -> Poset {
        Poset::new(n, vec![false; n * n])
    }

    #[test]
    fn poset_counts_match_known_sequence() {
        // 1, 1, 3, 19, 219 labelled posets on 0..=4 points.
        for (n, want) in [(0usize, 1usize), (1, 1), (2, 3), (3, 19), (4, 219)] {
            assert_eq!(enumerate_posets(n).unwrap().len(), want);
        }
    }

    #[test]
    fn size_cap_enforced() {
        assert_eq!(enumerate_posets(6), Err(OracleError::TooManyPoints(6)));
        assert!(enumerate_posets(5).is_ok());
    }

    #[test]
    fn unlabelled_posets_on_four_points() {
        let posets = enumerate_posets(4).unwrap();
        let classes: HashSet<u64> = posets.iter().map(|p| p.canonical_form()).collect();
        assert_eq!(classes.len(), 16);
    }

    #[test]
    fn two_plus_two_is_not_an_interval_order() {
        // Two disjoint 2-chains: 0 < 1 and 2 < 3.
        let n = 4;
        let mut rel = vec![false; n * n];
        rel[1] = true; // 0 < 1
        rel[2 * n + 3] = true; // 2 < 3
        let p = Poset::new(n, rel);
        assert!(!p.is_interval_order());
        // Merging the chains at the bottom (0 < 1, 0 < 3, 2 < 3) fixes it.
        let mut rel = vec![false; n * n];
        rel[1] = true;
        rel[3] = true;
        rel[2 * n + 3] = true;
        assert!(Poset::new(n, rel).is_interval_order());
    }

    #[test]
    fn chains_and_fences_classified() {
        assert!(chain(4).is_interval_order());
        assert!(antichain(4).is_interval_order());
        // V shape: 0 < 1, 0 < 2.
        let mut rel = vec![false; 9];
        rel[1] = true;
        rel[2] = true;
        assert!(Poset::new(3, rel).is_interval_order());
    }

    #[test]
    fn duplicated_pairs_on_small_examples() {
        // All points of an antichain share (∅, ∅): C(3,2) pairs.
        assert_eq!(antichain(3).duplicated_pair_count(), 3);
        assert_eq!(antichain(3).holdings_class_sizes(), vec![3]);
        // Chain points are pairwise distinguishable.
        assert_eq!(chain(4).duplicated_pair_count(), 0);
        // V shape: the two maxima are duplicated.
        let mut rel = vec![false; 9];
        rel[1] = true;
        rel[2] = true;
        assert_eq!(Poset::new(3, rel).duplicated_pair_count(), 1);
    }

    #[test]
    fn rigidity_is_trivial_automorphism_group_for_interval_orders() {
        for n in 1..=4 {
            let posets = enumerate_posets(n).unwrap();
            let mut seen = HashSet::new();
            for p in posets {
                if !p.is_interval_order() || !seen.insert(p.canonical_form()) {
                    continue;
                }
                assert_eq!(
                    p.duplicated_pair_count() == 0,
                    p.automorphism_count() == 1
                );
            }
        }
    }

    #[test]
    fn census_on_three_points() {
        let c = oracle_census(3).unwrap();
        assert_eq!(c.labelled_interval, 19);
        assert_eq!(c.unlabelled_interval, 5);
        assert_eq!(c.rigid_unlabelled, 2);
        let hist: Vec<(usize, u64)> = c.pair_histogram.into_iter().collect();
        assert_eq!(hist, vec![(0, 2), (1, 2), (3, 1)]);
    }

    #[test]
    fn census_on_trivial_sizes() {
        let c0 = oracle_census(0).unwrap();
        assert_eq!(c0.labelled_interval, 1);
        assert_eq!(c0.unlabelled_interval, 1);
        assert_eq!(c0.rigid_unlabelled, 1);
        let c1 = oracle_census(1).unwrap();
        assert_eq!(c1.labelled_interval, 1);
        assert_eq!(c1.unlabelled_interval, 1);
        assert_eq!(c1.rigid_unlabelled, 1);
        assert_eq!(c1.pair_histogram.get(&0), Some(&1));
    }

    #[test]
    fn canonical_form_is_isomorphism_invariant() {
        // The two labelings of a 2-chain collapse to one form; the
        // antichain stays distinct.
        let mut rel = vec![false; 4];
        rel[1] = true; // 0 < 1
        let a = Poset::new(2, rel);
        let mut rel = vec![false; 4];
        rel[2] = true; // 1 < 0
        let b = Poset::new(2, rel);
        assert_eq!(a.canonical_form(), b.canonical_form());
        assert_ne!(a.canonical_form(), antichain(2).canonical_form());
    }

    #[test]
    #[should_panic(expected = "transitive")]
    fn rejects_intransitive_relation() {
        let n = 3;
        let mut rel = vec![false; n * n];
        rel[1] = true; // 0 < 1
        rel[n + 2] = true; // 1 < 2, but 0 < 2 missing
        Poset::new(n, rel);
    }
}
