//! Exact "can `k` candidates cover every object within radius `r`" search.
//!
//! Shared by the exhaustive solvers (the small-instance branch of the unit
//! disk FPTAS, the point k-center subroutine, local-search swaps, oracles).
//! Candidates with identical coverage are merged, then the search branches on
//! the uncovered object with the fewest covering candidates.

use std::collections::HashSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Bitset {
    words: Vec<u64>,
}

impl Bitset {
    pub fn new(len: usize) -> Self {
        Bitset { words: vec![0; len.div_ceil(64)] }
    }

    pub fn full(len: usize) -> Self {
        let mut b = Self::new(len);
        for i in 0..len {
            b.insert(i);
        }
        b
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn union_with(&mut self, other: &Bitset) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_superset(&self, other: &Bitset) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == *b)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Distances from each candidate (row) to each object (column).
#[derive(Debug, Clone)]
pub(crate) struct DistTable {
    pub rows: Vec<Vec<f64>>,
    pub objects: usize,
}

impl DistTable {
    pub fn new(rows: Vec<Vec<f64>>, objects: usize) -> Self {
        DistTable { rows, objects }
    }

    /// Every entry, sorted and deduplicated; the radius of any center set
    /// drawn from the rows is one of these.
    pub fn all_values(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.rows.iter().flatten().copied().collect();
        v.sort_by(f64::total_cmp);
        v.dedup();
        v
    }

    /// Indices of at most `k` rows covering every object within `r`, if any.
    pub fn find_cover(&self, r: f64, k: usize) -> Option<Vec<usize>> {
        let masks = self.rows.iter().map(|row| {
            let mut m = Bitset::new(self.objects);
            for (o, &d) in row.iter().enumerate() {
                if d <= r {
                    m.insert(o);
                }
            }
            m
        });
        set_cover(masks, self.objects, k)
    }

    /// Smallest value of `radii` (ascending) at which `k` rows cover
    /// everything within `value + slack`, with the covering rows.
    pub fn min_cover_over(&self, radii: &[f64], k: usize, slack: f64) -> Option<(f64, Vec<usize>)> {
        let (mut lo, mut hi) = (0usize, radii.len());
        let mut best = None;
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            match self.find_cover(radii[mid] + slack, k) {
                Some(c) => {
                    best = Some((radii[mid], c));
                    hi = mid;
                }
                None => lo = mid + 1,
            }
        }
        best
    }

    /// Exact minimum radius of `k` rows.
    pub fn min_radius(&self, k: usize) -> Option<(f64, Vec<usize>)> {
        self.min_cover_over(&self.all_values(), k, 0.0)
    }
}

/// Indices of at most `k` sets whose union is `0..universe`, if any.
pub(crate) fn set_cover(sets: impl IntoIterator<Item = Bitset>, universe: usize, k: usize) -> Option<Vec<usize>> {
    if universe == 0 {
        return Some(Vec::new());
    }
    let mut seen: HashSet<Bitset> = HashSet::new();
    let mut masks: Vec<(Bitset, usize)> = Vec::new();
    for (idx, m) in sets.into_iter().enumerate() {
        if m.count() > 0 && seen.insert(m.clone()) {
            masks.push((m, idx));
        }
    }
    let mut covering: Vec<Vec<usize>> = vec![Vec::new(); universe];
    for (mi, (m, _)) in masks.iter().enumerate() {
        for (o, list) in covering.iter_mut().enumerate() {
            if m.contains(o) {
                list.push(mi);
            }
        }
    }
    if covering.iter().any(Vec::is_empty) {
        return None;
    }
    let full = Bitset::full(universe);
    let mut chosen = Vec::new();
    if search(&masks, &covering, &full, Bitset::new(universe), k, &mut chosen) {
        Some(chosen.into_iter().map(|mi| masks[mi].1).collect())
    } else {
        None
    }
}

fn search(
    masks: &[(Bitset, usize)],
    covering: &[Vec<usize>],
    full: &Bitset,
    covered: Bitset,
    budget: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if covered.is_superset(full) {
        return true;
    }
    if budget == 0 {
        return false;
    }
    let pivot = (0..covering.len())
        .filter(|&o| !covered.contains(o))
        .min_by_key(|&o| covering[o].len())
        .expect("something is uncovered");
    for &mi in &covering[pivot] {
        let mut next = covered.clone();
        next.union_with(&masks[mi].0);
        chosen.push(mi);
        if search(masks, covering, full, next, budget - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn brute(table: &DistTable, k: usize) -> f64 {
        let m = table.rows.len();
        let mut best = f64::INFINITY;
        let mut idx = vec![0usize; k];
        fn rec(t: &DistTable, start: usize, depth: usize, idx: &mut Vec<usize>, best: &mut f64, m: usize) {
            if depth == idx.len() {
                let r = (0..t.objects)
                    .map(|o| idx.iter().map(|&c| t.rows[c][o]).fold(f64::INFINITY, f64::min))
                    .fold(0.0, f64::max);
                *best = best.min(r);
                return;
            }
            for c in start..m {
                idx[depth] = c;
                rec(t, c + 1, depth + 1, idx, best, m);
            }
        }
        rec(table, 0, 0, &mut idx, &mut best, m);
        best
    }

    #[test]
    fn agrees_with_subset_enumeration() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let m = rng.random_range(2..12);
            let n = rng.random_range(1..9);
            let k = rng.random_range(1..=m.min(3));
            let rows: Vec<Vec<f64>> =
                (0..m).map(|_| (0..n).map(|_| rng.random_range(0..20) as f64).collect()).collect();
            let table = DistTable::new(rows, n);
            let (r, chosen) = table.min_radius(k).unwrap();
            assert_eq!(r, brute(&table, k));
            assert!(chosen.len() <= k);
        }
    }

    #[test]
    fn bitset_ops() {
        let mut a = Bitset::new(130);
        a.insert(0);
        a.insert(129);
        let mut b = Bitset::new(130);
        b.insert(64);
        assert!(!a.is_superset(&b));
        a.union_with(&b);
        assert!(a.is_superset(&b));
        assert_eq!(a.count(), 3);
        assert_eq!(Bitset::full(130).count(), 130);
    }
}
