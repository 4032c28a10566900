//! Size approximation: at most `(1+ε)k` centers at radius no larger than the
//! optimum for `k` centers.
//!
//! A center set covers within `r` exactly when it hits every object inflated by
//! `r`. The inflated disks form pseudo-disks, where local search gives a good
//! hitting set, and a binary search over canonical radii picks the radius.

use crate::canonical::canonical_candidates;
use crate::cover::{set_cover, Bitset};
use crate::error::{Error, Result};
use crate::geometry::{check_disjoint_balls, hits, Ball, ConvexObject, Point};
use crate::instance::{disks_to_objects, Solution};

/// Default swap size for local search.
pub const DEFAULT_SWAP: usize = 3;

/// An object grown by `radius`: the points within `radius` of it.
#[derive(Debug, Clone, PartialEq)]
pub struct InflatedRegion {
    pub base: ConvexObject,
    pub radius: f64,
}

impl InflatedRegion {
    pub fn new(base: ConvexObject, radius: f64) -> Self {
        InflatedRegion { base, radius }
    }

    pub fn contains(&self, p: &Point) -> bool {
        hits(p, &self.base, self.radius)
    }
}

/// Hitting set drawn from `candidates` that no swap of at most `swap` of its
/// points for fewer candidates can shrink. Starts from the greedy set.
pub fn hitting_set_local_search(regions: &[InflatedRegion], candidates: &[Point], swap: usize) -> Result<Vec<Point>> {
    let idx = local_search_indices(regions, candidates, swap)?;
    Ok(idx.into_iter().map(|i| candidates[i].clone()).collect())
}

fn hit_masks(regions: &[InflatedRegion], candidates: &[Point]) -> Vec<Bitset> {
    candidates
        .iter()
        .map(|p| {
            let mut m = Bitset::new(regions.len());
            for (r, region) in regions.iter().enumerate() {
                if region.contains(p) {
                    m.insert(r);
                }
            }
            m
        })
        .collect()
}

pub(crate) fn greedy_indices(masks: &[Bitset], regions: usize) -> Vec<usize> {
    let mut hit = Bitset::new(regions);
    let mut chosen = Vec::new();
    while hit.count() < regions {
        let (best, _) = masks
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let mut gain = m.clone();
                gain.union_with(&hit);
                (i, gain.count())
            })
            .fold((usize::MAX, 0), |acc, (i, c)| if c > acc.1 { (i, c) } else { acc });
        hit.union_with(&masks[best]);
        chosen.push(best);
    }
    chosen
}

fn local_search_indices(regions: &[InflatedRegion], candidates: &[Point], swap: usize) -> Result<Vec<usize>> {
    if swap == 0 {
        return Err(Error::InvalidParameter("swap size must be at least 1".into()));
    }
    let masks = hit_masks(regions, candidates);
    let mut any = Bitset::new(regions.len());
    for m in &masks {
        any.union_with(m);
    }
    if let Some(r) = (0..regions.len()).find(|&r| !any.contains(r)) {
        return Err(Error::UnhitRegion(r));
    }
    let mut current = greedy_indices(&masks, regions.len());
    while let Some(better) = improve(&masks, regions.len(), &current, swap) {
        current = better;
    }
    current.sort_unstable();
    Ok(current)
}

/// One improving swap, if any: drop a subset of at most `swap` points and
/// re-hit what they alone hit with fewer candidates.
fn improve(masks: &[Bitset], regions: usize, current: &[usize], swap: usize) -> Option<Vec<usize>> {
    let mut subset = Vec::new();
    for size in 1..=swap.min(current.len()) {
        if let Some(better) = try_subsets(masks, regions, current, size, 0, &mut subset) {
            return Some(better);
        }
    }
    None
}

fn try_subsets(
    masks: &[Bitset],
    regions: usize,
    current: &[usize],
    size: usize,
    start: usize,
    subset: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if subset.len() == size {
        let mut kept = Bitset::new(regions);
        for (pos, &c) in current.iter().enumerate() {
            if !subset.contains(&pos) {
                kept.union_with(&masks[c]);
            }
        }
        let orphans: Vec<usize> = (0..regions).filter(|&r| !kept.contains(r)).collect();
        let restricted = masks.iter().map(|m| {
            let mut out = Bitset::new(orphans.len());
            for (o, &r) in orphans.iter().enumerate() {
                if m.contains(r) {
                    out.insert(o);
                }
            }
            out
        });
        let fill = set_cover(restricted, orphans.len(), size - 1)?;
        let mut next: Vec<usize> =
            current.iter().enumerate().filter(|(pos, _)| !subset.contains(pos)).map(|(_, &c)| c).collect();
        next.extend(fill);
        return Some(next);
    }
    for pos in start..current.len() {
        subset.push(pos);
        if let Some(found) = try_subsets(masks, regions, current, size, pos + 1, subset) {
            return Some(found);
        }
        subset.pop();
    }
    None
}

/// Infinitesimal growth that turns tangencies between inflated disks into
/// proper overlaps without reaching the next distinct configuration: a
/// quarter of the smallest gap above `1e-9` (smaller ones are rounding noise
/// around a tangency), capped at a relative `1e-10`.
pub fn perturbation(disks: &[Ball], r: f64) -> f64 {
    let mut d_min = f64::INFINITY;
    for i in 0..disks.len() {
        for j in i + 1..disks.len() {
            let d = disks[i].signed_gap(&disks[j]) - 2.0 * r;
            if d > 1e-9 * r.max(1.0) {
                d_min = d_min.min(d);
            }
        }
    }
    (d_min / 4.0).min(1e-10 * r.max(1.0))
}

/// At most `(1+ε)k` centers covering every disk within the optimal radius for
/// `k` centers (with swap size `swap` for the local search).
pub fn solve_size(disks: &[Ball], k: usize, epsilon: f64, swap: usize) -> Result<Solution> {
    const ALG: &str = "size-ptas";
    if !(epsilon > 0.0) {
        return Err(Error::InvalidParameter(format!("epsilon must be positive, got {epsilon}")));
    }
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    check_disjoint_balls(disks)?;
    if k >= disks.len() {
        return Solution::for_balls(disks, disks.iter().map(|d| d.center.clone()).collect(), ALG, 0);
    }
    let sets = canonical_candidates(disks)?;
    let candidates: Vec<Point> = sets.points.into_iter().map(|c| c.point).collect();
    let objects = disks_to_objects(disks);
    let budget = (1.0 + epsilon) * k as f64;
    let mut runs = 0;
    let mut attempt = |r: f64| -> Result<Option<Vec<usize>>> {
        runs += 1;
        let grown = r + perturbation(disks, r);
        let regions: Vec<InflatedRegion> = objects.iter().map(|o| InflatedRegion::new(o.clone(), grown)).collect();
        match local_search_indices(&regions, &candidates, swap) {
            Ok(h) if h.len() as f64 <= budget => Ok(Some(h)),
            Ok(_) | Err(Error::UnhitRegion(_)) => Ok(None),
            Err(e) => Err(e),
        }
    };
    let radii = &sets.radii;
    // Invariant: lo fails the size budget (or is -1); hi meets it (or is the
    // untested top).
    let (mut lo, mut hi): (isize, usize) = (-1, radii.len() - 1);
    let mut best = None;
    while hi as isize - lo > 1 {
        let mid = ((lo + hi as isize) / 2) as usize;
        match attempt(radii[mid])? {
            Some(h) => {
                hi = mid;
                best = Some(h);
            }
            None => lo = mid as isize,
        }
    }
    let chosen = match best {
        Some(h) => h,
        None => match attempt(radii[hi])? {
            Some(h) => h,
            None => {
                return Err(Error::InvalidParameter(format!(
                    "local search with swap size {swap} found no hitting set within {budget} points"
                )))
            }
        },
    };
    let centers = chosen.into_iter().map(|i| candidates[i].clone()).collect();
    Solution::evaluate(&objects, centers, ALG, runs)
}
