//! The `(5+2√3)`-decider for disjoint disks (and balls in any dimension).
//!
//! Given a query radius `r`, either returns at most `k` centers covering every
//! disk within `(5+2√3)·r`, or reports that `r` is below the optimum.

mod matching;

use std::ops::Range;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{check_disjoint_balls, Ball, Point, DECIDER_FACTOR, EPS, PACKING_FACTOR, SMALL_DISK_FACTOR};

pub use matching::{maximum_matching, min_edge_cover, ProximityGraph};

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum DeciderVerdict {
    Cover {
        centers: Vec<Point>,
        /// Index ranges into `centers` for the sweep, isolated and paired
        /// phases, in that order.
        parts: [Range<usize>; 3],
    },
    Infeasible,
}

impl DeciderVerdict {
    pub fn is_cover(&self) -> bool {
        matches!(self, DeciderVerdict::Cover { .. })
    }

    pub fn centers(&self) -> Option<&[Point]> {
        match self {
            DeciderVerdict::Cover { centers, .. } => Some(centers),
            DeciderVerdict::Infeasible => None,
        }
    }
}

/// True iff at least three of `disks` come within `(2/√3 - 1)·r` of `s`.
/// For disjoint disks of radius at least `r` this never happens.
pub fn packing_admits_three(disks: &[Ball], s: &Point, r: f64) -> bool {
    disks.iter().filter(|d| d.dist_to_point(s) <= PACKING_FACTOR * r).count() >= 3
}

fn slack(r: f64) -> f64 {
    EPS * r.max(1.0)
}

/// Runs the decider at radius `r > 0` with budget `k`.
pub fn decide(disks: &[Ball], k: usize, r: f64) -> Result<DeciderVerdict> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::InvalidParameter(format!("query radius must be positive, got {r}")));
    }
    if let Some(first) = disks.first() {
        let dim = first.dim();
        if let Some(d) = disks.iter().find(|d| d.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, got: d.dim() });
        }
    }
    check_disjoint_balls(disks)?;
    Ok(decide_unchecked(disks, k, r))
}

/// `decide` without input validation, for callers that probe many radii on
/// one validated instance.
pub(crate) fn decide_unchecked(disks: &[Ball], k: usize, r: f64) -> DeciderVerdict {
    let n = disks.len();
    let tol = slack(r);
    let mut alive = vec![true; n];
    let mut centers = Vec::new();

    // Sweep from the centers of small disks.
    let reach = DECIDER_FACTOR * r + tol;
    for p in 0..n {
        if !alive[p] || disks[p].radius >= SMALL_DISK_FACTOR * r {
            continue;
        }
        let c = &disks[p].center;
        for (i, d) in disks.iter().enumerate() {
            if alive[i] && d.dist_to_point(c) <= reach {
                alive[i] = false;
            }
        }
        centers.push(c.clone());
        if centers.len() > k {
            return DeciderVerdict::Infeasible;
        }
    }
    let swept = 0..centers.len();

    let survivors: Vec<usize> = (0..n).filter(|&i| alive[i]).collect();
    let pair_reach = 2.0 * r + tol;
    let mut edges = Vec::new();
    let mut has_neighbor = vec![false; survivors.len()];
    for a in 0..survivors.len() {
        for b in a + 1..survivors.len() {
            if disks[survivors[a]].dist_to_ball(&disks[survivors[b]]) <= pair_reach {
                edges.push((a, b));
                has_neighbor[a] = true;
                has_neighbor[b] = true;
            }
        }
    }

    for (a, &i) in survivors.iter().enumerate() {
        if !has_neighbor[a] {
            centers.push(disks[i].center.clone());
        }
    }
    let isolated = swept.end..centers.len();
    if centers.len() > k {
        return DeciderVerdict::Infeasible;
    }

    let mut local = vec![usize::MAX; survivors.len()];
    let mut labels = Vec::new();
    for a in 0..survivors.len() {
        if has_neighbor[a] {
            local[a] = labels.len();
            labels.push(survivors[a]);
        }
    }
    let graph = ProximityGraph::with_labels(labels, edges.into_iter().map(|(a, b)| (local[a], local[b])));
    let cover = min_edge_cover(&graph).expect("every vertex has a neighbor");
    for (u, v) in cover {
        let (cu, cv) = (&disks[graph.labels[u]], &disks[graph.labels[v]]);
        centers.push(cu.gap_midpoint(cv));
    }
    let paired = isolated.end..centers.len();
    if centers.len() > k {
        return DeciderVerdict::Infeasible;
    }
    DeciderVerdict::Cover { centers, parts: [swept, isolated, paired] }
}
