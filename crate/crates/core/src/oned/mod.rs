//! Exact k-center for intervals on the line (intersections allowed).
//!
//! The greedy sweep decides a radius exactly in linear time after sorting, and
//! the optimum is zero or half the distance between two endpoints, so a sorted
//! matrix search over endpoint differences needs only logarithmically many
//! sweeps.

mod matrix;

pub use matrix::{build_sorted_matrix, msearch, SearchOutcome, SortedMatrix};

use crate::error::{Error, Result};
use crate::geometry::{ConvexObject, Interval, Point};
use crate::instance::Solution;

/// Intervals with both endpoint orders precomputed.
#[derive(Debug, Clone)]
pub struct IntervalSet {
    intervals: Vec<Interval>,
    by_left: Vec<usize>,
    by_right: Vec<usize>,
    /// Position of each interval in `by_left`.
    left_rank: Vec<usize>,
    /// Position of each interval in `by_right`.
    right_rank: Vec<usize>,
}

impl IntervalSet {
    pub fn new(intervals: Vec<Interval>) -> Result<Self> {
        for (idx, i) in intervals.iter().enumerate() {
            if !(i.lo <= i.hi) || !i.lo.is_finite() || !i.hi.is_finite() {
                return Err(Error::Input(format!("interval {idx} is not a finite [lo, hi]")));
            }
        }
        let n = intervals.len();
        let mut by_left: Vec<usize> = (0..n).collect();
        by_left.sort_by(|&a, &b| intervals[a].lo.total_cmp(&intervals[b].lo));
        let mut by_right: Vec<usize> = (0..n).collect();
        by_right.sort_by(|&a, &b| intervals[a].hi.total_cmp(&intervals[b].hi));
        let mut left_rank = vec![0; n];
        let mut right_rank = vec![0; n];
        for (pos, &i) in by_left.iter().enumerate() {
            left_rank[i] = pos;
        }
        for (pos, &i) in by_right.iter().enumerate() {
            right_rank[i] = pos;
        }
        Ok(IntervalSet { intervals, by_left, by_right, left_rank, right_rank })
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Position of interval `i` in left-end order.
    pub fn left_rank(&self, i: usize) -> usize {
        self.left_rank[i]
    }

    /// Position of interval `i` in right-end order.
    pub fn right_rank(&self, i: usize) -> usize {
        self.right_rank[i]
    }

    pub fn endpoints(&self) -> Vec<f64> {
        self.intervals.iter().flat_map(|i| [i.lo, i.hi]).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LineVerdict {
    Cover(Vec<f64>),
    Infeasible,
}

impl LineVerdict {
    pub fn is_cover(&self) -> bool {
        matches!(self, LineVerdict::Cover(_))
    }
}

/// Greedy sweep: serve the unserved interval with the leftmost right end `b`
/// from `b + r`, which reaches every interval starting by `b + 2r`. The number
/// of centers used is the minimum possible at radius `r`.
pub fn decide_1d(set: &IntervalSet, k: usize, r: f64) -> Result<LineVerdict> {
    if !(r >= 0.0) {
        return Err(Error::InvalidParameter(format!("radius must be nonnegative, got {r}")));
    }
    let n = set.len();
    let mut served = vec![false; n];
    let mut centers = Vec::new();
    let mut next_left = 0;
    for &first in &set.by_right {
        if served[first] {
            continue;
        }
        if centers.len() == k {
            return Ok(LineVerdict::Infeasible);
        }
        let b = set.intervals[first].hi;
        let reach = b + 2.0 * r;
        let tol = 1e-12 * reach.abs().max(1.0);
        while next_left < n && set.intervals[set.by_left[next_left]].lo <= reach + tol {
            served[set.by_left[next_left]] = true;
            next_left += 1;
        }
        centers.push(b + r);
    }
    Ok(LineVerdict::Cover(centers))
}

/// Exact optimum and an optimal center set.
pub fn solve_1d(intervals: &[Interval], k: usize) -> Result<Solution> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let set = IntervalSet::new(intervals.to_vec())?;
    let objects: Vec<ConvexObject> = intervals.iter().map(|i| ConvexObject::Interval(*i)).collect();
    let finish = |centers: Vec<f64>, radius: f64, calls: usize| -> Result<Solution> {
        let mut sol = Solution::evaluate(&objects, centers.into_iter().map(Point::on_line).collect(), "1d", calls)?;
        sol.radius = radius;
        Ok(sol)
    };
    if let LineVerdict::Cover(c) = decide_1d(&set, k, 0.0)? {
        return finish(c, 0.0, 1);
    }
    let matrix = build_sorted_matrix(&set.endpoints())?;
    let mut last_cover: Option<(f64, Vec<f64>)> = None;
    let out = msearch(
        &matrix,
        |lambda| match decide_1d(&set, k, lambda / 2.0).expect("radius is positive") {
            LineVerdict::Cover(c) => {
                if last_cover.as_ref().is_none_or(|(l, _)| lambda < *l) {
                    last_cover = Some((lambda, c));
                }
                true
            }
            LineVerdict::Infeasible => false,
        },
        0,
        (0.0, f64::INFINITY),
    )?;
    let mut calls = 1 + out.tests;
    let radius = out.upper / 2.0;
    let centers = match last_cover {
        Some((l, c)) if l == out.upper => c,
        _ => {
            calls += 1;
            match decide_1d(&set, k, radius)? {
                LineVerdict::Cover(c) => c,
                LineVerdict::Infeasible => unreachable!("the search ends on a feasible value"),
            }
        }
    };
    finish(centers, radius, calls)
}
