//! Exact optima for small instances by exhaustive search.
//!
//! Balls: the minimax center of any cluster is equidistant to its farthest
//! balls and lies in the affine hull of their centers, so enumerating those
//! points for every subset of at most `d + 1` balls gives a candidate set that
//! contains an optimal solution. Intervals: the optimum is zero or half the
//! distance between two endpoints.

use crate::cover::DistTable;
use crate::error::{Error, Result};
use crate::geometry::{check_disjoint_balls, equidistant_in_affine_hull, Ball, ConvexObject, Interval, Point};
use crate::instance::{disks_to_objects, Solution};

/// Largest `|candidates|^k` the oracle will take on.
pub const ORACLE_LIMIT: f64 = 1e8;

const ALGORITHM: &str = "oracle";

/// Exact optimum for disks, balls or intervals.
pub fn brute_force_opt(objects: &[ConvexObject], k: usize) -> Result<Solution> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if objects.is_empty() {
        return Solution::evaluate(objects, Vec::new(), ALGORITHM, 0);
    }
    if objects.iter().all(|o| o.as_interval().is_some()) {
        let intervals: Vec<Interval> = objects.iter().filter_map(ConvexObject::as_interval).collect();
        return interval_opt(&intervals, k);
    }
    let balls: Vec<Ball> = objects
        .iter()
        .map(|o| o.as_ball().cloned().ok_or_else(|| Error::UnsupportedObject(format!("oracle cannot handle {o:?}"))))
        .collect::<Result<_>>()?;
    ball_opt(&balls, k)
}

/// Every point equidistant to some set of at most `d + 1` balls within the
/// affine hull of their centers, at common distance at most `bound`.
pub fn support_candidates(balls: &[Ball], bound: f64) -> Vec<Point> {
    let dim = balls[0].dim();
    let mut out = Vec::new();
    let mut subset = Vec::new();
    fn rec(balls: &[Ball], start: usize, max: usize, bound: f64, subset: &mut Vec<usize>, out: &mut Vec<Point>) {
        if !subset.is_empty() {
            let refs: Vec<&Ball> = subset.iter().map(|&i| &balls[i]).collect();
            for (p, t) in equidistant_in_affine_hull(&refs) {
                if t <= bound {
                    out.push(p);
                }
            }
        }
        if subset.len() == max {
            return;
        }
        for i in start..balls.len() {
            subset.push(i);
            rec(balls, i + 1, max, bound, subset, out);
            subset.pop();
        }
    }
    rec(balls, 0, (dim + 1).min(balls.len()), bound, &mut subset, &mut out);
    out
}

/// Radius of farthest-first traversal over the ball centers; an upper bound.
fn traversal_bound(balls: &[Ball], k: usize) -> f64 {
    let mut nearest: Vec<f64> = balls.iter().map(|b| b.dist_to_point(&balls[0].center)).collect();
    for _ in 1..k {
        let (far, _) = nearest.iter().enumerate().fold((0, -1.0), |acc, (i, &d)| if d > acc.1 { (i, d) } else { acc });
        for (i, b) in balls.iter().enumerate() {
            nearest[i] = nearest[i].min(b.dist_to_point(&balls[far].center));
        }
    }
    nearest.into_iter().fold(0.0, f64::max)
}

fn ball_opt(balls: &[Ball], k: usize) -> Result<Solution> {
    check_disjoint_balls(balls)?;
    let objects = disks_to_objects(balls);
    if k >= balls.len() {
        let centers = balls.iter().map(|b| b.center.clone()).collect();
        return Solution::evaluate(&objects, centers, ALGORITHM, 0);
    }
    let bound = traversal_bound(balls, k) * (1.0 + 1e-9);
    let candidates = support_candidates(balls, bound);
    let size = (candidates.len() as f64).powi(k as i32);
    if size > ORACLE_LIMIT {
        return Err(Error::OracleTooLarge { size, limit: ORACLE_LIMIT });
    }
    let rows = candidates.iter().map(|c| balls.iter().map(|b| b.dist_to_point(c)).collect()).collect();
    let table = DistTable::new(rows, balls.len());
    let (_, chosen) = table.min_radius(k).expect("k disk centers always cover");
    let centers: Vec<Point> = chosen.into_iter().map(|i| candidates[i].clone()).collect();
    let sol = Solution::evaluate(&objects, centers, ALGORITHM, 0)?;
    if balls.len() <= 3 && balls[0].dim() == 2 {
        let (grid, step) = dense_grid_opt(balls, k);
        assert!(
            sol.radius <= grid + 1e-9 && grid <= sol.radius + 2.0 * step,
            "oracle {} disagrees with grid sweep {grid}",
            sol.radius
        );
    }
    Ok(sol)
}

/// Optimum over every grouping of at most three disks, each group served by
/// the best point of a regular grid over its centers' bounding box. Returns
/// the radius and the grid spacing.
pub fn dense_grid_opt(disks: &[Ball], k: usize) -> (f64, f64) {
    const STEPS: usize = 400;
    let n = disks.len();
    assert!(n <= 3, "grid sweep is for tiny instances");
    let mut best = f64::INFINITY;
    let mut step_used: f64 = 0.0;
    let mut labels = vec![0usize; n];
    loop {
        let mut worst: f64 = 0.0;
        for g in 0..k {
            let group: Vec<&Ball> = (0..n).filter(|&i| labels[i] == g).map(|i| &disks[i]).collect();
            if group.is_empty() {
                continue;
            }
            let (lo, hi) = bounding_box(&group);
            let step = (hi[0] - lo[0]).max(hi[1] - lo[1]) / STEPS as f64;
            step_used = step_used.max(step);
            let mut one = f64::INFINITY;
            for a in 0..=STEPS {
                for b in 0..=STEPS {
                    let p = Point::xy(lo[0] + a as f64 * step, lo[1] + b as f64 * step);
                    one = one.min(group.iter().map(|d| d.dist_to_point(&p)).fold(0.0, f64::max));
                }
            }
            worst = worst.max(one);
        }
        best = best.min(worst);
        // Next assignment in base-k counting order.
        let mut i = 0;
        while i < n && labels[i] + 1 == k {
            labels[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        labels[i] += 1;
    }
    (best, step_used)
}

fn bounding_box(group: &[&Ball]) -> ([f64; 2], [f64; 2]) {
    let mut lo = [f64::INFINITY; 2];
    let mut hi = [f64::NEG_INFINITY; 2];
    for d in group {
        for a in 0..2 {
            lo[a] = lo[a].min(d.center.0[a]);
            hi[a] = hi[a].max(d.center.0[a]);
        }
    }
    (lo, hi)
}

/// Whether `k` points stab every interval grown by `r`, with the stabbing
/// points. Quadratic and self-contained on purpose.
pub fn intervals_coverable(intervals: &[Interval], k: usize, r: f64) -> Option<Vec<f64>> {
    let mut open: Vec<Interval> = intervals.to_vec();
    let mut points = Vec::new();
    while !open.is_empty() {
        let first = open.iter().map(|i| i.hi).fold(f64::INFINITY, f64::min);
        let x = first + r;
        let tol = 1e-12 * x.abs().max(1.0);
        open.retain(|i| i.dist_to_x(x) > r + tol);
        points.push(x);
        if points.len() > k {
            return None;
        }
    }
    Some(points)
}

fn interval_opt(intervals: &[Interval], k: usize) -> Result<Solution> {
    let ends: Vec<f64> = intervals.iter().flat_map(|i| [i.lo, i.hi]).collect();
    let mut radii = vec![0.0];
    for (a, x) in ends.iter().enumerate() {
        for y in &ends[a + 1..] {
            radii.push(0.5 * (x - y).abs());
        }
    }
    radii.sort_by(f64::total_cmp);
    radii.dedup();
    let objects: Vec<ConvexObject> = intervals.iter().map(|i| ConvexObject::Interval(*i)).collect();
    for r in radii {
        if let Some(points) = intervals_coverable(intervals, k, r) {
            let centers = points.into_iter().map(Point::on_line).collect();
            let mut sol = Solution::evaluate(&objects, centers, ALGORITHM, 0)?;
            sol.radius = r;
            return Ok(sol);
        }
    }
    unreachable!("the largest half distance always admits a single center")
}
