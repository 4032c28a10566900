//! `(1+ε)`-radius approximation for disjoint unit disks and small `k`.
//!
//! Few disks: solve exactly over the canonical candidates. Many disks: by
//! packing, the optimum is large compared to the unit radius, so solving
//! k-center on the disk centers with a finer `ε` loses at most the allowed
//! factor.

use rayon::prelude::*;
use std::collections::HashSet;

use crate::canonical::canonical_candidates;
use crate::cover::DistTable;
use crate::error::{Error, Result};
use crate::geometry::{check_disjoint_balls, Ball, ConvexObject, Point};
use crate::instance::Solution;

/// How the point k-center subroutine generates candidate centers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PointMode {
    /// Exact candidates when there are few enough, otherwise a grid.
    #[default]
    Auto,
    /// Input points, pair midpoints and triangle circumcenters.
    ExactCandidates,
    /// Grid around the input scaled by a farthest-first estimate.
    Grid,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FptasConfig {
    pub epsilon: f64,
    /// Branch threshold: exact search when `n <= gamma * k / ε²`.
    pub gamma: f64,
    pub mode: PointMode,
}

impl FptasConfig {
    pub fn new(epsilon: f64) -> Self {
        FptasConfig { epsilon, gamma: 16.0, mode: PointMode::Auto }
    }

    /// Whether `n` disks with budget `k` take the exact branch.
    pub fn is_small(&self, n: usize, k: usize) -> bool {
        n as f64 <= self.gamma * k as f64 / (self.epsilon * self.epsilon)
    }
}

const EXACT_CANDIDATE_LIMIT: usize = 50_000;

fn circumcenter(a: &Point, b: &Point, c: &Point) -> Option<Point> {
    let (ax, ay) = (a.0[0], a.0[1]);
    let (bx, by) = (b.0[0] - ax, b.0[1] - ay);
    let (cx, cy) = (c.0[0] - ax, c.0[1] - ay);
    let d = 2.0 * (bx * cy - by * cx);
    let scale = (bx * bx + by * by).max(cx * cx + cy * cy);
    if d.abs() <= 1e-12 * scale {
        return None;
    }
    let b2 = bx * bx + by * by;
    let c2 = cx * cx + cy * cy;
    Some(Point::xy(ax + (cy * b2 - by * c2) / d, ay + (bx * c2 - cx * b2) / d))
}

fn exact_candidates(points: &[Point]) -> Vec<Point> {
    let n = points.len();
    let mut out = points.to_vec();
    for i in 0..n {
        for j in i + 1..n {
            out.push(points[i].midpoint(&points[j]));
            for l in j + 1..n {
                if let Some(c) = circumcenter(&points[i], &points[j], &points[l]) {
                    out.push(c);
                }
            }
        }
    }
    out
}

/// Farthest-first traversal: a radius at most twice the optimum.
fn traversal_radius(points: &[Point], k: usize) -> f64 {
    let mut nearest: Vec<f64> = points.iter().map(|p| p.dist(&points[0])).collect();
    for _ in 1..k {
        let far = (0..points.len()).max_by(|&a, &b| nearest[a].total_cmp(&nearest[b])).expect("nonempty");
        for (i, p) in points.iter().enumerate() {
            nearest[i] = nearest[i].min(p.dist(&points[far]));
        }
    }
    nearest.into_iter().fold(0.0, f64::max)
}

/// Lattice points within `reach + spacing` of some input point.
fn grid_candidates(points: &[Point], spacing: f64, reach: f64) -> Vec<Point> {
    let span = ((reach + spacing) / spacing).ceil() as i64;
    let mut cells: HashSet<(i64, i64)> = HashSet::new();
    for p in points {
        let (gx, gy) = ((p.0[0] / spacing).round() as i64, (p.0[1] / spacing).round() as i64);
        for dx in -span..=span {
            for dy in -span..=span {
                let q = ((gx + dx) as f64 * spacing, (gy + dy) as f64 * spacing);
                if ((q.0 - p.0[0]).powi(2) + (q.1 - p.0[1]).powi(2)).sqrt() <= reach + spacing {
                    cells.insert((gx + dx, gy + dy));
                }
            }
        }
    }
    let mut cells: Vec<(i64, i64)> = cells.into_iter().collect();
    cells.sort_unstable();
    cells.into_iter().map(|(x, y)| Point::xy(x as f64 * spacing, y as f64 * spacing)).collect()
}

fn point_objects(points: &[Point]) -> Vec<ConvexObject> {
    points.iter().map(|p| ConvexObject::Disk(Ball::new(p.clone(), 0.0))).collect()
}

/// Planar point k-center within `1+ε` of optimal.
pub fn kcenter_points(points: &[Point], k: usize, epsilon: f64) -> Result<Solution> {
    kcenter_points_with(points, k, epsilon, PointMode::Auto)
}

pub fn kcenter_points_with(points: &[Point], k: usize, epsilon: f64, mode: PointMode) -> Result<Solution> {
    const ALG: &str = "point-k-center";
    if points.is_empty() || k == 0 || !(epsilon > 0.0) {
        return Err(Error::InvalidParameter("need points, k >= 1 and epsilon > 0".into()));
    }
    if let Some(p) = points.iter().find(|p| p.dim() != 2) {
        return Err(Error::DimensionMismatch { expected: 2, got: p.dim() });
    }
    let objects = point_objects(points);
    if k >= points.len() {
        return Solution::evaluate(&objects, points.to_vec(), ALG, 0);
    }
    let n = points.len();
    let exact_size = n + n * (n - 1) / 2 + n * (n - 1) * (n - 2) / 6;
    let use_exact = match mode {
        PointMode::Auto => exact_size <= EXACT_CANDIDATE_LIMIT,
        PointMode::ExactCandidates => true,
        PointMode::Grid => false,
    };
    let candidates = if use_exact {
        exact_candidates(points)
    } else {
        let r2 = traversal_radius(points, k);
        if r2 == 0.0 {
            points.to_vec()
        } else {
            grid_candidates(points, epsilon * r2 / (2.0 * std::f64::consts::SQRT_2), r2)
        }
    };
    let rows: Vec<Vec<f64>> = candidates.par_iter().map(|c| points.iter().map(|p| p.dist(c)).collect()).collect();
    let (_, chosen) = DistTable::new(rows, n).min_radius(k).expect("k >= 1 candidates cover all points");
    Solution::evaluate(&objects, chosen.into_iter().map(|i| candidates[i].clone()).collect(), ALG, 0)
}

/// `(1+ε)`-approximation for disjoint unit disks.
pub fn solve_unit_disks_small_k(disks: &[Ball], k: usize, cfg: &FptasConfig) -> Result<Solution> {
    if !(cfg.epsilon > 0.0 && cfg.epsilon <= 1.0) {
        return Err(Error::InvalidParameter(format!("epsilon must lie in (0, 1], got {}", cfg.epsilon)));
    }
    if !(cfg.gamma >= 1.0) {
        return Err(Error::InvalidParameter(format!("gamma must be at least 1, got {}", cfg.gamma)));
    }
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if let Some((i, d)) = disks.iter().enumerate().find(|(_, d)| (d.radius - 1.0).abs() > 1e-9 || d.dim() != 2) {
        return Err(Error::InvalidParameter(format!("disk {i} is not a planar unit disk (radius {})", d.radius)));
    }
    check_disjoint_balls(disks)?;
    let objects: Vec<ConvexObject> = disks.iter().cloned().map(ConvexObject::Disk).collect();
    if k >= disks.len() {
        return Solution::evaluate(&objects, disks.iter().map(|d| d.center.clone()).collect(), "fptas-exact", 0);
    }
    if cfg.is_small(disks.len(), k) {
        let sets = canonical_candidates(disks)?;
        let rows: Vec<Vec<f64>> =
            sets.points.par_iter().map(|c| disks.iter().map(|d| d.dist_to_point(&c.point)).collect()).collect();
        let table = DistTable::new(rows, disks.len());
        let (_, chosen) = table.min_cover_over(&sets.radii, k, 1e-9).expect("the largest candidate radius covers");
        let centers = chosen.into_iter().map(|i| sets.points[i].point.clone()).collect();
        Solution::evaluate(&objects, centers, "fptas-exact", 0)
    } else {
        let centers: Vec<Point> = disks.iter().map(|d| d.center.clone()).collect();
        let sol = kcenter_points_with(&centers, k, cfg.epsilon / 3.0, cfg.mode)?;
        Solution::evaluate(&objects, sol.centers, "fptas-points", 0)
    }
}
