//! Bisectors of disjoint disks.
//!
//! The locus of points at equal distance from two disjoint disks is the
//! additively weighted bisector of their centers: the perpendicular bisector
//! when the radii agree, otherwise the branch of the hyperbola with foci at
//! the centers and focal difference `|rho_a - rho_b|` that wraps around the
//! smaller disk.
//!
//! Curves are parameterized in the focal frame: `u` is the coordinate along
//! the normal of the focal axis, so `u = 0` is the vertex (the gap midpoint)
//! and the distance to either disk grows with `|u|`.

use super::{apollonius_2d, dot, norm, sub, Ball, Point};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BisectorKind {
    Line,
    HyperbolaBranch,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Bisector {
    pub kind: BisectorKind,
    /// Midpoint of the two centers.
    pub origin: [f64; 2],
    /// Unit focal axis, from the larger disk's center toward the smaller's.
    pub axis: [f64; 2],
    /// Unit normal to `axis`; `u` runs along it.
    pub normal: [f64; 2],
    /// Semi-major axis `|rho_a - rho_b| / 2`; zero for a line.
    pub a: f64,
    /// Semi-minor axis; half the center distance for a line.
    pub b: f64,
    /// The defining disks, in the order they were given.
    pub disks: [Ball; 2],
}

/// Bisector of two disjoint planar disks.
pub fn disk_bisector(first: &Ball, second: &Ball) -> Result<Bisector> {
    for d in [first, second] {
        if d.dim() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, got: d.dim() });
        }
    }
    if first.signed_gap(second) <= 0.0 {
        return Err(Error::IntersectingObjects(0, 1));
    }
    let (big, small) = if first.radius >= second.radius { (first, second) } else { (second, first) };
    let d = sub(&small.center.0, &big.center.0);
    let len = norm(&d);
    let axis = [d[0] / len, d[1] / len];
    let normal = [-axis[1], axis[0]];
    let origin = [0.5 * (first.center.0[0] + second.center.0[0]), 0.5 * (first.center.0[1] + second.center.0[1])];
    let f = 0.5 * len;
    let mut a = 0.5 * (big.radius - small.radius);
    let kind = if a <= 1e-12 * f {
        a = 0.0;
        BisectorKind::Line
    } else {
        BisectorKind::HyperbolaBranch
    };
    let b = (f * f - a * a).sqrt();
    Ok(Bisector { kind, origin, axis, normal, a, b, disks: [first.clone(), second.clone()] })
}

impl Bisector {
    /// Point at parameter `u`.
    pub fn point_at(&self, u: f64) -> Point {
        let x = match self.kind {
            BisectorKind::Line => 0.0,
            BisectorKind::HyperbolaBranch => self.a * (1.0 + (u / self.b).powi(2)).sqrt(),
        };
        Point::xy(
            self.origin[0] + x * self.axis[0] + u * self.normal[0],
            self.origin[1] + x * self.axis[1] + u * self.normal[1],
        )
    }

    pub fn vertex(&self) -> Point {
        self.point_at(0.0)
    }

    /// Parameter of a point lying on the curve.
    pub fn param_of(&self, p: &Point) -> f64 {
        dot(&sub(&p.0, &self.origin), &self.normal)
    }

    /// Distance from the point at `u` to (either) defining disk.
    pub fn dist_at(&self, u: f64) -> f64 {
        self.disks[0].dist_to_point(&self.point_at(u))
    }

    /// Offset of `p` from the curve, measured along the focal axis.
    fn axial_offset(&self, p: &Point) -> f64 {
        let rel = sub(&p.0, &self.origin);
        let along = dot(&rel, &self.axis);
        let u = dot(&rel, &self.normal);
        let x = match self.kind {
            BisectorKind::Line => 0.0,
            BisectorKind::HyperbolaBranch => self.a * (1.0 + (u / self.b).powi(2)).sqrt(),
        };
        along - x
    }
}

/// Parameters along `bisector` where the distance to `third` equals the
/// distance to the defining disks, each with that common distance, sorted by
/// parameter. Empty when no such point exists.
pub fn equidistant_point_on_bisector(bisector: &Bisector, third: &Ball) -> Vec<(f64, f64)> {
    let [d1, d2] = &bisector.disks;
    let mut out: Vec<(f64, f64)> = apollonius_2d([d1, d2, third])
        .into_iter()
        .filter(|(p, t)| bisector.axial_offset(p).abs() <= 1e-7 * t.max(1.0))
        .map(|(p, t)| (bisector.param_of(&p), t))
        .collect();
    out.sort_by(|x, y| x.0.total_cmp(&y.0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::SQRT_3;

    /// Sign-change scan plus bisection on a geometric grid of parameters.
    /// Independent of the closed-form solver; misses tangential roots.
    fn scan_roots(b: &Bisector, third: &Ball, u_max: f64) -> Vec<f64> {
        let g = |u: f64| third.dist_to_point(&b.point_at(u)) - b.dist_at(u);
        let mut grid = vec![0.0];
        let mut step = 1e-6;
        while step < u_max {
            grid.push(step);
            grid.push(-step);
            step *= 1.01;
        }
        grid.sort_by(f64::total_cmp);
        let mut roots = Vec::new();
        for w in grid.windows(2) {
            let (mut lo, mut hi) = (w[0], w[1]);
            let (glo, ghi) = (g(lo), g(hi));
            if glo == 0.0 {
                roots.push(lo);
                continue;
            }
            if glo.signum() == ghi.signum() {
                continue;
            }
            while hi - lo > 1e-12 * hi.abs().max(1.0) {
                let mid = 0.5 * (lo + hi);
                if g(mid).signum() == glo.signum() {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        roots
    }

    #[test]
    fn equal_radii_give_perpendicular_bisector() {
        let b = disk_bisector(&Ball::disk(0.0, 0.0, 1.0), &Ball::disk(4.0, 0.0, 1.0)).unwrap();
        assert_eq!(b.kind, BisectorKind::Line);
        for u in [-10.0, -1.0, 0.0, 3.0] {
            assert!((b.point_at(u).0[0] - 2.0).abs() < 1e-15);
        }
        assert_eq!(b.vertex(), Point::xy(2.0, 0.0));
    }

    #[test]
    fn unequal_radii_vertex_is_gap_midpoint() {
        // |x| - 1 = |6 - x| - 2 on the axis solves to x = 2.5, distance 1.5.
        let b = disk_bisector(&Ball::disk(0.0, 0.0, 1.0), &Ball::disk(6.0, 0.0, 2.0)).unwrap();
        assert_eq!(b.kind, BisectorKind::HyperbolaBranch);
        let v = b.vertex();
        assert!((v.0[0] - 2.5).abs() < 1e-12 && v.0[1].abs() < 1e-12);
        assert!((b.dist_at(0.0) - 1.5).abs() < 1e-12);
        // The branch wraps around the smaller disk.
        let far = b.point_at(50.0);
        assert!(far.0[0] < 3.0);
    }

    #[test]
    fn every_sample_is_equidistant_and_vertex_is_minimal() {
        let b = disk_bisector(&Ball::disk(-1.0, 2.0, 0.3), &Ball::disk(5.0, -1.0, 2.5)).unwrap();
        let d0 = b.dist_at(0.0);
        let mut prev = d0;
        for i in 1..200 {
            let u = i as f64 * 0.37;
            for s in [u, -u] {
                let p = b.point_at(s);
                let (x, y) = (b.disks[0].dist_to_point(&p), b.disks[1].dist_to_point(&p));
                assert!((x - y).abs() < 1e-9, "u={s}: {x} vs {y}");
                assert!(x >= d0 - 1e-12);
            }
            let cur = b.dist_at(u);
            assert!(cur >= prev - 1e-12);
            prev = cur;
        }
    }

    #[test]
    fn intersecting_disks_have_no_bisector() {
        let r = disk_bisector(&Ball::disk(0.0, 0.0, 1.0), &Ball::disk(1.5, 0.0, 1.0));
        assert!(matches!(r, Err(Error::IntersectingObjects(..))));
    }

    #[test]
    fn equilateral_third_disk_hits_centroid() {
        let h = 3.0 * SQRT_3;
        let b = disk_bisector(&Ball::disk(0.0, 0.0, 1.0), &Ball::disk(6.0, 0.0, 1.0)).unwrap();
        let third = Ball::disk(3.0, h, 1.0);
        let roots = equidistant_point_on_bisector(&b, &third);
        assert_eq!(roots.len(), 1);
        let (u, dist) = roots[0];
        assert!((dist - (2.0 * SQRT_3 - 1.0)).abs() < 1e-12);
        assert!((dist - 2.4641).abs() < 1e-4);
        let p = b.point_at(u);
        assert!((p.0[1] - h / 3.0).abs() < 1e-12);
    }

    #[test]
    fn far_third_disk_on_the_axis_is_never_equidistant() {
        let b = disk_bisector(&Ball::disk(0.0, 0.0, 1.0), &Ball::disk(4.0, 0.0, 1.0)).unwrap();
        assert!(equidistant_point_on_bisector(&b, &Ball::disk(1e6, 0.0, 1.0)).is_empty());
    }

    #[test]
    fn outer_pair_of_collinear_triple_is_never_equidistant() {
        let b = disk_bisector(&Ball::disk(0.0, 0.0, 1.0), &Ball::disk(8.0, 0.0, 1.0)).unwrap();
        assert!(equidistant_point_on_bisector(&b, &Ball::disk(4.0, 0.0, 1.0)).is_empty());
    }

    #[test]
    fn closed_form_matches_grid_scan() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 300 {
            let mut d = Vec::new();
            for _ in 0..3 {
                d.push(Ball::disk(
                    rng.random_range(-10.0..10.0),
                    rng.random_range(-10.0..10.0),
                    rng.random_range(0.1..2.0),
                ));
            }
            if d[0].signed_gap(&d[1]) <= 0.1 || d[0].signed_gap(&d[2]) <= 0.1 || d[1].signed_gap(&d[2]) <= 0.1 {
                continue;
            }
            checked += 1;
            let b = disk_bisector(&d[0], &d[1]).unwrap();
            let closed = equidistant_point_on_bisector(&b, &d[2]);
            let scanned = scan_roots(&b, &d[2], 1e4);
            assert_eq!(closed.len(), scanned.len(), "{d:?}");
            for ((u, dist), s) in closed.iter().zip(&scanned) {
                assert!((u - s).abs() < 1e-6 * u.abs().max(1.0), "{u} vs {s}");
                let p = b.point_at(*u);
                for disk in &d {
                    assert!((disk.dist_to_point(&p) - dist).abs() < 1e-9);
                }
            }
        }
    }
}
