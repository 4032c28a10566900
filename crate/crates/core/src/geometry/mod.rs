//! Geometric primitives: points, the convex neighborhoods, and the distance
//! queries every solver is built on.
//!
//! Distances follow the usual set-distance convention: the distance between
//! two closed sets is the minimum over point pairs, so it is zero exactly when
//! the sets meet. A point "hits" an object at radius `r` when it lies in the
//! Minkowski inflation of the object by a ball of radius `r`.

mod bisector;
mod equidistant;

pub use bisector::{disk_bisector, equidistant_point_on_bisector, Bisector, BisectorKind};
pub use equidistant::{apollonius_2d, equidistant_in_affine_hull};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance for equality decisions.
pub const EPS: f64 = 1e-9;
/// Tolerance for refining roots.
pub const ROOT_TOL: f64 = 1e-12;

pub const SQRT_3: f64 = 1.732_050_807_568_877_2;
/// The approximation factor 5 + 2√3 of the disk decider.
pub const DECIDER_FACTOR: f64 = 5.0 + 2.0 * SQRT_3;
/// Disks smaller than `SMALL_DISK_FACTOR * r` seed the first decider phase.
pub const SMALL_DISK_FACTOR: f64 = 3.0 + 2.0 * SQRT_3;
/// 2/√3 − 1: the largest radius at which a ball can reach three disjoint
/// disks of radius at least one.
pub const PACKING_FACTOR: f64 = 2.0 / SQRT_3 - 1.0;

/// A point in R^d.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(pub Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Self {
        Point(coords)
    }

    pub fn xy(x: f64, y: f64) -> Self {
        Point(vec![x, y])
    }

    pub fn on_line(x: f64) -> Self {
        Point(vec![x])
    }

    pub fn origin(dim: usize) -> Self {
        Point(vec![0.0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }

    pub fn dist(&self, other: &Point) -> f64 {
        norm(&sub(&self.0, &other.0))
    }

    /// `self + t * dir`.
    pub fn offset(&self, dir: &[f64], t: f64) -> Point {
        Point(self.0.iter().zip(dir).map(|(a, d)| a + t * d).collect())
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        Point(self.0.iter().zip(&other.0).map(|(a, b)| 0.5 * (a + b)).collect())
    }
}

/// A closed Euclidean ball; in the plane this is a disk.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ball {
    pub center: Point,
    pub radius: f64,
}

impl Ball {
    pub fn new(center: Point, radius: f64) -> Self {
        Ball { center, radius }
    }

    pub fn disk(x: f64, y: f64, radius: f64) -> Self {
        Ball::new(Point::xy(x, y), radius)
    }

    pub fn dim(&self) -> usize {
        self.center.dim()
    }

    pub fn dist_to_point(&self, s: &Point) -> f64 {
        (self.center.dist(s) - self.radius).max(0.0)
    }

    pub fn dist_to_ball(&self, other: &Ball) -> f64 {
        (self.center.dist(&other.center) - self.radius - other.radius).max(0.0)
    }

    /// Gap between the boundaries along the center line. Negative when the
    /// balls overlap.
    pub fn signed_gap(&self, other: &Ball) -> f64 {
        self.center.dist(&other.center) - self.radius - other.radius
    }

    /// The point halfway along the shortest segment between two disjoint
    /// balls; it is at distance `gap / 2` from both.
    pub fn gap_midpoint(&self, other: &Ball) -> Point {
        let d = sub(&other.center.0, &self.center.0);
        let len = norm(&d);
        if len == 0.0 {
            return self.center.clone();
        }
        let gap = (len - self.radius - other.radius).max(0.0);
        let unit: Vec<f64> = d.iter().map(|x| x / len).collect();
        self.center.offset(&unit, self.radius + 0.5 * gap)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub p: Point,
    pub q: Point,
}

impl Segment {
    pub fn new(p: Point, q: Point) -> Self {
        Segment { p, q }
    }

    pub fn len(&self) -> f64 {
        self.p.dist(&self.q)
    }

    pub fn dist_to_point(&self, s: &Point) -> f64 {
        let d = sub(&self.q.0, &self.p.0);
        let dd = dot(&d, &d);
        if dd == 0.0 {
            return self.p.dist(s);
        }
        let t = (dot(&sub(&s.0, &self.p.0), &d) / dd).clamp(0.0, 1.0);
        self.p.offset(&d, t).dist(s)
    }

    /// Closest distance between two segments in any dimension.
    pub fn dist_to_segment(&self, other: &Segment) -> f64 {
        let d1 = sub(&self.q.0, &self.p.0);
        let d2 = sub(&other.q.0, &other.p.0);
        let r = sub(&self.p.0, &other.p.0);
        let a = dot(&d1, &d1);
        let e = dot(&d2, &d2);
        let f = dot(&d2, &r);
        if a == 0.0 || e == 0.0 {
            return if a == 0.0 { other.dist_to_point(&self.p) } else { self.dist_to_point(&other.p) };
        }
        let c = dot(&d1, &r);
        let b = dot(&d1, &d2);
        let denom = a * e - b * b;
        let mut s = if denom > 1e-14 * a * e { ((b * f - c * e) / denom).clamp(0.0, 1.0) } else { 0.0 };
        let mut t = (b * s + f) / e;
        if t < 0.0 {
            t = 0.0;
            s = (-c / a).clamp(0.0, 1.0);
        } else if t > 1.0 {
            t = 1.0;
            s = ((b - c) / a).clamp(0.0, 1.0);
        }
        // The clamped parametric solution can miss a proper crossing when the
        // segments are nearly parallel; endpoint distances bound it from above.
        let param = self.p.offset(&d1, s).dist(&other.p.offset(&d2, t));
        let ends = [
            self.dist_to_point(&other.p),
            self.dist_to_point(&other.q),
            other.dist_to_point(&self.p),
            other.dist_to_point(&self.q),
        ];
        ends.into_iter().fold(param, f64::min)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        Interval { lo, hi }
    }

    pub fn dist_to_x(&self, x: f64) -> f64 {
        (self.lo - x).max(x - self.hi).max(0.0)
    }

    pub fn dist_to_interval(&self, other: &Interval) -> f64 {
        (other.lo - self.hi).max(self.lo - other.hi).max(0.0)
    }
}

/// One neighborhood of an instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum ConvexObject {
    Disk(Ball),
    Ball(Ball),
    Segment(Segment),
    Interval(Interval),
}

impl ConvexObject {
    pub fn disk(x: f64, y: f64, radius: f64) -> Self {
        ConvexObject::Disk(Ball::disk(x, y, radius))
    }

    pub fn ball(center: Vec<f64>, radius: f64) -> Self {
        ConvexObject::Ball(Ball::new(Point(center), radius))
    }

    pub fn segment(p: Point, q: Point) -> Self {
        ConvexObject::Segment(Segment::new(p, q))
    }

    pub fn interval(lo: f64, hi: f64) -> Self {
        ConvexObject::Interval(Interval::new(lo, hi))
    }

    pub fn dim(&self) -> usize {
        match self {
            ConvexObject::Disk(b) | ConvexObject::Ball(b) => b.dim(),
            ConvexObject::Segment(s) => s.p.dim(),
            ConvexObject::Interval(_) => 1,
        }
    }

    /// The round view of a disk or ball.
    pub fn as_ball(&self) -> Option<&Ball> {
        match self {
            ConvexObject::Disk(b) | ConvexObject::Ball(b) => Some(b),
            _ => None,
        }
    }

    pub fn as_interval(&self) -> Option<Interval> {
        match self {
            ConvexObject::Interval(i) => Some(*i),
            _ => None,
        }
    }

    /// Checks the per-object invariants (finite data, nonnegative radius,
    /// `lo <= hi`, nondegenerate segments).
    pub fn validate(&self) -> Result<()> {
        match self {
            ConvexObject::Disk(b) | ConvexObject::Ball(b) => {
                if !b.center.is_finite() || !b.radius.is_finite() || b.radius < 0.0 {
                    return Err(Error::Input(format!("bad ball {b:?}")));
                }
                if matches!(self, ConvexObject::Disk(_)) && b.dim() != 2 {
                    return Err(Error::DimensionMismatch { expected: 2, got: b.dim() });
                }
            }
            ConvexObject::Segment(s) => {
                if !s.p.is_finite() || !s.q.is_finite() || s.p.dim() != s.q.dim() {
                    return Err(Error::Input(format!("bad segment {s:?}")));
                }
                if s.p == s.q {
                    return Err(Error::Input("segment endpoints coincide".into()));
                }
            }
            ConvexObject::Interval(i) => {
                if !i.lo.is_finite() || !i.hi.is_finite() || i.lo > i.hi {
                    return Err(Error::Input(format!("bad interval [{}, {}]", i.lo, i.hi)));
                }
            }
        }
        Ok(())
    }
}

fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::DimensionMismatch { expected, got });
    }
    Ok(())
}

/// Euclidean distance between two closed objects; zero iff they intersect.
pub fn dist_objects(a: &ConvexObject, b: &ConvexObject) -> Result<f64> {
    check_dim(a.dim(), b.dim())?;
    use ConvexObject::*;
    let d = match (a, b) {
        (Disk(x) | Ball(x), Disk(y) | Ball(y)) => x.dist_to_ball(y),
        (Disk(x) | Ball(x), Segment(s)) | (Segment(s), Disk(x) | Ball(x)) => {
            (s.dist_to_point(&x.center) - x.radius).max(0.0)
        }
        (Segment(s), Segment(t)) => s.dist_to_segment(t),
        (Interval(x), Interval(y)) => x.dist_to_interval(y),
        (Interval(x), Disk(b) | Ball(b)) | (Disk(b) | Ball(b), Interval(x)) => {
            let c = b.center.0[0];
            x.dist_to_interval(&self::Interval::new(c - b.radius, c + b.radius))
        }
        (Interval(x), Segment(s)) | (Segment(s), Interval(x)) => {
            let (lo, hi) = (s.p.0[0].min(s.q.0[0]), s.p.0[0].max(s.q.0[0]));
            x.dist_to_interval(&self::Interval::new(lo, hi))
        }
    };
    Ok(d)
}

/// Distance from a point to an object; zero iff the point lies in it.
pub fn dist_point_object(s: &Point, c: &ConvexObject) -> Result<f64> {
    check_dim(c.dim(), s.dim())?;
    Ok(match c {
        ConvexObject::Disk(b) | ConvexObject::Ball(b) => b.dist_to_point(s),
        ConvexObject::Segment(seg) => seg.dist_to_point(s),
        ConvexObject::Interval(i) => i.dist_to_x(s.0[0]),
    })
}

/// Whether `s` lies in the inflation of `c` by radius `r`, i.e. whether a
/// ball of radius `r` around `s` meets `c`. Points of the wrong dimension
/// never hit.
pub fn hits(s: &Point, c: &ConvexObject, r: f64) -> bool {
    dist_point_object(s, c).is_ok_and(|d| d <= r)
}

/// Radius of a center set: the largest distance from an object to its
/// nearest center. Infinite for an empty center set and a nonempty instance.
pub fn cover_radius(objects: &[ConvexObject], centers: &[Point]) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for c in objects {
        let mut best = f64::INFINITY;
        for s in centers {
            best = best.min(dist_point_object(s, c)?);
        }
        worst = worst.max(best);
    }
    Ok(worst)
}

/// Fails with the first intersecting pair, if any. Intervals are exempt.
pub fn check_disjoint(objects: &[ConvexObject]) -> Result<()> {
    for i in 0..objects.len() {
        for j in i + 1..objects.len() {
            if dist_objects(&objects[i], &objects[j])? <= 0.0 {
                return Err(Error::IntersectingObjects(i, j));
            }
        }
    }
    Ok(())
}

/// Same as [`check_disjoint`] for a list of balls.
pub fn check_disjoint_balls(balls: &[Ball]) -> Result<()> {
    for i in 0..balls.len() {
        for j in i + 1..balls.len() {
            check_dim(balls[i].dim(), balls[j].dim())?;
            if balls[i].signed_gap(&balls[j]) <= 0.0 {
                return Err(Error::IntersectingObjects(i, j));
            }
        }
    }
    Ok(())
}

pub(crate) fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}
