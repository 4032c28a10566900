//! Canonical candidate centers and radii for disjoint planar disks.
//!
//! Some optimal solution places every center either inside a disk or on the
//! bisector of two disks it serves. Along a bisector, the only places worth
//! considering are the points equidistant to a third disk (events) and the
//! distance minimum of each event-free arc. Since the distance grows with
//! `|u|`, that minimum is the vertex or the arc endpoint nearest to it.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{check_disjoint_balls, disk_bisector, equidistant_point_on_bisector, Ball, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// A point inside a disk (its center).
    ObjectPoint,
    /// A bisector point equidistant to a third disk.
    BisectorEvent,
    /// The distance minimum of an event-free bisector arc.
    IntervalMinimum,
}

#[derive(Debug, Clone, Serialize)]
pub struct Candidate {
    pub point: Point,
    pub provenance: Provenance,
    /// Distance to the disks that define the candidate.
    pub distance: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CandidateSets {
    pub points: Vec<Candidate>,
    pub radii: Vec<f64>,
}

/// Sorts and removes values within relative `1e-9` of their predecessor.
pub fn dedup_relative(values: &mut Vec<f64>) {
    values.sort_by(f64::total_cmp);
    values.dedup_by(|cur, prev| *cur - *prev <= 1e-9 * cur.abs());
}

/// Points of one bisector, ordered by parameter.
#[derive(Debug, Clone)]
pub(crate) struct BisectorPoints {
    /// `(u, distance, third disk)` for every event inside the window.
    pub events: Vec<(f64, f64, usize)>,
    /// `(u, distance)` of one minimum per event-free arc.
    pub minima: Vec<(f64, f64)>,
}

pub(crate) fn bisector_points(disks: &[Ball], i: usize, j: usize, window: f64) -> Result<BisectorPoints> {
    let b = disk_bisector(&disks[i], &disks[j]).map_err(|_| Error::IntersectingObjects(i, j))?;
    let mut events: Vec<(f64, f64, usize)> = (0..disks.len())
        .filter(|&l| l != i && l != j)
        .flat_map(|l| {
            equidistant_point_on_bisector(&b, &disks[l])
                .into_iter()
                .filter(|&(_, t)| t <= window)
                .map(move |(u, t)| (u, t, l))
        })
        .collect();
    events.sort_by(|x, y| x.0.total_cmp(&y.0));

    // Arcs are the gaps between consecutive events plus the two unbounded ends.
    let mut minima = Vec::new();
    let mut lo = f64::NEG_INFINITY;
    for bound in events.iter().map(|e| e.0).chain(std::iter::once(f64::INFINITY)) {
        let u = if lo <= 0.0 && 0.0 <= bound {
            0.0
        } else if bound < 0.0 {
            bound
        } else {
            lo
        };
        minima.push((u, b.dist_at(u)));
        lo = bound;
    }
    minima.dedup_by(|x, y| x.0 == y.0);
    Ok(BisectorPoints { events, minima })
}

/// Upper bound on the optimum for any `k >= 1`: one center at a disk center.
pub(crate) fn event_window(disks: &[Ball]) -> f64 {
    let Some(first) = disks.first() else { return 0.0 };
    disks.iter().map(|d| d.dist_to_point(&first.center)).fold(0.0, f64::max)
}

pub fn canonical_candidates(disks: &[Ball]) -> Result<CandidateSets> {
    if disks.is_empty() {
        return Err(Error::InvalidParameter("need at least one disk".into()));
    }
    if let Some(d) = disks.iter().find(|d| d.dim() != 2) {
        return Err(Error::DimensionMismatch { expected: 2, got: d.dim() });
    }
    check_disjoint_balls(disks)?;
    let window = event_window(disks) * (1.0 + 1e-9);
    let n = disks.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();

    let per_pair: Vec<Vec<Candidate>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let b = disk_bisector(&disks[i], &disks[j])?;
            let found = bisector_points(disks, i, j, window)?;
            let mut out = Vec::new();
            // Each event lies on all three bisectors of its triple; keep one copy.
            for &(u, t, l) in &found.events {
                if l > j {
                    out.push(Candidate { point: b.point_at(u), provenance: Provenance::BisectorEvent, distance: t });
                }
            }
            for &(u, t) in &found.minima {
                if !found.events.iter().any(|e| e.0 == u) {
                    out.push(Candidate { point: b.point_at(u), provenance: Provenance::IntervalMinimum, distance: t });
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;

    let mut points: Vec<Candidate> = disks
        .iter()
        .map(|d| Candidate { point: d.center.clone(), provenance: Provenance::ObjectPoint, distance: 0.0 })
        .collect();
    points.extend(per_pair.into_iter().flatten());
    let mut radii: Vec<f64> = std::iter::once(0.0).chain(points.iter().map(|c| c.distance)).collect();
    dedup_relative(&mut radii);
    Ok(CandidateSets { points, radii })
}
