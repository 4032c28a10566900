//! Seeded random instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{Ball, Interval, Point};

/// Tries per object before giving up on rejection sampling.
const ATTEMPTS: usize = 10_000;

/// Disjoint disks with centers in `[0, side]^2`, radii in `radii`, and
/// boundary gaps of at least `min_gap`.
pub fn random_disks(n: usize, side: f64, radii: (f64, f64), min_gap: f64, seed: u64) -> Result<Vec<Ball>> {
    random_balls(n, 2, side, radii, min_gap, seed)
}

/// Disjoint unit disks with centers in `[0, side]^2`.
pub fn random_unit_disks(n: usize, side: f64, min_gap: f64, seed: u64) -> Result<Vec<Ball>> {
    random_disks(n, side, (1.0, 1.0), min_gap, seed)
}

/// Disjoint balls in `dim` dimensions by rejection sampling.
pub fn random_balls(n: usize, dim: usize, side: f64, radii: (f64, f64), min_gap: f64, seed: u64) -> Result<Vec<Ball>> {
    if !(radii.0 > 0.0 && radii.0 <= radii.1 && side > 0.0 && min_gap >= 0.0 && dim > 0) {
        return Err(Error::InvalidParameter("need 0 < rmin <= rmax, side > 0, gap >= 0, dim > 0".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Ball> = Vec::with_capacity(n);
    while out.len() < n {
        let placed = (0..ATTEMPTS).find_map(|_| {
            let center = Point::new((0..dim).map(|_| rng.random_range(0.0..=side)).collect());
            let radius = if radii.0 == radii.1 { radii.0 } else { rng.random_range(radii.0..=radii.1) };
            let b = Ball::new(center, radius);
            out.iter().all(|o| o.signed_gap(&b) >= min_gap).then_some(b)
        });
        match placed {
            Some(b) => out.push(b),
            None => {
                return Err(Error::InvalidParameter(format!(
                    "could only place {} of {n} balls; enlarge the box",
                    out.len()
                )))
            }
        }
    }
    Ok(out)
}

/// Intervals with left ends in `[0, span]` and lengths in `[0, max_len]`.
pub fn random_intervals(n: usize, span: f64, max_len: f64, seed: u64) -> Vec<Interval> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let a = rng.random_range(0.0..=span);
            Interval::new(a, a + rng.random_range(0.0..=max_len))
        })
        .collect()
}
