//! Radius approximation by searching candidate radii with the decider.
//!
//! Both searches stop at an adjacent pair (Infeasible, Cover). An Infeasible
//! verdict proves the probe is below the optimum, so the Cover side is at most
//! one step above it; monotonicity of the decider is never assumed.

use crate::canonical::{canonical_candidates, dedup_relative};
use crate::decider::{decide_unchecked, DeciderVerdict};
use crate::error::{Error, Result};
use crate::geometry::{check_disjoint_balls, Ball, Point, DECIDER_FACTOR};
use crate::instance::Solution;

/// Binary search over `values` (ascending, the last one known to yield a
/// cover) for an index whose verdict is Cover while its predecessor's is
/// Infeasible. Returns that cover, its index and the number of decider calls.
fn search_sorted(balls: &[Ball], k: usize, values: &[f64]) -> (Vec<Point>, usize, usize) {
    let mut calls = 0;
    // Invariant: lo is Infeasible (or -1), hi is Cover (or untested top).
    let (mut lo, mut hi): (isize, usize) = (-1, values.len() - 1);
    let mut best: Option<Vec<Point>> = None;
    while hi as isize - lo > 1 {
        let mid = ((lo + hi as isize) / 2) as usize;
        calls += 1;
        match decide_unchecked(balls, k, values[mid]) {
            DeciderVerdict::Cover { centers, .. } => {
                hi = mid;
                best = Some(centers);
            }
            DeciderVerdict::Infeasible => lo = mid as isize,
        }
    }
    let centers = match best {
        Some(c) => c,
        None => {
            calls += 1;
            match decide_unchecked(balls, k, values[hi]) {
                DeciderVerdict::Cover { centers, .. } => centers,
                DeciderVerdict::Infeasible => unreachable!("the top candidate radius is at least the optimum"),
            }
        }
    };
    (centers, hi, calls)
}

fn validate(balls: &[Ball], k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    check_disjoint_balls(balls)
}

fn trivial(balls: &[Ball], algorithm: &str) -> Result<Solution> {
    Solution::for_balls(balls, balls.iter().map(|b| b.center.clone()).collect(), algorithm, 0)
}

/// `(5+2√3)`-approximation for disjoint planar disks.
pub fn solve_disks(disks: &[Ball], k: usize) -> Result<Solution> {
    const ALG: &str = "disks";
    validate(disks, k)?;
    if let Some(d) = disks.iter().find(|d| d.dim() != 2) {
        return Err(Error::DimensionMismatch { expected: 2, got: d.dim() });
    }
    if k >= disks.len() {
        return trivial(disks, ALG);
    }
    let radii: Vec<f64> = canonical_candidates(disks)?.radii.into_iter().filter(|&r| r > 0.0).collect();
    let (centers, _, calls) = search_sorted(disks, k, &radii);
    Solution::for_balls(disks, centers, ALG, calls)
}

/// Candidate radii for balls: distances from a ball to another ball's
/// center and half gaps, positive values only.
pub fn ball_radius_candidates(balls: &[Ball]) -> Vec<f64> {
    let mut out = Vec::new();
    for (i, a) in balls.iter().enumerate() {
        for (j, b) in balls.iter().enumerate() {
            if i != j {
                out.push(a.dist_to_point(&b.center));
            }
            if i < j {
                out.push(0.5 * a.signed_gap(b));
            }
        }
    }
    out.retain(|&r| r > 0.0);
    dedup_relative(&mut out);
    out
}

/// `(5+2√3+ε)`-approximation for disjoint balls in any dimension.
pub fn solve_balls_dd(balls: &[Ball], k: usize, epsilon: f64) -> Result<Solution> {
    const ALG: &str = "balls";
    if !(epsilon > 0.0) {
        return Err(Error::InvalidParameter(format!("epsilon must be positive, got {epsilon}")));
    }
    validate(balls, k)?;
    if let Some(first) = balls.first() {
        if first.dim() < 2 {
            return Err(Error::InvalidParameter("balls need dimension at least 2".into()));
        }
    }
    if k >= balls.len() {
        return trivial(balls, ALG);
    }
    let coarse = ball_radius_candidates(balls);
    let (_, idx, mut calls) = search_sorted(balls, k, &coarse);
    let top = coarse[idx];
    // The optimum is at least top / c; refine geometrically up to top.
    let step = 1.0 + epsilon / DECIDER_FACTOR;
    let mut grid = Vec::new();
    let mut z = top / DECIDER_FACTOR;
    while z < top {
        grid.push(z);
        z *= step;
    }
    grid.push(top);
    let (centers, _, more) = search_sorted(balls, k, &grid);
    calls += more;
    Solution::for_balls(balls, centers, ALG, calls)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::brute_force_opt;
    use crate::instance::disks_to_objects;
    use rand::{Rng, SeedableRng};

    fn random_balls(rng: &mut impl Rng, n: usize, dim: usize) -> Vec<Ball> {
        let mut out: Vec<Ball> = Vec::new();
        while out.len() < n {
            let c: Vec<f64> = (0..dim).map(|_| rng.random_range(0.0..20.0)).collect();
            let b = Ball::new(Point(c), rng.random_range(0.2..3.0));
            if out.iter().all(|e| e.signed_gap(&b) > 1e-3) {
                out.push(b);
            }
        }
        out
    }

    #[test]
    fn pair_examples() {
        let disks = [Ball::disk(0.0, 0.0, 1.0), Ball::disk(4.0, 0.0, 1.0)];
        assert_eq!(solve_disks(&disks, 2).unwrap().radius, 0.0);
        let one = solve_disks(&disks, 1).unwrap();
        assert!(one.radius >= 1.0 - 1e-12 && one.radius <= DECIDER_FACTOR + 1e-9);
        assert!(solve_disks(&disks, 0).is_err());
    }

    #[test]
    fn random_planar_ratio_and_call_count() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for _ in 0..30 {
            let disks = random_balls(&mut rng, 6, 2);
            let opt = brute_force_opt(&disks_to_objects(&disks), 2).unwrap().radius;
            let sol = solve_disks(&disks, 2).unwrap();
            assert!(sol.centers.len() <= 2);
            assert!(sol.radius >= opt - 1e-9);
            assert!(sol.radius <= DECIDER_FACTOR * opt + 1e-9);
            let r_len = canonical_candidates(&disks).unwrap().radii.len() as f64;
            assert!(sol.decider_calls as f64 <= r_len.log2().ceil() + 2.0);
        }
    }

    #[test]
    fn balls_in_three_dimensions() {
        let two = [Ball::new(Point(vec![0.0; 3]), 1.0), Ball::new(Point(vec![6.0, 0.0, 0.0]), 1.0)];
        let sol = solve_balls_dd(&two, 1, 0.1).unwrap();
        assert!(sol.radius <= (DECIDER_FACTOR + 0.1) * 2.0 + 1e-9);
        assert_eq!(solve_balls_dd(&two, 2, 0.1).unwrap().radius, 0.0);
        assert!(solve_balls_dd(&two, 1, 0.0).is_err());

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        for _ in 0..20 {
            let balls = random_balls(&mut rng, 5, 3);
            let opt = brute_force_opt(&disks_to_objects(&balls), 2).unwrap().radius;
            let sol = solve_balls_dd(&balls, 2, 0.25).unwrap();
            assert!(sol.radius >= opt - 1e-9);
            assert!(sol.radius <= (DECIDER_FACTOR + 0.25) * opt + 1e-9);
            // Some coarse candidate brackets the optimum within the factor.
            assert!(ball_radius_candidates(&balls)
                .iter()
                .any(|&x| x >= opt - 1e-9 && x <= DECIDER_FACTOR * opt + 1e-9));
        }
    }
}
