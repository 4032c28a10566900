//! Points at a common distance from several disjoint balls.
//!
//! Both solvers reduce `|x - c_i| = rho_i + t` to a linear system in `x`
//! parameterized by `t` (subtract the first equation from the others), then
//! substitute back into the first equation to get a quadratic in `t`.

use super::{dot, sub, Ball, Point};

/// Real roots of `a t^2 + b t + c = 0`, ascending. A vanishing leading
/// coefficient degrades to the linear case.
pub(crate) fn quadratic_roots(a: f64, b: f64, c: f64) -> Vec<f64> {
    let scale = a.abs().max(b.abs()).max(c.abs());
    if scale == 0.0 {
        return Vec::new();
    }
    if a.abs() <= 1e-14 * scale {
        if b.abs() <= 1e-14 * scale {
            return Vec::new();
        }
        return vec![-c / b];
    }
    let mut disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        if disc > -1e-12 * b * b.max(1.0) {
            disc = 0.0;
        } else {
            return Vec::new();
        }
    }
    let sq = disc.sqrt();
    let q = -0.5 * (b + b.signum() * sq);
    let mut roots = if q == 0.0 { vec![-b / (2.0 * a)] } else { vec![q / a, c / q] };
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|x, y| (*x - *y).abs() <= 1e-15 * x.abs().max(1.0));
    roots
}

fn residual_ok(balls: &[&Ball], p: &Point, t: f64) -> bool {
    let tol = 1e-9 * t.abs().max(1.0);
    balls.iter().all(|b| ((b.center.dist(p) - b.radius) - t).abs() <= tol)
}

/// All points outside three disjoint disks that are equidistant to them,
/// with the common distance. At most two in general position; collinear
/// centers are handled in a rotated frame and give mirror-image pairs.
pub fn apollonius_2d(disks: [&Ball; 3]) -> Vec<(Point, f64)> {
    let [d1, d2, d3] = disks;
    let c1 = &d1.center.0;
    let v2 = sub(&d2.center.0, c1);
    let v3 = sub(&d3.center.0, c1);
    let (r1, r2, r3) = (d1.radius, d2.radius, d3.radius);
    // 2 v_i . x = alpha_i + t beta_i, x relative to c1.
    let alpha2 = dot(&v2, &v2) - r2 * r2 + r1 * r1;
    let alpha3 = dot(&v3, &v3) - r3 * r3 + r1 * r1;
    let beta2 = 2.0 * (r1 - r2);
    let beta3 = 2.0 * (r1 - r3);

    let cross = v2[0] * v3[1] - v2[1] * v3[0];
    let n2 = dot(&v2, &v2).sqrt();
    let n3 = dot(&v3, &v3).sqrt();
    let mut out = Vec::new();

    if cross.abs() > 1e-12 * n2 * n3 {
        // Cramer on [2 v2; 2 v3] x = rhs.
        let det = 4.0 * cross;
        let solve = |a2: f64, a3: f64| {
            [(a2 * 2.0 * v3[1] - a3 * 2.0 * v2[1]) / det, (2.0 * v2[0] * a3 - 2.0 * v3[0] * a2) / det]
        };
        let p = solve(alpha2, alpha3);
        let q = solve(beta2, beta3);
        let a = q[0] * q[0] + q[1] * q[1] - 1.0;
        let b = 2.0 * (p[0] * q[0] + p[1] * q[1] - r1);
        let c = p[0] * p[0] + p[1] * p[1] - r1 * r1;
        for t in quadratic_roots(a, b, c) {
            if t <= 0.0 {
                continue;
            }
            let x = Point::xy(c1[0] + p[0] + t * q[0], c1[1] + p[1] + t * q[1]);
            out.push((x, t));
        }
    } else {
        if n2 == 0.0 {
            return out;
        }
        // Frame with e along v2; both constraints only fix the e-coordinate.
        let e = [v2[0] / n2, v2[1] / n2];
        let nrm = [-e[1], e[0]];
        let s2 = n2;
        let s3 = dot(&v3, &e);
        let coef = s3 * beta2 - s2 * beta3;
        let rhs = s2 * alpha3 - s3 * alpha2;
        if coef.abs() <= 1e-14 * (s3 * beta2).abs().max((s2 * beta3).abs()).max(1.0) {
            return out;
        }
        let t = rhs / coef;
        if t <= 0.0 {
            return out;
        }
        let xe = (alpha2 + t * beta2) / (2.0 * s2);
        let y2 = (r1 + t) * (r1 + t) - xe * xe;
        if y2 < -1e-12 * (r1 + t) * (r1 + t) {
            return out;
        }
        let y = y2.max(0.0).sqrt();
        let ys: &[f64] = if y == 0.0 { &[0.0] } else { &[-y, y] };
        for &yy in ys {
            let x = Point::xy(c1[0] + xe * e[0] + yy * nrm[0], c1[1] + xe * e[1] + yy * nrm[1]);
            out.push((x, t));
        }
    }
    out.retain(|(p, t)| residual_ok(&[d1, d2, d3], p, *t));
    out
}

/// Gaussian elimination with partial pivoting for a small dense system.
/// Returns `None` when the matrix is numerically singular.
fn solve_small(mut a: Vec<Vec<f64>>, mut rhs: Vec<Vec<f64>>) -> Option<Vec<Vec<f64>>> {
    let n = a.len();
    let scale = a.iter().flatten().fold(0.0f64, |m, x| m.max(x.abs()));
    if scale == 0.0 {
        return None;
    }
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[piv][col].abs() <= 1e-12 * scale {
            return None;
        }
        a.swap(col, piv);
        rhs.swap(col, piv);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            let (upper, lower) = a.split_at_mut(row);
            for (x, &p) in lower[0][col..n].iter_mut().zip(&upper[col][col..n]) {
                *x -= f * p;
            }
            for k in 0..rhs[row].len() {
                rhs[row][k] -= f * rhs[col][k];
            }
        }
    }
    let m = rhs[0].len();
    let mut x = vec![vec![0.0; m]; n];
    for row in (0..n).rev() {
        for k in 0..m {
            let mut s = rhs[row][k];
            for j in row + 1..n {
                s -= a[row][j] * x[j][k];
            }
            x[row][k] = s / a[row][row];
        }
    }
    Some(x)
}

/// Points in the affine hull of the centers of `balls` (any dimension) that
/// are equidistant to all of them, with the common distance `t >= 0`.
///
/// These are the only places a minimax center of a cluster can sit when the
/// given balls are exactly its farthest ones, so they double as an exhaustive
/// candidate set for exact small-instance oracles. A single ball yields its
/// own center at distance zero; two yield the gap midpoint.
pub fn equidistant_in_affine_hull(balls: &[&Ball]) -> Vec<(Point, f64)> {
    match balls.len() {
        0 => return Vec::new(),
        1 => return vec![(balls[0].center.clone(), 0.0)],
        2 => {
            let (a, b) = (balls[0], balls[1]);
            if a.signed_gap(b) <= 0.0 {
                return Vec::new();
            }
            return vec![(a.gap_midpoint(b), 0.5 * a.signed_gap(b))];
        }
        _ => {}
    }
    let c1 = &balls[0].center.0;
    let r1 = balls[0].radius;
    let vs: Vec<Vec<f64>> = balls[1..].iter().map(|b| sub(&b.center.0, c1)).collect();
    let m = vs.len();
    if m > c1.len() {
        return Vec::new();
    }
    let gram: Vec<Vec<f64>> = vs.iter().map(|vi| vs.iter().map(|vj| 2.0 * dot(vi, vj)).collect()).collect();
    let rhs: Vec<Vec<f64>> = balls[1..]
        .iter()
        .zip(&vs)
        .map(|(b, v)| vec![dot(v, v) - b.radius * b.radius + r1 * r1, 2.0 * (r1 - b.radius)])
        .collect();
    let Some(coef) = solve_small(gram, rhs) else {
        return Vec::new();
    };
    let dim = c1.len();
    let mut p = vec![0.0; dim];
    let mut q = vec![0.0; dim];
    for (j, v) in vs.iter().enumerate() {
        for k in 0..dim {
            p[k] += coef[j][0] * v[k];
            q[k] += coef[j][1] * v[k];
        }
    }
    let a = dot(&q, &q) - 1.0;
    let b = 2.0 * (dot(&p, &q) - r1);
    let c = dot(&p, &p) - r1 * r1;
    let mut out = Vec::new();
    for t in quadratic_roots(a, b, c) {
        if t < 0.0 {
            continue;
        }
        let x = Point((0..dim).map(|k| c1[k] + p[k] + t * q[k]).collect());
        if residual_ok(balls, &x, t) {
            out.push((x, t));
        }
    }
    out
}
