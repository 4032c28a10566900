//! Hard instances built from planar graphs of maximum degree three.
//!
//! Segments: each edge of a straight-line drawing, trimmed near both ends.
//! Disks: each edge becomes an odd chain of unit disks with boundary gaps
//! `2(2/√3 - 1)`; at a degree-three vertex the three chain ends nearly touch
//! around a common center, at a degree-two vertex the two chain ends keep the
//! chain gap. A vertex cover of size `k` then yields a cover of radius
//! `2/√3 - 1` with `κ = k + (|disks| - |edges|)/2` centers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Ball, Point, Segment, PACKING_FACTOR, SQRT_3};

/// Boundary gap between consecutive disks of a chain.
pub const CHAIN_GAP: f64 = 2.0 * PACKING_FACTOR;
/// Center spacing of a chain of unit disks.
pub const LINK: f64 = 2.0 + CHAIN_GAP;
/// Required separation of non-neighboring disks.
pub const FAR_GAP: f64 = 2.5;

/// Distance between a disk of a degree-three triple and the second disk of
/// another edge at the same vertex.
pub fn cross_gap() -> f64 {
    2.0 * (13.0f64 / 3.0).sqrt() - 2.0
}

/// A drawn graph and gadget parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GadgetParams {
    pub vertices: Vec<[f64; 2]>,
    pub edges: Vec<(usize, usize)>,
    /// Size of a known vertex cover, carried into the companion budget.
    pub cover_size: usize,
    /// Trim length for segment gadgets.
    pub eps_shrink: f64,
    /// Boundary separation inside a degree-three triple.
    pub delta_sep: f64,
    /// Disks per edge (odd, at least 3); chosen automatically when absent.
    pub disks_per_edge: Option<Vec<usize>>,
}

impl GadgetParams {
    pub fn new(vertices: Vec<[f64; 2]>, edges: Vec<(usize, usize)>, cover_size: usize) -> Self {
        GadgetParams { vertices, edges, cover_size, eps_shrink: 0.01, delta_sep: 1e-4, disks_per_edge: None }
    }

    fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    fn validate_graph(&self) -> Result<()> {
        for &(a, b) in &self.edges {
            if a >= self.vertices.len() || b >= self.vertices.len() || a == b {
                return Err(Error::Gadget(format!("bad edge ({a}, {b})")));
            }
        }
        for v in 0..self.vertices.len() {
            if self.degree(v) > 3 {
                return Err(Error::Gadget(format!("vertex {v} has degree {}", self.degree(v))));
            }
        }
        Ok(())
    }

    fn segment(&self, e: usize) -> Segment {
        let (a, b) = self.edges[e];
        Segment::new(
            Point::xy(self.vertices[a][0], self.vertices[a][1]),
            Point::xy(self.vertices[b][0], self.vertices[b][1]),
        )
    }
}

/// Trimmed edge segments and the unchanged budget.
pub fn gen_vc_segments(params: &GadgetParams) -> Result<(Vec<Segment>, usize)> {
    params.validate_graph()?;
    let eps = params.eps_shrink;
    let segs: Vec<Segment> = (0..params.edges.len()).map(|e| params.segment(e)).collect();
    let min_len = segs.iter().map(Segment::len).fold(f64::INFINITY, f64::min);
    let mut d = f64::INFINITY;
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            let (a, b) = (params.edges[i], params.edges[j]);
            if a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1 {
                d = d.min(segs[i].dist_to_segment(&segs[j]));
            }
        }
    }
    if !(eps > 0.0 && eps < d / 2.0 && eps < min_len / 2.0) {
        return Err(Error::Gadget(format!(
            "trim {eps} must be positive and below half of both the non-adjacent distance {d} and the shortest edge {min_len}"
        )));
    }
    let trimmed = segs
        .iter()
        .map(|s| {
            let dir: Vec<f64> = s.q.0.iter().zip(&s.p.0).map(|(q, p)| (q - p) / s.len()).collect();
            Segment::new(s.p.offset(&dir, eps), s.q.offset(&dir, -eps))
        })
        .collect();
    Ok((trimmed, params.cover_size))
}

/// Disk gadget output.
#[derive(Debug, Clone)]
pub struct DiskGadget {
    pub disks: Vec<Ball>,
    /// Disk indices of each edge's chain, from its first to its second vertex.
    pub chains: Vec<Vec<usize>>,
    /// Budget matching a vertex cover of size `cover_size`.
    pub kappa: usize,
}

type V2 = [f64; 2];

fn add(a: V2, b: V2) -> V2 {
    [a[0] + b[0], a[1] + b[1]]
}
fn scale(a: V2, s: f64) -> V2 {
    [a[0] * s, a[1] * s]
}
fn minus(a: V2, b: V2) -> V2 {
    [a[0] - b[0], a[1] - b[1]]
}
fn length(a: V2) -> f64 {
    a[0].hypot(a[1])
}
fn unit(a: V2) -> V2 {
    scale(a, 1.0 / length(a))
}
fn angle_of(a: V2) -> f64 {
    a[1].atan2(a[0])
}
fn from_angle(t: f64) -> V2 {
    [t.cos(), t.sin()]
}

/// Where an edge's chain starts at one of its vertices.
#[derive(Debug, Clone, Copy)]
struct Port {
    /// Forced leading centers (one, or two for a straight triple exit).
    lead: [Option<V2>; 2],
    /// Direction the chain leaves in.
    dir: V2,
}

impl Port {
    fn last(&self) -> V2 {
        self.lead[1].or(self.lead[0]).expect("a port has a first center")
    }

    fn count(&self) -> usize {
        self.lead.iter().flatten().count()
    }
}

fn ports(params: &GadgetParams) -> Vec<[Port; 2]> {
    let delta = params.delta_sep;
    let mut out: Vec<[Option<Port>; 2]> = vec![[None, None]; params.edges.len()];
    for (v, &pos) in params.vertices.iter().enumerate() {
        let incident: Vec<(usize, usize)> = params
            .edges
            .iter()
            .enumerate()
            .filter_map(|(e, &(a, b))| {
                if a == v {
                    Some((e, 0))
                } else if b == v {
                    Some((e, 1))
                } else {
                    None
                }
            })
            .collect();
        let toward = |e: usize, side: usize| {
            let (a, b) = params.edges[e];
            let other = if side == 0 { b } else { a };
            unit(minus(params.vertices[other], pos))
        };
        match incident.len() {
            1 => {
                let (e, side) = incident[0];
                out[e][side] = Some(Port { lead: [Some(pos), None], dir: toward(e, side) });
            }
            2 => {
                let (e1, s1) = incident[0];
                let (e2, s2) = incident[1];
                let tau = unit(minus(toward(e1, s1), toward(e2, s2)));
                out[e1][s1] = Some(Port { lead: [Some(add(pos, scale(tau, LINK / 2.0))), None], dir: tau });
                let back = scale(tau, -1.0);
                out[e2][s2] = Some(Port { lead: [Some(add(pos, scale(back, LINK / 2.0))), None], dir: back });
            }
            3 => {
                let mut order: Vec<(usize, usize, f64)> =
                    incident.iter().map(|&(e, s)| (e, s, angle_of(toward(e, s)))).collect();
                order.sort_by(|a, b| a.2.total_cmp(&b.2));
                // Rotation of the 120° star closest to the drawn directions.
                let third = std::f64::consts::TAU / 3.0;
                let (sx, sy) = order.iter().enumerate().fold((0.0, 0.0), |(x, y), (i, o)| {
                    let t = o.2 - i as f64 * third;
                    (x + t.cos(), y + t.sin())
                });
                let phi = sy.atan2(sx);
                let reach = (2.0 + delta) / SQRT_3;
                for (i, &(e, s, _)) in order.iter().enumerate() {
                    let d = from_angle(phi + i as f64 * third);
                    let first = add(pos, scale(d, reach));
                    out[e][s] = Some(Port { lead: [Some(first), Some(add(first, scale(d, LINK)))], dir: d });
                }
            }
            _ => {}
        }
    }
    out.into_iter()
        .map(|p| [p[0].expect("edge endpoint has a port"), p[1].expect("edge endpoint has a port")])
        .collect()
}

/// Cubic Hermite curve from `a` to `b` with end tangents `ta`, `tb`.
fn hermite(a: V2, ta: V2, b: V2, tb: V2, s: f64) -> V2 {
    let (s2, s3) = (s * s, s * s * s);
    let h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
    let h10 = s3 - 2.0 * s2 + s;
    let h01 = -2.0 * s3 + 3.0 * s2;
    let h11 = s3 - s2;
    add(add(scale(a, h00), scale(ta, h10)), add(scale(b, h01), scale(tb, h11)))
}

/// Walks `links` chords of length `LINK` along the curve. Returns the points
/// after `a`, or `None` if the curve ends first.
fn chord_walk(curve: &dyn Fn(f64) -> V2, links: usize) -> Option<Vec<V2>> {
    const SAMPLES: usize = 4000;
    let mut out = Vec::with_capacity(links);
    let mut s = 0.0;
    let mut cur = curve(0.0);
    for _ in 0..links {
        // First sample beyond the chord length, then refine.
        let mut prev = s;
        let mut found = None;
        let mut i = (s * SAMPLES as f64).floor() as usize + 1;
        while i <= SAMPLES {
            let t = i as f64 / SAMPLES as f64;
            if length(minus(curve(t), cur)) >= LINK {
                found = Some((prev, t));
                break;
            }
            prev = t;
            i += 1;
        }
        let (mut lo, mut hi) = found?;
        for _ in 0..100 {
            let mid = 0.5 * (lo + hi);
            if length(minus(curve(mid), cur)) < LINK {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        s = hi;
        let p = curve(s);
        // Exact chord: place the point at distance LINK along the refined direction.
        cur = add(cur, scale(unit(minus(p, cur)), LINK));
        out.push(cur);
    }
    Some(out)
}

/// Centers strictly between `a` and `b`, `links` chords apart, ending
/// exactly `LINK` before `b`.
fn fit_chain(a: V2, da: V2, b: V2, db: V2, links: usize) -> Result<Vec<V2>> {
    if links == 1 {
        return if (length(minus(b, a)) - LINK).abs() <= 1e-9 {
            Ok(Vec::new())
        } else {
            Err(Error::Gadget("a one-link chain needs its ends exactly one link apart".into()))
        };
    }
    let span = length(minus(b, a));
    let reach = links as f64 * LINK;
    if span > reach + 1e-9 {
        return Err(Error::Gadget(format!("ends {span} apart cannot be bridged by {links} links; add disks")));
    }
    if span >= reach - 1e-9 {
        let dir = unit(minus(b, a));
        return Ok((1..links).map(|i| add(a, scale(dir, i as f64 * LINK))).collect());
    }
    // One knob: up to 1 it scales the end tangents, beyond 1 it adds a
    // sideways bulge that vanishes with its slope at both ends.
    let normal = {
        let d = unit(minus(b, a));
        let left = [-d[1], d[0]];
        let mid = hermite(a, scale(da, span), b, scale(db, -span), 0.5);
        let lean = minus(mid, scale(add(a, b), 0.5));
        if lean[0] * left[0] + lean[1] * left[1] < 0.0 {
            scale(left, -1.0)
        } else {
            left
        }
    };
    let shape = move |p: f64| {
        let (ta, tb) = (scale(da, p.min(1.0) * span), scale(db, -p.min(1.0) * span));
        let bulge = (p - 1.0).max(0.0) * span;
        move |s: f64| add(hermite(a, ta, b, tb, s), scale(normal, bulge * (std::f64::consts::PI * s).sin().powi(2)))
    };
    // Remaining distance to `b` after all but the last chord: positive once
    // the curve is long enough.
    let miss = |p: f64| -> f64 {
        match chord_walk(&shape(p), links - 1) {
            Some(pts) => length(minus(b, *pts.last().expect("at least one chord"))) - LINK,
            None => f64::NEG_INFINITY,
        }
    };
    let mut lo = 0.0;
    let mut hi = 1.0;
    while miss(hi) < 0.0 {
        hi *= 2.0;
        if hi > 64.0 {
            return Err(Error::Gadget("cannot bend the chain enough; remove disks or move vertices".into()));
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if miss(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let pts = chord_walk(&shape(hi), links - 1).expect("bracketed knob completes the walk");
    let last = *pts.last().expect("at least one chord");
    if (length(minus(b, last)) - LINK).abs() > 1e-10 {
        return Err(Error::Gadget("chain fitting did not converge".into()));
    }
    Ok(pts)
}

/// Chain disks per edge, the companion budget, and construction checks.
pub fn gen_vc_disks(params: &GadgetParams) -> Result<DiskGadget> {
    params.validate_graph()?;
    if !(params.delta_sep > 0.0) {
        return Err(Error::Gadget("delta_sep must be positive".into()));
    }
    if let Some(counts) = &params.disks_per_edge {
        if counts.len() != params.edges.len() || counts.iter().any(|&c| c < 3 || c % 2 == 0) {
            return Err(Error::Gadget("disks per edge must be odd and at least 3, one count per edge".into()));
        }
    }
    let ports = ports(params);
    let mut disks = Vec::new();
    let mut chains = Vec::new();
    for (e, [start, end]) in ports.iter().enumerate() {
        let fixed = start.count() + end.count();
        let (a, b) = (start.last(), end.last());
        let span = length(minus(b, a));
        let count = match &params.disks_per_edge {
            Some(c) => c[e],
            None => {
                // Leave a little slack for the bends.
                let links = (span * 1.02 / LINK).ceil() as usize;
                let mut n = links + fixed - 1;
                if n.is_multiple_of(2) {
                    n += 1;
                }
                n.max(3)
            }
        };
        if count < fixed + 1 {
            return Err(Error::Gadget(format!("edge {e} needs more than {count} disks")));
        }
        let links = count - fixed + 1;
        let middle = fit_chain(a, start.dir, b, end.dir, links)?;
        let mut centers: Vec<V2> = start.lead.iter().flatten().copied().collect();
        centers.extend(middle);
        let mut tail: Vec<V2> = end.lead.iter().flatten().copied().collect();
        tail.reverse();
        centers.extend(tail);
        let first = disks.len();
        disks.extend(centers.iter().map(|c| Ball::disk(c[0], c[1], 1.0)));
        chains.push((first..disks.len()).collect::<Vec<_>>());
    }
    let gadget = DiskGadget { kappa: params.cover_size + (disks.len() - params.edges.len()) / 2, disks, chains };
    check_disk_gadget(params, &gadget)?;
    Ok(gadget)
}

fn check_disk_gadget(params: &GadgetParams, g: &DiskGadget) -> Result<()> {
    let n = g.disks.len();
    let mut edge_of = vec![0; n];
    let mut pos_of = vec![0; n];
    for (e, chain) in g.chains.iter().enumerate() {
        for (p, &d) in chain.iter().enumerate() {
            edge_of[d] = e;
            pos_of[d] = p;
        }
        if chain.len() % 2 == 0 {
            return Err(Error::Gadget(format!("edge {e} got an even chain")));
        }
    }
    // The end of a chain at vertex v: position 0 (first endpoint) or last.
    let end_at = |d: usize| -> Option<usize> {
        let (a, b) = params.edges[edge_of[d]];
        let len = g.chains[edge_of[d]].len();
        if pos_of[d] == 0 {
            Some(a)
        } else if pos_of[d] == len - 1 {
            Some(b)
        } else {
            None
        }
    };
    let second_at = |d: usize| -> Option<usize> {
        let (a, b) = params.edges[edge_of[d]];
        let len = g.chains[edge_of[d]].len();
        if pos_of[d] == 1 {
            Some(a)
        } else if pos_of[d] + 2 == len {
            Some(b)
        } else {
            None
        }
    };
    for i in 0..n {
        for j in i + 1..n {
            let gap = g.disks[i].signed_gap(&g.disks[j]);
            if gap <= 0.0 {
                return Err(Error::Gadget(format!("disks {i} and {j} intersect")));
            }
            if edge_of[i] == edge_of[j] && pos_of[i].abs_diff(pos_of[j]) == 1 {
                continue;
            }
            let shared_end = end_at(i).is_some() && end_at(i) == end_at(j);
            if shared_end {
                continue;
            }
            // A triple disk against the second disk of another edge there.
            let triple_cross = [(i, j), (j, i)]
                .iter()
                .any(|&(x, y)| end_at(x).is_some_and(|v| params.degree(v) == 3 && second_at(y) == Some(v)));
            let need = if triple_cross { cross_gap() - 1e-3 } else { FAR_GAP };
            if gap <= need {
                return Err(Error::Gadget(format!(
                    "disks {i} and {j} are only {gap} apart (need {need}); bends too sharp"
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(arm: f64) -> GadgetParams {
        let mut v = vec![[0.0, 0.0]];
        for i in 0..3 {
            let t = std::f64::consts::FRAC_PI_2 + i as f64 * std::f64::consts::TAU / 3.0;
            v.push([arm * t.cos(), arm * t.sin()]);
        }
        GadgetParams::new(v, vec![(0, 1), (0, 2), (0, 3)], 1)
    }

    #[test]
    fn constants() {
        assert!((CHAIN_GAP - 0.30940).abs() < 1e-5);
        assert!((LINK - 4.0 / SQRT_3).abs() < 1e-15);
        assert!((cross_gap() - 2.16333).abs() < 1e-5);
    }

    #[test]
    fn single_edge_of_three() {
        let mut p = GadgetParams::new(vec![[0.0, 0.0], [2.0 * LINK, 0.0]], vec![(0, 1)], 1);
        p.disks_per_edge = Some(vec![3]);
        let g = gen_vc_disks(&p).unwrap();
        assert_eq!(g.disks.len(), 3);
        assert_eq!(g.kappa, 2);
        for w in g.chains[0].windows(2) {
            assert!((g.disks[w[0]].signed_gap(&g.disks[w[1]]) - CHAIN_GAP).abs() < 1e-9);
        }
        assert!(g.disks[1].center.0[1].abs() < 1e-9);
    }

    #[test]
    fn star_with_five_per_arm() {
        let mut p = star((2.0 + 1e-4) / SQRT_3 + 4.0 * LINK);
        p.disks_per_edge = Some(vec![5, 5, 5]);
        let g = gen_vc_disks(&p).unwrap();
        assert_eq!(g.disks.len(), 15);
        assert_eq!(g.kappa, 1 + 6);
        let firsts: Vec<&Ball> = g.chains.iter().map(|c| &g.disks[c[0]]).collect();
        for a in 0..3 {
            for b in a + 1..3 {
                assert!((firsts[a].signed_gap(firsts[b]) - 1e-4).abs() < 1e-9);
            }
            let other = &g.disks[g.chains[(a + 1) % 3][1]];
            assert!((firsts[a].signed_gap(other) - cross_gap()).abs() < 1e-3);
        }
    }

    #[test]
    fn bent_triangle_chains_keep_exact_gaps() {
        let p = GadgetParams::new(vec![[0.0, 0.0], [40.0, 0.0], [20.0, 33.0]], vec![(0, 1), (1, 2), (2, 0)], 2);
        let g = gen_vc_disks(&p).unwrap();
        for chain in &g.chains {
            assert!(chain.len() % 2 == 1);
            for w in chain.windows(2) {
                assert!((g.disks[w[0]].signed_gap(&g.disks[w[1]]) - CHAIN_GAP).abs() < 1e-9);
            }
        }
        assert_eq!(g.kappa, 2 + (g.disks.len() - 3) / 2);
    }

    #[test]
    fn rejects_bad_graphs() {
        let p = GadgetParams::new(
            vec![[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]],
            vec![(0, 1), (0, 2), (0, 3), (0, 4)],
            1,
        );
        assert!(matches!(gen_vc_disks(&p), Err(Error::Gadget(_))));
        let mut p = GadgetParams::new(vec![[0.0, 0.0], [50.0, 0.0]], vec![(0, 1)], 1);
        p.disks_per_edge = Some(vec![4]);
        assert!(gen_vc_disks(&p).is_err());
        // Far too many disks for a short edge forces sharp bends.
        p.disks_per_edge = Some(vec![61]);
        p.vertices[1] = [10.0, 0.0];
        assert!(gen_vc_disks(&p).is_err());
    }

    #[test]
    fn segment_gadgets() {
        let tri =
            GadgetParams::new(vec![[0.0, 0.0], [1.0, 0.0], [0.5, 3f64.sqrt() / 2.0]], vec![(0, 1), (1, 2), (2, 0)], 2);
        let (segs, k) = gen_vc_segments(&tri).unwrap();
        assert_eq!((segs.len(), k), (3, 2));
        // Ends at a shared vertex meeting at angle θ are 2ε·sin(θ/2) apart.
        for i in 0..3 {
            for j in i + 1..3 {
                assert!((segs[i].dist_to_segment(&segs[j]) - 0.01).abs() < 1e-12);
            }
        }
        let one = GadgetParams::new(vec![[0.0, 0.0], [3.0, 4.0]], vec![(0, 1)], 1);
        assert!((gen_vc_segments(&one).unwrap().0[0].len() - (5.0 - 0.02)).abs() < 1e-12);
        let path = GadgetParams::new(vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0]], vec![(0, 1), (1, 2)], 1);
        let (segs, _) = gen_vc_segments(&path).unwrap();
        let expected = 2.0 * 0.01 * (std::f64::consts::FRAC_PI_4).sin();
        assert!((segs[0].dist_to_segment(&segs[1]) - expected).abs() < 1e-12);
        let mut bad = tri.clone();
        bad.eps_shrink = 0.6;
        assert!(gen_vc_segments(&bad).is_err());
    }
}
