//! End-to-end acceptance checks, one line of output per criterion.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use cwn_core::canonical::canonical_candidates;
use cwn_core::decider::{decide, min_edge_cover, packing_admits_three, DeciderVerdict, ProximityGraph};
use cwn_core::fptas::{solve_unit_disks_small_k, FptasConfig};
use cwn_core::geometry::{cover_radius, Ball, ConvexObject, Point, DECIDER_FACTOR, PACKING_FACTOR, SQRT_3};
use cwn_core::harness::gadgets::{cross_gap, CHAIN_GAP};
use cwn_core::harness::{brute_force_opt, gen_vc_disks, random_balls, random_disks, random_intervals, GadgetParams};
use cwn_core::instance::disks_to_objects;
use cwn_core::oned::solve_1d;
use cwn_core::optimizer::{solve_balls_dd, solve_disks};
use cwn_core::size_ptas::{solve_size, DEFAULT_SWAP};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !($cond) {
            return Err(format!($($msg)+));
        }
    };
}

fn opt(disks: &[Ball], k: usize) -> f64 {
    brute_force_opt(&disks_to_objects(disks), k).expect("oracle runs").radius
}

/// Random disjoint disks with `n` in `lo..=hi`.
fn disk_corpus(count: usize, lo: usize, hi: usize, max_k: usize, seed: u64) -> Vec<(Vec<Ball>, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.random_range(lo..=hi);
            let k = rng.random_range(1..=max_k.min(n - 1).max(1));
            (random_disks(n, 20.0, (0.3, 2.0), 0.05, seed * 1000 + i as u64).expect("room for disks"), k)
        })
        .collect()
}

fn one_d_exactness() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst_tests = 0.0f64;
    for i in 0..500 {
        let n = rng.random_range(1..=40);
        let k = rng.random_range(1..=10);
        let ivs = random_intervals(n, 100.0, 8.0, i);
        let sol = solve_1d(&ivs, k).map_err(|e| e.to_string())?;
        let objs: Vec<ConvexObject> = ivs.iter().copied().map(ConvexObject::Interval).collect();
        let best = brute_force_opt(&objs, k).map_err(|e| e.to_string())?.radius;
        ensure!((sol.radius - best).abs() <= 1e-9, "instance {i}: {} vs oracle {best}", sol.radius);
        let bound = 8.0 * (2.0 * n as f64).log2();
        ensure!(sol.decider_calls as f64 <= bound, "instance {i}: {} tests > {bound}", sol.decider_calls);
        worst_tests = worst_tests.max(sol.decider_calls as f64 / bound);
    }
    let secs = start.elapsed().as_secs_f64();
    ensure!(secs < 5.0, "took {secs:.2} s");
    Ok(format!("500 instances in {secs:.2} s, max tests/bound {worst_tests:.2}"))
}

fn decider_contract(corpus: &[(Vec<Ball>, usize)], optima: &[f64]) -> Outcome {
    for (i, ((disks, k), &best)) in corpus.iter().zip(optima).enumerate() {
        for r in [best, 1.1 * best, 2.0 * best] {
            let centers = match decide(disks, *k, r).map_err(|e| e.to_string())? {
                DeciderVerdict::Cover { centers, .. } => centers,
                DeciderVerdict::Infeasible => {
                    return Err(format!("instance {i}: infeasible at r = {r} ≥ r_opt = {best}"))
                }
            };
            ensure!(centers.len() <= *k, "instance {i}: {} centers", centers.len());
            let got = cover_radius(&disks_to_objects(disks), &centers).map_err(|e| e.to_string())?;
            ensure!(got <= DECIDER_FACTOR * r + 1e-9, "instance {i}: cover radius {got} at r = {r}");
        }
        for r in [best / DECIDER_FACTOR * (1.0 - 1e-6), best / (2.0 * DECIDER_FACTOR)] {
            let verdict = decide(disks, *k, r).map_err(|e| e.to_string())?;
            ensure!(!verdict.is_cover(), "instance {i}: cover at r = {r} below r_opt/(5+2√3)");
        }
    }
    Ok(format!("{} instances", corpus.len()))
}

fn optimizer_ratio(corpus: &[(Vec<Ball>, usize)], optima: &[f64]) -> Outcome {
    let mut ratios = Vec::new();
    for (i, ((disks, k), &best)) in corpus.iter().zip(optima).enumerate() {
        let sol = solve_disks(disks, *k).map_err(|e| e.to_string())?;
        let ratio = sol.radius / best;
        ensure!((1.0 - 1e-9..=DECIDER_FACTOR + 1e-9).contains(&ratio), "instance {i}: ratio {ratio}");
        ratios.push(ratio);
    }
    ratios.sort_by(f64::total_cmp);
    let median = ratios[ratios.len() / 2];
    Ok(format!("median ratio {median:.4}, max {:.4}", ratios.last().unwrap()))
}

fn canonical_containment() -> Outcome {
    let corpus = disk_corpus(200, 2, 6, 1, 4);
    let mut checked = 0;
    for (i, (disks, _)) in corpus.iter().enumerate() {
        let radii = canonical_candidates(disks).map_err(|e| e.to_string())?.radii;
        for k in 1..=disks.len() {
            let best = opt(disks, k);
            let near = radii.iter().map(|r| (r - best).abs()).fold(f64::INFINITY, f64::min);
            ensure!(near <= 1e-9, "instance {i}, k = {k}: r_opt {best} is {near:e} from the candidates");
            checked += 1;
        }
    }
    Ok(format!("{checked} (instance, k) pairs"))
}

fn packing() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut near_misses = 0;
    for _ in 0..100_000 {
        let r = rng.random_range(0.1..3.0);
        let s = Point::xy(0.0, 0.0);
        let mut disks: Vec<Ball> = Vec::new();
        // Aim each disk near the threshold distance from s, backing off
        // after each rejection since three cannot all fit.
        let mut spread = 0.1;
        while disks.len() < 3 {
            let radius = r * rng.random_range(1.0..1.5);
            let reach = radius + PACKING_FACTOR * r * rng.random_range(0.9..1.0 + spread);
            let t = rng.random_range(0.0..std::f64::consts::TAU);
            let d = Ball::disk(reach * t.cos(), reach * t.sin(), radius);
            if disks.iter().all(|o| o.signed_gap(&d) > 0.0) {
                disks.push(d);
            } else {
                spread += 0.05;
            }
        }
        ensure!(!packing_admits_three(&disks, &s, r), "three disjoint disks near {s:?} at r = {r}: {disks:?}");
        if disks.iter().filter(|d| d.dist_to_point(&s) <= PACKING_FACTOR * r).count() == 2 {
            near_misses += 1;
        }
    }
    let r = 1.7;
    let gap = 1e-9;
    let pair = [Ball::disk(-(r + gap), 0.0, r), Ball::disk(r + gap, 0.0, r)];
    let s = Point::xy(0.0, 0.0);
    let within = pair.iter().filter(|d| d.dist_to_point(&s) <= PACKING_FACTOR * r).count();
    ensure!(within == 2, "the touching pair should both be within reach");
    Ok(format!("100000 triples, none admitted; {near_misses} with two within reach; tight pair attains two"))
}

fn size_ptas() -> Outcome {
    let corpus = disk_corpus(100, 2, 6, 3, 6);
    let epsilons = [0.34, 0.5, 1.0];
    for (i, (disks, k)) in corpus.iter().enumerate() {
        let eps = epsilons[i % 3];
        let sol = solve_size(disks, *k, eps, DEFAULT_SWAP).map_err(|e| e.to_string())?;
        let best = opt(disks, *k);
        let budget = ((1.0 + eps) * *k as f64 + 1e-9).floor() as usize;
        ensure!(sol.centers.len() <= budget, "instance {i}: {} centers > {budget}", sol.centers.len());
        let got = cover_radius(&disks_to_objects(disks), &sol.centers).map_err(|e| e.to_string())?;
        ensure!(got <= best + 1e-9, "instance {i}: radius {got} > r_opt {best}");
    }
    Ok("100 instances".into())
}

fn fptas() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut small, mut large) = (0, 0);
    for i in 0..100u64 {
        let (n, k, eps) = if i % 2 == 0 {
            (rng.random_range(2..=7), rng.random_range(1..=2), [0.25, 0.5, 1.0][rng.random_range(0..3)])
        } else {
            (rng.random_range(17..=24), 1, 1.0)
        };
        let side = 3.0 * (n as f64).sqrt() + 4.0;
        let disks = random_disks(n, side, (1.0, 1.0), 0.05, 100 + i).map_err(|e| e.to_string())?;
        let cfg = FptasConfig::new(eps);
        let sol = solve_unit_disks_small_k(&disks, k, &cfg).map_err(|e| e.to_string())?;
        let best = opt(&disks, k);
        let got = cover_radius(&disks_to_objects(&disks), &sol.centers).map_err(|e| e.to_string())?;
        ensure!(sol.centers.len() <= k, "instance {i}: too many centers");
        ensure!(got <= (1.0 + eps) * best + 1e-9, "instance {i}: {got} > (1+{eps})·{best}");
        if cfg.is_small(n, k) {
            ensure!((got - best).abs() <= 1e-9 * best.max(1.0), "instance {i}: small branch {got} ≠ {best}");
            small += 1;
        } else {
            large += 1;
        }
    }
    ensure!(small > 0 && large > 0, "both branches must be exercised");
    Ok(format!("{small} small-branch, {large} large-branch instances"))
}

fn balls_3d() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let eps = 0.25;
    let mut worst = 0.0f64;
    for i in 0..50u64 {
        let n = rng.random_range(2..=5);
        let k = rng.random_range(1..=2usize.min(n - 1));
        let balls = random_balls(n, 3, 12.0, (0.3, 2.0), 0.05, 200 + i).map_err(|e| e.to_string())?;
        let sol = solve_balls_dd(&balls, k, eps).map_err(|e| e.to_string())?;
        let best = opt(&balls, k);
        let ratio = sol.radius / best;
        ensure!(ratio <= DECIDER_FACTOR + eps + 1e-9, "instance {i}: ratio {ratio}");
        worst = worst.max(ratio);
    }
    Ok(format!("50 instances, max ratio {worst:.4}"))
}

/// Small drawn graphs of maximum degree three with their minimum vertex
/// cover sizes.
fn gadget_graphs() -> Vec<(&'static str, GadgetParams)> {
    let polar = |r: f64, deg: f64| [r * deg.to_radians().cos(), r * deg.to_radians().sin()];
    let polygon = |m: usize, r: f64| (0..m).map(|i| polar(r, 360.0 * i as f64 / m as f64)).collect::<Vec<_>>();
    let cycle = |m: usize| (0..m).map(|i| (i, (i + 1) % m)).collect::<Vec<_>>();
    let mut spider = vec![[0.0, 0.0]];
    for a in [90.0, 210.0, 330.0] {
        spider.push(polar(35.0, a));
        spider.push(polar(70.0, a + 15.0));
    }
    let h = vec![
        [0.0, 0.0],
        [42.0, 0.0],
        polar(35.0, 120.0),
        polar(35.0, 240.0),
        [42.0 + polar(35.0, 60.0)[0], polar(35.0, 60.0)[1]],
        [42.0 + polar(35.0, -60.0)[0], polar(35.0, -60.0)[1]],
    ];
    vec![
        ("edge", GadgetParams::new(vec![[0.0, 0.0], [28.0, 0.0]], vec![(0, 1)], 1)),
        ("path-3", GadgetParams::new(vec![[0.0, 0.0], [28.0, 4.2], [56.0, 0.0]], vec![(0, 1), (1, 2)], 1)),
        (
            "path-4",
            GadgetParams::new(vec![[0.0, 0.0], [28.0, 5.6], [56.0, 0.0], [84.0, 7.0]], vec![(0, 1), (1, 2), (2, 3)], 2),
        ),
        (
            "star",
            GadgetParams::new(
                vec![[0.0, 0.0], polar(35.0, 90.0), polar(35.0, 210.0), polar(35.0, 330.0)],
                vec![(0, 1), (0, 2), (0, 3)],
                1,
            ),
        ),
        ("spider", GadgetParams::new(spider, vec![(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)], 3)),
        ("h-tree", GadgetParams::new(h, vec![(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)], 2)),
        ("triangle", GadgetParams::new(polygon(3, 35.0), cycle(3), 2)),
        ("square", GadgetParams::new(polygon(4, 35.0), cycle(4), 2)),
        ("hexagon", GadgetParams::new(polygon(6, 42.0), cycle(6), 3)),
    ]
}

fn gadget_fidelity() -> Outcome {
    let mut disks_total = 0;
    for (name, params) in gadget_graphs() {
        let g = gen_vc_disks(&params).map_err(|e| format!("{name}: {e}"))?;
        for chain in &g.chains {
            for w in chain.windows(2) {
                let gap = g.disks[w[0]].signed_gap(&g.disks[w[1]]);
                ensure!((gap - CHAIN_GAP).abs() <= 1e-9, "{name}: chain gap {gap}");
            }
        }
        ensure!(
            g.kappa * 2 == params.cover_size * 2 + g.disks.len() - params.edges.len(),
            "{name}: κ = {} does not match the formula",
            g.kappa
        );
        // Every degree-three triple disk against the other edges' second disks.
        for v in 0..params.vertices.len() {
            let ends: Vec<(usize, usize)> = params
                .edges
                .iter()
                .zip(&g.chains)
                .filter_map(|(&(a, b), c)| {
                    if a == v {
                        Some((c[0], c[1]))
                    } else if b == v {
                        Some((c[c.len() - 1], c[c.len() - 2]))
                    } else {
                        None
                    }
                })
                .collect();
            if ends.len() == 3 {
                for (x, &(first, _)) in ends.iter().enumerate() {
                    for (y, &(_, second)) in ends.iter().enumerate() {
                        if x != y {
                            let d = g.disks[first].signed_gap(&g.disks[second]);
                            ensure!((d - cross_gap()).abs() <= 1e-3, "{name}: cross distance {d}");
                        }
                    }
                }
            }
        }
        let mut tight = params.clone();
        tight.delta_sep = 1e-7;
        let g = gen_vc_disks(&tight).map_err(|e| format!("{name}: {e}"))?;
        let r = 2.0 / SQRT_3 - 1.0 + 1e-6;
        let verdict = decide(&g.disks, g.kappa, r).map_err(|e| e.to_string())?;
        ensure!(verdict.is_cover(), "{name}: no cover with κ = {} at r = {r}", g.kappa);
        disks_total += g.disks.len();
    }
    Ok(format!("9 graphs, {disks_total} disks"))
}

/// Fewest edges covering every vertex, by dynamic programming over vertex
/// subsets.
fn exhaustive_edge_cover(n: usize, edges: &[(usize, usize)]) -> usize {
    let full = (1usize << n) - 1;
    let mut best = vec![usize::MAX; full + 1];
    best[0] = 0;
    for mask in 1..=full {
        let u = mask.trailing_zeros() as usize;
        for &(a, b) in edges {
            if a == u || b == u {
                let rest = mask & !(1 << a) & !(1 << b);
                if best[rest] != usize::MAX {
                    best[mask] = best[mask].min(best[rest] + 1);
                }
            }
        }
    }
    best[full]
}

fn edge_cover() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut graphs = 0;
    let mut seed = 0;
    while graphs < 250 {
        seed += 1;
        let n = rng.random_range(2..=10);
        let disks = random_disks(n, 12.0, (0.3, 1.5), 0.05, 300 + seed).map_err(|e| e.to_string())?;
        let r = rng.random_range(0.2..2.5);
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if disks[a].signed_gap(&disks[b]) <= 2.0 * r {
                    edges.push((a, b));
                }
            }
        }
        // Keep the vertices that have an edge, as the decider does.
        let live: Vec<usize> = (0..n).filter(|&v| edges.iter().any(|&(a, b)| a == v || b == v)).collect();
        if live.len() < 2 {
            continue;
        }
        let index = |v: usize| live.iter().position(|&x| x == v).unwrap();
        let edges: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (index(a), index(b))).collect();
        let g = ProximityGraph::new(live.len(), edges.iter().copied());
        let cover = min_edge_cover(&g).map_err(|e| e.to_string())?;
        let mut seen = vec![false; live.len()];
        for &(a, b) in &cover {
            ensure!(edges.contains(&(a.min(b), a.max(b))), "cover uses a non-edge ({a}, {b})");
            seen[a] = true;
            seen[b] = true;
        }
        ensure!(seen.iter().all(|&s| s), "cover misses a vertex");
        let want = exhaustive_edge_cover(live.len(), &edges);
        ensure!(cover.len() == want, "graph {graphs}: {} edges, exhaustive {want}", cover.len());
        graphs += 1;
    }
    Ok(format!("{graphs} graphs"))
}

fn main() {
    let corpus = disk_corpus(300, 2, 8, 3, 2);
    let optima: Vec<f64> = corpus.iter().map(|(d, k)| opt(d, *k)).collect();
    let criteria: Vec<Criterion> = vec![
        ("1 one-dimensional exactness", Box::new(one_d_exactness)),
        ("2 decider contract", Box::new(|| decider_contract(&corpus, &optima))),
        ("3 optimizer ratio", Box::new(|| optimizer_ratio(&corpus, &optima))),
        ("4 canonical containment", Box::new(canonical_containment)),
        ("5 packing bound", Box::new(packing)),
        ("6 size approximation", Box::new(size_ptas)),
        ("7 unit-disk radius approximation", Box::new(fptas)),
        ("8 balls in three dimensions", Box::new(balls_3d)),
        ("9 gadget fidelity", Box::new(gadget_fidelity)),
        ("10 minimum edge cover", Box::new(edge_cover)),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or(p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} ({secs:.1} s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why} ({secs:.1} s)");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
