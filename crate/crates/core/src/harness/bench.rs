//! Timing runs of the solvers over random instances.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::fptas::{solve_unit_disks_small_k, FptasConfig};
use crate::harness::generators::{random_disks, random_intervals, random_unit_disks};
use crate::instance::Solution;
use crate::oned::solve_1d;
use crate::optimizer::solve_disks;
use crate::size_ptas::{solve_size, DEFAULT_SWAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Hash)]
#[serde(rename_all = "kebab-case")]
pub enum BenchAlgorithm {
    Disks,
    OneD,
    SizePtas,
    Fptas,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BenchRecord {
    pub algorithm: BenchAlgorithm,
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    pub radius: f64,
    pub centers: usize,
    pub decider_calls: usize,
    pub millis: f64,
}

#[derive(Debug, Clone)]
pub struct BenchPlan {
    pub algorithms: Vec<BenchAlgorithm>,
    pub sizes: Vec<usize>,
    pub k: usize,
    pub epsilon: f64,
    pub seeds: Vec<u64>,
    pub parallel: bool,
}

fn run_one(alg: BenchAlgorithm, n: usize, k: usize, epsilon: f64, seed: u64) -> Result<BenchRecord> {
    // Box side grows with sqrt(n) so density stays roughly constant.
    let side = 6.0 * (n as f64).sqrt();
    let start = Instant::now();
    let sol: Solution = match alg {
        BenchAlgorithm::Disks => solve_disks(&random_disks(n, side, (0.5, 1.5), 0.05, seed)?, k)?,
        BenchAlgorithm::OneD => solve_1d(&random_intervals(n, 10.0 * n as f64, 5.0, seed), k)?,
        BenchAlgorithm::SizePtas => {
            solve_size(&random_disks(n, side, (0.5, 1.5), 0.05, seed)?, k, epsilon, DEFAULT_SWAP)?
        }
        BenchAlgorithm::Fptas => {
            solve_unit_disks_small_k(&random_unit_disks(n, side, 0.05, seed)?, k, &FptasConfig::new(epsilon))?
        }
    };
    Ok(BenchRecord {
        algorithm: alg,
        n,
        k,
        seed,
        radius: sol.radius,
        centers: sol.centers.len(),
        decider_calls: sol.decider_calls,
        millis: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Runs every (algorithm, size, seed) combination. Timings of parallel runs
/// include contention.
pub fn run_bench(plan: &BenchPlan) -> Result<Vec<BenchRecord>> {
    let jobs: Vec<(BenchAlgorithm, usize, u64)> = plan
        .algorithms
        .iter()
        .flat_map(|&a| plan.sizes.iter().flat_map(move |&n| plan.seeds.iter().map(move |&s| (a, n, s))))
        .collect();
    let run = |&(a, n, s): &(BenchAlgorithm, usize, u64)| run_one(a, n, plan.k, plan.epsilon, s);
    if plan.parallel {
        jobs.par_iter().map(run).collect()
    } else {
        jobs.iter().map(run).collect()
    }
}
