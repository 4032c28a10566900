use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cwn_core::canonical::canonical_candidates;
use cwn_core::decider::{decide, DeciderVerdict};
use cwn_core::error::Error;
use cwn_core::fptas::{solve_unit_disks_small_k, FptasConfig};
use cwn_core::geometry::{cover_radius, ConvexObject};
use cwn_core::harness::bench::{run_bench, BenchAlgorithm, BenchPlan};
use cwn_core::harness::svg::render_svg;
use cwn_core::harness::{brute_force_opt, gen_vc_disks, gen_vc_segments, random_disks, random_intervals, GadgetParams};
use cwn_core::instance::{disks_to_objects, Instance, Solution};
use cwn_core::oned::solve_1d;
use cwn_core::optimizer::{solve_balls_dd, solve_disks};
use cwn_core::size_ptas::{solve_size, DEFAULT_SWAP};

/// k-center for disjoint convex neighborhoods.
#[derive(Parser, Debug)]
#[command(name = "cwn", version)]
struct Cli {
    /// Seed for generators and benchmarks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Render the instance and cover circles (planar instances only).
    #[arg(long, global = true)]
    svg: Option<PathBuf>,
    /// Allowed excess of the measured radius over the reported one.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tolerance: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Json,
}

#[derive(Args, Debug)]
struct InstanceArgs {
    /// Instance JSON file, or `-` for stdin.
    instance: PathBuf,
    /// Center budget; defaults to the instance's `k`.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SolveAlg {
    Disks,
    Balls,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the constant-factor decider at a radius.
    Decide {
        #[command(flatten)]
        input: InstanceArgs,
        #[arg(long)]
        radius: f64,
    },
    /// Constant-factor optimizer for disks or d-dimensional balls.
    Solve {
        #[command(flatten)]
        input: InstanceArgs,
        #[arg(long, value_enum, default_value_t = SolveAlg::Disks)]
        alg: SolveAlg,
        #[arg(long, default_value_t = 0.25)]
        epsilon: f64,
    },
    /// Exact optimum for intervals on a line.
    #[command(name = "solve-1d")]
    Solve1d {
        #[command(flatten)]
        input: InstanceArgs,
    },
    /// At most (1+ε)k centers at the optimal radius.
    #[command(name = "size-ptas")]
    SizePtas {
        #[command(flatten)]
        input: InstanceArgs,
        #[arg(long)]
        epsilon: f64,
        #[arg(long, default_value_t = DEFAULT_SWAP)]
        swap: usize,
    },
    /// (1+ε)-radius approximation for unit disks.
    Fptas {
        #[command(flatten)]
        input: InstanceArgs,
        #[arg(long)]
        epsilon: f64,
    },
    /// Exact optimum by exhaustive search (small instances).
    Oracle {
        #[command(flatten)]
        input: InstanceArgs,
    },
    /// Canonical candidate centers and radii.
    #[command(name = "gen-candidates")]
    GenCandidates {
        #[command(flatten)]
        input: InstanceArgs,
    },
    /// Instance generators.
    Gen {
        #[command(subcommand)]
        generator: Generator,
    },
    /// Time solvers on random instances.
    Bench {
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [BenchAlg::Disks, BenchAlg::OneD])]
        algs: Vec<BenchAlg>,
        #[arg(long, value_delimiter = ',', default_values_t = [8usize, 16, 32])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 0.5)]
        epsilon: f64,
        /// Seeds per size, counted up from `--seed`.
        #[arg(long, default_value_t = 3)]
        runs: u64,
        #[arg(long)]
        parallel: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum BenchAlg {
    Disks,
    OneD,
    SizePtas,
    Fptas,
}

impl From<BenchAlg> for BenchAlgorithm {
    fn from(a: BenchAlg) -> Self {
        match a {
            BenchAlg::Disks => BenchAlgorithm::Disks,
            BenchAlg::OneD => BenchAlgorithm::OneD,
            BenchAlg::SizePtas => BenchAlgorithm::SizePtas,
            BenchAlg::Fptas => BenchAlgorithm::Fptas,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Generator {
    /// Disjoint disks by rejection sampling in a square.
    #[command(name = "random-disks")]
    RandomDisks {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 20.0)]
        side: f64,
        #[arg(long, default_value_t = 0.5)]
        rmin: f64,
        #[arg(long, default_value_t = 1.5)]
        rmax: f64,
        #[arg(long, default_value_t = 0.0)]
        gap: f64,
    },
    /// Random intervals, intersections allowed.
    Intervals {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 100.0)]
        span: f64,
        #[arg(long, default_value_t = 5.0)]
        max_len: f64,
    },
    /// Trimmed edge segments of a drawn graph.
    #[command(name = "vc-segments")]
    VcSegments {
        /// Graph and gadget parameters as JSON.
        graph: PathBuf,
        #[arg(long)]
        eps: Option<f64>,
    },
    /// Unit-disk chains of a drawn graph of maximum degree three.
    #[command(name = "vc-disks")]
    VcDisks {
        graph: PathBuf,
        #[arg(long)]
        delta: Option<f64>,
    },
}

/// How a run ended, mapped onto the exit status.
enum Failure {
    Infeasible,
    Input(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Input(_)
            | Error::DimensionMismatch { .. }
            | Error::IntersectingObjects(..)
            | Error::InvalidParameter(_)
            | Error::UnsupportedObject(_)
            | Error::Gadget(_)
            | Error::OracleTooLarge { .. } => Failure::Input(e.to_string()),
            _ => Failure::Other(e.to_string()),
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin()).map_err(|e| Failure::Input(e.to_string()))
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
    }
}

fn load(input: &InstanceArgs) -> Result<(Instance, usize), Failure> {
    let inst = Instance::from_json(&read_text(&input.instance)?)?;
    let k = input.k.unwrap_or(inst.k);
    Ok((inst, k))
}

fn print_json(value: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("output serializes"));
}

struct Runner {
    svg: Option<PathBuf>,
    tolerance: f64,
}

impl Runner {
    fn emit(&self, objects: &[ConvexObject], sol: &Solution) -> Result<(), Failure> {
        if !objects.is_empty() {
            let measured = cover_radius(objects, &sol.centers)?;
            if measured > sol.radius + self.tolerance {
                return Err(Failure::Other(format!(
                    "measured radius {measured} exceeds reported {} beyond tolerance",
                    sol.radius
                )));
            }
        }
        self.draw(objects, &sol.centers, sol.radius)?;
        println!("{}", sol.to_json());
        Ok(())
    }

    fn draw(
        &self,
        objects: &[ConvexObject],
        centers: &[cwn_core::geometry::Point],
        radius: f64,
    ) -> Result<(), Failure> {
        if let Some(path) = &self.svg {
            std::fs::write(path, render_svg(objects, centers, radius))
                .map_err(|e| Failure::Other(format!("{}: {e}", path.display())))?;
        }
        Ok(())
    }
}

fn gadget_params(path: &Path) -> Result<GadgetParams, Failure> {
    serde_json::from_str(&read_text(path)?).map_err(|e| Failure::Input(e.to_string()))
}

fn run(cli: Cli) -> Result<(), Failure> {
    let runner = Runner { svg: cli.svg.clone(), tolerance: cli.tolerance };
    match cli.command {
        Command::Decide { input, radius } => {
            let (inst, k) = load(&input)?;
            let verdict = decide(&inst.balls()?, k, radius)?;
            if let DeciderVerdict::Cover { centers, .. } = &verdict {
                runner.draw(&inst.objects, centers, radius)?;
            }
            print_json(&verdict);
            if !verdict.is_cover() {
                return Err(Failure::Infeasible);
            }
        }
        Command::Solve { input, alg, epsilon } => {
            let (inst, k) = load(&input)?;
            let balls = inst.balls()?;
            let sol = match alg {
                SolveAlg::Disks => solve_disks(&balls, k)?,
                SolveAlg::Balls => solve_balls_dd(&balls, k, epsilon)?,
            };
            runner.emit(&inst.objects, &sol)?;
        }
        Command::Solve1d { input } => {
            let (inst, k) = load(&input)?;
            runner.emit(&inst.objects, &solve_1d(&inst.intervals()?, k)?)?;
        }
        Command::SizePtas { input, epsilon, swap } => {
            let (inst, k) = load(&input)?;
            runner.emit(&inst.objects, &solve_size(&inst.balls()?, k, epsilon, swap)?)?;
        }
        Command::Fptas { input, epsilon } => {
            let (inst, k) = load(&input)?;
            let sol = solve_unit_disks_small_k(&inst.balls()?, k, &FptasConfig::new(epsilon))?;
            runner.emit(&inst.objects, &sol)?;
        }
        Command::Oracle { input } => {
            let (inst, k) = load(&input)?;
            runner.emit(&inst.objects, &brute_force_opt(&inst.objects, k)?)?;
        }
        Command::GenCandidates { input } => {
            let (inst, _) = load(&input)?;
            print_json(&canonical_candidates(&inst.balls()?)?);
        }
        Command::Gen { generator } => {
            let inst = match generator {
                Generator::RandomDisks { n, k, side, rmin, rmax, gap } => {
                    let disks = random_disks(n, side, (rmin, rmax), gap, cli.seed)?;
                    Instance::new(2, k, disks_to_objects(&disks))?
                }
                Generator::Intervals { n, k, span, max_len } => {
                    let ivs = random_intervals(n, span, max_len, cli.seed);
                    Instance::new(1, k, ivs.into_iter().map(ConvexObject::Interval).collect())?
                }
                Generator::VcSegments { graph, eps } => {
                    let mut params = gadget_params(&graph)?;
                    if let Some(e) = eps {
                        params.eps_shrink = e;
                    }
                    let (segs, k) = gen_vc_segments(&params)?;
                    Instance::new(2, k, segs.into_iter().map(ConvexObject::Segment).collect())?
                }
                Generator::VcDisks { graph, delta } => {
                    let mut params = gadget_params(&graph)?;
                    if let Some(d) = delta {
                        params.delta_sep = d;
                    }
                    let g = gen_vc_disks(&params)?;
                    Instance::new(2, g.kappa, disks_to_objects(&g.disks))?
                }
            };
            runner.draw(&inst.objects, &[], 0.0)?;
            println!("{}", inst.to_json());
        }
        Command::Bench { algs, sizes, k, epsilon, runs, parallel } => {
            let plan = BenchPlan {
                algorithms: algs.into_iter().map(Into::into).collect(),
                sizes,
                k,
                epsilon,
                seeds: (cli.seed..cli.seed + runs).collect(),
                parallel,
            };
            print_json(&run_bench(&plan)?);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Format::Json = cli.format;
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Infeasible) => ExitCode::from(2),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Other(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
