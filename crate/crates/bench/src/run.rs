use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use ebsearch::baselines::{astar_search, astar_search_float, idastar_search, oracle_search, FloatTolerance, RawCosts};
use ebsearch::domains::graph::ExplicitGraph;
use ebsearch::domains::pancake::{generate_hard_pancakes, pancake_space, PancakePuzzle};
use ebsearch::domains::random::{random_space, RandomSpec};
use ebsearch::domains::tiles::{stp_space, TilePuzzle};
use ebsearch::domains::{korf100, load_korf_instances, mero_graph, MeroGraph};
use ebsearch::ebsss::drive;
use ebsearch::{
    validate_solution, BoundedDijkstra, Dfbnb, EbParams, Instrumented, IterationLog, Path, Solution, StateSpace,
};
use rayon::prelude::*;
use thiserror::Error;

use crate::config::{Algorithm, ConfigError, Domain, Engine, ExperimentConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunStatus {
    Solved,
    Timeout,
    /// The search ended without a solution or failed an integrity check.
    Failed,
}

impl RunStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RunStatus::Solved => "solved",
            RunStatus::Timeout => "timeout",
            RunStatus::Failed => "failed",
        }
    }
}

/// Result of one algorithm on one instance.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub domain: Domain,
    pub algorithm: Algorithm,
    pub label: String,
    pub c1: String,
    pub c2: String,
    pub delta: u64,
    pub resolution: u64,
    pub seed: u64,
    pub instance: u64,
    pub status: RunStatus,
    /// Solution cost in integer search units.
    pub cost_int: Option<u64>,
    /// Solution cost in the domain's own (unscaled) units.
    pub cost_raw: Option<f64>,
    pub expansions: u64,
    pub generations: u64,
    pub heuristic_evals: u64,
    pub wall_time: Duration,
    pub iterations: Vec<IterationLog>,
    pub message: Option<String>,
}

impl RunRecord {
    /// Copy with the wall time zeroed, for byte-for-byte comparisons.
    pub fn without_timing(&self) -> RunRecord {
        RunRecord {
            wall_time: Duration::ZERO,
            ..self.clone()
        }
    }
}

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("instance {0} does not exist in this domain")]
    NoSuchInstance(u64),
    #[error("cannot build instance {id}: {message}")]
    Instance { id: u64, message: String },
    #[error(transparent)]
    Korf(#[from] ebsearch::domains::korf::KorfError),
    #[error("cannot start worker pool: {0}")]
    Pool(String),
}

/// A domain space the harness can run every algorithm on.
pub trait BenchSpace: StateSpace + Sync {
    fn raw_path_cost(&self, path: &Path<Self::State, Self::Action>) -> f64;

    /// A* on real-valued costs, if the domain has them.
    fn float_astar(&self, _space: &Instrumented<&Self>) -> Option<Option<Solution<Self::State, Self::Action>>> {
        None
    }
}

impl BenchSpace for TilePuzzle {
    fn raw_path_cost(&self, path: &Path<Self::State, Self::Action>) -> f64 {
        RawCosts::raw_path_cost(self, path)
    }
    fn float_astar(&self, space: &Instrumented<&Self>) -> Option<Option<Solution<Self::State, Self::Action>>> {
        Some(astar_search_float(space, FloatTolerance::default()))
    }
}

impl BenchSpace for PancakePuzzle {
    fn raw_path_cost(&self, path: &Path<Self::State, Self::Action>) -> f64 {
        RawCosts::raw_path_cost(self, path)
    }
    fn float_astar(&self, space: &Instrumented<&Self>) -> Option<Option<Solution<Self::State, Self::Action>>> {
        Some(astar_search_float(space, FloatTolerance::default()))
    }
}

impl BenchSpace for MeroGraph {
    fn raw_path_cost(&self, path: &Path<Self::State, Self::Action>) -> f64 {
        path.g().get() as f64
    }
}

impl BenchSpace for ExplicitGraph {
    fn raw_path_cost(&self, path: &Path<Self::State, Self::Action>) -> f64 {
        path.g().get() as f64
    }
}

/// Runs every instance of the configured range, in parallel on
/// `config.workers` threads, and returns the records in instance order.
pub fn run_suite(config: &ExperimentConfig) -> Result<Vec<RunRecord>, SuiteError> {
    let params = config.params()?;
    let ids = config.instances.ids();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers.max(1))
        .build()
        .map_err(|e| SuiteError::Pool(e.to_string()))?;
    match config.domain {
        Domain::Stp => {
            let all = match &config.korf_file {
                Some(path) => load_korf_instances(path)?,
                None => korf100(),
            };
            let spaces = ids
                .iter()
                .map(|&id| {
                    let idx = id.checked_sub(1).ok_or(SuiteError::NoSuchInstance(id))? as usize;
                    let state = *all.get(idx).ok_or(SuiteError::NoSuchInstance(id))?;
                    stp_space(state, config.resolution).map_err(|e| SuiteError::Instance {
                        id,
                        message: e.to_string(),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(run_all(&pool, config, &params, &ids, &spaces))
        }
        Domain::Pancake => {
            let count = ids.iter().copied().max().unwrap_or(0) as usize;
            let all = generate_hard_pancakes(count, config.pancake_size, config.seed);
            let spaces = ids
                .iter()
                .map(|&id| {
                    let idx = id.checked_sub(1).ok_or(SuiteError::NoSuchInstance(id))? as usize;
                    pancake_space(all[idx], config.resolution).map_err(|e| SuiteError::Instance {
                        id,
                        message: e.to_string(),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(run_all(&pool, config, &params, &ids, &spaces))
        }
        Domain::Mero => {
            let spaces = ids
                .iter()
                .map(|&k| match u32::try_from(k) {
                    Ok(k) if k >= 1 => Ok(mero_graph(k)),
                    _ => Err(SuiteError::NoSuchInstance(k)),
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(run_all(&pool, config, &params, &ids, &spaces))
        }
        Domain::Random => {
            let spec = RandomSpec {
                n_states: config.random_states,
                ..RandomSpec::default()
            };
            let spaces: Vec<ExplicitGraph> = ids
                .iter()
                .map(|&id| random_space(random_seed(config.seed, id), &spec))
                .collect();
            Ok(run_all(&pool, config, &params, &ids, &spaces))
        }
    }
}

/// Seed of random instance `id` under suite seed `seed`.
pub fn random_seed(seed: u64, id: u64) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ id
}

fn run_all<P: BenchSpace>(
    pool: &rayon::ThreadPool,
    config: &ExperimentConfig,
    params: &EbParams,
    ids: &[u64],
    spaces: &[P],
) -> Vec<RunRecord> {
    pool.install(|| {
        ids.par_iter()
            .zip(spaces.par_iter())
            .map(|(&id, space)| run_instance(config, params, id, space))
            .collect()
    })
}

/// Runs the configured algorithm on one space and validates the answer.
pub fn run_instance<P: BenchSpace>(config: &ExperimentConfig, params: &EbParams, id: u64, space: &P) -> RunRecord {
    let mut record = RunRecord {
        domain: config.domain,
        algorithm: config.algorithm,
        label: config.label(),
        c1: config.c1.to_string(),
        c2: config.c2.to_string(),
        delta: config.delta,
        resolution: config.resolution,
        seed: config.seed,
        instance: id,
        status: RunStatus::Failed,
        cost_int: None,
        cost_raw: None,
        expansions: 0,
        generations: 0,
        heuristic_evals: 0,
        wall_time: Duration::ZERO,
        iterations: Vec::new(),
        message: None,
    };

    // The oracle is handed C*; computing it is not part of its cost.
    let c_star = if config.algorithm == Algorithm::Oracle {
        match astar_search(space) {
            Some(s) => Some(s.cost),
            None => {
                record.message = Some("instance has no solution, oracle cannot run".into());
                return record;
            }
        }
    } else {
        None
    };

    let started = Instant::now();
    let mut instrumented = Instrumented::new(space);
    if let Some(limit) = config.time_limit {
        instrumented = instrumented.with_deadline(started + limit);
    }
    let ran = catch_unwind(AssertUnwindSafe(|| -> Result<_, String> {
        let s = &instrumented;
        Ok(match config.algorithm {
            Algorithm::Ebts => drive(s, Dfbnb::new(), params),
            Algorithm::Ebgs => drive(s, BoundedDijkstra::new(), params),
            Algorithm::Astar if config.float_astar => {
                let sol = space
                    .float_astar(s)
                    .ok_or_else(|| format!("{} has no real-valued costs", config.domain.as_str()))?;
                (sol, Vec::new())
            }
            Algorithm::Astar => (astar_search(s), Vec::new()),
            Algorithm::Idastar => idastar_search(s),
            Algorithm::Oracle => {
                let c = c_star.expect("computed above");
                let sol = match config.engine_for_oracle() {
                    Engine::Tree => oracle_search(s, Dfbnb::new(), c),
                    Engine::Graph => oracle_search(s, BoundedDijkstra::new(), c),
                };
                (Some(sol.map_err(|e| e.to_string())?), Vec::new())
            }
        })
    }));
    record.wall_time = started.elapsed();
    let counters = instrumented.counters();
    record.expansions = counters.expansions;
    record.generations = counters.generations;
    record.heuristic_evals = counters.heuristic_evals;

    let (solution, log) = match ran {
        Ok(Ok(found)) => found,
        Ok(Err(message)) => {
            record.message = Some(message);
            return record;
        }
        Err(panic) => {
            let message = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "search panicked".into());
            record.message = Some(message);
            return record;
        }
    };
    record.iterations = log;
    if instrumented.timed_out() {
        record.status = RunStatus::Timeout;
        return record;
    }
    match solution {
        Some(sol) => match validate_solution(space, &sol) {
            Ok(()) => {
                record.status = RunStatus::Solved;
                record.cost_int = Some(sol.cost.get());
                record.cost_raw = Some(space.raw_path_cost(&sol.path));
            }
            Err(e) => record.message = Some(format!("returned path does not replay: {e}")),
        },
        None => record.message = Some("no solution found".into()),
    }
    record
}
