//! Reference algorithms and exhaustive ground-truth tools.

mod astar;
mod enumerate;
mod idastar;

pub use astar::{astar, astar_float, astar_search, astar_search_float, FloatTolerance, RawCosts};
pub use enumerate::{brute_force_cstar, enumerate_promising, AnalysisError, PromisingCounts, STATE_GUARD};
pub use idastar::{idastar, idastar_search};

use std::time::Instant;

use thiserror::Error;

use crate::bounded::{BoundedSearch, Limit};
use crate::cost::Cost;
use crate::space::{Instrumented, Solution, StateSpace};
use crate::stats::{IterationLog, Phase, SearchOutcome, SearchStats, StatusTag};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("engine found a solution of cost {found} with f_max = C* = {expected}")]
    WrongCost { expected: Cost, found: Cost },
    #[error("engine found no solution with f_max = C* = {0}")]
    NoSolution(Cost),
}

/// A single unlimited bounded search at `f_max = c_star`: the work needed to
/// prove that no cheaper solution exists once `C*` is known.
pub fn oracle<P, E>(space: &P, engine: E, c_star: Cost) -> Result<SearchOutcome<P::State, P::Action>, OracleError>
where
    P: StateSpace,
    E: for<'a> BoundedSearch<Instrumented<&'a P>>,
{
    let started = Instant::now();
    let space = Instrumented::new(space);
    let solution = oracle_search(&space, engine, c_star)?;
    let mut stats = SearchStats::from_counters(space.counters());
    stats.wall_time = started.elapsed();
    Ok(SearchOutcome {
        solution: Some(solution),
        stats,
    })
}

/// [`oracle`] on a caller-instrumented space.
pub fn oracle_search<P, E>(space: &P, mut engine: E, c_star: Cost) -> Result<Solution<P::State, P::Action>, OracleError>
where
    P: StateSpace,
    E: BoundedSearch<P>,
{
    let result = engine.run(space, c_star, Limit::Unbounded);
    match result.solution {
        Some(s) if s.cost == c_star => Ok(s),
        Some(s) => Err(OracleError::WrongCost {
            expected: c_star,
            found: s.cost,
        }),
        None => Err(OracleError::NoSolution(c_star)),
    }
}

pub(crate) fn round_log(f_max: Cost, expanded_nodes: u64, status: StatusTag) -> IterationLog {
    IterationLog {
        phase: Phase::Main,
        f_max,
        n_min: None,
        n_max: Limit::Unbounded,
        expanded_nodes,
        status,
        cache_hit: false,
    }
}
