//! Exponential-binary state-space search.
//!
//! The driver runs a sequence of f-bounded searches with unbounded budget.
//! After an iteration that expanded `n` nodes it looks for a new f-bound
//! whose search expands between `ceil(c1 * n)` and `ceil(c2 * n)` nodes:
//! it probes `f + delta`, `f + 2 delta`, `f + 4 delta`, ... until a probe is
//! not too low, then binary-searches between the last bound that was too low
//! and the first that was too high. If the window collapses without finding
//! a good bound, the collapsed bound is too high but still at most `C*`.
//!
//! Every probe is itself a bounded search with budget `ceil(c2 * n)`, and a
//! probe that finds a solution ends the whole algorithm with it.

use std::time::Instant;

use thiserror::Error;

use crate::bounded::{BoundedSearch, BoundedSearchResult, Cached, Limit};
use crate::cost::Cost;
use crate::ratio::Ratio;
use crate::space::{Instrumented, Solution, StateSpace};
use crate::stats::{IterationLog, Phase, SearchOutcome, SearchStats, StatusTag};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("expansion multipliers must satisfy c2 >= c1 > 1 (got c1={c1}, c2={c2})")]
    Multipliers { c1: Ratio, c2: Ratio },
    #[error("delta must be at least 1")]
    ZeroDelta,
}

/// Driver parameters: the expansion window multipliers and the initial
/// exponential step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EbParams {
    c1: Ratio,
    c2: Ratio,
    delta: u64,
}

impl EbParams {
    pub fn new(c1: Ratio, c2: Ratio, delta: u64) -> Result<Self, ParamError> {
        if !(c1 > Ratio::integer(1) && c2 >= c1) {
            return Err(ParamError::Multipliers { c1, c2 });
        }
        if delta == 0 {
            return Err(ParamError::ZeroDelta);
        }
        Ok(EbParams { c1, c2, delta })
    }

    pub fn c1(&self) -> Ratio {
        self.c1
    }

    pub fn c2(&self) -> Ratio {
        self.c2
    }

    pub fn delta(&self) -> u64 {
        self.delta
    }

    /// `(ceil(c1 * n), ceil(c2 * n))`.
    pub fn window(&self, expanded: u64) -> (u64, u64) {
        (self.c1.ceil_mul(expanded), self.c2.ceil_mul(expanded))
    }
}

/// Classification of a candidate f-bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundStatus<T> {
    TooLow,
    TooHigh,
    Good,
    /// The probe found a solution; it is optimal and ends the search.
    Solved(T),
    /// The probe completed without pruning anything and found no goal.
    Exhausted,
}

impl<T> BoundStatus<T> {
    pub fn tag(&self) -> StatusTag {
        match self {
            BoundStatus::TooLow => StatusTag::TooLow,
            BoundStatus::TooHigh => StatusTag::TooHigh,
            BoundStatus::Good => StatusTag::Good,
            BoundStatus::Solved(_) => StatusTag::Solved,
            BoundStatus::Exhausted => StatusTag::Exhausted,
        }
    }
}

/// Classifies the result of a probe run with budget `N_max`. The checks are
/// ordered: solution, then too few expansions, then incomplete.
pub fn classify<S, A>(result: BoundedSearchResult<S, A>, n_min: u64) -> BoundStatus<Solution<S, A>> {
    if result.proves_unsolvable() {
        return BoundStatus::Exhausted;
    }
    match result.solution {
        Some(solution) => BoundStatus::Solved(solution),
        None if result.expanded_nodes < n_min => BoundStatus::TooLow,
        None if result.is_incomplete => BoundStatus::TooHigh,
        None => BoundStatus::Good,
    }
}

/// Runs one bounded probe at `f_max` with budget `n_max` and classifies it.
pub fn test_f_bound<P, E>(
    engine: &mut E,
    space: &P,
    f_max: Cost,
    n_min: u64,
    n_max: u64,
) -> BoundStatus<Solution<P::State, P::Action>>
where
    P: StateSpace,
    E: BoundedSearch<P>,
{
    debug_assert!(n_min <= n_max);
    classify(engine.run(space, f_max, Limit::Finite(n_max)), n_min)
}

/// What [`next_f_bound`] settled on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NextBound<T> {
    /// A good bound, or a too-high bound no larger than `C*`.
    Bound(Cost),
    Solved(T),
    Exhausted,
}

/// Exponential then binary search for the next f-bound. `probe` classifies a
/// candidate bound and is told which phase asked for it.
///
/// Requires that a completed search at `f_old` found no solution.
pub fn next_f_bound<T, F>(f_old: Cost, delta: u64, mut probe: F) -> NextBound<T>
where
    F: FnMut(Cost, Phase) -> BoundStatus<T>,
{
    let mut delta = delta;
    let mut f_low = f_old.plus(1);
    let mut f_high = f_old.plus(delta);
    loop {
        match probe(f_high, Phase::Exponential) {
            BoundStatus::Good => return NextBound::Bound(f_high),
            BoundStatus::TooHigh => break,
            BoundStatus::Solved(s) => return NextBound::Solved(s),
            BoundStatus::Exhausted => return NextBound::Exhausted,
            BoundStatus::TooLow => {}
        }
        delta = delta.saturating_mul(2);
        f_low = f_high.plus(1);
        f_high = f_old.plus(delta);
    }
    // f_high is too high; a solution-free search at f_low - 1 completed.
    while f_low != f_high {
        let f_mid = f_low.midpoint(f_high);
        match probe(f_mid, Phase::Binary) {
            BoundStatus::TooLow => f_low = f_mid.plus(1),
            BoundStatus::TooHigh => f_high = f_mid,
            BoundStatus::Good => return NextBound::Bound(f_mid),
            BoundStatus::Solved(s) => return NextBound::Solved(s),
            BoundStatus::Exhausted => return NextBound::Exhausted,
        }
    }
    NextBound::Bound(f_low)
}

/// Exponential-binary search over `space` with the given bounded-search
/// engine. The engine is wrapped in a last-result cache.
pub fn ebsss_search<P, E>(space: &P, engine: E, params: &EbParams) -> SearchOutcome<P::State, P::Action>
where
    P: StateSpace,
    E: for<'a> BoundedSearch<Instrumented<&'a P>>,
{
    let started = Instant::now();
    let space = Instrumented::new(space);
    let (solution, log) = drive(&space, engine, params);
    let mut stats = SearchStats::from_counters(space.counters());
    stats.iteration_log = log;
    stats.wall_time = started.elapsed();
    SearchOutcome { solution, stats }
}

/// Same as [`ebsss_search`] on an already instrumented space, for callers
/// that need a deadline or want to read the counters themselves.
pub fn drive<P, E>(
    space: &P,
    engine: E,
    params: &EbParams,
) -> (Option<Solution<P::State, P::Action>>, Vec<IterationLog>)
where
    P: StateSpace,
    E: BoundedSearch<P>,
{
    let mut cached = Cached::new(engine);
    let mut log = Vec::new();
    let mut f_max = space.h(&space.init());

    loop {
        let result = cached.run(space, f_max, Limit::Unbounded);
        let expanded = result.expanded_nodes;
        let unsolvable = result.proves_unsolvable();
        log.push(IterationLog {
            phase: Phase::Main,
            f_max,
            n_min: None,
            n_max: Limit::Unbounded,
            expanded_nodes: expanded,
            status: if result.solution.is_some() {
                StatusTag::Solved
            } else if unsolvable {
                StatusTag::Exhausted
            } else {
                StatusTag::Completed
            },
            cache_hit: cached.last_was_hit(),
        });
        if let Some(solution) = result.solution {
            return (Some(solution), log);
        }
        if unsolvable {
            return (None, log);
        }

        let (n_min, n_max) = params.window(expanded.max(1));
        let next = next_f_bound(f_max, params.delta, |f, phase| {
            let result = cached.run(space, f, Limit::Finite(n_max));
            let expanded_nodes = result.expanded_nodes;
            let status = classify(result, n_min);
            log.push(IterationLog {
                phase,
                f_max: f,
                n_min: Some(n_min),
                n_max: Limit::Finite(n_max),
                expanded_nodes,
                status: status.tag(),
                cache_hit: cached.last_was_hit(),
            });
            status
        });
        match next {
            NextBound::Bound(f) => f_max = f,
            NextBound::Solved(solution) => return (Some(solution), log),
            NextBound::Exhausted => return (None, log),
        }
    }
}
