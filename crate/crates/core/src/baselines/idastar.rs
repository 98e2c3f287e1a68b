use std::time::Instant;

use crate::bounded::dfbnb::depth_first;
use crate::bounded::Limit;
use crate::space::{Instrumented, Solution, StateSpace};
use crate::stats::{IterationLog, SearchOutcome, SearchStats, StatusTag};

use super::round_log;

/// Classic IDA*: depth-first rounds bounded by f, starting at `h(init)`,
/// each new bound being the smallest f-value pruned in the previous round.
/// A round stops at the first goal it generates, so the result is optimal
/// only because every cheaper bound has been exhausted first.
pub fn idastar<P: StateSpace>(space: &P) -> SearchOutcome<P::State, P::Action> {
    let started = Instant::now();
    let space = Instrumented::new(space);
    let (solution, log) = idastar_search(&space);
    let mut stats = SearchStats::from_counters(space.counters());
    stats.iteration_log = log;
    stats.wall_time = started.elapsed();
    SearchOutcome { solution, stats }
}

/// [`idastar`] on a caller-instrumented space, returning one log entry per
/// round.
pub fn idastar_search<P: StateSpace>(space: &P) -> (Option<Solution<P::State, P::Action>>, Vec<IterationLog>) {
    let mut bound = space.h(&space.init());
    let mut log = Vec::new();
    loop {
        let result = depth_first(space, bound, Limit::Unbounded, false, true);
        if let Some(solution) = result.solution {
            log.push(round_log(bound, result.expanded_nodes, StatusTag::Solved));
            return (Some(solution), log);
        }
        if result.min_f_pruned.is_infinite() {
            log.push(round_log(bound, result.expanded_nodes, StatusTag::Exhausted));
            return (None, log);
        }
        log.push(round_log(bound, result.expanded_nodes, StatusTag::Completed));
        bound = result.min_f_pruned;
    }
}
