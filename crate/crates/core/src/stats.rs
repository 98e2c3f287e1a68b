//! Instrumentation records owned by a single search invocation.

use std::fmt;
use std::time::Duration;

use crate::bounded::Limit;
use crate::cost::Cost;
use crate::space::Counters;

/// Which part of the exponential-binary driver issued a bounded search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Phase {
    Main,
    Exponential,
    Binary,
}

impl Phase {
    pub fn as_str(self) -> &'static str {
        match self {
            Phase::Main => "main",
            Phase::Exponential => "exponential",
            Phase::Binary => "binary",
        }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one logged bounded search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StatusTag {
    TooLow,
    TooHigh,
    Good,
    Solved,
    /// Main-loop search that completed without a solution.
    Completed,
    /// Completed without a solution and without pruning anything.
    Exhausted,
}

impl StatusTag {
    pub fn as_str(self) -> &'static str {
        match self {
            StatusTag::TooLow => "too_low",
            StatusTag::TooHigh => "too_high",
            StatusTag::Good => "good",
            StatusTag::Solved => "solved",
            StatusTag::Completed => "completed",
            StatusTag::Exhausted => "exhausted",
        }
    }
}

impl fmt::Display for StatusTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One bounded-search invocation, cached or real.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterationLog {
    pub phase: Phase,
    pub f_max: Cost,
    pub n_min: Option<u64>,
    pub n_max: Limit,
    pub expanded_nodes: u64,
    pub status: StatusTag,
    pub cache_hit: bool,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SearchStats {
    pub expansions: u64,
    pub generations: u64,
    pub heuristic_evals: u64,
    pub iteration_log: Vec<IterationLog>,
    pub wall_time: Duration,
}

impl SearchStats {
    pub fn from_counters(counters: Counters) -> Self {
        SearchStats {
            expansions: counters.expansions,
            generations: counters.generations,
            heuristic_evals: counters.heuristic_evals,
            ..Default::default()
        }
    }

    /// Folds a sub-search's stats into this one.
    pub fn merge(&mut self, other: SearchStats) {
        self.expansions += other.expansions;
        self.generations += other.generations;
        self.heuristic_evals += other.heuristic_evals;
        self.iteration_log.extend(other.iteration_log);
        self.wall_time += other.wall_time;
    }
}

/// Final answer of a complete search algorithm. `solution` is `None` when
/// the algorithm proved that no goal is reachable (or was interrupted, see
/// [`crate::space::Instrumented::timed_out`]).
#[derive(Debug, Clone)]
pub struct SearchOutcome<S, A> {
    pub solution: Option<crate::space::Solution<S, A>>,
    pub stats: SearchStats,
}
