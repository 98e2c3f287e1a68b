//! f-bounded, expansion-bounded searches.
//!
//! A [`BoundedSearch`] explores every path whose f-value does not exceed
//! `f_max`, performing at most `limit` expansions. Implementations uphold
//! four guarantees that the exponential-binary driver relies on:
//!
//! 1. never more than `limit` expansions; a search cut off by the limit is
//!    reported as incomplete and carries no solution,
//! 2. a completed search with `f_max >= C*` returns an optimal solution,
//! 3. a completed search with `f_max < C*` reports that no solution of cost
//!    at most `f_max` exists,
//! 4. the number of expansions is always reported.

mod cache;
pub(crate) mod dfbnb;
mod dijkstra;

pub use cache::Cached;
pub use dfbnb::Dfbnb;
pub use dijkstra::BoundedDijkstra;

use std::fmt;

use crate::cost::Cost;
use crate::space::{Solution, StateSpace};

/// Expansion budget of a bounded search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Limit {
    Finite(u64),
    Unbounded,
}

impl Limit {
    /// True if a search that has already expanded `done` nodes may expand
    /// another one.
    pub fn permits(self, done: u64) -> bool {
        match self {
            Limit::Finite(n) => done < n,
            Limit::Unbounded => true,
        }
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Limit::Finite(n) => Some(n),
            Limit::Unbounded => None,
        }
    }
}

impl fmt::Display for Limit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Limit::Finite(n) => write!(f, "{n}"),
            Limit::Unbounded => f.write_str("inf"),
        }
    }
}

/// Outcome of one bounded search.
///
/// `max_f_expanded` and `min_f_pruned` describe the f-window in which the
/// same search would expand exactly the same nodes. They are only recorded
/// for completed searches; an incomplete result reports `0` and `INFINITY`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedSearchResult<S, A> {
    pub solution: Option<Solution<S, A>>,
    pub is_incomplete: bool,
    pub expanded_nodes: u64,
    pub max_f_expanded: Cost,
    pub min_f_pruned: Cost,
}

impl<S, A> BoundedSearchResult<S, A> {
    pub fn incomplete(expanded_nodes: u64) -> Self {
        BoundedSearchResult {
            solution: None,
            is_incomplete: true,
            expanded_nodes,
            max_f_expanded: Cost::ZERO,
            min_f_pruned: Cost::INFINITY,
        }
    }

    pub fn solution_found(&self) -> bool {
        self.solution.is_some()
    }

    /// Completed, found nothing, and pruned nothing: no goal is reachable.
    pub fn proves_unsolvable(&self) -> bool {
        !self.is_incomplete && self.solution.is_none() && self.min_f_pruned.is_infinite()
    }
}

pub trait BoundedSearch<P: StateSpace> {
    fn run(&mut self, space: &P, f_max: Cost, limit: Limit) -> BoundedSearchResult<P::State, P::Action>;
}

impl<P: StateSpace, E: BoundedSearch<P> + ?Sized> BoundedSearch<P> for &mut E {
    fn run(&mut self, space: &P, f_max: Cost, limit: Limit) -> BoundedSearchResult<P::State, P::Action> {
        (**self).run(space, f_max, limit)
    }
}

/// Running record of the f-window while a search is in progress.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Window {
    pub max_f_expanded: Cost,
    pub min_f_pruned: Cost,
}

impl Window {
    pub fn new() -> Self {
        Window {
            max_f_expanded: Cost::ZERO,
            min_f_pruned: Cost::INFINITY,
        }
    }

    pub fn expanded(&mut self, f: Cost) {
        self.max_f_expanded = self.max_f_expanded.max(f);
    }

    pub fn pruned(&mut self, f: Cost) {
        self.min_f_pruned = self.min_f_pruned.min(f);
    }

    pub fn finish<S, A>(self, solution: Option<Solution<S, A>>, expanded_nodes: u64) -> BoundedSearchResult<S, A> {
        BoundedSearchResult {
            solution,
            is_incomplete: false,
            expanded_nodes,
            max_f_expanded: self.max_f_expanded,
            min_f_pruned: self.min_f_pruned,
        }
    }
}
