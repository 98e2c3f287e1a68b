use crate::bounded::{BoundedSearch, BoundedSearchResult, Limit};
use crate::cost::Cost;
use crate::space::StateSpace;

/// Remembers the arguments and result of the last invocation of an engine
/// and answers repeated or equivalent queries without searching.
///
/// A query is answered from the cache when the result is provably what the
/// engine would return:
///
/// * the cached search completed and the query's f-bound lies in the same
///   f-window: equal to the cached bound, or (for a result without a
///   solution) anywhere in `[cached bound, min_f_pruned)`, where neither the
///   expanded nor the pruned nodes can change. Lower bounds are not reused:
///   a graph search may prune a path there that the cached run only
///   replaced with a cheaper one. A budget at least the cached expansion
///   count reproduces the result; a smaller budget cuts the same search
///   short, so the answer is "incomplete at the new budget".
/// * the cached search was cut off at its budget and the query has the same
///   f-bound and a budget no larger.
///
/// The cache holds results for a single state space; call [`Cached::clear`]
/// before reusing it on another.
pub struct Cached<E, S, A> {
    engine: E,
    last: Option<(Cost, Limit, BoundedSearchResult<S, A>)>,
    last_hit: bool,
    hits: u64,
}

impl<E, S: Clone, A: Clone> Cached<E, S, A> {
    pub fn new(engine: E) -> Self {
        Cached {
            engine,
            last: None,
            last_hit: false,
            hits: 0,
        }
    }

    pub fn clear(&mut self) {
        self.last = None;
    }

    /// Whether the most recent query was served from the cache.
    pub fn last_was_hit(&self) -> bool {
        self.last_hit
    }

    pub fn hits(&self) -> u64 {
        self.hits
    }

    pub fn engine(&self) -> &E {
        &self.engine
    }

    fn lookup(&self, f_max: Cost, limit: Limit) -> Option<BoundedSearchResult<S, A>> {
        let (cached_f, cached_limit, result) = self.last.as_ref()?;
        if result.is_incomplete {
            if f_max == *cached_f && limit <= *cached_limit {
                return Some(BoundedSearchResult::incomplete(
                    limit.finite().expect("an incomplete search had a finite budget"),
                ));
            }
            return None;
        }
        let same_window = f_max == *cached_f
            || (result.solution.is_none()
                && f_max > *cached_f
                && f_max < result.min_f_pruned);
        if !same_window {
            return None;
        }
        if limit.permits(result.expanded_nodes.saturating_sub(1)) || result.expanded_nodes == 0 {
            Some(result.clone())
        } else {
            Some(BoundedSearchResult::incomplete(
                limit.finite().expect("finite budget below a completed count"),
            ))
        }
    }
}

impl<P, E> BoundedSearch<P> for Cached<E, P::State, P::Action>
where
    P: StateSpace,
    E: BoundedSearch<P>,
{
    fn run(&mut self, space: &P, f_max: Cost, limit: Limit) -> BoundedSearchResult<P::State, P::Action> {
        if let Some(hit) = self.lookup(f_max, limit) {
            self.last_hit = true;
            self.hits += 1;
            return hit;
        }
        self.last_hit = false;
        let result = self.engine.run(space, f_max, limit);
        self.last = Some((f_max, limit, result.clone()));
        result
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::{Path, Solution};

    /// Engine stub that returns a fixed completed result and counts calls.
    struct Fixed {
        calls: u32,
        result: BoundedSearchResult<u8, u8>,
    }

    struct Unit;
    impl StateSpace for Unit {
        type State = u8;
        type Action = u8;
        fn init(&self) -> u8 {
            0
        }
        fn is_goal(&self, _: &u8) -> bool {
            false
        }
        fn succ(&self, _: &u8, _: &mut Vec<(u8, u8)>) {}
        fn cost(&self, _: &u8) -> Cost {
            Cost::new(1)
        }
        fn h(&self, _: &u8) -> Cost {
            Cost::ZERO
        }
    }

    impl BoundedSearch<Unit> for Fixed {
        fn run(&mut self, _: &Unit, _: Cost, limit: Limit) -> BoundedSearchResult<u8, u8> {
            self.calls += 1;
            if limit.permits(self.result.expanded_nodes - 1) {
                self.result.clone()
            } else {
                BoundedSearchResult::incomplete(limit.finite().unwrap())
            }
        }
    }

    fn completed(expanded: u64, max_f: u64, min_pruned: u64) -> BoundedSearchResult<u8, u8> {
        BoundedSearchResult {
            solution: None,
            is_incomplete: false,
            expanded_nodes: expanded,
            max_f_expanded: Cost::new(max_f),
            min_f_pruned: Cost::new(min_pruned),
        }
    }

    #[test]
    fn hit_inside_window() {
        let mut c = Cached::new(Fixed { calls: 0, result: completed(7, 9, 14) });
        c.run(&Unit, Cost::new(10), Limit::Unbounded);
        let r = c.run(&Unit, Cost::new(12), Limit::Finite(7));
        assert!(c.last_was_hit());
        assert_eq!(r.expanded_nodes, 7);
        assert_eq!(c.engine().calls, 1);
    }

    #[test]
    fn bounds_below_the_cached_one_are_searched() {
        let mut c = Cached::new(Fixed { calls: 0, result: completed(7, 9, 14) });
        c.run(&Unit, Cost::new(12), Limit::Unbounded);
        c.run(&Unit, Cost::new(10), Limit::Unbounded);
        assert!(!c.last_was_hit());
        assert_eq!(c.engine().calls, 2);
    }

    #[test]
    fn window_upper_edge_is_exclusive() {
        let mut c = Cached::new(Fixed { calls: 0, result: completed(7, 9, 14) });
        c.run(&Unit, Cost::new(10), Limit::Unbounded);
        c.run(&Unit, Cost::new(14), Limit::Unbounded);
        assert!(!c.last_was_hit());
        assert_eq!(c.engine().calls, 2);
    }

    #[test]
    fn stricter_budget_on_incomplete() {
        let mut c = Cached::new(Fixed { calls: 0, result: completed(1000, 9, 14) });
        let first = c.run(&Unit, Cost::new(10), Limit::Finite(100));
        assert!(first.is_incomplete);
        let r = c.run(&Unit, Cost::new(10), Limit::Finite(50));
        assert!(c.last_was_hit());
        assert!(r.is_incomplete);
        assert_eq!(r.expanded_nodes, 50);
        c.run(&Unit, Cost::new(10), Limit::Finite(200));
        assert!(!c.last_was_hit());
    }

    #[test]
    fn completed_result_is_budget_independent() {
        let mut c = Cached::new(Fixed { calls: 0, result: completed(7, 9, 14) });
        c.run(&Unit, Cost::new(10), Limit::Finite(20));
        c.run(&Unit, Cost::new(10), Limit::Unbounded);
        assert!(c.last_was_hit());
        let r = c.run(&Unit, Cost::new(10), Limit::Finite(3));
        assert!(c.last_was_hit());
        assert!(r.is_incomplete);
        assert_eq!(r.expanded_nodes, 3);
    }

    #[test]
    fn solved_result_only_reused_at_same_bound() {
        let mut result = completed(7, 9, 14);
        result.solution = Some(Solution::new(Path::empty(0)));
        let mut c = Cached::new(Fixed { calls: 0, result });
        c.run(&Unit, Cost::new(10), Limit::Unbounded);
        c.run(&Unit, Cost::new(11), Limit::Unbounded);
        assert!(!c.last_was_hit());
        c.run(&Unit, Cost::new(11), Limit::Unbounded);
        assert!(c.last_was_hit());
    }
}
