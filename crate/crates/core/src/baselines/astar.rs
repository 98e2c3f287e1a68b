use std::cmp::Ordering;
use std::collections::hash_map::Entry;
use std::collections::{BinaryHeap, HashMap};
use std::time::Instant;

use crate::cost::Cost;
use crate::space::{Instrumented, Path, Solution, StateSpace};
use crate::stats::{SearchOutcome, SearchStats};

/// Unscaled (real-valued) costs and heuristic of a domain whose integer
/// costs are a discretization of them.
pub trait RawCosts: StateSpace {
    fn raw_cost(&self, action: &Self::Action) -> f64;
    fn raw_h(&self, state: &Self::State) -> f64;

    fn raw_path_cost(&self, path: &Path<Self::State, Self::Action>) -> f64 {
        path.actions().map(|a| self.raw_cost(a)).sum()
    }
}

impl<T: RawCosts + ?Sized> RawCosts for &T {
    fn raw_cost(&self, action: &Self::Action) -> f64 {
        (**self).raw_cost(action)
    }
    fn raw_h(&self, state: &Self::State) -> f64 {
        (**self).raw_h(state)
    }
}

impl<P: RawCosts> RawCosts for Instrumented<P> {
    fn raw_cost(&self, action: &Self::Action) -> f64 {
        self.inner().raw_cost(action)
    }
    fn raw_h(&self, state: &Self::State) -> f64 {
        self.inner().raw_h(state)
    }
}

/// Tolerance for comparing real-valued g-values in [`astar_float`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloatTolerance {
    epsilon: f64,
}

impl FloatTolerance {
    pub fn new(epsilon: f64) -> Self {
        assert!(epsilon > 0.0, "tolerance must be positive");
        FloatTolerance { epsilon }
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }
}

impl Default for FloatTolerance {
    fn default() -> Self {
        FloatTolerance { epsilon: 1e-6 }
    }
}

/// The numeric type A* keeps g and f in.
trait Metric: Copy {
    fn add(self, other: Self) -> Self;
    fn cmp_f(self, other: Self) -> Ordering;
    fn strictly_less(self, other: Self, tol: f64) -> bool;
}

impl Metric for Cost {
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn cmp_f(self, other: Self) -> Ordering {
        self.cmp(&other)
    }
    fn strictly_less(self, other: Self, _tol: f64) -> bool {
        self < other
    }
}

impl Metric for f64 {
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn cmp_f(self, other: Self) -> Ordering {
        self.total_cmp(&other)
    }
    fn strictly_less(self, other: Self, tol: f64) -> bool {
        self < other - tol
    }
}

struct Node<S, A, M> {
    state: S,
    g: M,
    parent: Option<(usize, A)>,
}

struct Entry_<M> {
    f: M,
    g: M,
    seq: u64,
    idx: usize,
}

impl<M: Metric> PartialEq for Entry_<M> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl<M: Metric> Eq for Entry_<M> {}
impl<M: Metric> PartialOrd for Entry_<M> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<M: Metric> Ord for Entry_<M> {
    // Max-heap order: lowest f first, then highest g, then newest.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .f
            .cmp_f(self.f)
            .then_with(|| self.g.cmp_f(other.g))
            .then_with(|| self.seq.cmp(&other.seq))
    }
}

fn best_first<P, M>(
    space: &P,
    cost: impl Fn(&P::Action) -> M,
    h: impl Fn(&P::State) -> M,
    zero: M,
    tol: f64,
) -> Option<Solution<P::State, P::Action>>
where
    P: StateSpace,
    M: Metric,
{
    let mut nodes: Vec<Node<P::State, P::Action, M>> = Vec::new();
    let mut index: HashMap<P::State, usize> = HashMap::new();
    let mut open = BinaryHeap::new();
    let mut seq = 0u64;

    let root = space.init();
    let f = h(&root);
    index.insert(root.clone(), 0);
    nodes.push(Node {
        state: root,
        g: zero,
        parent: None,
    });
    open.push(Entry_ { f, g: zero, seq, idx: 0 });

    let mut children = Vec::new();
    while let Some(entry) = open.pop() {
        let idx = entry.idx;
        if nodes[idx].g.cmp_f(entry.g) != Ordering::Equal {
            continue;
        }
        if space.is_goal(&nodes[idx].state) {
            return Some(Solution::new(rebuild(space, &nodes, idx)));
        }
        children.clear();
        space.succ(&nodes[idx].state, &mut children);
        let g = nodes[idx].g;
        for (action, child) in children.drain(..) {
            let child_g = g.add(cost(&action));
            let child_idx = match index.entry(child) {
                Entry::Occupied(e) => {
                    let j = *e.get();
                    if !child_g.strictly_less(nodes[j].g, tol) {
                        continue;
                    }
                    nodes[j].g = child_g;
                    nodes[j].parent = Some((idx, action));
                    j
                }
                Entry::Vacant(e) => {
                    let j = nodes.len();
                    nodes.push(Node {
                        state: e.key().clone(),
                        g: child_g,
                        parent: Some((idx, action)),
                    });
                    e.insert(j);
                    j
                }
            };
            seq += 1;
            open.push(Entry_ {
                f: child_g.add(h(&nodes[child_idx].state)),
                g: child_g,
                seq,
                idx: child_idx,
            });
        }
    }
    None
}

fn rebuild<P: StateSpace, M>(space: &P, nodes: &[Node<P::State, P::Action, M>], mut idx: usize) -> Path<P::State, P::Action> {
    let mut steps = Vec::new();
    while let Some((parent, action)) = &nodes[idx].parent {
        steps.push((action.clone(), nodes[idx].state.clone()));
        idx = *parent;
    }
    steps.reverse();
    Path::from_steps(space, nodes[idx].state.clone(), steps).expect("A* path cost overflows")
}

/// A* with re-opening in integer costs.
///
/// Ties on f go to the higher g, remaining ties to the most recently
/// generated node. A state reached again by a strictly cheaper path is
/// re-opened, even if it was already expanded, which keeps A* optimal under
/// an admissible but inconsistent heuristic.
pub fn astar<P: StateSpace>(space: &P) -> SearchOutcome<P::State, P::Action> {
    counted(space, |s| astar_search(s))
}

/// [`astar`] on a caller-instrumented space.
pub fn astar_search<P: StateSpace>(space: &P) -> Option<Solution<P::State, P::Action>> {
    best_first(space, |a| space.cost(a), |s| space.h(s), Cost::ZERO, 0.0)
}

/// A* on the domain's real-valued costs, treating g-values that differ by
/// at most the tolerance as equal. The returned solution still carries the
/// integer cost of its path.
pub fn astar_float<P: RawCosts>(space: &P, tolerance: FloatTolerance) -> SearchOutcome<P::State, P::Action> {
    counted(space, |s| astar_search_float(s, tolerance))
}

/// [`astar_float`] on a caller-instrumented space.
pub fn astar_search_float<P: RawCosts>(space: &P, tolerance: FloatTolerance) -> Option<Solution<P::State, P::Action>> {
    best_first(space, |a| space.raw_cost(a), |s| space.raw_h(s), 0.0, tolerance.epsilon)
}

fn counted<'a, P: StateSpace>(
    space: &'a P,
    search: impl FnOnce(&Instrumented<&'a P>) -> Option<Solution<P::State, P::Action>>,
) -> SearchOutcome<P::State, P::Action> {
    let started = Instant::now();
    let space = Instrumented::new(space);
    let solution = search(&space);
    let mut stats = SearchStats::from_counters(space.counters());
    stats.wall_time = started.elapsed();
    SearchOutcome { solution, stats }
}
