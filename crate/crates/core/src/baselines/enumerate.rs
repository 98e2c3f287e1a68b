use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};

use thiserror::Error;

use crate::cost::Cost;
use crate::space::StateSpace;

/// Largest number of distinct states the exhaustive tools will visit.
pub const STATE_GUARD: usize = 1_000_000;

/// Largest number of paths [`enumerate_promising`] will count.
const PATH_GUARD: u64 = 50_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("state space has more than {0} reachable states")]
    TooManyStates(usize),
    #[error("more than {0} promising paths")]
    TooManyPaths(u64),
    #[error("a zero-cost cycle lies within the bound, so there are infinitely many promising paths")]
    InfinitePathCount,
}

/// Numbers of promising and highly promising paths and states for a given
/// optimal cost `c_star`.
///
/// A path counts as promising when it contains no goal state and every one of
/// its prefixes has f at most `C*`; highly promising when every prefix has f
/// strictly below `C*`. With a consistent heuristic f never decreases along a
/// path and the prefix condition reduces to a condition on the path itself.
/// A state is (highly) promising when some (highly) promising path ends in it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PromisingCounts {
    pub p_star: u64,
    pub p_plus: u64,
    pub s_star: u64,
    pub s_plus: u64,
    pub c_star: Cost,
}

/// Optimal solution cost by uniform-cost search from `init`, ignoring the
/// heuristic. `INFINITY` when no goal is reachable.
pub fn brute_force_cstar<P: StateSpace>(space: &P) -> Result<Cost, AnalysisError> {
    let mut dist: HashMap<P::State, Cost> = HashMap::new();
    let mut states: Vec<P::State> = Vec::new();
    let mut heap = BinaryHeap::new();
    let root = space.init();
    dist.insert(root.clone(), Cost::ZERO);
    states.push(root);
    heap.push((Reverse(Cost::ZERO), 0usize));
    let mut children = Vec::new();
    while let Some((Reverse(g), idx)) = heap.pop() {
        let state = states[idx].clone();
        if dist[&state] != g {
            continue;
        }
        if space.is_goal(&state) {
            return Ok(g);
        }
        children.clear();
        space.succ(&state, &mut children);
        for (action, child) in children.drain(..) {
            let Ok(child_g) = g.checked_add(space.cost(&action)) else {
                continue;
            };
            match dist.get_mut(&child) {
                Some(d) if *d <= child_g => continue,
                Some(d) => *d = child_g,
                None => {
                    if dist.len() >= STATE_GUARD {
                        return Err(AnalysisError::TooManyStates(STATE_GUARD));
                    }
                    dist.insert(child.clone(), child_g);
                }
            }
            states.push(child);
            heap.push((Reverse(child_g), states.len() - 1));
        }
    }
    Ok(Cost::INFINITY)
}

struct Frame<S, A> {
    g: Cost,
    strict: bool,
    children: Vec<(A, S)>,
    next: usize,
}

/// Exhaustively counts promising paths and states for `c_star`.
pub fn enumerate_promising<P: StateSpace>(space: &P, c_star: Cost) -> Result<PromisingCounts, AnalysisError> {
    let mut counts = PromisingCounts {
        p_star: 0,
        p_plus: 0,
        s_star: 0,
        s_plus: 0,
        c_star,
    };
    let mut plus: HashSet<P::State> = HashSet::new();
    let mut star: HashSet<P::State> = HashSet::new();

    let root = space.init();
    let f = space.h(&root);
    if space.is_goal(&root) || f > c_star {
        return Ok(counts);
    }

    // Current path: its states with their g-values, for zero-cost cycles.
    let mut on_path: HashMap<P::State, Vec<Cost>> = HashMap::new();
    let mut path_states: Vec<P::State> = Vec::new();
    let mut stack: Vec<Frame<P::State, P::Action>> = Vec::new();

    let mut visit = |state: &P::State, strict: bool, counts: &mut PromisingCounts| -> Result<Vec<(P::Action, P::State)>, AnalysisError> {
        counts.p_plus += 1;
        if counts.p_plus > PATH_GUARD {
            return Err(AnalysisError::TooManyPaths(PATH_GUARD));
        }
        if plus.insert(state.clone()) && plus.len() > STATE_GUARD {
            return Err(AnalysisError::TooManyStates(STATE_GUARD));
        }
        if strict {
            counts.p_star += 1;
            star.insert(state.clone());
        }
        let mut children = Vec::new();
        space.succ(state, &mut children);
        Ok(children)
    };

    let strict = f < c_star;
    let children = visit(&root, strict, &mut counts)?;
    on_path.entry(root.clone()).or_default().push(Cost::ZERO);
    path_states.push(root);
    stack.push(Frame {
        g: Cost::ZERO,
        strict,
        children,
        next: 0,
    });

    while let Some(top) = stack.last_mut() {
        if top.next == top.children.len() {
            stack.pop();
            let s = path_states.pop().expect("path and stack move together");
            let gs = on_path.get_mut(&s).expect("state is on the path");
            gs.pop();
            if gs.is_empty() {
                on_path.remove(&s);
            }
            continue;
        }
        let (action, child) = top.children[top.next].clone();
        top.next += 1;
        let parent_strict = top.strict;
        let Ok(g) = top.g.checked_add(space.cost(&action)) else {
            continue;
        };
        let Ok(f) = g.checked_add(space.h(&child)) else {
            continue;
        };
        if f > c_star || space.is_goal(&child) {
            continue;
        }
        if on_path.get(&child).is_some_and(|gs| gs.contains(&g)) {
            return Err(AnalysisError::InfinitePathCount);
        }
        let strict = parent_strict && f < c_star;
        let children = visit(&child, strict, &mut counts)?;
        on_path.entry(child.clone()).or_default().push(g);
        path_states.push(child);
        stack.push(Frame {
            g,
            strict,
            children,
            next: 0,
        });
    }

    counts.s_plus = plus.len() as u64;
    counts.s_star = star.len() as u64;
    Ok(counts)
}
