use crate::bounded::{BoundedSearch, BoundedSearchResult, Limit, Window};
use crate::cost::Cost;
use crate::space::{Path, Solution, StateSpace};

/// f-bounded depth-first branch-and-bound over the search tree.
///
/// No duplicate detection: a state reached along several paths is expanded
/// once per path. A path is pruned when its f-value exceeds `f_max`, or when
/// an incumbent of cost `B` exists and its f-value is at least `B`. Reaching
/// a goal installs a new incumbent and the search carries on looking for a
/// cheaper one.
///
/// Termination requires every cycle reachable under the bound to have
/// positive cost. [`Dfbnb::with_cycle_check`] additionally prunes children
/// whose state is already on the current path, which also guards against
/// zero-cost cycles but changes expansion counts.
#[derive(Debug, Clone, Copy, Default)]
pub struct Dfbnb {
    cycle_check: bool,
}

impl Dfbnb {
    pub fn new() -> Self {
        Dfbnb::default()
    }

    pub fn with_cycle_check(mut self, on: bool) -> Self {
        self.cycle_check = on;
        self
    }
}

impl<P: StateSpace> BoundedSearch<P> for Dfbnb {
    fn run(&mut self, space: &P, f_max: Cost, limit: Limit) -> BoundedSearchResult<P::State, P::Action> {
        depth_first(space, f_max, limit, self.cycle_check, false)
    }
}

struct Frame<S, A> {
    state: S,
    g: Cost,
    via: Option<A>,
    children: Vec<(A, S)>,
    next: usize,
}

/// Shared f-bounded DFS. With `stop_at_first_goal` it is the inner loop of
/// IDA*; otherwise it is branch-and-bound.
pub(crate) fn depth_first<P: StateSpace>(
    space: &P,
    f_max: Cost,
    limit: Limit,
    cycle_check: bool,
    stop_at_first_goal: bool,
) -> BoundedSearchResult<P::State, P::Action> {
    let mut window = Window::new();
    let mut expanded = 0u64;
    let mut best: Option<Solution<P::State, P::Action>> = None;

    let root = space.init();
    let root_f = space.h(&root);
    if root_f > f_max {
        window.pruned(root_f);
        return window.finish(None, 0);
    }
    if space.is_goal(&root) {
        return window.finish(Some(Solution::new(Path::empty(root))), 0);
    }
    if !limit.permits(0) {
        return BoundedSearchResult::incomplete(0);
    }

    let mut spare: Vec<Vec<(P::Action, P::State)>> = Vec::new();
    let mut stack: Vec<Frame<P::State, P::Action>> = Vec::new();
    let mut children = Vec::new();
    space.succ(&root, &mut children);
    expanded += 1;
    window.expanded(root_f);
    stack.push(Frame {
        state: root,
        g: Cost::ZERO,
        via: None,
        children,
        next: 0,
    });

    while let Some(top) = stack.last_mut() {
        if top.next == top.children.len() {
            let mut done = stack.pop().expect("non-empty stack");
            done.children.clear();
            spare.push(done.children);
            continue;
        }
        let (action, child) = top.children[top.next].clone();
        top.next += 1;
        if let Some(prev) = &top.via {
            if space.undoes(prev, &action) {
                continue;
            }
        }
        let g = top.g + space.cost(&action);
        let f = g + space.h(&child);
        if f > f_max {
            window.pruned(f);
            continue;
        }
        if let Some(incumbent) = &best {
            if f >= incumbent.cost {
                continue;
            }
        }
        if cycle_check && stack.iter().any(|fr| fr.state == child) {
            continue;
        }
        if space.is_goal(&child) {
            best = Some(Solution::new(current_path(&stack, action, child, g)));
            if stop_at_first_goal {
                break;
            }
            continue;
        }
        if !limit.permits(expanded) {
            return BoundedSearchResult::incomplete(expanded);
        }
        let mut children = spare.pop().unwrap_or_default();
        space.succ(&child, &mut children);
        expanded += 1;
        window.expanded(f);
        stack.push(Frame {
            state: child,
            g,
            via: Some(action),
            children,
            next: 0,
        });
    }
    window.finish(best, expanded)
}

fn current_path<S: Clone, A: Clone>(stack: &[Frame<S, A>], last: A, goal: S, g: Cost) -> Path<S, A> {
    let mut path = Path::empty(stack[0].state.clone());
    let mut prev_g = Cost::ZERO;
    for frame in &stack[1..] {
        let step = frame.via.clone().expect("non-root frame has an action");
        path.push(step, frame.state.clone(), Cost::new(frame.g.get() - prev_g.get()))
            .expect("prefix of a bounded path");
        prev_g = frame.g;
    }
    path.push(last, goal, Cost::new(g.get() - prev_g.get()))
        .expect("prefix of a bounded path");
    debug_assert_eq!(path.g(), g);
    path
}
