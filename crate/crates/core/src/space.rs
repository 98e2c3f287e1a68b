//! The black-box state-space interface and the path types built on it.

use std::cell::Cell;
use std::fmt;
use std::hash::Hash;
use std::time::Instant;

use thiserror::Error;

use crate::cost::{Cost, CostError};

/// Black-box access to a state space.
///
/// Algorithms see the problem only through these methods. Implementations
/// must be deterministic: `succ` returns the same transitions in the same
/// order every time it is called on the same state, action costs are
/// non-negative, and `h` is zero on every goal state.
pub trait StateSpace {
    type State: Clone + Eq + Hash + fmt::Debug;
    type Action: Clone + Eq + fmt::Debug;

    fn init(&self) -> Self::State;

    fn is_goal(&self, state: &Self::State) -> bool;

    /// Appends the outgoing transitions of `state` to `out`.
    fn succ(&self, state: &Self::State, out: &mut Vec<(Self::Action, Self::State)>);

    fn cost(&self, action: &Self::Action) -> Cost;

    fn h(&self, state: &Self::State) -> Cost;

    /// Whether `next` immediately undoes `previous`. Tree searches use this
    /// to skip the parent; graph searches ignore it.
    fn undoes(&self, _previous: &Self::Action, _next: &Self::Action) -> bool {
        false
    }
}

impl<T: StateSpace + ?Sized> StateSpace for &T {
    type State = T::State;
    type Action = T::Action;

    fn init(&self) -> Self::State {
        (**self).init()
    }
    fn is_goal(&self, state: &Self::State) -> bool {
        (**self).is_goal(state)
    }
    fn succ(&self, state: &Self::State, out: &mut Vec<(Self::Action, Self::State)>) {
        (**self).succ(state, out)
    }
    fn cost(&self, action: &Self::Action) -> Cost {
        (**self).cost(action)
    }
    fn h(&self, state: &Self::State) -> Cost {
        (**self).h(state)
    }
    fn undoes(&self, previous: &Self::Action, next: &Self::Action) -> bool {
        (**self).undoes(previous, next)
    }
}

/// A search path from the initial state, stored as the start state followed
/// by `(action, resulting state)` steps, with its cost cached.
#[derive(Clone, PartialEq, Eq)]
pub struct Path<S, A> {
    start: S,
    steps: Vec<(A, S)>,
    g: Cost,
}

impl<S: Clone, A: Clone> Path<S, A> {
    pub fn empty(start: S) -> Self {
        Path {
            start,
            steps: Vec::new(),
            g: Cost::ZERO,
        }
    }

    /// Builds a path from its steps, summing the action costs.
    pub fn from_steps<P>(space: &P, start: S, steps: Vec<(A, S)>) -> Result<Self, CostError>
    where
        P: StateSpace<State = S, Action = A>,
    {
        let mut g = Cost::ZERO;
        for (a, _) in &steps {
            g = g.checked_add(space.cost(a))?;
        }
        Ok(Path { start, steps, g })
    }

    /// Appends one transition whose action costs `cost`.
    pub fn push(&mut self, action: A, state: S, cost: Cost) -> Result<(), CostError> {
        self.g = self.g.checked_add(cost)?;
        self.steps.push((action, state));
        Ok(())
    }

    pub fn start(&self) -> &S {
        &self.start
    }

    pub fn end_state(&self) -> &S {
        self.steps.last().map(|(_, s)| s).unwrap_or(&self.start)
    }

    pub fn g(&self) -> Cost {
        self.g
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[(A, S)] {
        &self.steps
    }

    pub fn actions(&self) -> impl Iterator<Item = &A> {
        self.steps.iter().map(|(a, _)| a)
    }

    /// The path as `(from, action, to)` transitions.
    pub fn transitions(&self) -> impl Iterator<Item = (&S, &A, &S)> {
        let froms = std::iter::once(&self.start).chain(self.steps.iter().map(|(_, s)| s));
        froms.zip(self.steps.iter()).map(|(from, (a, to))| (from, a, to))
    }

    /// Every state on the path, starting with the initial state.
    pub fn states(&self) -> impl Iterator<Item = &S> {
        std::iter::once(&self.start).chain(self.steps.iter().map(|(_, s)| s))
    }
}

impl<S: fmt::Debug, A: fmt::Debug> fmt::Debug for Path<S, A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Path")
            .field("start", &self.start)
            .field("steps", &self.steps)
            .field("g", &self.g)
            .finish()
    }
}

/// `c(path)`: the sum of the path's action costs, recomputed from scratch.
pub fn path_cost<P: StateSpace>(space: &P, path: &Path<P::State, P::Action>) -> Result<Cost, CostError> {
    path.actions()
        .try_fold(Cost::ZERO, |acc, a| acc.checked_add(space.cost(a)))
}

/// `g(path) + h(end state)`.
pub fn f_value<P: StateSpace>(space: &P, path: &Path<P::State, P::Action>) -> Result<Cost, CostError> {
    path.g().checked_add(space.h(path.end_state()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution<S, A> {
    pub path: Path<S, A>,
    pub cost: Cost,
}

impl<S: Clone, A: Clone> Solution<S, A> {
    pub fn new(path: Path<S, A>) -> Self {
        let cost = path.g();
        Solution { path, cost }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum ReplayError {
    #[error("path does not start at the initial state")]
    WrongStart,
    #[error("step {0} is not a transition of the state space")]
    IllegalStep(usize),
    #[error("path does not end in a goal state")]
    NotAGoal,
    #[error("recomputed cost {recomputed} differs from reported cost {reported}")]
    CostMismatch { reported: Cost, recomputed: Cost },
    #[error(transparent)]
    Cost(#[from] CostError),
}

/// Replays a solution against `space`: legal transitions from `init()` to a
/// goal, with the re-summed cost equal to the reported one.
pub fn validate_solution<P: StateSpace>(
    space: &P,
    solution: &Solution<P::State, P::Action>,
) -> Result<(), ReplayError> {
    let path = &solution.path;
    if *path.start() != space.init() {
        return Err(ReplayError::WrongStart);
    }
    let mut buf = Vec::new();
    for (i, (from, action, to)) in path.transitions().enumerate() {
        buf.clear();
        space.succ(from, &mut buf);
        if !buf.iter().any(|(a, s)| a == action && s == to) {
            return Err(ReplayError::IllegalStep(i));
        }
    }
    if !space.is_goal(path.end_state()) {
        return Err(ReplayError::NotAGoal);
    }
    let recomputed = path_cost(space, path)?;
    if recomputed != solution.cost || recomputed != path.g() {
        return Err(ReplayError::CostMismatch {
            reported: solution.cost,
            recomputed,
        });
    }
    Ok(())
}

/// Raw operation counts of a state space wrapped in [`Instrumented`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counters {
    pub expansions: u64,
    pub generations: u64,
    pub heuristic_evals: u64,
}

/// Wraps a state space and counts `succ` calls, generated states (each
/// `init` counts one) and heuristic evaluations.
///
/// An optional deadline is checked cooperatively: once it has passed, `succ`
/// yields no transitions, so any algorithm drains quickly and the caller can
/// inspect [`Instrumented::timed_out`].
pub struct Instrumented<P> {
    inner: P,
    expansions: Cell<u64>,
    generations: Cell<u64>,
    heuristic_evals: Cell<u64>,
    deadline: Option<Instant>,
    timed_out: Cell<bool>,
}

impl<P: StateSpace> Instrumented<P> {
    pub fn new(inner: P) -> Self {
        Instrumented {
            inner,
            expansions: Cell::new(0),
            generations: Cell::new(0),
            heuristic_evals: Cell::new(0),
            deadline: None,
            timed_out: Cell::new(false),
        }
    }

    pub fn with_deadline(mut self, deadline: Instant) -> Self {
        self.deadline = Some(deadline);
        self
    }

    pub fn counters(&self) -> Counters {
        Counters {
            expansions: self.expansions.get(),
            generations: self.generations.get(),
            heuristic_evals: self.heuristic_evals.get(),
        }
    }

    pub fn timed_out(&self) -> bool {
        self.timed_out.get()
    }

    pub fn inner(&self) -> &P {
        &self.inner
    }
}

impl<P: StateSpace> StateSpace for Instrumented<P> {
    type State = P::State;
    type Action = P::Action;

    fn init(&self) -> P::State {
        self.generations.set(self.generations.get() + 1);
        self.inner.init()
    }

    fn is_goal(&self, state: &P::State) -> bool {
        self.inner.is_goal(state)
    }

    fn succ(&self, state: &P::State, out: &mut Vec<(P::Action, P::State)>) {
        let n = self.expansions.get() + 1;
        self.expansions.set(n);
        if let Some(deadline) = self.deadline {
            if self.timed_out.get() || (n % 1024 == 0 && Instant::now() >= deadline) {
                self.timed_out.set(true);
                return;
            }
        }
        let before = out.len();
        self.inner.succ(state, out);
        let generated = (out.len() - before) as u64;
        self.generations.set(self.generations.get() + generated);
    }

    fn cost(&self, action: &P::Action) -> Cost {
        self.inner.cost(action)
    }

    fn h(&self, state: &P::State) -> Cost {
        self.heuristic_evals.set(self.heuristic_evals.get() + 1);
        self.inner.h(state)
    }

    fn undoes(&self, previous: &P::Action, next: &P::Action) -> bool {
        self.inner.undoes(previous, next)
    }
}
