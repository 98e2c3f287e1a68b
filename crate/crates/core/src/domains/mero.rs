//! A Mérő-style family of graphs with an admissible but inconsistent
//! heuristic, on which A* with re-opening performs quadratically many
//! expansions.
//!
//! Layout for parameter `k`:
//!
//! ```text
//!   s --1--> t_i            (i = 1..k,  h(t_i) = k + i)
//!   t_i --(k + 2 - i)--> c_1
//!   c_1 --1--> c_2 --1--> ... --1--> c_k --(2k)--> x --1--> goal
//! ```
//!
//! All other heuristic values are 0. A* expands the `t_i` in order of
//! increasing i; each one offers a path to `c_1` that is cheaper by one, so
//! the part of the chain below the next `t` is re-expanded every time. The
//! heavy `c_k -> x` edge keeps `x` closed until the last `t` has been
//! expanded. A* performs `floor(3k(k + 2) / 4) + 2` expansions; a Dijkstra
//! search bounded at `C* = 3k + 3` expands each of the `2k + 2` non-goal
//! states exactly once.

use crate::cost::Cost;
use crate::domains::graph::{EdgeId, ExplicitGraph, GraphState};
use crate::space::StateSpace;

#[derive(Debug, Clone)]
pub struct MeroGraph {
    k: u32,
    graph: ExplicitGraph,
}

impl MeroGraph {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn graph(&self) -> &ExplicitGraph {
        &self.graph
    }

    pub fn optimal_cost(&self) -> Cost {
        Cost::new(3 * self.k as u64 + 3)
    }

    pub fn t(&self, i: u32) -> GraphState {
        assert!((1..=self.k).contains(&i));
        GraphState(i)
    }
}

/// Expansions A* (ties to higher g, then LIFO) performs on `mero_graph(k)`.
pub fn expected_astar_expansions(k: u64) -> u64 {
    3 * k * (k + 2) / 4 + 2
}

/// Expansions of a single bounded Dijkstra search at `f = C*`.
pub fn expected_oracle_expansions(k: u64) -> u64 {
    2 * k + 2
}

pub fn mero_graph(k: u32) -> MeroGraph {
    assert!(k >= 1, "the Mérő family needs k >= 1");
    let ku = k as u64;
    let mut b = ExplicitGraph::builder();
    let s = b.state("s", 0);
    let ts: Vec<_> = (1..=k).map(|i| b.state(format!("t{i}"), ku + i as u64)).collect();
    let cs: Vec<_> = (1..=k).map(|j| b.state(format!("c{j}"), 0)).collect();
    let x = b.state("x", 0);
    let goal = b.state("goal", 0);
    b.goal(goal);
    for &t in &ts {
        b.edge(s, t, 1);
    }
    for (i, &t) in (1..=ku).zip(&ts) {
        b.edge(t, cs[0], ku + 2 - i);
    }
    for w in cs.windows(2) {
        b.edge(w[0], w[1], 1);
    }
    b.edge(cs[k as usize - 1], x, 2 * ku);
    b.edge(x, goal, 1);
    let graph = b.build(s);

    let mero = MeroGraph { k, graph };
    #[cfg(debug_assertions)]
    if k <= 64 {
        if let Err(e) = self_test(&mero) {
            panic!("Mérő graph k={k} failed calibration: {e}");
        }
    }
    mero
}

#[cfg(debug_assertions)]
fn self_test(m: &MeroGraph) -> Result<(), String> {
    if !m.graph.is_admissible() {
        return Err("heuristic is not admissible".into());
    }
    let out = crate::baselines::astar(&m.graph);
    let got = out.stats.expansions;
    let want = expected_astar_expansions(m.k as u64);
    if got != want {
        return Err(format!("A* expanded {got} states, expected {want}"));
    }
    if out.solution.map(|s| s.cost) != Some(m.optimal_cost()) {
        return Err("A* returned a non-optimal cost".into());
    }
    Ok(())
}

impl StateSpace for MeroGraph {
    type State = GraphState;
    type Action = EdgeId;

    fn init(&self) -> GraphState {
        self.graph.init()
    }
    fn is_goal(&self, s: &GraphState) -> bool {
        self.graph.is_goal(s)
    }
    fn succ(&self, s: &GraphState, out: &mut Vec<(EdgeId, GraphState)>) {
        self.graph.succ(s, out)
    }
    fn cost(&self, a: &EdgeId) -> Cost {
        self.graph.cost(a)
    }
    fn h(&self, s: &GraphState) -> Cost {
        self.graph.h(s)
    }
}
