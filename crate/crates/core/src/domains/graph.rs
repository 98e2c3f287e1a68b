//! Explicit finite graphs: the hand-checkable fixtures, the Mérő family and
//! the random property-test spaces are all built on [`ExplicitGraph`].

use std::fmt::Write as _;

use thiserror::Error;

use crate::cost::Cost;
use crate::space::StateSpace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphState(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub u32);

#[derive(Debug, Clone)]
pub struct ExplicitGraph {
    names: Vec<String>,
    h: Vec<Cost>,
    goal: Vec<bool>,
    adj: Vec<Vec<(EdgeId, GraphState)>>,
    edges: Vec<(GraphState, GraphState, Cost)>,
    init: GraphState,
}

#[derive(Debug, Default)]
pub struct GraphBuilder {
    names: Vec<String>,
    h: Vec<Cost>,
    goal: Vec<bool>,
    edges: Vec<(GraphState, GraphState, Cost)>,
}

impl GraphBuilder {
    pub fn state(&mut self, name: impl Into<String>, h: u64) -> GraphState {
        self.names.push(name.into());
        self.h.push(Cost::new(h));
        self.goal.push(false);
        GraphState(self.names.len() as u32 - 1)
    }

    pub fn goal(&mut self, s: GraphState) {
        self.goal[s.0 as usize] = true;
    }

    pub fn set_h(&mut self, s: GraphState, h: Cost) {
        self.h[s.0 as usize] = h;
    }

    /// Adds an edge; successors are listed in insertion order.
    pub fn edge(&mut self, from: GraphState, to: GraphState, cost: u64) -> EdgeId {
        self.edges.push((from, to, Cost::new(cost)));
        EdgeId(self.edges.len() as u32 - 1)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn build(self, init: GraphState) -> ExplicitGraph {
        let mut adj = vec![Vec::new(); self.names.len()];
        for (i, &(from, to, _)) in self.edges.iter().enumerate() {
            adj[from.0 as usize].push((EdgeId(i as u32), to));
        }
        ExplicitGraph {
            names: self.names,
            h: self.h,
            goal: self.goal,
            adj,
            edges: self.edges,
            init,
        }
    }
}

impl ExplicitGraph {
    pub fn builder() -> GraphBuilder {
        GraphBuilder::default()
    }

    pub fn num_states(&self) -> usize {
        self.names.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn name(&self, s: GraphState) -> &str {
        &self.names[s.0 as usize]
    }

    pub fn state_named(&self, name: &str) -> Option<GraphState> {
        self.names.iter().position(|n| n == name).map(|i| GraphState(i as u32))
    }

    pub fn states(&self) -> impl Iterator<Item = GraphState> {
        (0..self.names.len() as u32).map(GraphState)
    }

    pub fn edges(&self) -> impl Iterator<Item = (GraphState, GraphState, Cost)> + '_ {
        self.edges.iter().copied()
    }

    pub fn heuristic_table(&self) -> &[Cost] {
        &self.h
    }

    /// Replaces the heuristic table. Goals must keep `h = 0`.
    pub fn with_heuristic(mut self, h: Vec<Cost>) -> Self {
        assert_eq!(h.len(), self.h.len());
        debug_assert!(self.states().all(|s| !self.goal[s.0 as usize] || h[s.0 as usize] == Cost::ZERO));
        self.h = h;
        self
    }

    /// Exact optimal cost-to-go of every state (`INFINITY` where no goal is
    /// reachable), by Dijkstra on the reversed graph.
    pub fn perfect_heuristic(&self) -> Vec<Cost> {
        use std::cmp::Reverse;
        use std::collections::BinaryHeap;
        let n = self.names.len();
        let mut rev = vec![Vec::new(); n];
        for &(from, to, c) in &self.edges {
            rev[to.0 as usize].push((from.0 as usize, c));
        }
        let mut dist = vec![Cost::INFINITY; n];
        let mut heap = BinaryHeap::new();
        for s in 0..n {
            if self.goal[s] {
                dist[s] = Cost::ZERO;
                heap.push(Reverse((Cost::ZERO, s)));
            }
        }
        while let Some(Reverse((d, s))) = heap.pop() {
            if d > dist[s] {
                continue;
            }
            for &(p, c) in &rev[s] {
                let nd = d + c;
                if nd < dist[p] {
                    dist[p] = nd;
                    heap.push(Reverse((nd, p)));
                }
            }
        }
        dist
    }

    /// Edges `(s, s')` with `h(s) > c + h(s')`.
    pub fn inconsistent_edges(&self) -> Vec<(GraphState, GraphState)> {
        self.edges
            .iter()
            .filter(|&&(from, to, c)| self.h[from.0 as usize] > c + self.h[to.0 as usize])
            .map(|&(from, to, _)| (from, to))
            .collect()
    }

    pub fn is_admissible(&self) -> bool {
        self.perfect_heuristic()
            .iter()
            .zip(&self.h)
            .all(|(star, h)| h <= star)
    }

    /// Text dump: `# init`/`# goal` header lines, one `src dst cost` line
    /// per edge, then a `# h` section of `state h` lines.
    pub fn to_dump(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# init {}", self.init.0).unwrap();
        let goals: Vec<String> = self.states().filter(|s| self.goal[s.0 as usize]).map(|s| s.0.to_string()).collect();
        writeln!(out, "# goal {}", goals.join(" ")).unwrap();
        for &(from, to, c) in &self.edges {
            writeln!(out, "{} {} {}", from.0, to.0, c).unwrap();
        }
        writeln!(out, "# h").unwrap();
        for (i, h) in self.h.iter().enumerate() {
            writeln!(out, "{i} {h}").unwrap();
        }
        out
    }

    /// Parses the format written by [`ExplicitGraph::to_dump`]. States are
    /// numbered `0..n` where `n` is one more than the largest id mentioned.
    pub fn from_dump(text: &str) -> Result<ExplicitGraph, DumpError> {
        const MAX_STATES: u64 = 1 << 20;
        let mut init = None;
        let mut goals = Vec::new();
        let mut edges = Vec::new();
        let mut hs = Vec::new();
        let mut in_h = false;
        let mut max_id = 0u64;

        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| DumpError {
                line: line_no,
                message: msg.to_string(),
            };
            let int = |t: &str| t.parse::<u64>().map_err(|_| err(&format!("invalid integer {t:?}")));
            if let Some(rest) = line.strip_prefix('#') {
                let mut words = rest.split_whitespace();
                match words.next() {
                    Some("init") => {
                        let v = words.next().ok_or_else(|| err("missing init state"))?;
                        init = Some(int(v)?);
                    }
                    Some("goal") => {
                        for w in words {
                            goals.push(int(w)?);
                        }
                    }
                    Some("h") => in_h = true,
                    _ => {}
                }
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if in_h {
                if fields.len() != 2 {
                    return Err(err("expected `state h`"));
                }
                let s = int(fields[0])?;
                let h = if fields[1] == "inf" {
                    return Err(err("heuristic must be finite"));
                } else {
                    int(fields[1])?
                };
                hs.push((s, h));
                max_id = max_id.max(s);
            } else {
                if fields.len() != 3 {
                    return Err(err("expected `src dst cost`"));
                }
                let (a, b, c) = (int(fields[0])?, int(fields[1])?, int(fields[2])?);
                edges.push((a, b, c));
                max_id = max_id.max(a).max(b);
            }
            if max_id >= MAX_STATES {
                return Err(err("state id too large"));
            }
        }
        let init = init.ok_or(DumpError {
            line: 0,
            message: "missing `# init` line".into(),
        })?;
        for &g in &goals {
            max_id = max_id.max(g);
        }
        max_id = max_id.max(init);
        if max_id >= MAX_STATES {
            return Err(DumpError {
                line: 0,
                message: "state id too large".into(),
            });
        }
        let n = max_id + 1;
        let mut b = ExplicitGraph::builder();
        for i in 0..n {
            b.state(i.to_string(), 0);
        }
        for &(s, h) in &hs {
            if h > Cost::MAX_FINITE.get() {
                return Err(DumpError {
                    line: 0,
                    message: format!("heuristic of state {s} out of range"),
                });
            }
            b.set_h(GraphState(s as u32), Cost::new(h));
        }
        for &g in &goals {
            b.goal(GraphState(g as u32));
        }
        for &(a, bb, c) in &edges {
            if c > Cost::MAX_FINITE.get() {
                return Err(DumpError {
                    line: 0,
                    message: format!("edge cost {c} out of range"),
                });
            }
            b.edge(GraphState(a as u32), GraphState(bb as u32), c);
        }
        Ok(b.build(GraphState(init as u32)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph dump line {line}: {message}")]
pub struct DumpError {
    pub line: usize,
    pub message: String,
}

impl StateSpace for ExplicitGraph {
    type State = GraphState;
    type Action = EdgeId;

    fn init(&self) -> GraphState {
        self.init
    }

    fn is_goal(&self, s: &GraphState) -> bool {
        self.goal[s.0 as usize]
    }

    fn succ(&self, s: &GraphState, out: &mut Vec<(EdgeId, GraphState)>) {
        out.extend_from_slice(&self.adj[s.0 as usize]);
    }

    fn cost(&self, a: &EdgeId) -> Cost {
        self.edges[a.0 as usize].2
    }

    fn h(&self, s: &GraphState) -> Cost {
        self.h[s.0 as usize]
    }
}

/// G1: A (init) -> B cost 1, A -> C cost 3, B -> G cost 3, C -> G cost 1;
/// h(A)=2, h(B)=3, h(C)=1, h(G)=0. Two optimal paths of cost 4.
pub fn fixture_g1() -> ExplicitGraph {
    let mut b = ExplicitGraph::builder();
    let a = b.state("A", 2);
    let bb = b.state("B", 3);
    let c = b.state("C", 1);
    let g = b.state("G", 0);
    b.goal(g);
    b.edge(a, bb, 1);
    b.edge(a, c, 3);
    b.edge(bb, g, 3);
    b.edge(c, g, 1);
    b.build(a)
}

/// G2: a diamond A -> {B, C} -> D -> G with unit costs and h = 0, so two
/// promising paths end in D.
pub fn fixture_g2() -> ExplicitGraph {
    let mut b = ExplicitGraph::builder();
    let a = b.state("A", 0);
    let bb = b.state("B", 0);
    let c = b.state("C", 0);
    let d = b.state("D", 0);
    let g = b.state("G", 0);
    b.goal(g);
    b.edge(a, bb, 1);
    b.edge(a, c, 1);
    b.edge(bb, d, 1);
    b.edge(c, d, 1);
    b.edge(d, g, 1);
    b.build(a)
}

/// Unit-cost chain `0 -> 1 -> ... -> n` with goal `n` and h = 0.
pub fn unit_chain(n: u32) -> ExplicitGraph {
    let mut b = ExplicitGraph::builder();
    let states: Vec<_> = (0..=n).map(|i| b.state(i.to_string(), 0)).collect();
    b.goal(states[n as usize]);
    for w in states.windows(2) {
        b.edge(w[0], w[1], 1);
    }
    b.build(states[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::{f_value, path_cost, Path};

    #[test]
    fn g1_f_values() {
        let g1 = fixture_g1();
        let a = g1.init();
        let empty = Path::empty(a);
        assert_eq!(f_value(&g1, &empty).unwrap(), Cost::new(2));
        let mut ab = Path::empty(a);
        ab.push(EdgeId(0), g1.state_named("B").unwrap(), Cost::new(1)).unwrap();
        assert_eq!(f_value(&g1, &ab).unwrap(), Cost::new(4));
        let mut abg = ab.clone();
        abg.push(EdgeId(2), g1.state_named("G").unwrap(), Cost::new(3)).unwrap();
        assert_eq!(f_value(&g1, &abg).unwrap(), abg.g());
        assert_eq!(path_cost(&g1, &abg).unwrap(), Cost::new(4));
        assert_eq!(path_cost(&g1, &empty).unwrap(), Cost::ZERO);
    }

    #[test]
    fn g1_heuristic_is_consistent_and_admissible() {
        let g1 = fixture_g1();
        assert!(g1.is_admissible());
        assert!(g1.inconsistent_edges().is_empty());
        assert_eq!(g1.perfect_heuristic()[0], Cost::new(4));
    }

    #[test]
    fn long_path_cost() {
        let mut b = ExplicitGraph::builder();
        let states: Vec<_> = (0..=100).map(|i| b.state(i.to_string(), 0)).collect();
        for w in states.windows(2) {
            b.edge(w[0], w[1], 1_500_000);
        }
        let g = b.build(states[0]);
        let steps: Vec<_> = (0..100).map(|i| (EdgeId(i), GraphState(i + 1))).collect();
        let p = Path::from_steps(&g, states[0], steps).unwrap();
        assert_eq!(path_cost(&g, &p).unwrap(), Cost::new(150_000_000));
        assert_eq!(p.g(), Cost::new(150_000_000));
    }

    #[test]
    fn dump_round_trip() {
        let g1 = fixture_g1();
        let text = g1.to_dump();
        let back = ExplicitGraph::from_dump(&text).unwrap();
        assert_eq!(back.to_dump(), text);
        assert_eq!(back.num_states(), 4);
        assert!(back.is_goal(&GraphState(3)));
    }

    #[test]
    fn dump_errors_carry_line_numbers() {
        let e = ExplicitGraph::from_dump("# init 0\n0 1 x\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(ExplicitGraph::from_dump("0 1 2\n").is_err());
        assert!(ExplicitGraph::from_dump("# init 0\n0 1\n").is_err());
    }
}
