//! Seeded random explicit spaces for property tests.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cost::Cost;
use crate::domains::graph::{ExplicitGraph, GraphState};

/// How the heuristic of a random space is derived from the true `h*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeuristicMode {
    /// `h = 0` everywhere.
    Blind,
    /// `h = max(0, h* - slack)` with one random slack for all states; this
    /// keeps `h` consistent.
    UniformSlack,
    /// `h = max(0, h* - slack_s)` with independent per-state slack, which is
    /// admissible and usually inconsistent.
    PerStateSlack,
}

#[derive(Debug, Clone, Copy)]
pub struct RandomSpec {
    pub n_states: usize,
    pub max_cost: u64,
    pub max_out_degree: usize,
    pub slack: u64,
    pub mode: HeuristicMode,
}

impl Default for RandomSpec {
    fn default() -> Self {
        RandomSpec {
            n_states: 10,
            max_cost: 5,
            max_out_degree: 3,
            slack: 6,
            mode: HeuristicMode::PerStateSlack,
        }
    }
}

/// Random digraph over `n_states` states (state 0 is the start, the last
/// state is the goal) with a guaranteed start-to-goal path.
///
/// Edge costs are drawn from `0..=max_cost`, but zero-cost edges only go from
/// a lower to a higher state number, so every cycle has positive cost.
pub fn random_space(seed: u64, spec: &RandomSpec) -> ExplicitGraph {
    assert!(spec.n_states >= 2 && spec.n_states <= 64);
    assert!(spec.max_cost >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = spec.n_states;
    let goal = n - 1;

    let mut b = ExplicitGraph::builder();
    let states: Vec<GraphState> = (0..n).map(|i| b.state(i.to_string(), 0)).collect();
    b.goal(states[goal]);

    let cost_for = |rng: &mut ChaCha8Rng, from: usize, to: usize| {
        if to > from {
            rng.gen_range(0..=spec.max_cost)
        } else {
            rng.gen_range(1..=spec.max_cost)
        }
    };

    let mut edges: Vec<(usize, usize)> = Vec::new();
    // Backbone path from the start to the goal through a random subset.
    let mut middle: Vec<usize> = (1..goal).collect();
    middle.shuffle(&mut rng);
    let len = rng.gen_range(middle.len() / 2..=middle.len());
    let mut prev = 0;
    for &s in middle.iter().take(len) {
        edges.push((prev, s));
        prev = s;
    }
    edges.push((prev, goal));

    for from in 0..goal {
        let degree = rng.gen_range(1..=spec.max_out_degree.max(1));
        let have = edges.iter().filter(|e| e.0 == from).count();
        for _ in have..degree {
            let to = rng.gen_range(0..n);
            // Few shortcuts into the goal, so optimal paths stay long.
            if to == goal && rng.gen_range(0..4) != 0 {
                continue;
            }
            if to != from && !edges.contains(&(from, to)) {
                edges.push((from, to));
            }
        }
    }
    // Interleave successor orders rather than listing the backbone first.
    edges.shuffle(&mut rng);
    for (from, to) in edges {
        let c = cost_for(&mut rng, from, to);
        b.edge(states[from], states[to], c);
    }
    let graph = b.build(states[0]);

    let star = graph.perfect_heuristic();
    let uniform = rng.gen_range(0..=spec.slack);
    let unreachable_cap = spec.max_cost * n as u64;
    let h: Vec<Cost> = star
        .iter()
        .enumerate()
        .map(|(i, &hs)| {
            if i == goal || spec.mode == HeuristicMode::Blind {
                return Cost::ZERO;
            }
            if hs.is_infinite() {
                // Any value is admissible at a dead end; the cap keeps edges
                // into dead ends consistent.
                return Cost::new(match spec.mode {
                    HeuristicMode::PerStateSlack => rng.gen_range(0..=unreachable_cap),
                    _ => unreachable_cap,
                });
            }
            let slack = match spec.mode {
                HeuristicMode::UniformSlack => uniform,
                _ => rng.gen_range(0..=spec.slack),
            };
            Cost::new(hs.get().saturating_sub(slack))
        })
        .collect();
    graph.with_heuristic(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::StateSpace;

    #[test]
    fn deterministic_per_seed() {
        let spec = RandomSpec::default();
        assert_eq!(random_space(7, &spec).to_dump(), random_space(7, &spec).to_dump());
        assert_ne!(random_space(7, &spec).to_dump(), random_space(8, &spec).to_dump());
    }

    #[test]
    fn admissible_and_solvable() {
        for seed in 0..200 {
            for mode in [HeuristicMode::Blind, HeuristicMode::UniformSlack, HeuristicMode::PerStateSlack] {
                let spec = RandomSpec {
                    mode,
                    n_states: 2 + (seed as usize % 11),
                    ..RandomSpec::default()
                };
                let g = random_space(seed, &spec);
                assert!(g.is_admissible());
                assert!(g.perfect_heuristic()[0].is_finite());
                if mode != HeuristicMode::PerStateSlack {
                    assert!(g.inconsistent_edges().is_empty(), "seed {seed} {mode:?}");
                }
                for (from, to, c) in g.edges() {
                    assert!(c.get() > 0 || to > from);
                }
                assert_eq!(g.h(&GraphState(spec.n_states as u32 - 1)), Cost::ZERO);
            }
        }
    }
}
