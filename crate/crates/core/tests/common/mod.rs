#![allow(dead_code)]

use ebsearch::baselines::{brute_force_cstar, enumerate_promising, PromisingCounts};
use ebsearch::domains::graph::ExplicitGraph;
use ebsearch::domains::random::{random_space, HeuristicMode, RandomSpec};
use ebsearch::Cost;

pub struct Sample {
    pub seed: u64,
    pub graph: ExplicitGraph,
    pub c_star: Cost,
    pub counts: PromisingCounts,
}

/// Random space for `seed`, or `None` when its promising-path count exceeds
/// `max_paths` (kept small so exhaustive budget sweeps stay cheap).
pub fn sample(seed: u64, max_paths: u64) -> Option<Sample> {
    let mode = match seed % 3 {
        0 => HeuristicMode::PerStateSlack,
        1 => HeuristicMode::UniformSlack,
        _ => HeuristicMode::Blind,
    };
    let spec = RandomSpec {
        n_states: 4 + (seed % 9) as usize,
        mode,
        slack: seed % 10,
        ..RandomSpec::default()
    };
    let graph = random_space(seed, &spec);
    let c_star = brute_force_cstar(&graph).ok()?;
    let counts = enumerate_promising(&graph, c_star).ok()?;
    (counts.p_plus <= max_paths).then_some(Sample {
        seed,
        graph,
        c_star,
        counts,
    })
}
