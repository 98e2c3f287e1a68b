mod common;

use ebsearch::baselines::{astar, idastar};
use ebsearch::bounded::{BoundedDijkstra, Dfbnb};
use ebsearch::domains::graph::{fixture_g1, unit_chain};
use ebsearch::domains::mero::mero_graph;
use ebsearch::ebsss::ebsss_search;
use ebsearch::stats::{Phase, StatusTag};
use ebsearch::verify::check_driver_log;
use ebsearch::{validate_solution, Cost, EbParams, Ratio};
use proptest::prelude::*;

fn params(c1: (u64, u64), c2: (u64, u64), delta: u64) -> EbParams {
    EbParams::new(
        Ratio::new(c1.0, c1.1).unwrap(),
        Ratio::new(c2.0, c2.1).unwrap(),
        delta,
    )
    .unwrap()
}

/// `(c1, c2, delta)` with `c2 >= c1 > 1`.
fn any_params() -> impl Strategy<Value = EbParams> {
    (2u64..40, 1u64..4, 0u64..40, 1u64..8).prop_map(|(n1, d1, extra, delta)| {
        // c1 = (d1 + n1) / d1 > 1, c2 = c1 + extra / d1.
        params((d1 + n1, d1), (d1 + n1 + extra, d1), delta)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ebsss_is_optimal(seed in 0u64..1_000_000, p in any_params()) {
        if let Some(s) = common::sample(seed, 1_000_000) {
            for (name, out) in [
                ("ebts", ebsss_search(&s.graph, Dfbnb::new(), &p)),
                ("ebgs", ebsss_search(&s.graph, BoundedDijkstra::new(), &p)),
            ] {
                let sol = out.solution.expect("random spaces are solvable");
                prop_assert_eq!(sol.cost, s.c_star, "{} seed {}", name, seed);
                prop_assert!(validate_solution(&s.graph, &sol).is_ok());
                let logged = check_driver_log(&out.stats.iteration_log, &p, s.c_star);
                prop_assert!(logged.is_ok(), "{} seed {}: {:?}", name, seed, logged);
            }
        }
    }

    #[test]
    fn astar_matches_brute_force(seed in 0u64..1_000_000) {
        if let Some(s) = common::sample(seed, u64::MAX) {
            let out = astar(&s.graph);
            prop_assert_eq!(out.solution.map(|x| x.cost), Some(s.c_star));
        }
    }

    #[test]
    fn idastar_bounds_increase_up_to_cstar(seed in 0u64..1_000_000) {
        if let Some(s) = common::sample(seed, 100_000) {
            let out = idastar(&s.graph);
            prop_assert_eq!(out.solution.map(|x| x.cost), Some(s.c_star));
            let bounds: Vec<Cost> = out.stats.iteration_log.iter().map(|r| r.f_max).collect();
            prop_assert!(bounds.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(bounds.iter().all(|&b| b <= s.c_star));
        }
    }
}

#[test]
fn g1_end_to_end() {
    let p = params((2, 1), (5, 1), 1);
    let out = ebsss_search(&fixture_g1(), Dfbnb::new(), &p);
    assert_eq!(out.solution.unwrap().cost, Cost::new(4));
    // Main at h(A) = 2 expands A; the window is (2, 5); probing 3 expands A
    // again and is too low; 4 solves.
    let trace: Vec<(Phase, u64, StatusTag)> = out
        .stats
        .iteration_log
        .iter()
        .map(|r| (r.phase, r.f_max.get(), r.status))
        .collect();
    assert_eq!(
        trace,
        vec![
            (Phase::Main, 2, StatusTag::Completed),
            (Phase::Exponential, 3, StatusTag::TooLow),
            (Phase::Exponential, 4, StatusTag::Solved),
        ]
    );
}

#[test]
fn unit_chain_log_is_well_formed() {
    for (c1, c2, delta) in [(2, 5, 1), (10, 20, 1), (2, 5, 7)] {
        let p = params((c1, 1), (c2, 1), delta);
        for engine in 0..2 {
            let g = unit_chain(200);
            let out = if engine == 0 {
                ebsss_search(&g, Dfbnb::new(), &p)
            } else {
                ebsss_search(&g, BoundedDijkstra::new(), &p)
            };
            assert_eq!(out.solution.unwrap().cost, Cost::new(200));
            check_driver_log(&out.stats.iteration_log, &p, Cost::new(200)).unwrap();
        }
    }
}

#[test]
fn mero_driver_log() {
    let m = mero_graph(200);
    for p in [params((2, 1), (5, 1), 1), params((10, 1), (20, 1), 3)] {
        let out = ebsss_search(&m, BoundedDijkstra::new(), &p);
        assert_eq!(out.solution.unwrap().cost, m.optimal_cost());
        let summary = check_driver_log(&out.stats.iteration_log, &p, m.optimal_cost()).unwrap();
        assert!(summary.main_iterations > 1);
    }
}

#[test]
fn unsolvable_space_is_reported() {
    use ebsearch::domains::graph::ExplicitGraph;
    let mut b = ExplicitGraph::builder();
    let s = b.state("s", 0);
    let t = b.state("t", 0);
    b.edge(s, t, 2);
    b.edge(t, s, 3);
    let g = b.build(s);
    let p = params((2, 1), (5, 1), 1);
    // Tree search cannot tell an unsolvable cyclic space from a deep one;
    // graph search closes every state and then has nothing left to prune.
    let out = ebsss_search(&g, BoundedDijkstra::new(), &p);
    assert!(out.solution.is_none());
    assert_eq!(out.stats.iteration_log.last().unwrap().status, StatusTag::Exhausted);

    // Without cycles both engines detect it.
    let mut b = ExplicitGraph::builder();
    let s = b.state("s", 0);
    let t = b.state("t", 0);
    b.edge(s, t, 2);
    let g = b.build(s);
    let out = ebsss_search(&g, Dfbnb::new(), &p);
    assert!(out.solution.is_none());
}
