mod common;

use ebsearch::bounded::{BoundedDijkstra, BoundedSearch, Cached, Dfbnb, Limit};
use ebsearch::domains::graph::{fixture_g1, fixture_g2};
use ebsearch::verify::check_bounded_contract;
use ebsearch::Cost;
use proptest::prelude::*;

fn sweep(sample: &common::Sample) -> Result<(), String> {
    let top = sample.c_star.get() + 3;
    let max_limit = sample.counts.p_plus + 2;
    for f in 0..=top {
        let f = Cost::new(f);
        for limit in (1..=max_limit).map(Limit::Finite).chain([Limit::Unbounded]) {
            check_bounded_contract(&sample.graph, &mut Dfbnb::new(), f, limit, sample.c_star)
                .map_err(|e| format!("seed {} dfbnb: {e}", sample.seed))?;
            check_bounded_contract(&sample.graph, &mut BoundedDijkstra::new(), f, limit, sample.c_star)
                .map_err(|e| format!("seed {} dijkstra: {e}", sample.seed))?;
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn engines_keep_the_contract(seed in 0u64..1_000_000) {
        if let Some(s) = common::sample(seed, 300) {
            prop_assert_eq!(sweep(&s), Ok(()));
        }
    }

    #[test]
    fn expansions_between_promising_counts(seed in 0u64..1_000_000) {
        if let Some(s) = common::sample(seed, 10_000) {
            let tree = Dfbnb::new().run(&s.graph, s.c_star, Limit::Unbounded);
            let graph = BoundedDijkstra::new().run(&s.graph, s.c_star, Limit::Unbounded);
            let c = s.counts;
            prop_assert!(c.p_star <= tree.expanded_nodes && tree.expanded_nodes <= c.p_plus, "{:?} {}", c, tree.expanded_nodes);
            prop_assert!(c.s_star <= graph.expanded_nodes && graph.expanded_nodes <= c.s_plus, "{:?} {}", c, graph.expanded_nodes);
            prop_assert!(c.p_star <= c.p_plus && c.s_star <= c.s_plus && c.s_plus <= c.p_plus);
        }
    }

    #[test]
    fn cache_is_transparent(seed in 0u64..1_000_000, queries in prop::collection::vec((0u64..40, 0u64..60), 1..40)) {
        if let Some(s) = common::sample(seed, 100_000) {
            let mut cached = Cached::new(Dfbnb::new());
            let mut cached_graph = Cached::new(BoundedDijkstra::new());
            for (f, n) in queries {
                let f = Cost::new(f);
                let limit = if n == 0 { Limit::Unbounded } else { Limit::Finite(n) };
                prop_assert_eq!(cached.run(&s.graph, f, limit), Dfbnb::new().run(&s.graph, f, limit));
                prop_assert_eq!(cached_graph.run(&s.graph, f, limit), BoundedDijkstra::new().run(&s.graph, f, limit));
            }
        }
    }
}

#[test]
fn fixtures_keep_the_contract() {
    for (g, c) in [(fixture_g1(), 4), (fixture_g2(), 3)] {
        for f in 0..=c + 3 {
            for limit in (1..=6).map(Limit::Finite).chain([Limit::Unbounded]) {
                check_bounded_contract(&g, &mut Dfbnb::new(), Cost::new(f), limit, Cost::new(c)).unwrap();
                check_bounded_contract(&g, &mut BoundedDijkstra::new(), Cost::new(f), limit, Cost::new(c)).unwrap();
            }
        }
    }
}

#[test]
fn completed_results_do_not_depend_on_the_budget() {
    let g = fixture_g2();
    for f in 0..6 {
        let f = Cost::new(f);
        let full = Dfbnb::new().run(&g, f, Limit::Unbounded);
        let exact = Dfbnb::new().run(&g, f, Limit::Finite(full.expanded_nodes.max(1)));
        assert_eq!(full, exact);
        if full.expanded_nodes > 1 {
            let short = Dfbnb::new().run(&g, f, Limit::Finite(full.expanded_nodes - 1));
            assert!(short.is_incomplete);
            assert_eq!(short.expanded_nodes, full.expanded_nodes - 1);
        }
    }
}

#[test]
fn sampler_accepts_enough_spaces() {
    let accepted = (0..300).filter(|&s| common::sample(s, 64).is_some()).count();
    assert!(accepted > 100, "{accepted}");
}

#[test]
fn cache_does_not_reuse_a_higher_bound_for_a_lower_one() {
    // At f=4 the direct edge 0->3 (g=5) is pruned; at f=6 it is generated
    // and then replaced by the cheaper route through 4.
    let dump = "# init 0\n# goal 5\n2 1 4\n1 5 0\n2 5 4\n0 4 0\n3 2 5\n4 3 4\n2 4 5\n0 3 5\n";
    let g = ebsearch::domains::graph::ExplicitGraph::from_dump(dump).unwrap();
    let mut cached = Cached::new(BoundedDijkstra::new());
    let high = cached.run(&g, Cost::new(6), Limit::Unbounded);
    let low = cached.run(&g, Cost::new(4), Limit::Finite(7));
    assert_eq!(high.min_f_pruned, Cost::new(9));
    assert_eq!(low, BoundedDijkstra::new().run(&g, Cost::new(4), Limit::Finite(7)));
    assert_eq!(low.min_f_pruned, Cost::new(5));
}
