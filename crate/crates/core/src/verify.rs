//! Checkers for the bounded-search contract and for driver iteration logs.
//! They return a description of the first violation found, so property
//! tests and benchmark harnesses can report it directly.

use crate::bounded::{BoundedSearch, BoundedSearchResult, Limit};
use crate::cost::Cost;
use crate::ebsss::EbParams;
use crate::space::{validate_solution, Instrumented, StateSpace};
use crate::stats::{IterationLog, Phase, StatusTag};

/// Runs `engine` once at `(f_max, limit)` and checks it against the known
/// optimal cost `c_star`:
///
/// 1. at most `limit` expansions, and an incomplete search has no solution;
/// 2. a completed search with `f_max >= C*` returns a valid solution of cost
///    `C*`;
/// 3. a completed search with `f_max < C*` returns no solution;
/// 4. the reported expansion count equals the number of `succ` calls.
///
/// A completed solution-free search must also report an f-window that
/// contains `f_max`.
pub fn check_bounded_contract<P, E>(
    space: &P,
    engine: &mut E,
    f_max: Cost,
    limit: Limit,
    c_star: Cost,
) -> Result<BoundedSearchResult<P::State, P::Action>, String>
where
    P: StateSpace,
    E: for<'a> BoundedSearch<Instrumented<&'a P>>,
{
    let counted = Instrumented::new(space);
    let r = engine.run(&counted, f_max, limit);
    let ctx = || format!("f_max={f_max} limit={limit} C*={c_star}");
    if let Limit::Finite(n) = limit {
        if r.expanded_nodes > n {
            return Err(format!("{}: expanded {} nodes", ctx(), r.expanded_nodes));
        }
    }
    if r.is_incomplete && r.solution.is_some() {
        return Err(format!("{}: incomplete search returned a solution", ctx()));
    }
    if !r.is_incomplete {
        match &r.solution {
            Some(sol) if f_max >= c_star => {
                if sol.cost != c_star {
                    return Err(format!("{}: solution cost {}", ctx(), sol.cost));
                }
                validate_solution(space, sol).map_err(|e| format!("{}: {e}", ctx()))?;
            }
            Some(sol) => return Err(format!("{}: found a solution of cost {} below C*", ctx(), sol.cost)),
            None if f_max >= c_star => return Err(format!("{}: completed without a solution", ctx())),
            None => {
                if r.max_f_expanded > f_max || r.min_f_pruned <= f_max {
                    return Err(format!(
                        "{}: window [{}, {}) does not contain the bound",
                        ctx(),
                        r.max_f_expanded,
                        r.min_f_pruned
                    ));
                }
            }
        }
    }
    let calls = counted.counters().expansions;
    if calls != r.expanded_nodes {
        return Err(format!("{}: reported {} expansions, made {calls}", ctx(), r.expanded_nodes));
    }
    Ok(r)
}

/// Facts gathered by [`check_driver_log`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DriverSummary {
    pub main_iterations: usize,
    /// Probe count of every new-bound search, in order.
    pub probes_per_bound: Vec<usize>,
    /// Main-loop invocations answered from the cache.
    pub main_cache_hits: usize,
}

/// Upper bound on the probes one new-bound search may make:
/// `2 * ceil(log2(max(C* + delta, 2 C*))) + 2`.
pub fn probe_bound(c_star: Cost, delta: u64) -> usize {
    let m = (c_star.get() as u128 + delta as u128).max(2 * c_star.get() as u128).max(1);
    let log = 128 - (m - 1).leading_zeros();
    2 * log as usize + 2
}

/// Replays a driver's iteration log for a search whose optimal cost is
/// `c_star` and checks it step by step:
///
/// * exponential probes are `f + delta`, `f + 2 delta`, `f + 4 delta`, ...,
///   and every binary probe is the midpoint of the current window;
/// * at every binary step the upper end has been found too high and the
///   lower end minus one completed without a solution, so it is at most `C*`;
/// * each main iteration uses the bound the previous search settled on, a
///   bound above `C*` only if it was certified good;
/// * every main iteration except the last expands at least `ceil(c1 * N)`
///   nodes, `N` being the previous main iteration's count;
/// * no new-bound search makes more than [`probe_bound`] probes;
/// * the log ends with a solution of cost `C*`.
pub fn check_driver_log(log: &[IterationLog], params: &EbParams, c_star: Cost) -> Result<DriverSummary, String> {
    let mut summary = DriverSummary::default();
    let mut i = 0;
    let mut expected_f: Option<(Cost, bool)> = None;
    let mut prev_main: Option<u64> = None;
    let limit = probe_bound(c_star, params.delta());

    while i < log.len() {
        let main = &log[i];
        if main.phase != Phase::Main {
            return Err(format!("entry {i}: expected a main iteration"));
        }
        if let Some((f, certified)) = expected_f {
            if main.f_max != f {
                return Err(format!("entry {i}: main bound {} but the search settled on {f}", main.f_max));
            }
            if f > c_star && !certified {
                return Err(format!("entry {i}: bound {f} overshoots C* without a good certificate"));
            }
        }
        summary.main_iterations += 1;
        summary.main_cache_hits += usize::from(main.cache_hit);
        let last = i + 1 == log.len();
        if let Some(n) = prev_main {
            let (n_min, _) = params.window(n.max(1));
            if !last && main.expanded_nodes < n_min {
                return Err(format!(
                    "entry {i}: main iteration expanded {} < ceil(c1 * {n}) = {n_min}",
                    main.expanded_nodes
                ));
            }
        }
        match main.status {
            StatusTag::Solved => {
                if !last {
                    return Err(format!("entry {i}: log continues after a solution"));
                }
                if main.f_max < c_star {
                    return Err(format!("entry {i}: solved below C*"));
                }
                return Ok(summary);
            }
            StatusTag::Completed => {}
            other => return Err(format!("entry {i}: main iteration has status {other}")),
        }
        if main.f_max >= c_star {
            return Err(format!("entry {i}: completed at {} >= C* without a solution", main.f_max));
        }
        prev_main = Some(main.expanded_nodes);
        let f_old = main.f_max;
        let (n_min, n_max) = params.window(main.expanded_nodes.max(1));
        i += 1;

        // Exponential phase.
        let mut delta = params.delta();
        let mut f_low = f_old.plus(1);
        let mut f_high = f_old.plus(delta);
        let mut probes = 0;
        let mut outcome: Option<(Cost, bool)> = None;
        let mut binary = false;
        while i < log.len() && log[i].phase != Phase::Main {
            let p = &log[i];
            probes += 1;
            if p.n_min != Some(n_min) || p.n_max != Limit::Finite(n_max) {
                return Err(format!("entry {i}: probe window differs from ({n_min}, {n_max})"));
            }
            if !binary {
                if p.phase != Phase::Exponential || p.f_max != f_high {
                    return Err(format!("entry {i}: expected exponential probe at {f_high}"));
                }
                match p.status {
                    StatusTag::Good => outcome = Some((f_high, true)),
                    StatusTag::TooHigh => binary = true,
                    StatusTag::TooLow => {
                        delta = delta.saturating_mul(2);
                        f_low = f_high.plus(1);
                        f_high = f_old.plus(delta);
                    }
                    StatusTag::Solved => outcome = Some((p.f_max, true)),
                    other => return Err(format!("entry {i}: probe status {other}")),
                }
                if binary && f_low == f_high {
                    outcome = Some((f_low, false));
                }
            } else {
                if f_low > c_star {
                    return Err(format!("entry {i}: binary lower end {f_low} above C*"));
                }
                let mid = f_low.midpoint(f_high);
                if p.phase != Phase::Binary || p.f_max != mid {
                    return Err(format!("entry {i}: expected binary probe at {mid}"));
                }
                match p.status {
                    StatusTag::TooLow => f_low = mid.plus(1),
                    StatusTag::TooHigh => f_high = mid,
                    StatusTag::Good | StatusTag::Solved => outcome = Some((mid, true)),
                    other => return Err(format!("entry {i}: probe status {other}")),
                }
                if outcome.is_none() && f_low == f_high {
                    outcome = Some((f_low, false));
                }
            }
            if p.status == StatusTag::Solved {
                if i + 1 != log.len() {
                    return Err(format!("entry {i}: log continues after a solving probe"));
                }
                if p.f_max < c_star {
                    return Err(format!("entry {i}: probe solved below C*"));
                }
                summary.probes_per_bound.push(probes);
                if probes > limit {
                    return Err(format!("new-bound search made {probes} probes, bound is {limit}"));
                }
                return Ok(summary);
            }
            i += 1;
            if outcome.is_some() {
                break;
            }
        }
        summary.probes_per_bound.push(probes);
        if probes > limit {
            return Err(format!("new-bound search made {probes} probes, bound is {limit}"));
        }
        match outcome {
            Some(o) => expected_f = Some(o),
            None => return Err("log ends inside a new-bound search".into()),
        }
    }
    Err("log ends without a solution".into())
}
