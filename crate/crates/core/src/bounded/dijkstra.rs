use std::collections::hash_map::Entry;
use std::collections::{BinaryHeap, HashMap};

use crate::bounded::{BoundedSearch, BoundedSearchResult, Limit, Window};
use crate::cost::Cost;
use crate::space::{Path, Solution, StateSpace};

/// f-bounded Dijkstra search with duplicate detection.
///
/// States are expanded in order of increasing g; among equal g the most
/// recently inserted entry is popped first. A generated state whose
/// `g + h` exceeds `f_max` is pruned. Because `h` depends on the state
/// only, the cheapest path to a state is also its lowest-f path, so pruning
/// at generation is sound for inconsistent heuristics too. Goals are tested
/// when popped.
#[derive(Debug, Clone, Copy, Default)]
pub struct BoundedDijkstra;

impl BoundedDijkstra {
    pub fn new() -> Self {
        BoundedDijkstra
    }
}

struct Record<S, A> {
    state: S,
    g: Cost,
    h: Cost,
    parent: Option<(usize, A)>,
    closed: bool,
}

/// Max-heap entry: lowest g first, then highest insertion sequence.
#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct HeapEntry {
    neg_g: std::cmp::Reverse<Cost>,
    seq: u64,
    idx: usize,
}

impl<P: StateSpace> BoundedSearch<P> for BoundedDijkstra {
    fn run(&mut self, space: &P, f_max: Cost, limit: Limit) -> BoundedSearchResult<P::State, P::Action> {
        let mut window = Window::new();
        let mut expanded = 0u64;
        let mut records: Vec<Record<P::State, P::Action>> = Vec::new();
        let mut index: HashMap<P::State, usize> = HashMap::new();
        let mut open = BinaryHeap::new();
        let mut seq = 0u64;

        let root = space.init();
        let root_h = space.h(&root);
        if root_h > f_max {
            window.pruned(root_h);
            return window.finish(None, 0);
        }
        index.insert(root.clone(), 0);
        records.push(Record {
            state: root,
            g: Cost::ZERO,
            h: root_h,
            parent: None,
            closed: false,
        });
        open.push(HeapEntry {
            neg_g: std::cmp::Reverse(Cost::ZERO),
            seq,
            idx: 0,
        });

        let mut children = Vec::new();
        while let Some(HeapEntry { neg_g, idx, .. }) = open.pop() {
            let rec = &records[idx];
            if rec.closed || rec.g != neg_g.0 {
                continue;
            }
            if space.is_goal(&rec.state) {
                let path = reconstruct(&records, idx);
                return window.finish(Some(Solution::new(path)), expanded);
            }
            if !limit.permits(expanded) {
                return BoundedSearchResult::incomplete(expanded);
            }
            let g = rec.g;
            window.expanded(g + rec.h);
            records[idx].closed = true;
            children.clear();
            space.succ(&records[idx].state, &mut children);
            expanded += 1;

            for (action, child) in children.drain(..) {
                let child_g = g + space.cost(&action);
                let child_idx = match index.entry(child) {
                    Entry::Occupied(o) => {
                        let ci = *o.get();
                        let cr = &records[ci];
                        if cr.closed || child_g >= cr.g {
                            continue;
                        }
                        ci
                    }
                    Entry::Vacant(v) => {
                        let h = space.h(v.key());
                        let ci = records.len();
                        records.push(Record {
                            state: v.key().clone(),
                            g: Cost::INFINITY,
                            h,
                            parent: None,
                            closed: false,
                        });
                        v.insert(ci);
                        ci
                    }
                };
                let cr = &mut records[child_idx];
                cr.g = child_g;
                cr.parent = Some((idx, action));
                let f = child_g + cr.h;
                if f > f_max {
                    window.pruned(f);
                    continue;
                }
                seq += 1;
                open.push(HeapEntry {
                    neg_g: std::cmp::Reverse(child_g),
                    seq,
                    idx: child_idx,
                });
            }
        }
        window.finish(None, expanded)
    }
}

fn reconstruct<S: Clone, A: Clone>(records: &[Record<S, A>], goal: usize) -> Path<S, A> {
    let mut chain = Vec::new();
    let mut cur = goal;
    while let Some((parent, action)) = &records[cur].parent {
        chain.push((action.clone(), cur));
        cur = *parent;
    }
    let mut path = Path::empty(records[cur].state.clone());
    for (action, idx) in chain.into_iter().rev() {
        let prev = path.g();
        let step = Cost::new(records[idx].g.get() - prev.get());
        path.push(action, records[idx].state.clone(), step)
            .expect("costs bounded by f_max");
    }
    path
}
