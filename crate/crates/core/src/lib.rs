//! Exponential-binary cost-bound search.
//!
//! [`ebsss::ebsss_search`] grows an f-bound by exponential probing followed
//! by binary refinement, so that each main iteration of a [`BoundedSearch`]
//! engine does a controlled amount of extra work. With [`Dfbnb`] it is a
//! tree search, with [`BoundedDijkstra`] a graph search. A*, IDA* and an
//! oracle run are provided for comparison, as are the sliding-tile, pancake
//! and Mérő benchmark domains.

pub mod baselines;
pub mod bounded;
pub mod cost;
pub mod domains;
pub mod ebsss;
pub mod ratio;
pub mod space;
pub mod stats;
pub mod verify;

pub use bounded::{BoundedDijkstra, BoundedSearch, BoundedSearchResult, Cached, Dfbnb, Limit};
pub use cost::{discretize, discretize_ratio, Cost, CostError};
pub use ebsss::{ebsss_search, EbParams};
pub use ratio::Ratio;
pub use space::{validate_solution, Instrumented, Path, Solution, StateSpace};
pub use stats::{IterationLog, Phase, SearchOutcome, SearchStats, StatusTag};
