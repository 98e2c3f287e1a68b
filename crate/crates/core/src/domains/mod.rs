//! Benchmark domains and test spaces.

pub mod graph;
pub mod korf;
pub mod mero;
pub mod pancake;
pub mod random;
pub mod tiles;

pub use graph::{ExplicitGraph, GraphState};
pub use korf::{korf100, load_korf_instances, parse_korf_instances};
pub use mero::{mero_graph, MeroGraph};
pub use pancake::{generate_hard_pancakes, pancake_space, PancakePuzzle, PancakeState};
pub use random::{random_space, HeuristicMode, RandomSpec};
pub use tiles::{stp_space, TilePuzzle, TilePuzzleState};
