//! Experiment harness: builds benchmark instances, runs one algorithm
//! configuration over them and reports per-run CSV rows and aggregate
//! tables.

pub mod config;
pub mod report;
pub mod run;

pub use config::{Algorithm, Domain, Engine, ExperimentConfig, InstanceRange};
pub use report::{aggregate, emit_csv, emit_table, Aggregate};
pub use run::{run_instance, run_suite, BenchSpace, RunRecord, RunStatus};
