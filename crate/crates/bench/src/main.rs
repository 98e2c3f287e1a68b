use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::Parser;
use ebsearch::Ratio;
use ebsearch_bench::config::parse_count;
use ebsearch_bench::{emit_csv, emit_table, run_suite, Algorithm, Domain, Engine, ExperimentConfig, InstanceRange, RunStatus};

/// Run one search configuration over a range of benchmark instances.
#[derive(Debug, Parser)]
#[command(name = "bench", version)]
struct Cli {
    domain: Domain,
    #[arg(long)]
    alg: Algorithm,
    /// Lower expansion-window multiplier, e.g. 2 or 3/2.
    #[arg(long, default_value = "2")]
    c1: Ratio,
    /// Upper expansion-window multiplier.
    #[arg(long, default_value = "5")]
    c2: Ratio,
    /// Initial f-bound increment, in integer cost units (1e6 allowed).
    #[arg(long, default_value = "1", value_parser = count)]
    delta: u64,
    /// Integer cost units per unit of real cost.
    #[arg(long, default_value = "1e6", value_parser = count)]
    resolution: u64,
    /// `a..b` (half-open), `a..=b`, or `k=100,1000` for the Mérő family.
    #[arg(long)]
    instances: InstanceRange,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Per-instance wall-clock limit in seconds; 0 means none.
    #[arg(long, default_value_t = 0.0)]
    timeout: f64,
    /// CSV output; iteration logs go to the sibling `.iters.csv`.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Print a markdown summary table.
    #[arg(long)]
    table: bool,
    /// Run A* on real-valued costs with a 1e-6 tolerance.
    #[arg(long)]
    float: bool,
    /// Engine used by the oracle (default: tree for stp/pancake, graph otherwise).
    #[arg(long)]
    oracle_engine: Option<Engine>,
    #[arg(long, default_value_t = 20)]
    pancakes: usize,
    #[arg(long, default_value_t = 12)]
    random_states: usize,
    /// Sliding-tile instance file to use instead of the bundled set.
    #[arg(long)]
    korf_file: Option<PathBuf>,
}

fn count(s: &str) -> Result<u64, String> {
    parse_count(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = ExperimentConfig {
        c1: cli.c1,
        c2: cli.c2,
        delta: cli.delta,
        resolution: cli.resolution,
        seed: cli.seed,
        time_limit: (cli.timeout > 0.0).then(|| Duration::from_secs_f64(cli.timeout)),
        output: cli.out.clone(),
        workers: cli.workers,
        float_astar: cli.float,
        oracle_engine: cli.oracle_engine,
        pancake_size: cli.pancakes,
        random_states: cli.random_states,
        korf_file: cli.korf_file.clone(),
        ..ExperimentConfig::new(cli.domain, cli.alg, cli.instances.clone())
    };
    let records = match run_suite(&config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("bench: {e}");
            return ExitCode::from(2);
        }
    };
    for r in &records {
        if let Some(m) = &r.message {
            eprintln!("instance {}: {} ({m})", r.instance, r.status.as_str());
        }
    }
    if let Some(path) = &config.output {
        if let Err(e) = emit_csv(&records, path) {
            eprintln!("bench: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if cli.table {
        print!("{}", emit_table(&records));
    }
    if records.iter().all(|r| r.status == RunStatus::Solved) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
