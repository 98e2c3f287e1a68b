use std::path::{Path, PathBuf};

use crate::config::Domain;
use crate::run::{RunRecord, RunStatus};

pub const CSV_HEADER: [&str; 15] = [
    "domain",
    "alg",
    "c1",
    "c2",
    "delta",
    "resolution",
    "seed",
    "instance",
    "status",
    "cost_raw",
    "cost_int",
    "expansions",
    "generations",
    "heval",
    "time_s",
];

pub const ITERS_HEADER: [&str; 8] = [
    "instance", "phase", "f_max", "n_min", "n_max", "expanded", "status", "cache_hit",
];

/// `runs.csv` -> `runs.iters.csv`.
pub fn iterations_path(path: &Path) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    path.with_file_name(format!("{stem}.iters.csv"))
}

/// Writes one row per record to `path` and the per-iteration logs to the
/// sibling `.iters.csv` file.
pub fn emit_csv(records: &[RunRecord], path: &Path) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record([
            r.domain.as_str().to_string(),
            r.label.clone(),
            r.c1.clone(),
            r.c2.clone(),
            r.delta.to_string(),
            r.resolution.to_string(),
            r.seed.to_string(),
            r.instance.to_string(),
            r.status.as_str().to_string(),
            r.cost_raw.map(|c| format!("{c:.6}")).unwrap_or_default(),
            r.cost_int.map(|c| c.to_string()).unwrap_or_default(),
            r.expansions.to_string(),
            r.generations.to_string(),
            r.heuristic_evals.to_string(),
            format!("{:.3}", r.wall_time.as_secs_f64()),
        ])?;
    }
    w.flush()?;

    let mut w = csv::Writer::from_path(iterations_path(path))?;
    w.write_record(ITERS_HEADER)?;
    for r in records {
        for it in &r.iterations {
            w.write_record([
                r.instance.to_string(),
                it.phase.as_str().to_string(),
                it.f_max.to_string(),
                it.n_min.map(|n| n.to_string()).unwrap_or_default(),
                it.n_max.to_string(),
                it.expanded_nodes.to_string(),
                it.status.as_str().to_string(),
                it.cache_hit.to_string(),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Totals of one algorithm configuration over a suite.
#[derive(Debug, Clone, PartialEq)]
pub struct Aggregate {
    pub label: String,
    /// Problem size, for tables grouped by instance.
    pub size: Option<u64>,
    pub solved: usize,
    pub runs: usize,
    pub expansions: u64,
    pub generations: u64,
    pub time_s: f64,
}

/// Groups records by label (and by instance for the Mérő family), in order
/// of first appearance.
pub fn aggregate(records: &[RunRecord]) -> Vec<Aggregate> {
    let mut out: Vec<Aggregate> = Vec::new();
    for r in records {
        let size = (r.domain == Domain::Mero).then_some(r.instance);
        let idx = match out.iter().position(|a| a.label == r.label && a.size == size) {
            Some(i) => i,
            None => {
                out.push(Aggregate {
                    label: r.label.clone(),
                    size,
                    solved: 0,
                    runs: 0,
                    expansions: 0,
                    generations: 0,
                    time_s: 0.0,
                });
                out.len() - 1
            }
        };
        let a = &mut out[idx];
        a.runs += 1;
        a.solved += usize::from(r.status == RunStatus::Solved);
        a.expansions += r.expansions;
        a.generations += r.generations;
        a.time_s += r.wall_time.as_secs_f64();
    }
    out
}

/// Markdown summary table. Sliding-tile and pancake counts are in millions;
/// the Mérő table lists raw counts per problem size.
pub fn emit_table(records: &[RunRecord]) -> String {
    let mero = records.first().is_some_and(|r| r.domain == Domain::Mero);
    let scaled = records.first().is_some_and(|r| r.domain.scaled());
    let mut s = String::new();
    if mero {
        s.push_str("| Prob. Size | Alg. | Exp. | Time (s) |\n|---:|:---|---:|---:|\n");
    } else {
        s.push_str("| Alg. | Solved | Exp. | Gen. | Time (s) |\n|:---|---:|---:|---:|---:|\n");
    }
    let count = |n: u64| {
        if scaled {
            format!("{:.1}", n as f64 / 1e6)
        } else {
            n.to_string()
        }
    };
    for a in aggregate(records) {
        if mero {
            s.push_str(&format!(
                "| {} | {} | {} | {:.1} |\n",
                a.size.unwrap_or_default(),
                a.label,
                a.expansions,
                a.time_s
            ));
        } else {
            s.push_str(&format!(
                "| {} | {} | {} | {} | {:.1} |\n",
                a.label,
                a.solved,
                count(a.expansions),
                count(a.generations),
                a.time_s
            ));
        }
    }
    s
}
