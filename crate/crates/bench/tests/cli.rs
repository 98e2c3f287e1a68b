use std::process::Command;
use std::time::Duration;

use ebsearch_bench::report::{iterations_path, CSV_HEADER};
use ebsearch_bench::{aggregate, emit_csv, emit_table, run_suite, Algorithm, Domain, ExperimentConfig, InstanceRange, RunStatus};

fn mero(alg: Algorithm, ks: &[u64]) -> ExperimentConfig {
    ExperimentConfig::new(Domain::Mero, alg, InstanceRange::List(ks.to_vec()))
}

#[test]
fn mero_suite_reproduces_table_counts() {
    let a = run_suite(&mero(Algorithm::Astar, &[100, 1000])).unwrap();
    let o = run_suite(&mero(Algorithm::Oracle, &[100, 1000])).unwrap();
    let exp: Vec<u64> = a.iter().chain(&o).map(|r| r.expansions).collect();
    assert_eq!(exp, [7_652, 751_502, 202, 2_002]);
    assert!(a.iter().chain(&o).all(|r| r.status == RunStatus::Solved));
    assert_eq!(a[0].cost_int, Some(303));
}

#[test]
fn ebgs_suite_is_optimal_and_logged() {
    let cfg = mero(Algorithm::Ebgs, &[100]).with_params(10, 20, 1, 3);
    let r = &run_suite(&cfg).unwrap()[0];
    assert_eq!(r.label, "EBGS(10,20,3)");
    assert_eq!(r.cost_int, Some(303));
    assert!(!r.iterations.is_empty());
}

#[test]
fn stp_tree_search_matches_astar() {
    let ids = InstanceRange::List(vec![79, 12]);
    let a = run_suite(&ExperimentConfig::new(Domain::Stp, Algorithm::Astar, ids.clone())).unwrap();
    let cfg = ExperimentConfig::new(Domain::Stp, Algorithm::Ebts, ids).with_params(10, 20, 1_000_000, 1_000_000);
    let t = run_suite(&cfg).unwrap();
    for (x, y) in a.iter().zip(&t) {
        assert_eq!(x.cost_int, y.cost_int);
        assert!((x.cost_raw.unwrap() - y.cost_raw.unwrap()).abs() < 1e-6);
    }
    assert_eq!(t[0].label, "EBTS(10,20,1e6,1e6)");
}

#[test]
fn random_and_pancake_suites_run() {
    let mut cfg = ExperimentConfig::new(Domain::Pancake, Algorithm::Ebts, "1..4".parse().unwrap());
    cfg.pancake_size = 8;
    let p = run_suite(&cfg).unwrap();
    assert_eq!(p.iter().map(|r| r.instance).collect::<Vec<_>>(), [1, 2, 3]);
    let r = run_suite(&ExperimentConfig::new(Domain::Random, Algorithm::Ebgs, "1..=20".parse().unwrap())).unwrap();
    assert_eq!(r.len(), 20);
    assert!(p.iter().chain(&r).all(|x| x.status == RunStatus::Solved));
}

#[test]
fn empty_range_gives_header_only_csv() {
    let recs = run_suite(&ExperimentConfig::new(Domain::Stp, Algorithm::Astar, "5..5".parse().unwrap())).unwrap();
    assert!(recs.is_empty());
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("runs.csv");
    emit_csv(&recs, &path).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.trim_end(), CSV_HEADER.join(","));
}

#[test]
fn csv_rows_and_iteration_file() {
    let recs = run_suite(&mero(Algorithm::Astar, &[100])).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("runs.csv");
    emit_csv(&recs, &path).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    let row = text.lines().nth(1).unwrap();
    assert!(row.starts_with("mero,A*,"), "{row}");
    assert!(row.split(',').any(|f| f == "7652"));
    assert!(iterations_path(&path).exists());
}

#[test]
fn unknown_instance_is_an_error() {
    assert!(run_suite(&ExperimentConfig::new(Domain::Stp, Algorithm::Astar, "100..=101".parse().unwrap())).is_err());
    assert!(run_suite(&mero(Algorithm::Astar, &[0])).is_err());
}

#[test]
fn unwritable_output_is_reported() {
    let recs = run_suite(&mero(Algorithm::Astar, &[3])).unwrap();
    let dir = tempfile::tempdir().unwrap();
    assert!(emit_csv(&recs, &dir.path().join("missing").join("runs.csv")).is_err());
}

#[test]
fn suites_are_deterministic() {
    let mut cfg = ExperimentConfig::new(Domain::Random, Algorithm::Ebts, "1..30".parse().unwrap());
    cfg.seed = 42;
    let strip = |v: Vec<_>| v.iter().map(ebsearch_bench::RunRecord::without_timing).collect::<Vec<_>>();
    let a = strip(run_suite(&cfg).unwrap());
    cfg.workers = 3;
    let b = strip(run_suite(&cfg).unwrap());
    assert_eq!(a, b);
    let dir = tempfile::tempdir().unwrap();
    let (p, q) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    emit_csv(&a, &p).unwrap();
    emit_csv(&b, &q).unwrap();
    assert_eq!(std::fs::read(&p).unwrap(), std::fs::read(&q).unwrap());
}

#[test]
fn tables_format_counts() {
    let recs = run_suite(&mero(Algorithm::Astar, &[100])).unwrap();
    let t = emit_table(&recs);
    assert!(t.contains("| 100 | A* | 7652 |"), "{t}");

    let mut scaled = run_suite(&ExperimentConfig::new(Domain::Stp, Algorithm::Astar, "79..=79".parse().unwrap())).unwrap();
    scaled[0].expansions = 258_100_000;
    scaled[0].wall_time = Duration::from_millis(1500);
    let t = emit_table(&scaled);
    assert!(t.starts_with("| Alg. | Solved | Exp. | Gen. | Time (s) |"));
    assert!(t.contains("| A* | 1 | 258.1 |"), "{t}");
    assert_eq!(aggregate(&scaled)[0].runs, 1);
}

#[test]
fn timeout_marks_runs() {
    let mut cfg = ExperimentConfig::new(Domain::Stp, Algorithm::Idastar, "1..=1".parse().unwrap());
    cfg.time_limit = Some(Duration::from_millis(50));
    let r = &run_suite(&cfg).unwrap()[0];
    assert_eq!(r.status, RunStatus::Timeout);
    assert_eq!(r.cost_int, None);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_bench");
    let ok = Command::new(bin).args(["mero", "--alg", "astar", "--instances", "k=10", "--table"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("| 10 | A* | 92 |"));
    let bad = Command::new(bin).args(["mero", "--alg", "ebgs", "--c1", "1", "--instances", "k=10"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let slow = Command::new(bin)
        .args(["stp", "--alg", "idastar", "--instances", "1..=1", "--timeout", "0.05"])
        .output()
        .unwrap();
    assert_eq!(slow.status.code(), Some(1));
}
