//! Acceptance criterion for the figure pipeline: rebuilding all nine
//! stock figures finishes inside the five-minute single-core budget and
//! the emitted files are byte-identical across consecutive runs.

use qsl_horizon::figures::FigureId;
use qsl_horizon_cli::output::OutputFormat;
use qsl_horizon_cli::reproduce_all;
use std::time::{Duration, Instant};

#[test]
fn criterion_11_reproduce_is_deterministic_within_budget() {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("single-thread pool");
    let first = tempfile::tempdir().unwrap();
    let second = tempfile::tempdir().unwrap();

    let started = Instant::now();
    pool.install(|| reproduce_all(first.path(), OutputFormat::Both))
        .expect("first run");
    let elapsed = started.elapsed();

    pool.install(|| reproduce_all(second.path(), OutputFormat::Both))
        .expect("second run");

    for id in FigureId::all() {
        for ext in ["csv", "svg"] {
            let name = format!("{}.{ext}", id.name());
            let a = std::fs::read(first.path().join(&name)).unwrap();
            let b = std::fs::read(second.path().join(&name)).unwrap();
            assert!(!a.is_empty(), "{name} is empty");
            assert_eq!(a, b, "{name} differs between consecutive runs");
        }
    }

    let budget = Duration::from_secs(300);
    println!(
        "PASS - all nine figures rebuilt single-core in {elapsed:.2?} (budget {budget:?}), \
         outputs byte-identical across runs"
    );
    assert!(
        elapsed < budget,
        "single-core reproduce took {elapsed:?}, over the {budget:?} budget"
    );
}

#[test]
fn thread_count_does_not_change_bytes() {
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let multi = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
    let a = single.install(|| qsl_horizon::figures::figure(FigureId::Fig5).unwrap());
    let b = multi.install(|| qsl_horizon::figures::figure(FigureId::Fig5).unwrap());
    assert_eq!(a.to_csv(), b.to_csv());
}
