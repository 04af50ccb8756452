//! Output-schema stability: a tiny fixed run must reproduce the committed
//! golden CSV byte for byte. Regenerate the fixture deliberately (and review
//! the diff) whenever the schema or the solver numerics change:
//! `vecopt run --problems VFM1,REM1 --solvers cn,sd --seed-list 7 --canonical --out DIR`

use vecopt::solver::SolverConfig;
use vecopt_cli::{results_csv, run_benchmark, ConeSpec, RunSpec, SolverKind};

#[test]
fn golden_results_csv() {
    let spec = RunSpec {
        problems: vec!["VFM1".into(), "REM1".into()],
        solvers: vec![SolverKind::Cn, SolverKind::Sd],
        seeds: vec![7],
        cfg: SolverConfig::default(),
        cone: ConeSpec::Paper,
        canonical: true,
        threads: 2,
    };
    let results = run_benchmark(&spec).unwrap();
    let got = results_csv(&results.records);
    let want = include_str!("golden/results_golden.csv");
    assert_eq!(got, want, "results.csv schema or values drifted from the golden fixture");
}
