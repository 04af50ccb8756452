//! Benchmark harness: multi-start runs over the problem registry, CSV/JSON
//! emission, trajectory dumps and performance-profile extraction.
//!
//! The protocol mirrors the evaluation setup: per problem a shared list of
//! seeded initial points is used by every solver, per-problem metric medians
//! are taken over successful runs, and front metrics (hypervolume, purity,
//! spreads) are computed from the final objective vectors of those runs.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;
use vecopt::cone::OrderingCone;
use vecopt::metrics::{
    default_tau_grid, hypervolume_detailed, performance_profile, purity, spreads, CostTable,
    FrontApproximation, ProfileCurve,
};
use vecopt::problem::{lookup, registry, sample_initial, VectorProblem};
use vecopt::solver::{
    run_cubic_newton, run_steepest_descent, SdConfig, SolverConfig, SolverTrace,
};

#[derive(Debug)]
pub enum CliError {
    UnknownProblem { name: String, available: Vec<String> },
    BadConfig(String),
    Io(std::io::Error),
    Parse(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::UnknownProblem { name, available } => {
                write!(f, "unknown problem '{name}'; available: {}", available.join(", "))
            }
            CliError::BadConfig(msg) => write!(f, "invalid configuration: {msg}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
            CliError::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Solver selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolverKind {
    Cn,
    Sd,
}

impl SolverKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolverKind::Cn => "cn",
            SolverKind::Sd => "sd",
        }
    }

    pub fn parse_list(s: &str) -> Result<Vec<SolverKind>, CliError> {
        let mut out = Vec::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match tok.to_ascii_lowercase().as_str() {
                "cn" => out.push(SolverKind::Cn),
                "sd" => out.push(SolverKind::Sd),
                other => return Err(CliError::Parse(format!("unknown solver '{other}'"))),
            }
        }
        if out.is_empty() {
            return Err(CliError::Parse("at least one solver required".into()));
        }
        Ok(out)
    }
}

/// Ordering-cone selection for a run.
#[derive(Debug, Clone)]
pub enum ConeSpec {
    /// Benchmark default: the wedge cone generated by (−1,3)/√10, (3,−1)/√10
    /// for bi-objective problems, the standard orthant otherwise.
    Paper,
    Orthant,
    R2Cone,
    Custom(Vec<Vec<f64>>),
}

impl ConeSpec {
    pub fn parse(s: &str) -> Result<ConeSpec, CliError> {
        match s.trim().to_ascii_lowercase().as_str() {
            "paper" => Ok(ConeSpec::Paper),
            "orthant" => Ok(ConeSpec::Orthant),
            "r2-cone" => Ok(ConeSpec::R2Cone),
            _ => {
                // "a,b;c,d" generator list
                let gens: Result<Vec<Vec<f64>>, _> = s
                    .split(';')
                    .map(|v| {
                        v.split(',')
                            .map(|x| x.trim().parse::<f64>())
                            .collect::<Result<Vec<f64>, _>>()
                    })
                    .collect();
                match gens {
                    Ok(g) if !g.is_empty() => Ok(ConeSpec::Custom(g)),
                    _ => Err(CliError::Parse(format!(
                        "cone must be paper|orthant|r2-cone or a 'a,b;c,d' generator list, got '{s}'"
                    ))),
                }
            }
        }
    }

    pub fn build(&self, p: usize) -> Result<OrderingCone, CliError> {
        let cone = match self {
            ConeSpec::Paper => {
                if p == 2 {
                    OrderingCone::biobjective_wedge()
                } else {
                    OrderingCone::orthant(p)
                }
            }
            ConeSpec::Orthant => OrderingCone::orthant(p),
            ConeSpec::R2Cone => {
                if p != 2 {
                    return Err(CliError::BadConfig(format!(
                        "r2-cone needs bi-objective problems, got p = {p}"
                    )));
                }
                OrderingCone::biobjective_wedge()
            }
            ConeSpec::Custom(gens) => OrderingCone::new(p, gens.clone())
                .map_err(|e| CliError::BadConfig(e.to_string()))?,
        };
        Ok(cone)
    }
}

/// Full specification of a benchmark batch.
#[derive(Debug, Clone)]
pub struct RunSpec {
    pub problems: Vec<String>,
    pub solvers: Vec<SolverKind>,
    pub seeds: Vec<u64>,
    pub cfg: SolverConfig,
    pub cone: ConeSpec,
    /// Zero out wall-clock fields so outputs are byte-reproducible.
    pub canonical: bool,
    pub threads: usize,
}

impl RunSpec {
    pub fn resolve_problems(names: &[String]) -> Result<Vec<String>, CliError> {
        let available: Vec<String> = registry().iter().map(|p| p.name().to_string()).collect();
        if names.len() == 1 && names[0].eq_ignore_ascii_case("all") {
            // "all" means the sixteen benchmark problems; REM1 is addressable
            // by name.
            return Ok(available.into_iter().filter(|n| n != "REM1").collect());
        }
        let mut out = Vec::new();
        for n in names {
            match lookup(n) {
                Some(p) => out.push(p.name().to_string()),
                None => {
                    return Err(CliError::UnknownProblem { name: n.clone(), available })
                }
            }
        }
        Ok(out)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.problems.is_empty() || self.solvers.is_empty() || self.seeds.is_empty() {
            return Err(CliError::BadConfig(
                "at least one problem, one solver and one seed required".into(),
            ));
        }
        self.cfg.validate().map_err(CliError::BadConfig)
    }
}

/// One (problem, solver, seed) outcome.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunRecord {
    pub problem: String,
    pub solver: String,
    pub seed: u64,
    pub status: String,
    pub iters: usize,
    pub wall_ms: u64,
    pub final_mu: f64,
    pub final_f: Vec<f64>,
    pub doublings_total: usize,
}

impl RunRecord {
    /// Terminated at a certified point (μ-converged or exactly stationary).
    pub fn is_success(&self) -> bool {
        self.status == "converged" || self.status == "stationary"
    }
}

/// Per-problem, per-solver metric block.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolverMetrics {
    pub solver: String,
    pub total_runs: usize,
    pub successes: usize,
    pub converged: usize,
    pub median_iters: Option<f64>,
    pub median_wall_ms: Option<f64>,
    pub hypervolume: Option<f64>,
    pub purity: Option<f64>,
    pub delta_p: Option<f64>,
    pub gamma_p: Option<f64>,
    pub points_outside_reference: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProblemMetrics {
    pub problem: String,
    pub n: usize,
    pub p: usize,
    pub cone_generators: Vec<Vec<f64>>,
    /// Hypervolume reference: componentwise max over the union of fronts
    /// plus a 10% range margin; recorded for reproducibility.
    pub hv_reference: Option<Vec<f64>>,
    /// Spread convention: no true Pareto extremes supplied, extreme gaps set
    /// to zero.
    pub extreme_gap_convention: String,
    pub solvers: Vec<SolverMetrics>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BenchmarkResults {
    pub records: Vec<RunRecord>,
    pub metrics: Vec<ProblemMetrics>,
    pub warnings: Vec<String>,
}

struct Job {
    problem_idx: usize,
    solver: SolverKind,
    seed: u64,
}

/// Runs the batch: every (problem, solver, seed) cell as an independent job
/// on a bounded worker pool, results assembled in deterministic order.
pub fn run_benchmark(spec: &RunSpec) -> Result<BenchmarkResults, CliError> {
    spec.validate()?;
    let problems: Vec<VectorProblem> = spec
        .problems
        .iter()
        .map(|n| lookup(n).expect("validated problem name"))
        .collect();
    let cones: Vec<OrderingCone> = problems
        .iter()
        .map(|p| spec.cone.build(p.p()))
        .collect::<Result<_, _>>()?;

    let mut jobs = Vec::new();
    for (problem_idx, _) in problems.iter().enumerate() {
        for &solver in &spec.solvers {
            for &seed in &spec.seeds {
                jobs.push(Job { problem_idx, solver, seed });
            }
        }
    }

    let results: Vec<Option<RunRecord>> = {
        let slots: Mutex<Vec<Option<RunRecord>>> = Mutex::new(vec![None; jobs.len()]);
        let cursor = AtomicUsize::new(0);
        let workers = spec.threads.max(1).min(jobs.len().max(1));
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| loop {
                    let idx = cursor.fetch_add(1, Ordering::Relaxed);
                    if idx >= jobs.len() {
                        break;
                    }
                    let job = &jobs[idx];
                    let prob = &problems[job.problem_idx];
                    let cone = &cones[job.problem_idx];
                    let record = execute_job(prob, cone, job, spec);
                    slots.lock().unwrap()[idx] = Some(record);
                });
            }
        });
        slots.into_inner().unwrap()
    };
    let records: Vec<RunRecord> = results.into_iter().map(|r| r.expect("job completed")).collect();

    let mut warnings = Vec::new();
    for cone in &cones {
        for w in cone.warnings() {
            if !warnings.contains(w) {
                warnings.push(w.clone());
            }
        }
    }
    let metrics = compute_metrics(&problems, &cones, &spec.solvers, &records, &mut warnings);
    Ok(BenchmarkResults { records, metrics, warnings })
}

fn execute_job(prob: &VectorProblem, cone: &OrderingCone, job: &Job, spec: &RunSpec) -> RunRecord {
    let x0 = sample_initial(prob, job.seed);
    let started = Instant::now();
    let trace = match job.solver {
        SolverKind::Cn => run_cubic_newton(prob, cone, &x0, &spec.cfg),
        SolverKind::Sd => {
            let sd = SdConfig {
                beta: 1e-4,
                eps: spec.cfg.eps,
                max_iter: spec.cfg.max_iter,
                max_halvings: spec.cfg.max_doublings,
            };
            run_steepest_descent(prob, cone, &x0, &sd)
        }
    };
    let wall_ms = if spec.canonical { 0 } else { started.elapsed().as_millis() as u64 };
    record_from_trace(prob, job, &trace, wall_ms)
}

fn record_from_trace(
    prob: &VectorProblem,
    job: &Job,
    trace: &SolverTrace,
    wall_ms: u64,
) -> RunRecord {
    let final_f = prob.eval_f(&trace.final_x);
    RunRecord {
        problem: prob.name().to_string(),
        solver: job.solver.as_str().to_string(),
        seed: job.seed,
        status: trace.status.as_str().to_string(),
        iters: trace.len().saturating_sub(1),
        wall_ms,
        final_mu: trace.final_mu,
        final_f,
        doublings_total: trace.iterations.iter().map(|r| r.doublings).sum(),
    }
}

fn median(values: &mut [f64]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    values.sort_by(|a, b| a.total_cmp(b));
    let n = values.len();
    Some(if n % 2 == 1 { values[n / 2] } else { 0.5 * (values[n / 2 - 1] + values[n / 2]) })
}

fn compute_metrics(
    problems: &[VectorProblem],
    cones: &[OrderingCone],
    solvers: &[SolverKind],
    records: &[RunRecord],
    warnings: &mut Vec<String>,
) -> Vec<ProblemMetrics> {
    let mut out = Vec::new();
    for (pi, prob) in problems.iter().enumerate() {
        let cone = &cones[pi];
        // fronts per solver from successful runs
        let mut fronts: Vec<FrontApproximation> = Vec::new();
        for solver in solvers {
            let pts: Vec<Vec<f64>> = records
                .iter()
                .filter(|r| {
                    r.problem == prob.name() && r.solver == solver.as_str() && r.is_success()
                })
                .map(|r| r.final_f.clone())
                .collect();
            fronts.push(FrontApproximation::new(solver.as_str(), prob.name(), pts));
        }
        // reference point: componentwise max over the union + 10% of range
        let union: Vec<&Vec<f64>> = fronts.iter().flat_map(|f| f.points.iter()).collect();
        let hv_reference = if union.is_empty() {
            None
        } else {
            let p = prob.p();
            let mut mx = vec![f64::NEG_INFINITY; p];
            let mut mn = vec![f64::INFINITY; p];
            for u in &union {
                for j in 0..p {
                    mx[j] = mx[j].max(u[j]);
                    mn[j] = mn[j].min(u[j]);
                }
            }
            Some(
                (0..p)
                    .map(|j| {
                        let range = (mx[j] - mn[j]).max(1e-6 * (1.0 + mx[j].abs()));
                        mx[j] + 0.1 * range
                    })
                    .collect::<Vec<f64>>(),
            )
        };

        let mut solver_blocks = Vec::new();
        for (si, solver) in solvers.iter().enumerate() {
            let runs: Vec<&RunRecord> = records
                .iter()
                .filter(|r| r.problem == prob.name() && r.solver == solver.as_str())
                .collect();
            let succ: Vec<&&RunRecord> = runs.iter().filter(|r| r.is_success()).collect();
            let mut iters: Vec<f64> = succ.iter().map(|r| r.iters as f64).collect();
            let mut walls: Vec<f64> = succ.iter().map(|r| r.wall_ms as f64).collect();
            let front = &fronts[si];
            let (hv, dropped) = match &hv_reference {
                Some(r) if !front.is_empty() => match hypervolume_detailed(&front.points, r) {
                    Ok((hv, dropped)) => (Some(hv), dropped),
                    Err(e) => {
                        warnings.push(format!("{}/{}: {e}", prob.name(), solver.as_str()));
                        (None, 0)
                    }
                },
                _ => (None, 0),
            };
            if dropped > 0 {
                warnings.push(format!(
                    "{}/{}: {dropped} front points beyond the reference were dropped from hypervolume",
                    prob.name(),
                    solver.as_str()
                ));
            }
            let pur = if front.is_empty() { None } else { Some(purity(front, &fronts, cone)) };
            let spread = spreads(front);
            solver_blocks.push(SolverMetrics {
                solver: solver.as_str().to_string(),
                total_runs: runs.len(),
                successes: succ.len(),
                converged: runs.iter().filter(|r| r.status == "converged").count(),
                median_iters: median(&mut iters),
                median_wall_ms: median(&mut walls),
                hypervolume: hv,
                purity: pur,
                delta_p: spread.map(|s| s.0),
                gamma_p: spread.map(|s| s.1),
                points_outside_reference: dropped,
            });
        }
        out.push(ProblemMetrics {
            problem: prob.name().to_string(),
            n: prob.n(),
            p: prob.p(),
            cone_generators: cone.generators().to_vec(),
            hv_reference,
            extreme_gap_convention: "zero-extreme-gaps".to_string(),
            solvers: solver_blocks,
        });
    }
    out
}

// ---------------------------------------------------------------------------
// output formats
// ---------------------------------------------------------------------------

/// Stable CSV schema: `problem,solver,seed,status,iters,wall_ms,final_mu,
/// f_1,f_2,f_3` with trailing objective columns left empty for p = 2.
pub fn results_csv(records: &[RunRecord]) -> String {
    let mut out = String::from("problem,solver,seed,status,iters,wall_ms,final_mu,f_1,f_2,f_3\n");
    for r in records {
        let mut f_cols = [String::new(), String::new(), String::new()];
        for (i, v) in r.final_f.iter().take(3).enumerate() {
            f_cols[i] = fmt_f64(*v);
        }
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            r.problem,
            r.solver,
            r.seed,
            r.status,
            r.iters,
            r.wall_ms,
            fmt_f64(r.final_mu),
            f_cols[0],
            f_cols[1],
            f_cols[2]
        );
    }
    out
}

fn fmt_f64(v: f64) -> String {
    if v.is_nan() {
        "NaN".to_string()
    } else {
        format!("{v}")
    }
}

/// Parses a results CSV back into records (objective columns only).
pub fn parse_results_csv(text: &str) -> Result<Vec<RunRecord>, CliError> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| CliError::Parse("empty csv".into()))?;
    if !header.starts_with("problem,solver,seed,status,iters,wall_ms,final_mu") {
        return Err(CliError::Parse("unexpected csv header".into()));
    }
    let mut out = Vec::new();
    for (no, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.split(',').collect();
        if cols.len() < 10 {
            return Err(CliError::Parse(format!("line {}: expected 10 columns", no + 2)));
        }
        let parse_f = |s: &str| -> Result<f64, CliError> {
            if s == "NaN" {
                Ok(f64::NAN)
            } else {
                s.parse().map_err(|_| CliError::Parse(format!("bad float '{s}'")))
            }
        };
        let mut final_f = Vec::new();
        for c in &cols[7..10] {
            if !c.is_empty() {
                final_f.push(parse_f(c)?);
            }
        }
        out.push(RunRecord {
            problem: cols[0].to_string(),
            solver: cols[1].to_string(),
            seed: cols[2].parse().map_err(|_| CliError::Parse("bad seed".into()))?,
            status: cols[3].to_string(),
            iters: cols[4].parse().map_err(|_| CliError::Parse("bad iters".into()))?,
            wall_ms: cols[5].parse().map_err(|_| CliError::Parse("bad wall_ms".into()))?,
            final_mu: parse_f(cols[6])?,
            final_f,
            doublings_total: 0,
        });
    }
    Ok(out)
}

/// Writes `results.csv` and `metrics.json` into `out_dir`.
pub fn write_outputs(results: &BenchmarkResults, out_dir: &Path) -> Result<(), CliError> {
    std::fs::create_dir_all(out_dir)?;
    std::fs::write(out_dir.join("results.csv"), results_csv(&results.records))?;
    let json = serde_json::to_string_pretty(&MetricsFile {
        metrics: results.metrics.clone(),
        warnings: results.warnings.clone(),
    })
    .expect("metrics serialize");
    std::fs::write(out_dir.join("metrics.json"), json + "\n")?;
    Ok(())
}

#[derive(Debug, Serialize, Deserialize)]
struct MetricsFile {
    metrics: Vec<ProblemMetrics>,
    warnings: Vec<String>,
}

// ---------------------------------------------------------------------------
// trajectory dumps
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct TrajectoryRecord {
    pub k: usize,
    pub x: Vec<f64>,
    pub f: Vec<f64>,
    pub m: f64,
    pub r: f64,
    pub mu: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct TrajectoryFile {
    pub problem: String,
    pub solver: String,
    pub seed: u64,
    pub x0: Vec<f64>,
    pub cone_generators: Vec<Vec<f64>>,
    pub config: TrajectoryConfig,
    pub status: String,
    pub final_mu: f64,
    pub records: Vec<TrajectoryRecord>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct TrajectoryConfig {
    pub l0: f64,
    pub l: f64,
    pub m0: f64,
    pub eps: f64,
    pub max_iter: usize,
    pub max_doublings: usize,
}

/// Runs one (problem, solver, seed) cell and dumps the ordered iterate list
/// as JSON. An explicit `x0` overrides the seeded sample.
pub fn dump_trajectory(
    problem: &str,
    solver: SolverKind,
    seed: u64,
    cfg: &SolverConfig,
    cone_spec: &ConeSpec,
    x0_override: Option<Vec<f64>>,
    path: &Path,
) -> Result<TrajectoryFile, CliError> {
    let prob = lookup(problem).ok_or_else(|| CliError::UnknownProblem {
        name: problem.to_string(),
        available: registry().iter().map(|p| p.name().to_string()).collect(),
    })?;
    let cone = cone_spec.build(prob.p())?;
    let x0 = match x0_override {
        Some(x) => {
            if x.len() != prob.n() {
                return Err(CliError::BadConfig(format!(
                    "x0 must have {} coordinates for {}",
                    prob.n(),
                    prob.name()
                )));
            }
            x
        }
        None => sample_initial(&prob, seed),
    };
    let trace = match solver {
        SolverKind::Cn => run_cubic_newton(&prob, &cone, &x0, cfg),
        SolverKind::Sd => {
            let sd = SdConfig {
                beta: 1e-4,
                eps: cfg.eps,
                max_iter: cfg.max_iter,
                max_halvings: cfg.max_doublings,
            };
            run_steepest_descent(&prob, &cone, &x0, &sd)
        }
    };
    let file = TrajectoryFile {
        problem: prob.name().to_string(),
        solver: solver.as_str().to_string(),
        seed,
        x0,
        cone_generators: cone.generators().to_vec(),
        config: TrajectoryConfig {
            l0: cfg.l0,
            l: cfg.l,
            m0: cfg.m0,
            eps: cfg.eps,
            max_iter: cfg.max_iter,
            max_doublings: cfg.max_doublings,
        },
        status: trace.status.as_str().to_string(),
        final_mu: trace.final_mu,
        records: trace
            .iterations
            .iter()
            .enumerate()
            .map(|(k, rec)| TrajectoryRecord {
                k,
                x: rec.x.clone(),
                f: rec.f.clone(),
                m: rec.m,
                r: rec.r,
                mu: rec.mu,
            })
            .collect(),
    };
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            std::fs::create_dir_all(dir)?;
        }
    }
    let json = serde_json::to_string_pretty(&file).expect("trajectory serialize");
    std::fs::write(path, json + "\n")?;
    Ok(file)
}

/// Reads a trajectory dump back.
pub fn read_trajectory(path: &Path) -> Result<TrajectoryFile, CliError> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(e.to_string()))
}

// ---------------------------------------------------------------------------
// performance profiles from recorded results
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileMetric {
    Time,
    Iters,
}

impl ProfileMetric {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        match s.to_ascii_lowercase().as_str() {
            "time" => Ok(ProfileMetric::Time),
            "iters" => Ok(ProfileMetric::Iters),
            other => Err(CliError::Parse(format!("metric must be time|iters, got '{other}'"))),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ProfileFile {
    pub metric: String,
    pub tau: Vec<f64>,
    pub solvers: Vec<ProfileSolverCurve>,
    pub excluded_problems: Vec<String>,
    pub warnings: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ProfileSolverCurve {
    pub solver: String,
    pub rho: Vec<f64>,
}

/// Builds Dolan–Moré profile data from a results CSV: per (problem, solver)
/// the cost is the median over successful runs (failures become missing
/// entries); near-zero medians are floored at 0.5 with a warning, matching
/// the observation that iteration medians can be zero.
pub fn build_profile(records: &[RunRecord], metric: ProfileMetric) -> ProfileFile {
    let mut problems: Vec<String> = Vec::new();
    let mut solvers: Vec<String> = Vec::new();
    for r in records {
        if !problems.contains(&r.problem) {
            problems.push(r.problem.clone());
        }
        if !solvers.contains(&r.solver) {
            solvers.push(r.solver.clone());
        }
    }
    let mut warnings = Vec::new();
    let mut costs: Vec<Vec<Option<f64>>> = vec![vec![None; problems.len()]; solvers.len()];
    for (si, solver) in solvers.iter().enumerate() {
        for (pi, problem) in problems.iter().enumerate() {
            let mut vals: Vec<f64> = records
                .iter()
                .filter(|r| &r.problem == problem && &r.solver == solver && r.is_success())
                .map(|r| match metric {
                    ProfileMetric::Time => r.wall_ms as f64,
                    ProfileMetric::Iters => r.iters as f64,
                })
                .collect();
            if let Some(m) = median(&mut vals) {
                let cost = if m < 0.5 {
                    warnings.push(format!(
                        "{problem}/{solver}: near-zero median cost {m} floored to 0.5"
                    ));
                    0.5
                } else {
                    m
                };
                costs[si][pi] = Some(cost);
            }
        }
    }
    let table = CostTable { solver_ids: solvers, problem_ids: problems, costs };
    let tau = default_tau_grid(&table, 64);
    let (curves, mut profile_warnings) = performance_profile(&table, &tau);
    warnings.append(&mut profile_warnings);
    let excluded: Vec<String> = warnings
        .iter()
        .filter(|w| w.contains("excluded"))
        .map(|w| w.split(' ').nth(1).unwrap_or("?").to_string())
        .collect();
    ProfileFile {
        metric: match metric {
            ProfileMetric::Time => "time".into(),
            ProfileMetric::Iters => "iters".into(),
        },
        tau,
        solvers: curves
            .iter()
            .map(|c: &ProfileCurve| ProfileSolverCurve {
                solver: c.solver_id.clone(),
                rho: c.rho.clone(),
            })
            .collect(),
        excluded_problems: excluded,
        warnings,
    }
}

/// Default thread count: `VECOPT_THREADS` when set, otherwise the machine
/// parallelism.
pub fn default_threads() -> usize {
    if let Ok(v) = std::env::var("VECOPT_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            return n.max(1);
        }
    }
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

/// Seed list helper: a count expands to `0..count`.
pub fn seeds_from_count(count: u64) -> Vec<u64> {
    (0..count).collect()
}

/// Groups records by problem preserving first-seen order, useful to
/// post-process result sets.
pub fn group_by_problem(records: &[RunRecord]) -> BTreeMap<String, Vec<&RunRecord>> {
    let mut map: BTreeMap<String, Vec<&RunRecord>> = BTreeMap::new();
    for r in records {
        map.entry(r.problem.clone()).or_default().push(r);
    }
    map
}

pub fn default_out_dir() -> PathBuf {
    PathBuf::from("out")
}
