//! `vecopt` — benchmark CLI for the cubic-regularized Newton solver.

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use vecopt::problem::registry;
use vecopt::solver::SolverConfig;
use vecopt_cli::{
    build_profile, default_threads, dump_trajectory, parse_results_csv, run_benchmark,
    seeds_from_count, write_outputs, CliError, ConeSpec, ProfileMetric, RunSpec, SolverKind,
};

#[derive(Parser)]
#[command(name = "vecopt", version, about = "Vector-optimization solver benchmark harness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct ConfigFlags {
    /// Lower bound for the regularization warm start
    #[arg(long = "L0", default_value_t = 1.0)]
    l0: f64,
    /// Hessian Lipschitz estimate (caps the warm start at 2L)
    #[arg(long = "L", default_value_t = 1.5)]
    l: f64,
    /// Initial regularization
    #[arg(long = "M0", default_value_t = 3.0)]
    m0: f64,
    /// Stopping tolerance on the μ residual
    #[arg(long, default_value_t = 1e-3)]
    eps: f64,
    /// Iteration cap per run
    #[arg(long = "max-iter", default_value_t = 1000)]
    max_iter: usize,
    /// Doubling cap for the acceptance loop
    #[arg(long = "max-doublings", default_value_t = 60)]
    max_doublings: usize,
    /// Ordering cone: paper | orthant | r2-cone | "a,b;c,d"
    #[arg(long, default_value = "paper")]
    cone: String,
}

impl ConfigFlags {
    fn solver_config(&self) -> SolverConfig {
        SolverConfig {
            l0: self.l0,
            l: self.l,
            m0: self.m0,
            eps: self.eps,
            max_iter: self.max_iter,
            max_doublings: self.max_doublings,
            ..Default::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run a benchmark batch and write results.csv + metrics.json
    Run {
        /// Problems: comma list of names, or "all" for the 16-problem table
        #[arg(long, default_value = "all")]
        problems: String,
        /// Solvers to run (cn, sd)
        #[arg(long, default_value = "cn,sd")]
        solvers: String,
        /// Number of seeded initial points per problem (seeds 0..N)
        #[arg(long, default_value_t = 50)]
        seeds: u64,
        /// Explicit seed list, overrides --seeds
        #[arg(long = "seed-list")]
        seed_list: Option<String>,
        #[command(flatten)]
        cfg: ConfigFlags,
        /// Output directory
        #[arg(long, default_value = "out")]
        out: PathBuf,
        /// Zero wall-clock fields for byte-reproducible outputs
        #[arg(long, default_value_t = false)]
        canonical: bool,
    },
    /// Run a single cell and dump the iterate trajectory as JSON
    Trace {
        #[arg(long)]
        problem: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "cn")]
        solver: String,
        /// Explicit start, comma-separated, overriding the seeded sample
        #[arg(long)]
        x0: Option<String>,
        #[command(flatten)]
        cfg: ConfigFlags,
        #[arg(long)]
        out: PathBuf,
    },
    /// Build Dolan–Moré profile data from a results directory
    Profile {
        /// Directory containing results.csv
        #[arg(long = "in")]
        input: PathBuf,
        /// Cost metric: time | iters
        #[arg(long)]
        metric: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// List the problem registry
    Problems,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                CliError::Io(_) => ExitCode::FAILURE,
                _ => ExitCode::from(2),
            }
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Run { problems, solvers, seeds, seed_list, cfg, out, canonical } => {
            let problem_names: Vec<String> =
                problems.split(',').map(|s| s.trim().to_string()).collect();
            let seeds = match seed_list {
                Some(list) => list
                    .split(',')
                    .map(|s| s.trim().parse::<u64>().map_err(|_| {
                        CliError::Parse(format!("bad seed '{s}'"))
                    }))
                    .collect::<Result<Vec<u64>, _>>()?,
                None => seeds_from_count(seeds),
            };
            let spec = RunSpec {
                problems: RunSpec::resolve_problems(&problem_names)?,
                solvers: SolverKind::parse_list(&solvers)?,
                seeds,
                cfg: cfg.solver_config(),
                cone: ConeSpec::parse(&cfg.cone)?,
                canonical,
                threads: default_threads(),
            };
            let results = run_benchmark(&spec)?;
            write_outputs(&results, &out)?;
            for w in &results.warnings {
                eprintln!("warning: {w}");
            }
            let successes = results.records.iter().filter(|r| r.is_success()).count();
            println!(
                "wrote {} records ({successes} successful) to {}",
                results.records.len(),
                out.display()
            );
            Ok(())
        }
        Command::Trace { problem, seed, solver, x0, cfg, out } => {
            let solver = SolverKind::parse_list(&solver)?
                .into_iter()
                .next()
                .expect("validated solver");
            let x0 = match x0 {
                Some(s) => Some(
                    s.split(',')
                        .map(|t| t.trim().parse::<f64>().map_err(|_| {
                            CliError::Parse(format!("bad coordinate '{t}'"))
                        }))
                        .collect::<Result<Vec<f64>, _>>()?,
                ),
                None => None,
            };
            let file = dump_trajectory(
                &problem,
                solver,
                seed,
                &cfg.solver_config(),
                &ConeSpec::parse(&cfg.cone)?,
                x0,
                &out,
            )?;
            println!(
                "wrote {} iterations ({}) to {}",
                file.records.len(),
                file.status,
                out.display()
            );
            Ok(())
        }
        Command::Profile { input, metric, out } => {
            let metric = ProfileMetric::parse(&metric)?;
            let csv = std::fs::read_to_string(input.join("results.csv"))?;
            let records = parse_results_csv(&csv)?;
            let profile = build_profile(&records, metric);
            if let Some(dir) = out.parent() {
                if !dir.as_os_str().is_empty() {
                    std::fs::create_dir_all(dir)?;
                }
            }
            let json = serde_json::to_string_pretty(&profile).expect("profile serialize");
            std::fs::write(&out, json + "\n")?;
            for w in &profile.warnings {
                eprintln!("warning: {w}");
            }
            println!("wrote profile data to {}", out.display());
            Ok(())
        }
        Command::Problems => {
            println!("{:8} {:>3} {:>3} {:>18} lipschitz hint", "name", "n", "p", "domain");
            for p in registry() {
                let domain = format!("[{}, {}]^{}", p.lower()[0], p.upper()[0], p.n());
                let hint = p
                    .lipschitz_hint()
                    .map(|l| format!("{l}"))
                    .unwrap_or_else(|| "-".to_string());
                println!("{:8} {:>3} {:>3} {:>18} {}", p.name(), p.n(), p.p(), domain, hint);
            }
            Ok(())
        }
    }
}
