//! The cubic-regularized Newton loop, the K-steepest-descent baseline, and
//! convergence diagnostics.
//!
//! Each Newton iteration solves the cubic subproblem at a trial `M`, checks
//! the decrease condition `max_ξ⟨f(x+d), ξ⟩ ≤ h_M(x)` on the true objectives
//! and doubles `M` until it holds, then evaluates the stopping residual
//! `μ_M(x)`. No line search: accepted steps are taken in full.

use crate::cone::OrderingCone;
use crate::numkernel::{add_scaled, all_finite, dot, norm};
use crate::problem::VectorProblem;
use crate::simplex::min_norm_combination;
use crate::subproblem::{h_value, mu_value, solve_direction, SolveOptions};
use std::time::Instant;

/// Configuration of the cubic Newton run.
///
/// Defaults follow the benchmark protocol: `L0 = 1`, `L = 1.5`, `M0 = 3`,
/// `ε = 1e-3`. `L` is an estimate; if the acceptance loop keeps doubling
/// past its cap the run reports that the estimate is too small.
#[derive(Debug, Clone)]
pub struct SolverConfig {
    pub l0: f64,
    pub l: f64,
    pub m0: f64,
    pub eps: f64,
    pub max_iter: usize,
    pub max_doublings: usize,
    pub subproblem: SolveOptions,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            l0: 1.0,
            l: 1.5,
            m0: 3.0,
            eps: 1e-3,
            max_iter: 1000,
            max_doublings: 60,
            subproblem: SolveOptions::default(),
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<(), String> {
        for (name, v) in [("L0", self.l0), ("L", self.l), ("M0", self.m0)] {
            if v.is_nan() || v <= 0.0 {
                return Err(format!("{name} must be positive"));
            }
        }
        if self.l0 > self.m0 {
            return Err("M0 must be at least L0".into());
        }
        if self.eps.is_nan() || self.eps <= 0.0 {
            return Err("eps must be positive".into());
        }
        if self.max_iter == 0 || self.max_doublings == 0 {
            return Err("iteration caps must be positive".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolverStatus {
    /// `μ < ε` reached.
    Converged,
    /// Terminated at an exactly stationary point (`β = 0`, so the step is
    /// zero and no later iteration can differ) whose μ residual never fell
    /// under ε. Such a point is certified Pareto critical; the benchmark
    /// treats it as a successful termination.
    Stationary,
    /// Iteration cap exhausted.
    MaxIterations,
    /// The acceptance loop kept failing after the doubling cap; the
    /// Lipschitz estimate in the config is too small.
    MaxDoublings,
    /// Non-finite values encountered during evaluation.
    NumericalFailure,
}

impl SolverStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolverStatus::Converged => "converged",
            SolverStatus::Stationary => "stationary",
            SolverStatus::MaxIterations => "max_iterations",
            SolverStatus::MaxDoublings => "max_doublings",
            SolverStatus::NumericalFailure => "numerical_failure",
        }
    }

    /// Converged or stationary: the run ended at a certified point rather
    /// than by exhausting a cap.
    pub fn is_terminal_success(&self) -> bool {
        matches!(self, SolverStatus::Converged | SolverStatus::Stationary)
    }
}

/// One recorded iteration: the state at `x^k` together with the accepted
/// regularization and the step/stopping data computed there.
#[derive(Debug, Clone)]
pub struct IterationRecord {
    pub x: Vec<f64>,
    pub f: Vec<f64>,
    pub m: f64,
    pub r: f64,
    pub mu: f64,
    pub beta: f64,
    pub doublings: usize,
    /// Seconds since the run started.
    pub elapsed: f64,
}

/// Full run record.
#[derive(Debug, Clone)]
pub struct SolverTrace {
    pub iterations: Vec<IterationRecord>,
    pub status: SolverStatus,
    pub final_x: Vec<f64>,
    pub final_mu: f64,
    pub warnings: Vec<String>,
}

impl SolverTrace {
    pub fn converged(&self) -> bool {
        self.status == SolverStatus::Converged
    }

    pub fn len(&self) -> usize {
        self.iterations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.iterations.is_empty()
    }
}

/// Runs the cubic-regularized Newton method from `x0`.
///
/// Per iteration: warm-start `M` at `clamp(max(L0, M_prev/2), [L0, 2L])`
/// (the very first iteration uses `M0` as given), solve the subproblem,
/// accept when `max_ξ⟨f(x+d), ξ⟩ ≤ h_M(x)` and double `M` otherwise, then
/// stop if `μ_M(x) < ε` else take the full step.
pub fn run_cubic_newton(
    prob: &VectorProblem,
    cone: &OrderingCone,
    x0: &[f64],
    cfg: &SolverConfig,
) -> SolverTrace {
    let start = Instant::now();
    let mut warnings = Vec::new();
    let mut x = x0.to_vec();
    let mut prev_m: Option<f64> = None;
    let mut iterations: Vec<IterationRecord> = Vec::new();

    if !all_finite(&x) {
        return SolverTrace {
            iterations,
            status: SolverStatus::NumericalFailure,
            final_x: x,
            final_mu: f64::NAN,
            warnings: vec!["initial point is not finite".into()],
        };
    }

    for k in 0..cfg.max_iter {
        let point = prob.eval_point(&x);
        if !point.is_finite() {
            warnings.push(format!("non-finite evaluation at iteration {k}"));
            return SolverTrace {
                iterations,
                status: SolverStatus::NumericalFailure,
                final_x: x,
                final_mu: f64::NAN,
                warnings,
            };
        }
        let mut m = match prev_m {
            None => cfg.m0,
            Some(mp) => (mp / 2.0).max(cfg.l0).clamp(cfg.l0, 2.0 * cfg.l),
        };
        let mut doublings = 0usize;
        let (sol, accepted) = loop {
            let sol = match solve_direction(&point, cone, m, &cfg.subproblem) {
                Ok(s) => s,
                Err(e) => {
                    warnings.push(format!("subproblem failed at iteration {k}: {e}"));
                    return SolverTrace {
                        iterations,
                        status: SolverStatus::NumericalFailure,
                        final_x: x,
                        final_mu: f64::NAN,
                        warnings,
                    };
                }
            };
            let threshold = h_value(&point, cone, m, &sol);
            let trial = add_scaled(&x, 1.0, &sol.d);
            let ftrial = prob.eval_f(&trial);
            if !all_finite(&ftrial) {
                warnings.push(format!("non-finite trial evaluation at iteration {k}"));
                return SolverTrace {
                    iterations,
                    status: SolverStatus::NumericalFailure,
                    final_x: x,
                    final_mu: f64::NAN,
                    warnings,
                };
            }
            let trial_max = cone.max_scalarization(&ftrial).0;
            if trial_max <= threshold + 1e-12 * (1.0 + threshold.abs()) {
                break (sol, true);
            }
            if doublings >= cfg.max_doublings {
                break (sol, false);
            }
            m *= 2.0;
            doublings += 1;
        };
        let mu = mu_value(&point, cone, m, cfg.l);
        iterations.push(IterationRecord {
            x: x.clone(),
            f: point.f.clone(),
            m,
            r: sol.r,
            mu,
            beta: sol.primal,
            doublings,
            elapsed: start.elapsed().as_secs_f64(),
        });
        if !accepted {
            warnings.push(format!(
                "acceptance failed after {} doublings at iteration {k}; raise the Lipschitz estimate L",
                cfg.max_doublings
            ));
            return SolverTrace {
                iterations,
                status: SolverStatus::MaxDoublings,
                final_x: x,
                final_mu: mu,
                warnings,
            };
        }
        if mu < cfg.eps {
            return SolverTrace {
                iterations,
                status: SolverStatus::Converged,
                final_x: x,
                final_mu: mu,
                warnings,
            };
        }
        let x_next = add_scaled(&x, 1.0, &sol.d);
        if x_next == x {
            // β = 0 (or a sub-ulp step): the update cannot change the iterate,
            // so every later iteration would repeat this one. The point is
            // stationary by the β certificate; μ stayed ≥ ε.
            warnings.push(format!(
                "stationary point with mu = {mu:.3e} >= eps at iteration {k}; no representable progress"
            ));
            return SolverTrace {
                iterations,
                status: SolverStatus::Stationary,
                final_x: x,
                final_mu: mu,
                warnings,
            };
        }
        x = x_next;
        prev_m = Some(m);
    }
    let final_mu = iterations.last().map(|r| r.mu).unwrap_or(f64::NAN);
    SolverTrace {
        iterations,
        status: SolverStatus::MaxIterations,
        final_x: x,
        final_mu,
        warnings,
    }
}

/// Configuration of the steepest-descent baseline.
#[derive(Debug, Clone)]
pub struct SdConfig {
    /// Armijo slope fraction.
    pub beta: f64,
    pub eps: f64,
    pub max_iter: usize,
    pub max_halvings: usize,
}

impl Default for SdConfig {
    fn default() -> Self {
        SdConfig { beta: 1e-4, eps: 1e-3, max_iter: 1000, max_halvings: 60 }
    }
}

/// K-steepest descent: `d = argmin_d max_ξ⟨Jf d, ξ⟩ + ½‖d‖²`, solved through
/// its dual `min_λ ‖⟨Jf, η(λ)⟩‖²` over the simplex by projected gradient,
/// with Armijo backtracking on the max scalarization. Stops when `‖d‖ < ε`.
///
/// Trace conventions for this baseline: `mu` records `‖d‖` (its stopping
/// residual), `beta` the model optimum `max_ξ⟨Jf d, ξ⟩ + ½‖d‖²`, `m` the
/// accepted Armijo step length, and `doublings` the halving count.
pub fn run_steepest_descent(
    prob: &VectorProblem,
    cone: &OrderingCone,
    x0: &[f64],
    cfg: &SdConfig,
) -> SolverTrace {
    let start = Instant::now();
    let mut warnings = Vec::new();
    let mut x = x0.to_vec();
    let mut iterations: Vec<IterationRecord> = Vec::new();

    for k in 0..cfg.max_iter {
        let f = prob.eval_f(&x);
        let jac = prob.eval_jac(&x);
        if !all_finite(&f) || jac.iter().any(|r| !all_finite(r)) {
            warnings.push(format!("non-finite evaluation at iteration {k}"));
            return SolverTrace {
                iterations,
                status: SolverStatus::NumericalFailure,
                final_x: x,
                final_mu: f64::NAN,
                warnings,
            };
        }
        let scalarized: Vec<Vec<f64>> = cone
            .generators()
            .iter()
            .map(|xi| cone.scalarize_rows(&jac, xi))
            .collect();
        let (_, combo) = min_norm_combination(&scalarized, 10_000, 1e-15);
        let d: Vec<f64> = combo.iter().map(|v| -v).collect();
        let dnorm = norm(&d);
        let slope = scalarized.iter().map(|g| -dot(g, &combo)).fold(f64::NEG_INFINITY, f64::max);
        let theta = slope + 0.5 * dnorm * dnorm;

        if dnorm < cfg.eps {
            iterations.push(IterationRecord {
                x: x.clone(),
                f,
                m: 0.0,
                r: dnorm,
                mu: dnorm,
                beta: theta,
                doublings: 0,
                elapsed: start.elapsed().as_secs_f64(),
            });
            return SolverTrace {
                iterations,
                status: SolverStatus::Converged,
                final_x: x,
                final_mu: dnorm,
                warnings,
            };
        }

        // Armijo backtracking on φ(α) = max_ξ⟨f(x+αd) − f(x), ξ⟩
        let fmax_terms: Vec<f64> = cone.generators().iter().map(|xi| dot(xi, &f)).collect();
        let mut alpha = 1.0;
        let mut halvings = 0usize;
        let accepted = loop {
            let trial = add_scaled(&x, alpha, &d);
            let ft = prob.eval_f(&trial);
            if all_finite(&ft) {
                let decrease_ok = cone.generators().iter().zip(&fmax_terms).all(|(xi, f0)| {
                    dot(xi, &ft) - f0 <= cfg.beta * alpha * slope + 1e-14 * (1.0 + f0.abs())
                });
                if decrease_ok {
                    break true;
                }
            }
            if halvings >= cfg.max_halvings {
                break false;
            }
            alpha *= 0.5;
            halvings += 1;
        };
        iterations.push(IterationRecord {
            x: x.clone(),
            f,
            m: alpha,
            r: dnorm,
            mu: dnorm,
            beta: theta,
            doublings: halvings,
            elapsed: start.elapsed().as_secs_f64(),
        });
        if !accepted {
            warnings.push(format!("armijo backtracking exhausted at iteration {k}"));
            return SolverTrace {
                iterations,
                status: SolverStatus::MaxDoublings,
                final_x: x,
                final_mu: dnorm,
                warnings,
            };
        }
        x = add_scaled(&x, alpha, &d);
    }
    let final_mu = iterations.last().map(|r| r.mu).unwrap_or(f64::NAN);
    SolverTrace {
        iterations,
        status: SolverStatus::MaxIterations,
        final_x: x,
        final_mu,
        warnings,
    }
}

/// Per-iteration convergence diagnostics
/// `γ_k = L·‖⟨Jf(x^k), η^k⟩‖ / (min_ξ λ₁(⟨∇²f(x^k), ξ⟩))²`,
/// defined where the scalarized Hessians are uniformly positive definite.
#[derive(Debug, Clone)]
pub struct GammaDiagnostics {
    /// `γ_k`, `None` where some scalarized Hessian is not positive definite.
    pub gamma: Vec<Option<f64>>,
    /// `min_ξ λ₁(x^k) / min_ξ λ₁(x^0)`, same definedness.
    pub eig_ratio: Vec<Option<f64>>,
    /// Whether `γ_{k+1} ≤ (8/3)γ_k² + 1e-9` holds (None when either side is
    /// undefined).
    pub quad_decay: Vec<Option<bool>>,
}

/// Recomputes `γ_k` along a recorded trace. `η^k` is taken from the
/// subproblem multipliers at `(x^k, M_k)`.
pub fn gamma_diagnostics(
    trace: &SolverTrace,
    prob: &VectorProblem,
    cone: &OrderingCone,
    l: f64,
) -> GammaDiagnostics {
    use crate::numkernel::{sym_eig, SymMatrix};
    let mut gamma: Vec<Option<f64>> = Vec::with_capacity(trace.len());
    let mut min_l1s: Vec<Option<f64>> = Vec::with_capacity(trace.len());
    for rec in &trace.iterations {
        let point = prob.eval_point(&rec.x);
        let mut min_l1 = f64::INFINITY;
        for xi in cone.generators() {
            let h = SymMatrix::weighted_sum(&point.hess, xi);
            match sym_eig(&h) {
                Ok(e) => min_l1 = min_l1.min(e.min_value()),
                Err(_) => min_l1 = f64::NEG_INFINITY,
            }
        }
        if min_l1 <= 0.0 || !min_l1.is_finite() {
            gamma.push(None);
            min_l1s.push(None);
            continue;
        }
        let sol = match solve_direction(&point, cone, rec.m, &SolveOptions::default()) {
            Ok(s) => s,
            Err(_) => {
                gamma.push(None);
                min_l1s.push(None);
                continue;
            }
        };
        let eta = cone.combine(&sol.weights);
        let jeta = cone.scalarize_rows(&point.jac, &eta);
        gamma.push(Some(l * norm(&jeta) / (min_l1 * min_l1)));
        min_l1s.push(Some(min_l1));
    }
    let base = min_l1s.first().cloned().flatten();
    let eig_ratio: Vec<Option<f64>> = min_l1s
        .iter()
        .map(|v| match (v, base) {
            (Some(x), Some(b)) if b > 0.0 => Some(x / b),
            _ => None,
        })
        .collect();
    let quad_decay: Vec<Option<bool>> = (0..gamma.len())
        .map(|k| {
            if k + 1 >= gamma.len() {
                return None;
            }
            match (gamma[k], gamma[k + 1]) {
                (Some(g0), Some(g1)) => Some(g1 <= 8.0 / 3.0 * g0 * g0 + 1e-9),
                _ => None,
            }
        })
        .collect();
    GammaDiagnostics { gamma, eig_ratio, quad_decay }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::{lookup, sample_initial};

    fn rem1_cfg() -> SolverConfig {
        SolverConfig { l0: 4.0, l: 6.0, m0: 24.0, eps: 1e-3, ..Default::default() }
    }

    #[test]
    fn config_validation() {
        assert!(SolverConfig::default().validate().is_ok());
        let bad = SolverConfig { l0: 5.0, m0: 3.0, ..Default::default() };
        assert!(bad.validate().is_err());
        let bad = SolverConfig { eps: 0.0, ..Default::default() };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn rem1_first_step_matches_worked_example() {
        let prob = lookup("REM1").unwrap();
        let cone = OrderingCone::orthant(2);
        let trace = run_cubic_newton(&prob, &cone, &[0.04], &rem1_cfg());
        assert!(!trace.is_empty());
        let first = &trace.iterations[0];
        assert_eq!(first.m, 24.0);
        assert!((first.r - 0.264).abs() < 0.02, "r = {}", first.r);
        // the second recorded point is x⁰ + d ≈ −0.224 with f ≈ (−0.838, −0.116)
        let x1 = if trace.len() > 1 { trace.iterations[1].x[0] } else { trace.final_x[0] };
        let f1 = prob.eval_f(&[x1]);
        assert!((f1[0] + 0.838).abs() < 0.01, "f1 = {:?}", f1);
        assert!((f1[1] + 0.116).abs() < 0.01, "f1 = {:?}", f1);
    }

    #[test]
    fn stationary_start_converges_immediately() {
        // JOS1 weighted minimizer: f₂'s minimizer (2,2,2,2) is stationary
        // with PD Hessians, so μ = 0 at the start
        let prob = lookup("JOS1").unwrap();
        let cone = OrderingCone::orthant(2);
        let trace = run_cubic_newton(&prob, &cone, &[2.0; 4], &SolverConfig::default());
        assert_eq!(trace.status, SolverStatus::Converged);
        assert_eq!(trace.len(), 1);
        assert_eq!(trace.final_mu, 0.0);
        assert_eq!(trace.final_x, vec![2.0; 4]);
    }

    #[test]
    fn acceptance_and_weak_descent_hold_on_rem1() {
        let prob = lookup("REM1").unwrap();
        let cone = OrderingCone::orthant(2);
        for seed in 0..5u64 {
            let x0 = sample_initial(&prob, seed);
            let trace = run_cubic_newton(&prob, &cone, &x0, &rem1_cfg());
            for w in trace.iterations.windows(2) {
                let (a, b) = (&w[0], &w[1]);
                let maxf_a = cone.max_scalarization(&a.f).0;
                let maxf_b = cone.max_scalarization(&b.f).0;
                // acceptance re-verified post hoc
                assert!(maxf_b <= maxf_a + a.beta + 1e-10, "acceptance violated");
                // decrease of at least (M/12)r³
                assert!(
                    maxf_a - maxf_b >= a.m / 12.0 * a.r.powi(3) - 1e-9,
                    "weak descent violated: {} vs {}",
                    maxf_a - maxf_b,
                    a.m / 12.0 * a.r.powi(3)
                );
            }
        }
    }

    #[test]
    fn sd_zero_jacobian_stops_immediately() {
        let prob = lookup("JOS1").unwrap();
        let cone = OrderingCone::orthant(2);
        // Jf(1,1,1,1): ∇f₁ = ½·1, ∇f₂ = −½·1 → min-norm combo is 0
        let trace = run_steepest_descent(&prob, &cone, &[1.0; 4], &SdConfig::default());
        assert_eq!(trace.status, SolverStatus::Converged);
        assert!(trace.final_mu < 1e-3);
    }

    #[test]
    fn sd_single_objective_descends() {
        // single-objective steepest descent on f = ½‖x‖² reaches the origin
        let prob = crate::problem::VectorProblem::new(
            "half-norm",
            2,
            1,
            vec![-5.0, -5.0],
            vec![5.0, 5.0],
            Some(0.0),
            |x| vec![0.5 * (x[0] * x[0] + x[1] * x[1])],
            |x| vec![vec![x[0], x[1]]],
            |_| vec![crate::numkernel::SymMatrix::identity(2)],
        )
        .unwrap();
        let cone = OrderingCone::orthant(1);
        let trace =
            run_steepest_descent(&prob, &cone, &[3.0, -4.0], &SdConfig { eps: 1e-6, ..Default::default() });
        assert_eq!(trace.status, SolverStatus::Converged);
        assert!(norm(&trace.final_x) < 1e-5);
        // monotone decrease of the objective
        for w in trace.iterations.windows(2) {
            assert!(w[1].f[0] <= w[0].f[0] + 1e-14);
        }
    }

    #[test]
    fn sd_direction_matches_lambda_grid_oracle() {
        // 1-D bi-objective: d = 0 iff 0 lies in the hull of the gradients
        use crate::numkernel::SplitMix64;
        let mut rng = SplitMix64::new(17);
        let cone = OrderingCone::orthant(2);
        for _ in 0..50 {
            let g1 = rng.uniform(-2.0, 2.0);
            let g2 = rng.uniform(-2.0, 2.0);
            let scalarized = vec![vec![g1], vec![g2]];
            let (_, combo) = min_norm_combination(&scalarized, 10_000, 1e-15);
            let mut grid_best = f64::INFINITY;
            for k in 0..=2000 {
                let t = k as f64 / 2000.0;
                grid_best = grid_best.min((t * g1 + (1.0 - t) * g2).abs());
            }
            // the exact dual minimum is a lower bound for the grid minimum
            assert!(combo[0].abs() <= grid_best + 1e-9);
            assert!(grid_best - combo[0].abs() <= (g1 - g2).abs() / 2000.0 + 1e-9);
            let zero_in_hull = g1.min(g2) <= 0.0 && g1.max(g2) >= 0.0;
            assert_eq!(combo[0].abs() < 1e-9, zero_in_hull, "g=({g1},{g2})");
            let _ = cone;
        }
    }

    #[test]
    fn gamma_defined_and_decaying_on_convex_pair() {
        // strongly convex quadratic pair near the joint minimizer
        let prob = lookup("JOS1").unwrap();
        let cone = OrderingCone::orthant(2);
        let cfg = SolverConfig { eps: 1e-12, l: 0.5, l0: 0.1, m0: 0.2, ..Default::default() };
        let trace = run_cubic_newton(&prob, &cone, &[0.4, 0.5, 0.45, 0.55], &cfg);
        let diag = gamma_diagnostics(&trace, &prob, &cone, cfg.l);
        assert!(diag.gamma.iter().take(3).all(|g| g.is_some()));
        let defined: Vec<f64> = diag.gamma.iter().flatten().cloned().collect();
        assert!(defined.len() >= 2);
        for w in defined.windows(2) {
            assert!(w[1] <= w[0] + 1e-12, "gamma not decreasing: {:?}", defined);
        }
        for flag in diag.quad_decay.iter().flatten() {
            assert!(*flag, "quadratic decay flag false");
        }
        for r in diag.eig_ratio.iter().flatten() {
            assert!(*r > 0.0);
        }
    }

    #[test]
    fn gamma_zero_at_stationary_pd_point() {
        // f₂'s minimizer: Jf(2,…,2) has a vanishing convex combination and
        // both Hessians are PD, so γ is defined and exactly zero
        let prob = lookup("JOS1").unwrap();
        let cone = OrderingCone::orthant(2);
        let trace = run_cubic_newton(&prob, &cone, &[2.0; 4], &SolverConfig::default());
        let diag = gamma_diagnostics(&trace, &prob, &cone, 1.0);
        assert_eq!(diag.gamma[0], Some(0.0));
    }

    #[test]
    fn gamma_undefined_on_indefinite_hessians() {
        let prob = lookup("REM1").unwrap();
        let cone = OrderingCone::orthant(2);
        // at x = −1: f₂'' = −10 < 0 → indefinite for ξ = e₂
        let trace = run_cubic_newton(&prob, &cone, &[-1.0], &rem1_cfg());
        let diag = gamma_diagnostics(&trace, &prob, &cone, 6.0);
        assert!(diag.gamma[0].is_none());
    }

    #[test]
    fn pnr_terminates_quickly_from_fixed_seeds() {
        // desk-scale anchor: default configuration from ten fixed seeds ends
        // at a certified point well within 30 iterations
        let prob = lookup("PNR").unwrap();
        let cone = OrderingCone::biobjective_wedge();
        for seed in 0..10u64 {
            let x0 = sample_initial(&prob, seed);
            let trace = run_cubic_newton(&prob, &cone, &x0, &SolverConfig::default());
            assert!(
                trace.status.is_terminal_success(),
                "seed {seed}: status {:?}",
                trace.status
            );
            assert!(trace.len() <= 30, "seed {seed}: {} iterations", trace.len());
        }
    }

    #[test]
    fn traces_are_deterministic() {
        let prob = lookup("PNR").unwrap();
        let cone = OrderingCone::biobjective_wedge();
        let x0 = sample_initial(&prob, 3);
        let a = run_cubic_newton(&prob, &cone, &x0, &SolverConfig::default());
        let b = run_cubic_newton(&prob, &cone, &x0, &SolverConfig::default());
        assert_eq!(a.status, b.status);
        assert_eq!(a.final_x, b.final_x);
        assert_eq!(a.len(), b.len());
        for (ra, rb) in a.iterations.iter().zip(&b.iterations) {
            assert_eq!(ra.x, rb.x);
            assert_eq!(ra.m, rb.m);
            assert_eq!(ra.r, rb.r);
            assert_eq!(ra.mu, rb.mu);
        }
    }
}
