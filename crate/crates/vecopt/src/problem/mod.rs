//! Vector-optimization problem abstraction and the benchmark suite.
//!
//! A [`VectorProblem`] bundles `f : ℝⁿ → ℝᵖ` with its analytic Jacobian and
//! per-objective Hessians plus a box `S` used for sampling initial points.
//! The method itself is unconstrained: iterates may leave the box, which only
//! scopes sampling and the Taylor-bound test ranges.

mod suite;

pub use suite::{lookup, registry};

use crate::numkernel::{all_finite, fnv1a64, SplitMix64, SymMatrix};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum ProblemError {
    #[error("unknown problem '{name}'")]
    Unknown { name: String },
    #[error("evaluation produced a non-finite value in {what} at coordinate {coord}")]
    EvalFailure { what: String, coord: usize },
    #[error("invalid domain: lower bound must be strictly below upper bound componentwise")]
    BadDomain,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
}

type EvalFn = Arc<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync>;
type JacFn = Arc<dyn Fn(&[f64]) -> Vec<Vec<f64>> + Send + Sync>;
type HessFn = Arc<dyn Fn(&[f64]) -> Vec<SymMatrix> + Send + Sync>;

/// A twice continuously differentiable vector objective on a box domain.
#[derive(Clone)]
pub struct VectorProblem {
    name: String,
    n: usize,
    p: usize,
    lower: Vec<f64>,
    upper: Vec<f64>,
    lipschitz_hint: Option<f64>,
    f: EvalFn,
    jac: JacFn,
    hess: HessFn,
}

impl std::fmt::Debug for VectorProblem {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fm.debug_struct("VectorProblem")
            .field("name", &self.name)
            .field("n", &self.n)
            .field("p", &self.p)
            .field("lower", &self.lower)
            .field("upper", &self.upper)
            .field("lipschitz_hint", &self.lipschitz_hint)
            .finish()
    }
}

impl VectorProblem {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        n: usize,
        p: usize,
        lower: Vec<f64>,
        upper: Vec<f64>,
        lipschitz_hint: Option<f64>,
        f: impl Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
        jac: impl Fn(&[f64]) -> Vec<Vec<f64>> + Send + Sync + 'static,
        hess: impl Fn(&[f64]) -> Vec<SymMatrix> + Send + Sync + 'static,
    ) -> Result<Self, ProblemError> {
        if lower.len() != n || upper.len() != n {
            return Err(ProblemError::Dimension { expected: n, got: lower.len().max(upper.len()) });
        }
        if lower.iter().zip(&upper).any(|(l, u)| l.is_nan() || u.is_nan() || l >= u) {
            return Err(ProblemError::BadDomain);
        }
        Ok(VectorProblem {
            name: name.into(),
            n,
            p,
            lower,
            upper,
            lipschitz_hint,
            f: Arc::new(f),
            jac: Arc::new(jac),
            hess: Arc::new(hess),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Decision dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Objective dimension.
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// Hessian Lipschitz constant on `S`, when one is known analytically.
    pub fn lipschitz_hint(&self) -> Option<f64> {
        self.lipschitz_hint
    }

    pub fn eval_f(&self, x: &[f64]) -> Vec<f64> {
        debug_assert_eq!(x.len(), self.n);
        (self.f)(x)
    }

    /// Jacobian as `p` gradient rows of length `n`.
    pub fn eval_jac(&self, x: &[f64]) -> Vec<Vec<f64>> {
        debug_assert_eq!(x.len(), self.n);
        (self.jac)(x)
    }

    /// One symmetric `n×n` Hessian per objective.
    pub fn eval_hess(&self, x: &[f64]) -> Vec<SymMatrix> {
        debug_assert_eq!(x.len(), self.n);
        (self.hess)(x)
    }

    /// Bundles `f`, `Jf`, `∇²f` at `x`. Evaluation is pure, so the cache is
    /// exact.
    pub fn eval_point(&self, x: &[f64]) -> EvalPoint {
        EvalPoint {
            x: x.to_vec(),
            f: self.eval_f(x),
            jac: self.eval_jac(x),
            hess: self.eval_hess(x),
        }
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.n
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(xi, (lo, hi))| xi >= lo && xi <= hi)
    }
}

/// Memoized evaluation bundle at a point.
#[derive(Debug, Clone)]
pub struct EvalPoint {
    pub x: Vec<f64>,
    pub f: Vec<f64>,
    pub jac: Vec<Vec<f64>>,
    pub hess: Vec<SymMatrix>,
}

impl EvalPoint {
    /// Builds a bundle from raw parts; used by tests and synthetic instances.
    pub fn from_raw(x: Vec<f64>, f: Vec<f64>, jac: Vec<Vec<f64>>, hess: Vec<SymMatrix>) -> Self {
        EvalPoint { x, f, jac, hess }
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn p(&self) -> usize {
        self.f.len()
    }

    pub fn is_finite(&self) -> bool {
        all_finite(&self.x)
            && all_finite(&self.f)
            && self.jac.iter().all(|r| all_finite(r))
            && self.hess.iter().all(|h| h.is_finite())
    }
}

/// Deterministic uniform sample of an initial point from the box `S`.
///
/// The stream is SplitMix64 seeded with `fnv1a64(name) XOR (seed · GOLDEN)`
/// where `GOLDEN = 0x9E3779B97F4A7C15`; coordinates are drawn in order as
/// `lo + (hi − lo)·u` with `u` from the top 53 bits. Identical across
/// platforms, and the same `(problem, seed)` pair always yields the same
/// point, which is what the shared-seed benchmark protocol needs.
pub fn sample_initial(prob: &VectorProblem, seed: u64) -> Vec<f64> {
    let state = fnv1a64(prob.name()) ^ seed.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    let mut rng = SplitMix64::new(state);
    prob.lower
        .iter()
        .zip(&prob.upper)
        .map(|(&lo, &hi)| rng.uniform(lo, hi))
        .collect()
}

/// Max relative errors of the analytic derivatives against central
/// differences, one entry per objective.
#[derive(Debug, Clone)]
pub struct DerivativeReport {
    pub jac_err: Vec<f64>,
    pub hess_err: Vec<f64>,
}

impl DerivativeReport {
    pub fn max_error(&self) -> f64 {
        self.jac_err
            .iter()
            .chain(&self.hess_err)
            .fold(0.0_f64, |m, &e| m.max(e))
    }
}

/// Validates `Jf` against central differences of `f` and each `∇²fₖ` against
/// central differences of the Jacobian rows, at a point interior to `S` with
/// margin at least `h`.
pub fn check_derivatives(
    prob: &VectorProblem,
    x: &[f64],
    h: f64,
) -> Result<DerivativeReport, ProblemError> {
    let n = prob.n();
    let p = prob.p();
    let jac = prob.eval_jac(x);
    let hess = prob.eval_hess(x);
    let mut jac_err = vec![0.0_f64; p];
    let mut hess_err = vec![0.0_f64; p];
    let rel = |num: f64, ana: f64| (num - ana).abs() / (1.0 + ana.abs());

    for j in 0..n {
        let mut xp = x.to_vec();
        let mut xm = x.to_vec();
        xp[j] += h;
        xm[j] -= h;
        let fp = prob.eval_f(&xp);
        let fm = prob.eval_f(&xm);
        for k in 0..p {
            if !fp[k].is_finite() || !fm[k].is_finite() {
                return Err(ProblemError::EvalFailure { what: format!("f[{k}]"), coord: j });
            }
            let fd = (fp[k] - fm[k]) / (2.0 * h);
            jac_err[k] = jac_err[k].max(rel(fd, jac[k][j]));
        }
        let jp = prob.eval_jac(&xp);
        let jm = prob.eval_jac(&xm);
        for k in 0..p {
            for i in 0..n {
                if !jp[k][i].is_finite() || !jm[k][i].is_finite() {
                    return Err(ProblemError::EvalFailure { what: format!("Jf[{k}]"), coord: i });
                }
                let fd = (jp[k][i] - jm[k][i]) / (2.0 * h);
                hess_err[k] = hess_err[k].max(rel(fd, hess[k].get(i, j)));
            }
        }
    }
    Ok(DerivativeReport { jac_err, hess_err })
}

/// Interior point of the box at relative coordinates `t ∈ (0,1)ⁿ` shrunk by
/// `margin`, handy for derivative-check sampling.
pub fn interior_point(prob: &VectorProblem, rng: &mut SplitMix64, margin: f64) -> Vec<f64> {
    prob.lower
        .iter()
        .zip(prob.upper.iter())
        .map(|(&lo, &hi)| {
            let a = lo + margin * (hi - lo);
            let b = hi - margin * (hi - lo);
            rng.uniform(a, b)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampling_is_deterministic_and_in_box() {
        for prob in registry() {
            let a = sample_initial(&prob, 42);
            let b = sample_initial(&prob, 42);
            assert_eq!(a, b, "same seed must give the same point on {}", prob.name());
            assert!(prob.contains(&a), "sample outside box on {}", prob.name());
            let c = sample_initial(&prob, 43);
            assert_ne!(a, c);
        }
    }

    #[test]
    fn sampling_mean_near_box_center() {
        let prob = lookup("PNR").unwrap();
        let n = prob.n();
        let trials = 100_000;
        let mut mean = vec![0.0; n];
        for seed in 0..trials {
            let x = sample_initial(&prob, seed);
            for (m, xi) in mean.iter_mut().zip(&x) {
                *m += xi / trials as f64;
            }
        }
        // per-coordinate: uniform on [-2,2] has σ = 4/√12; σ_mean = σ/√N
        let sigma_mean = (4.0 / 12.0_f64.sqrt()) / (trials as f64).sqrt();
        for (m, (lo, hi)) in mean.iter().zip(prob.lower().iter().zip(prob.upper())) {
            let center = 0.5 * (lo + hi);
            assert!(
                (m - center).abs() <= 3.0 * sigma_mean,
                "mean {m} vs center {center} beyond 3σ = {}",
                3.0 * sigma_mean
            );
        }
    }

    #[test]
    fn evaluation_is_pure() {
        let prob = lookup("Hil1").unwrap();
        let x = sample_initial(&prob, 7);
        let a = prob.eval_point(&x);
        let b = prob.eval_point(&x);
        assert_eq!(a.f, b.f);
        assert_eq!(a.jac, b.jac);
        for (ha, hb) in a.hess.iter().zip(&b.hess) {
            assert_eq!(ha, hb);
        }
    }

    #[test]
    fn rejects_bad_domain() {
        let r = VectorProblem::new(
            "bad",
            1,
            1,
            vec![1.0],
            vec![1.0],
            None,
            |_| vec![0.0],
            |_| vec![vec![0.0]],
            |_| vec![SymMatrix::zeros(1)],
        );
        assert!(matches!(r, Err(ProblemError::BadDomain)));
    }
}
