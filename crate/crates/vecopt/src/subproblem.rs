//! The cubic-regularized Newton subproblem.
//!
//! At an evaluation point the model is
//! `q_M(d) = max_{ξ∈C} ⟨Jf d + ½ dᵀ∇²f d, ξ⟩ + (M/6)‖d‖³`,
//! and the step is a global minimizer of `q_M`. For a fixed scalarization
//! `η` the inner problem `min_d ⟨Jf d + ½dᵀ∇²f d, η⟩ + (M/6)‖d‖³` is solved
//! exactly through the secular equation
//! `r² = Σ σⱼ²/(μⱼ + Mr/2)²`
//! in the Hessian eigenbasis. The max structure is handled by a dual ascent
//! over the weight simplex combined with stationary-point enumeration and a
//! KKT polish on tie manifolds; every inner minimizer is scored by the true
//! `q_M` and the best primal candidate is returned, so the routine stays
//! safe in nonconvex corners where the dual leaves a gap.

use crate::cone::{OrderingCone, SimplexWeights};
use crate::numkernel::{
    add_scaled, bisect_newton_root, dot, norm, solve_dense, sub, sym_eig, EigDecomposition,
    NumError, SymMatrix,
};
use crate::problem::EvalPoint;
use crate::simplex::{min_norm_combination, project_to_simplex};

/// A single-scalarization cubic model `gᵀd + ½dᵀHd + (M/6)‖d‖³`.
#[derive(Debug, Clone)]
pub struct ScalarCubicModel {
    pub g: Vec<f64>,
    pub h: SymMatrix,
    pub m: f64,
}

/// Global minimizer of a scalar cubic model.
#[derive(Debug, Clone)]
pub struct ScalarCubicSolution {
    pub d: Vec<f64>,
    pub r: f64,
    pub value: f64,
    /// Set when the minimizer needed a minimal-eigenvector component.
    pub hard_case: bool,
}

/// Options for [`solve_direction`].
#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Relative duality-gap tolerance; the certified gap bound is
    /// `gap_tol_rel·(1 + |primal|)`.
    pub gap_tol_rel: f64,
    /// Relative tie tolerance for the active set.
    pub tie_tol_rel: f64,
    /// Iteration cap for the projected supergradient ascent (ℓ ≥ 3).
    pub max_dual_iter: usize,
    /// λ-grid resolution for two-generator cones.
    pub grid_ell2: usize,
    /// Barycentric grid resolution for three-generator cones.
    pub grid_ell3: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            gap_tol_rel: 1e-8,
            tie_tol_rel: 1e-9,
            max_dual_iter: 500,
            grid_ell2: 96,
            grid_ell3: 12,
        }
    }
}

/// Solution of the max-scalarized subproblem.
#[derive(Debug, Clone)]
pub struct SubproblemSolution {
    /// The step.
    pub d: Vec<f64>,
    /// `‖d‖`.
    pub r: f64,
    /// Multipliers over the generators with `Σλ = 1`; supported on the
    /// active set at the solution.
    pub weights: SimplexWeights,
    /// `q_M(x, d)` of the returned step — the reported `β_M` value.
    pub primal: f64,
    /// Best dual lower bound found during the ascent.
    pub dual: f64,
    /// `primal − dual ≥ 0` up to rounding; zero at certified optima.
    pub gap: f64,
    /// Generator indices within tie tolerance of the max at `d`.
    pub active_set: Vec<usize>,
    /// Whether the gap closed within tolerance. A non-certified solution is
    /// still usable: the solver's acceptance test is checked on `f` directly.
    pub certified: bool,
}

/// `q_M(x, d)`: max-scalarized quadratic model plus the cubic term.
pub fn q_value(point: &EvalPoint, cone: &OrderingCone, m: f64, d: &[f64]) -> f64 {
    let y = model_vector(point, d);
    let (maxv, _) = cone.max_scalarization(&y);
    maxv + m / 6.0 * norm(d).powi(3)
}

/// `y ∈ ℝᵖ` with `yₖ = ∇fₖᵀd + ½ dᵀ∇²fₖ d`.
fn model_vector(point: &EvalPoint, d: &[f64]) -> Vec<f64> {
    point
        .jac
        .iter()
        .zip(&point.hess)
        .map(|(row, h)| dot(row, d) + 0.5 * h.quad_form(d))
        .collect()
}

/// `h_M(x) = max_ξ⟨f(x), ξ⟩ + β_M(x)`: the model decrease anchored at the
/// current max-scalarized objective value. This is the acceptance threshold
/// of the solver loop.
pub fn h_value(point: &EvalPoint, cone: &OrderingCone, _m: f64, sol: &SubproblemSolution) -> f64 {
    cone.max_scalarization(&point.f).0 + sol.primal
}

/// Stationarity-plus-curvature residual
/// `μ_M(x) = max{ √(2/(M+L) · min_ξ‖⟨Jf,ξ⟩‖), −2/(M+2pL) · max_ξ λ₁(⟨∇²f,ξ⟩) }`,
/// clamped at zero. `μ = 0` certifies a weakly efficient point when `M`
/// stays bounded.
pub fn mu_value(point: &EvalPoint, cone: &OrderingCone, m: f64, l: f64) -> f64 {
    let (min_j, _) = cone.min_generator_norm(&point.jac);
    let t1 = (2.0 / (m + l) * min_j).max(0.0).sqrt();
    let p = point.p() as f64;
    let mut max_l1 = f64::NEG_INFINITY;
    for xi in cone.generators() {
        let h = SymMatrix::weighted_sum(&point.hess, xi);
        // Jacobi on small dense matrices does not fail in practice; a failure
        // here would mean non-finite input, which callers screen for.
        let eig = sym_eig(&h).expect("eigensolver failed in mu_value");
        max_l1 = max_l1.max(eig.min_value());
    }
    let t2 = -(2.0 / (m + 2.0 * p * l)) * max_l1;
    t1.max(t2).max(0.0)
}

// ---------------------------------------------------------------------------
// scalar cubic model: secular equation machinery
// ---------------------------------------------------------------------------

struct SecularSetup {
    eig: EigDecomposition,
    /// coordinates of −g in the eigenbasis
    sigma: Vec<f64>,
    m: f64,
    gnorm: f64,
}

impl SecularSetup {
    fn new(model: &ScalarCubicModel) -> Result<Self, NumError> {
        let eig = sym_eig(&model.h)?;
        let neg_g: Vec<f64> = model.g.iter().map(|x| -x).collect();
        let sigma = eig.to_basis(&neg_g);
        Ok(SecularSetup { eig, sigma, m: model.m, gnorm: norm(&model.g) })
    }

    fn sigma_tol(&self) -> f64 {
        1e-13 * (1.0 + self.gnorm)
    }

    /// `Σ σⱼ²/(μⱼ + Mr/2)²` skipping terms with negligible σ.
    fn w(&self, r: f64) -> f64 {
        let tol = self.sigma_tol();
        self.sigma
            .iter()
            .zip(self.eig.values())
            .filter(|(s, _)| s.abs() > tol)
            .map(|(s, mu)| {
                let den = mu + 0.5 * self.m * r;
                (s / den) * (s / den)
            })
            .sum()
    }

    fn psi(&self, r: f64) -> f64 {
        self.w(r) - r * r
    }

    fn dpsi(&self, r: f64) -> f64 {
        let tol = self.sigma_tol();
        let mut s = -2.0 * r;
        for (sig, mu) in self.sigma.iter().zip(self.eig.values()) {
            if sig.abs() > tol {
                let den = mu + 0.5 * self.m * r;
                s -= self.m * sig * sig / (den * den * den);
            }
        }
        s
    }

    /// `d(r)` in the original basis; components on σ-free eigendirections
    /// are zero.
    fn direction_at(&self, r: f64) -> Vec<f64> {
        let tol = self.sigma_tol();
        let y: Vec<f64> = self
            .sigma
            .iter()
            .zip(self.eig.values())
            .map(|(s, mu)| if s.abs() > tol { s / (mu + 0.5 * self.m * r) } else { 0.0 })
            .collect();
        self.eig.from_basis(&y)
    }

    /// Distinct pole radii `−2μ/M > 0`, ascending, split into radii carrying
    /// σ-mass (true singularities of `w`) and mass-free ones (boundary
    /// candidates).
    fn poles(&self) -> (Vec<f64>, Vec<(f64, usize)>) {
        let tol_mu = 1e-12 * (1.0 + self.eig.spectral_norm());
        let tol_s = self.sigma_tol();
        let mut groups: Vec<(f64, bool, usize)> = Vec::new(); // (μ, has mass, first index)
        for (j, (&mu, &s)) in self.eig.values().iter().zip(&self.sigma).enumerate() {
            if mu >= 0.0 {
                continue;
            }
            match groups.iter_mut().find(|(gmu, _, _)| (mu - *gmu).abs() <= tol_mu) {
                Some(g) => g.1 |= s.abs() > tol_s,
                None => groups.push((mu, s.abs() > tol_s, j)),
            }
        }
        let mut with_mass: Vec<f64> = groups
            .iter()
            .filter(|(_, mass, _)| *mass)
            .map(|(mu, _, _)| -2.0 * mu / self.m)
            .collect();
        with_mass.sort_by(|a, b| a.total_cmp(b));
        let mut mass_free: Vec<(f64, usize)> = groups
            .iter()
            .filter(|(_, mass, _)| !*mass)
            .map(|(mu, _, j)| (-2.0 * mu / self.m, *j))
            .collect();
        mass_free.sort_by(|a, b| a.0.total_cmp(&b.0));
        (with_mass, mass_free)
    }

    fn model_value(&self, model: &ScalarCubicModel, d: &[f64]) -> f64 {
        dot(&model.g, d) + 0.5 * model.h.quad_form(d) + self.m / 6.0 * norm(d).powi(3)
    }
}

/// Global minimizer of a scalar cubic model.
///
/// The minimizer satisfies `d = −(H + (M/2)r I)⁻¹ g` with `r = ‖d‖` and
/// `λ₁(H) + (M/2)r ≥ 0`: the secular root on the rightmost interval, or the
/// hard-case boundary solution `d(r_lb) + α v₁` with `‖d‖ = r_lb` when `g`
/// has no component on the minimal eigenspace and the secular curve passes
/// below the barrier. The hard-case sign makes `v₁ᵀg ≤ 0`, ties resolved
/// toward a positive leading component.
///
/// The secular equation is solved in the offset `δ = r − r_lb` with
/// denominators `(μⱼ − μ₁) + (M/2)δ`, which stays exact arbitrarily close to
/// the eigenvalue barrier (no cancellation), and the root is bracketed in
/// log scale so near-hard cases resolve to full relative precision.
pub fn solve_scalar_cubic(model: &ScalarCubicModel) -> Result<ScalarCubicSolution, NumError> {
    let setup = SecularSetup::new(model)?;
    let n = model.h.order();
    let mu1 = setup.eig.min_value();
    let m = model.m;
    let shift = (-mu1).max(0.0); // μⱼ + shift ≥ 0 with equality on the min group
    let r_lb = 2.0 * shift / m;

    // trivial case
    if setup.gnorm <= setup.sigma_tol() && mu1 >= 0.0 {
        return Ok(ScalarCubicSolution { d: vec![0.0; n], r: 0.0, value: 0.0, hard_case: false });
    }

    let tol_s = setup.sigma_tol();
    // shifted spectrum and the σ-mass on the minimal group
    let shifted: Vec<f64> = setup.eig.values().iter().map(|mu| mu + shift).collect();
    let tol_mu = 1e-12 * (1.0 + setup.eig.spectral_norm());
    let mass_on_min = shifted
        .iter()
        .zip(&setup.sigma)
        .any(|(&mu, &s)| mu <= tol_mu && s.abs() > tol_s);

    // φ(δ) = Σ σⱼ²/((μⱼ+shift) + (M/2)δ)² − (r_lb+δ)², strictly decreasing
    let phi = |delta: f64| -> f64 {
        let mut w = 0.0;
        for (&mu, &s) in shifted.iter().zip(&setup.sigma) {
            if s.abs() > tol_s {
                let den = mu + 0.5 * m * delta;
                let t = s / den;
                w += t * t;
            }
        }
        let r = r_lb + delta;
        w - r * r
    };

    if shift > 0.0 && !mass_on_min {
        // w is finite at the barrier
        let w_lb = phi(0.0) + r_lb * r_lb;
        if w_lb < r_lb * r_lb {
            // hard case: pad with a minimal eigenvector up to the barrier radius
            let base = direction_from_delta(&setup, &shifted, 0.0, m, tol_s);
            let alpha = (r_lb * r_lb - w_lb).max(0.0).sqrt();
            let v1 = setup.eig.vector(0);
            let d = hard_case_direction(&base, alpha, v1, &model.g);
            let r = norm(&d);
            let value = setup.model_value(model, &d);
            return Ok(ScalarCubicSolution { d, r, value, hard_case: true });
        }
    }

    // regular case: bracket the root of φ in log-δ space
    let spectral = setup.eig.spectral_norm();
    let mut hi = ((spectral + (spectral * spectral + 2.0 * m * setup.gnorm).sqrt()) / m)
        .max(r_lb * 2.0 + 1e-6);
    let mut expand = 0;
    while phi(hi) > 0.0 && expand < 60 {
        hi *= 2.0;
        expand += 1;
    }
    let lo = 1e-300_f64;
    let delta = if phi(lo) <= 0.0 {
        0.0 // boundary root: the barrier radius itself
    } else {
        let (mut ulo, mut uhi) = (lo.ln(), hi.ln());
        for _ in 0..240 {
            let umid = 0.5 * (ulo + uhi);
            if phi(umid.exp()) > 0.0 {
                ulo = umid;
            } else {
                uhi = umid;
            }
            if uhi - ulo <= 1e-16 * (1.0 + uhi.abs()) {
                break;
            }
        }
        (0.5 * (ulo + uhi)).exp()
    };
    let d = direction_from_delta(&setup, &shifted, delta, m, tol_s);
    let r = norm(&d);
    let value = setup.model_value(model, &d);
    Ok(ScalarCubicSolution { d, r, value, hard_case: false })
}

/// `d` at `r = r_lb + δ` with cancellation-free denominators.
fn direction_from_delta(
    setup: &SecularSetup,
    shifted: &[f64],
    delta: f64,
    m: f64,
    tol_s: f64,
) -> Vec<f64> {
    let y: Vec<f64> = setup
        .sigma
        .iter()
        .zip(shifted)
        .map(|(&s, &mu)| {
            if s.abs() > tol_s {
                let den = mu + 0.5 * m * delta;
                if den > 0.0 {
                    s / den
                } else {
                    0.0
                }
            } else {
                0.0
            }
        })
        .collect();
    setup.eig.from_basis(&y)
}

fn hard_case_direction(base: &[f64], alpha: f64, v1: &[f64], g: &[f64]) -> Vec<f64> {
    let vg = dot(v1, g);
    let sign = if vg < 0.0 {
        1.0
    } else if vg > 0.0 {
        -1.0
    } else {
        // tie: positive first nonzero component
        let lead = v1.iter().find(|x| **x != 0.0).copied().unwrap_or(1.0);
        if lead >= 0.0 {
            1.0
        } else {
            -1.0
        }
    };
    add_scaled(base, sign * alpha, v1)
}

/// All stationary radii of the scalar model: secular roots on every interval
/// between poles plus mass-free pole boundary solutions (both signs). The
/// global minimizer is among them; the rest are the interior stationary
/// points that the max structure of `q_M` can promote to global optima.
fn scalar_cubic_stationary(model: &ScalarCubicModel) -> Result<Vec<Vec<f64>>, NumError> {
    let setup = SecularSetup::new(model)?;
    let n = model.h.order();
    let mut out: Vec<Vec<f64>> = Vec::new();

    let (mass_poles, free_poles) = setup.poles();
    // interval endpoints: 0, poles…, open top
    let spectral = setup.eig.spectral_norm();
    let top = {
        let t = (spectral + (spectral * spectral + 2.0 * model.m * setup.gnorm).sqrt()) / model.m;
        let mut hi = t.max(mass_poles.last().copied().unwrap_or(0.0) * 2.0 + 1e-6);
        let mut k = 0;
        while setup.psi(hi) > 0.0 && k < 60 {
            hi *= 2.0;
            k += 1;
        }
        hi
    };
    let mut cuts = vec![0.0];
    cuts.extend(mass_poles.iter().copied());
    cuts.push(top);

    const SAMPLES: usize = 48;
    for win in cuts.windows(2) {
        let (a, b) = (win[0], win[1]);
        if b <= a {
            continue;
        }
        // graded samples accumulate near both ends where ψ blows up
        let pad = 1e-12 * (1.0 + b);
        let mut rs: Vec<f64> = Vec::with_capacity(SAMPLES + 2);
        for i in 0..=SAMPLES {
            let t = i as f64 / SAMPLES as f64;
            let smooth = 0.5 - 0.5 * (std::f64::consts::PI * t).cos(); // clusters at ends
            rs.push(a + (b - a) * smooth);
        }
        rs[0] = a + pad;
        let last = rs.len() - 1;
        rs[last] = b - pad;
        let psis: Vec<f64> = rs.iter().map(|&r| setup.psi(r)).collect();
        for i in 1..rs.len() {
            if psis[i - 1] == 0.0 {
                out.push(setup.direction_at(rs[i - 1]));
            } else if psis[i - 1] * psis[i] < 0.0 {
                if let Ok(root) = bisect_newton_root(
                    |r| setup.psi(r),
                    |r| setup.dpsi(r),
                    rs[i - 1],
                    rs[i],
                    1e-14,
                ) {
                    out.push(setup.direction_at(root));
                }
            }
        }
        // Near-double root pairs can sit between two samples without a sign
        // change. Refine each same-sign local extremum of the sampled curve;
        // when it crosses zero, split and take both roots.
        for i in 1..rs.len() - 1 {
            let dipping_min = psis[i] > 0.0 && psis[i] < psis[i - 1] && psis[i] <= psis[i + 1];
            let rising_max = psis[i] < 0.0 && psis[i] > psis[i - 1] && psis[i] >= psis[i + 1];
            if !(dipping_min || rising_max) {
                continue;
            }
            let sign = if dipping_min { 1.0 } else { -1.0 };
            // golden search on sign·ψ over (rs[i−1], rs[i+1])
            let (mut lo, mut hi) = (rs[i - 1], rs[i + 1]);
            let phi = (5.0_f64.sqrt() - 1.0) / 2.0;
            let mut c = hi - phi * (hi - lo);
            let mut e = lo + phi * (hi - lo);
            let mut fc = sign * setup.psi(c);
            let mut fe = sign * setup.psi(e);
            for _ in 0..60 {
                if fc < fe {
                    hi = e;
                    e = c;
                    fe = fc;
                    c = hi - phi * (hi - lo);
                    fc = sign * setup.psi(c);
                } else {
                    lo = c;
                    c = e;
                    fc = fe;
                    e = lo + phi * (hi - lo);
                    fe = sign * setup.psi(e);
                }
                if hi - lo <= 1e-13 * (1.0 + hi) {
                    break;
                }
            }
            let r_ext = 0.5 * (lo + hi);
            if sign * setup.psi(r_ext) <= 0.0 {
                for (ra, rb) in [(rs[i - 1], r_ext), (r_ext, rs[i + 1])] {
                    if let Ok(root) = bisect_newton_root(
                        |r| setup.psi(r),
                        |r| setup.dpsi(r),
                        ra,
                        rb,
                        1e-14,
                    ) {
                        out.push(setup.direction_at(root));
                    }
                }
            }
        }
    }

    // boundary solutions at σ-free poles with room inside the sphere
    for (p, j) in free_poles {
        let w = setup.w(p);
        if w <= p * p {
            let base = setup.direction_at(p);
            let alpha = (p * p - w).max(0.0).sqrt();
            let v = setup.eig.vector(j);
            out.push(add_scaled(&base, alpha, v));
            out.push(add_scaled(&base, -alpha, v));
        }
    }

    if setup.gnorm <= setup.sigma_tol() {
        out.push(vec![0.0; n]);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// the max-scalarized subproblem
// ---------------------------------------------------------------------------

struct GeneratorModels {
    /// `⟨Jf, ξⁱ⟩ᵀ` per generator
    g: Vec<Vec<f64>>,
    /// `⟨∇²f, ξⁱ⟩` per generator
    h: Vec<SymMatrix>,
    m: f64,
    n: usize,
}

impl GeneratorModels {
    fn new(point: &EvalPoint, cone: &OrderingCone, m: f64) -> Self {
        let g = cone
            .generators()
            .iter()
            .map(|xi| cone.scalarize_rows(&point.jac, xi))
            .collect();
        let h = cone
            .generators()
            .iter()
            .map(|xi| SymMatrix::weighted_sum(&point.hess, xi))
            .collect();
        GeneratorModels { g, h, m, n: point.n() }
    }

    fn ell(&self) -> usize {
        self.g.len()
    }

    fn mixed(&self, lambda: &[f64]) -> ScalarCubicModel {
        let mut g = vec![0.0; self.n];
        for (gi, &w) in self.g.iter().zip(lambda) {
            for (a, b) in g.iter_mut().zip(gi) {
                *a += w * b;
            }
        }
        ScalarCubicModel { g, h: SymMatrix::weighted_sum(&self.h, lambda), m: self.m }
    }

    fn branch_values(&self, d: &[f64]) -> Vec<f64> {
        self.g
            .iter()
            .zip(&self.h)
            .map(|(g, h)| dot(g, d) + 0.5 * h.quad_form(d))
            .collect()
    }

    fn q(&self, d: &[f64]) -> f64 {
        let b = self.branch_values(d);
        b.into_iter().fold(f64::NEG_INFINITY, f64::max) + self.m / 6.0 * norm(d).powi(3)
    }

    /// Dual value `D(λ) = min_d ⟨…, η(λ)⟩ + (M/6)‖d‖³`, a valid lower bound
    /// on the primal for any simplex λ, with its inner minimizer.
    fn dual_eval(&self, lambda: &[f64]) -> Result<(f64, Vec<f64>), NumError> {
        let sol = solve_scalar_cubic(&self.mixed(lambda))?;
        Ok((sol.value, sol.d))
    }
}

#[derive(Debug, Clone)]
struct Candidate {
    d: Vec<f64>,
    lambda: Option<Vec<f64>>,
    q: f64,
}

/// Computes the cubic-regularized Newton direction for a given evaluation
/// point, cone and regularization `M`.
///
/// Candidates are gathered from (a) full stationary-point enumeration of each
/// single-generator model, (b) a concave dual ascent over the weight simplex
/// (golden section for ℓ = 2, projected supergradient for ℓ ≥ 3) whose inner
/// minimizers double as primal candidates, and (c) stationary enumeration on
/// a fixed λ-grid for ℓ ∈ {2, 3}. The leading candidates are then polished by
/// Newton solves of the exact single-branch stationarity equation and of the
/// tie KKT systems over every generator pair and triple; the best point under
/// `q_M` is returned together with multipliers, the best dual bound and the
/// duality gap.
pub fn solve_direction(
    point: &EvalPoint,
    cone: &OrderingCone,
    m: f64,
    opts: &SolveOptions,
) -> Result<SubproblemSolution, NumError> {
    assert!(m > 0.0, "regularization must be positive");
    let models = GeneratorModels::new(point, cone, m);
    let ell = models.ell();
    let n = models.n;

    let mut cands: Vec<Candidate> = vec![Candidate { d: vec![0.0; n], lambda: None, q: 0.0 }];
    let mut dual_best = f64::NEG_INFINITY;

    // (a) per-vertex stationary enumeration
    for i in 0..ell {
        let model = ScalarCubicModel { g: models.g[i].clone(), h: models.h[i].clone(), m };
        for d in scalar_cubic_stationary(&model)? {
            let q = models.q(&d);
            let mut lam = vec![0.0; ell];
            lam[i] = 1.0;
            cands.push(Candidate { d, lambda: Some(lam), q });
        }
        // vertex dual value
        let (val, d) = models.dual_eval(&unit_lambda(ell, i))?;
        dual_best = dual_best.max(val);
        let q = models.q(&d);
        cands.push(Candidate { d, lambda: Some(unit_lambda(ell, i)), q });
    }

    // (b) dual ascent
    if ell == 2 {
        golden_dual_ascent(&models, &mut cands, &mut dual_best)?;
    } else if ell >= 3 {
        supergradient_ascent(&models, opts.max_dual_iter, &mut cands, &mut dual_best)?;
        for i in 0..ell {
            for j in i + 1..ell {
                golden_dual_edge(&models, i, j, &mut cands, &mut dual_best)?;
            }
        }
    }

    // (c) λ-grid stationary enumeration
    if ell == 2 {
        let g = opts.grid_ell2.max(2);
        for k in 1..g {
            let t = k as f64 / g as f64;
            grid_node(&models, &[t, 1.0 - t], &mut cands)?;
        }
    } else if ell == 3 || ell == 4 {
        let g = if ell == 3 { opts.grid_ell3.max(2) } else { opts.grid_ell3.max(2) / 2 + 2 };
        let mut stack = vec![0usize; ell];
        barycentric_grid(&models, g, 0, g, &mut stack, &mut cands)?;
    } else if ell > 4 {
        // pairwise edges keep the candidate pool useful without a
        // combinatorial grid
        let g = opts.grid_ell2.max(2) / 2;
        for i in 0..ell {
            for j in i + 1..ell {
                for k in 1..g {
                    let t = k as f64 / g as f64;
                    let mut lam = vec![0.0; ell];
                    lam[i] = t;
                    lam[j] = 1.0 - t;
                    grid_node(&models, &lam, &mut cands)?;
                }
            }
        }
    }

    // primal-best selection (strict improvement keeps the earliest, so runs
    // are deterministic)
    let mut best = cands[0].clone();
    for c in &cands[1..] {
        if c.q < best.q && c.d.iter().all(|x| x.is_finite()) {
            best = c.clone();
        }
    }

    // Polish the leading candidates. A candidate from the λ-grid or ascent
    // sits near an optimum whose active set it does not resolve, so each
    // seed tries the exact single-branch solve and the tie KKT systems over
    // its top-ranked branches; improvements are adopted by q value.
    let mut seeds: Vec<Vec<f64>> = Vec::new();
    {
        let mut ranked: Vec<&Candidate> = cands.iter().collect();
        ranked.sort_by(|a, b| a.q.total_cmp(&b.q));
        for c in ranked {
            if seeds.len() >= 10 {
                break;
            }
            if norm(&c.d) == 0.0 || !c.d.iter().all(|x| x.is_finite()) {
                continue;
            }
            let distinct = seeds
                .iter()
                .all(|s| norm(&sub(s, &c.d)) > 1e-6 * (1.0 + norm(&c.d)));
            if distinct {
                seeds.push(c.d.clone());
            }
        }
    }
    // In one and two variables the pair tie sets are directly sweepable
    // (isolated points, respectively conics through the origin with one
    // nonzero point per ray), which reaches tie optima whose mixed-model
    // root branch is too narrow in λ for the grid to see.
    seeds.extend(tie_curve_seeds(&models));
    // candidate active sets: every pair, triple and quadruple of generators
    // (the tie attained by the optimum need not rank highest at an
    // approximate seed)
    let mut tie_sets: Vec<Vec<usize>> = Vec::new();
    for i in 0..ell {
        for j in i + 1..ell {
            tie_sets.push(vec![i, j]);
            for k in j + 1..ell {
                tie_sets.push(vec![i, j, k]);
                for l in k + 1..ell {
                    tie_sets.push(vec![i, j, k, l]);
                }
            }
        }
    }
    for seed in &seeds {
        let bvals = models.branch_values(seed);
        let mut order: Vec<usize> = (0..ell).collect();
        order.sort_by(|&a, &b| bvals[b].total_cmp(&bvals[a]));
        if let Some(refined) = refine_single_branch(&models, order[0], seed) {
            let q = models.q(&refined);
            if q <= best.q + 1e-12 * (1.0 + best.q.abs()) {
                best = Candidate { d: refined, lambda: Some(unit_lambda(ell, order[0])), q };
            }
        }
        for set in &tie_sets {
            if let Some((refined, lam)) = refine_tie_kkt(&models, set, seed) {
                let q = models.q(&refined);
                if q <= best.q + 1e-12 * (1.0 + best.q.abs()) {
                    best = Candidate { d: refined, lambda: Some(lam), q };
                }
            }
        }
    }

    // β ≤ 0 always: q(0) = 0, so a positive best value (possible only through
    // polish rounding) falls back to the zero step
    if best.q > 0.0 {
        best = Candidate { d: vec![0.0; n], lambda: None, q: 0.0 };
    }

    // multipliers for the returned step
    let lambda = match &best.lambda {
        Some(l) => l.clone(),
        None => {
            // stationary case d = 0: recover λ from the min-norm combination
            let (lam, _) = min_norm_combination(&models.g, 20_000, 1e-16);
            lam
        }
    };
    let weights = SimplexWeights::new(lambda);

    // dual bound at the final multipliers often certifies the optimum
    let (val, d) = models.dual_eval(weights.as_slice())?;
    dual_best = dual_best.max(val);
    let q = models.q(&d);
    if q < best.q {
        best = Candidate { d, lambda: Some(weights.as_slice().to_vec()), q };
    }

    let bvals = models.branch_values(&best.d);
    let maxb = bvals.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b));
    let tol = opts.tie_tol_rel * (1.0 + maxb.abs());
    let active_set: Vec<usize> = (0..ell).filter(|&i| bvals[i] >= maxb - tol).collect();

    let primal = best.q;
    let gap = primal - dual_best;
    let certified = gap <= opts.gap_tol_rel * (1.0 + primal.abs());
    let r = norm(&best.d);
    Ok(SubproblemSolution {
        d: best.d,
        r,
        weights,
        primal,
        dual: dual_best,
        gap,
        active_set,
        certified,
    })
}

fn unit_lambda(ell: usize, i: usize) -> Vec<f64> {
    let mut l = vec![0.0; ell];
    l[i] = 1.0;
    l
}

/// Best points of each pair tie set, used as extra polish seeds (n ≤ 2).
///
/// The tie set of a generator pair is `{d : Δgᵀd + ½ dᵀΔH d = 0}`. For
/// n = 1 it is `{0, −2Δg/ΔH}`; for n = 2 it is a conic through the origin
/// met once per ray `u(θ)` at `t = −Δgᵀu / (½ uᵀΔH u)`, so an angle sweep
/// covers it completely.
fn tie_curve_seeds(models: &GeneratorModels) -> Vec<Vec<f64>> {
    let n = models.n;
    let ell = models.ell();
    if n > 2 {
        return Vec::new();
    }
    let mut seeds = Vec::new();
    for i in 0..ell {
        for j in i + 1..ell {
            let dg = sub(&models.g[i], &models.g[j]);
            if n == 1 {
                let dh = models.h[i].get(0, 0) - models.h[j].get(0, 0);
                if dh.abs() > 1e-14 * (1.0 + models.h[i].get(0, 0).abs()) {
                    let d = -2.0 * dg[0] / dh;
                    if d.is_finite() && d != 0.0 {
                        seeds.push(vec![d]);
                    }
                }
                continue;
            }
            let b00 = models.h[i].get(0, 0) - models.h[j].get(0, 0);
            let b01 = models.h[i].get(0, 1) - models.h[j].get(0, 1);
            let b11 = models.h[i].get(1, 1) - models.h[j].get(1, 1);
            const RAYS: usize = 96;
            let mut best: Vec<(f64, Vec<f64>)> = Vec::new();
            for k in 0..RAYS {
                let theta = std::f64::consts::PI * k as f64 / RAYS as f64;
                let (s, c) = theta.sin_cos();
                let den = 0.5 * (b00 * c * c + 2.0 * b01 * c * s + b11 * s * s);
                let num = dg[0] * c + dg[1] * s;
                if den.abs() < 1e-14 * (1.0 + num.abs()) {
                    continue;
                }
                let t = -num / den;
                if !t.is_finite() || t == 0.0 {
                    continue;
                }
                let d = vec![t * c, t * s];
                let q = models.q(&d);
                if q.is_finite() {
                    best.push((q, d));
                }
            }
            best.sort_by(|a, b| a.0.total_cmp(&b.0));
            for (_, d) in best.into_iter().take(3) {
                seeds.push(d);
            }
        }
    }
    seeds
}

fn grid_node(
    models: &GeneratorModels,
    lambda: &[f64],
    cands: &mut Vec<Candidate>,
) -> Result<(), NumError> {
    let mixed = models.mixed(lambda);
    for d in scalar_cubic_stationary(&mixed)? {
        let q = models.q(&d);
        cands.push(Candidate { d, lambda: Some(lambda.to_vec()), q });
    }
    Ok(())
}

/// Visits every barycentric grid node `λ = counts/g` with at least two
/// positive entries.
fn barycentric_grid(
    models: &GeneratorModels,
    g: usize,
    idx: usize,
    remaining: usize,
    counts: &mut Vec<usize>,
    cands: &mut Vec<Candidate>,
) -> Result<(), NumError> {
    let ell = counts.len();
    if idx == ell - 1 {
        counts[idx] = remaining;
        if counts.iter().filter(|c| **c > 0).count() >= 2 {
            let lam: Vec<f64> = counts.iter().map(|&c| c as f64 / g as f64).collect();
            grid_node(models, &lam, cands)?;
        }
        return Ok(());
    }
    for c in 0..=remaining {
        counts[idx] = c;
        barycentric_grid(models, g, idx + 1, remaining - c, counts, cands)?;
    }
    Ok(())
}

/// Golden-section maximization of the concave dual over λ ∈ [0,1] for two
/// generators; every inner minimizer becomes a primal candidate.
fn golden_dual_ascent(
    models: &GeneratorModels,
    cands: &mut Vec<Candidate>,
    dual_best: &mut f64,
) -> Result<(), NumError> {
    let phi = (5.0_f64.sqrt() - 1.0) / 2.0;
    let mut eval = |t: f64| -> Result<f64, NumError> {
        let lam = vec![t, 1.0 - t];
        let (val, d) = models.dual_eval(&lam)?;
        *dual_best = (*dual_best).max(val);
        let q = models.q(&d);
        cands.push(Candidate { d, lambda: Some(lam), q });
        Ok(val)
    };
    let (mut a, mut b) = (0.0, 1.0);
    let mut c = b - phi * (b - a);
    let mut d = a + phi * (b - a);
    let mut fc = eval(c)?;
    let mut fd = eval(d)?;
    for _ in 0..70 {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = eval(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = eval(d)?;
        }
        if b - a < 1e-13 {
            break;
        }
    }
    Ok(())
}

/// Golden-section dual ascent restricted to the (i, j) edge of the simplex.
fn golden_dual_edge(
    models: &GeneratorModels,
    i: usize,
    j: usize,
    cands: &mut Vec<Candidate>,
    dual_best: &mut f64,
) -> Result<(), NumError> {
    let ell = models.ell();
    let phi = (5.0_f64.sqrt() - 1.0) / 2.0;
    let mut eval = |t: f64| -> Result<f64, NumError> {
        let mut lam = vec![0.0; ell];
        lam[i] = t;
        lam[j] = 1.0 - t;
        let (val, d) = models.dual_eval(&lam)?;
        *dual_best = (*dual_best).max(val);
        let q = models.q(&d);
        cands.push(Candidate { d, lambda: Some(lam), q });
        Ok(val)
    };
    let (mut a, mut b) = (0.0, 1.0);
    let mut c = b - phi * (b - a);
    let mut d = a + phi * (b - a);
    let mut fc = eval(c)?;
    let mut fd = eval(d)?;
    for _ in 0..40 {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = eval(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = eval(d)?;
        }
        if b - a < 1e-12 {
            break;
        }
    }
    Ok(())
}

/// Projected supergradient ascent on the simplex with step `c/√t`. The
/// supergradient at λ is the vector of branch values (plus the cubic term)
/// at the inner minimizer.
fn supergradient_ascent(
    models: &GeneratorModels,
    max_iter: usize,
    cands: &mut Vec<Candidate>,
    dual_best: &mut f64,
) -> Result<(), NumError> {
    let ell = models.ell();
    let mut lam = vec![1.0 / ell as f64; ell];
    let mut c0 = 0.0;
    for t in 1..=max_iter {
        let (val, d) = models.dual_eval(&lam)?;
        *dual_best = (*dual_best).max(val);
        let q = models.q(&d);
        cands.push(Candidate { d: d.clone(), lambda: Some(lam.clone()), q });
        let mut s = models.branch_values(&d);
        let cubic = models.m / 6.0 * norm(&d).powi(3);
        for v in s.iter_mut() {
            *v += cubic;
        }
        if t == 1 {
            c0 = s.iter().fold(0.0_f64, |a, &b| a.max(b.abs()));
            if c0 == 0.0 {
                break;
            }
        }
        let step = c0 / (t as f64).sqrt();
        let trial: Vec<f64> = lam.iter().zip(&s).map(|(l, si)| l + step * si).collect();
        let next = project_to_simplex(&trial);
        let moved: f64 = next.iter().zip(&lam).map(|(a, b)| (a - b).abs()).sum();
        lam = next;
        if moved < 1e-14 {
            break;
        }
    }
    Ok(())
}

/// Newton refinement of a single-branch stationary point:
/// `(Hᵢ + (M/2)‖d‖ I) d + gᵢ = 0`.
fn refine_single_branch(models: &GeneratorModels, i: usize, d0: &[f64]) -> Option<Vec<f64>> {
    let n = models.n;
    let m = models.m;
    let g = &models.g[i];
    let h = &models.h[i];
    let res = |d: &[f64]| -> Vec<f64> {
        let r = norm(d);
        let mut f = h.mat_vec(d);
        for (fk, (dk, gk)) in f.iter_mut().zip(d.iter().zip(g)) {
            *fk += 0.5 * m * r * dk + gk;
        }
        f
    };
    let mut d = d0.to_vec();
    let mut fnorm = norm(&res(&d));
    let scale = 1.0 + norm(g);
    for _ in 0..30 {
        if fnorm <= 1e-13 * scale {
            break;
        }
        let r = norm(&d);
        if r == 0.0 {
            return None;
        }
        // J = H + (M/2)(r I + d dᵀ / r)
        let jmat: Vec<Vec<f64>> = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let mut v = h.get(a, b) + 0.5 * m * d[a] * d[b] / r;
                        if a == b {
                            v += 0.5 * m * r;
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        let f = res(&d);
        let rhs: Vec<f64> = f.iter().map(|x| -x).collect();
        let step = solve_dense(jmat, rhs)?;
        let mut t = 1.0;
        let mut accepted = false;
        for _ in 0..25 {
            let trial = add_scaled(&d, t, &step);
            let tn = norm(&res(&trial));
            if tn < fnorm {
                d = trial;
                fnorm = tn;
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    if fnorm <= 1e-10 * scale {
        Some(d)
    } else {
        None
    }
}

/// Newton solve of the tie KKT system on an active set `A`:
/// stationarity `(Σλᵢ Hᵢ + (M/2) r I) d + Σλᵢ gᵢ = 0`, branch ties, and
/// `‖d‖² = r²`, in the unknowns `(d, λ₁…λ_{a−1}, r)`.
fn refine_tie_kkt(
    models: &GeneratorModels,
    active: &[usize],
    d0: &[f64],
) -> Option<(Vec<f64>, Vec<f64>)> {
    let n = models.n;
    let a = active.len();
    let m = models.m;
    let dim = n + a; // d, a−1 multipliers, r
    let last = active[a - 1];

    let full_lambda = |lam_rel: &[f64]| -> Vec<f64> {
        let mut lam = vec![0.0; models.ell()];
        let mut s = 0.0;
        for (k, &i) in active[..a - 1].iter().enumerate() {
            lam[i] = lam_rel[k];
            s += lam_rel[k];
        }
        lam[last] = 1.0 - s;
        lam
    };

    let residual = |z: &[f64]| -> Vec<f64> {
        let d = &z[..n];
        let lam_rel = &z[n..n + a - 1];
        let r = z[n + a - 1];
        let lam = full_lambda(lam_rel);
        let mixed = models.mixed(&lam);
        let mut f = vec![0.0; dim];
        let hd = mixed.h.mat_vec(d);
        for k in 0..n {
            f[k] = hd[k] + 0.5 * m * r * d[k] + mixed.g[k];
        }
        let b = models.branch_values(d);
        for (k, &i) in active[..a - 1].iter().enumerate() {
            f[n + k] = b[i] - b[last];
        }
        f[n + a - 1] = dot(d, d) - r * r;
        f
    };

    let mut z = vec![0.0; dim];
    z[..n].copy_from_slice(d0);
    for k in 0..a - 1 {
        z[n + k] = 1.0 / a as f64;
    }
    z[n + a - 1] = norm(d0);

    let scale = 1.0 + models.g.iter().map(|g| norm(g)).fold(0.0, f64::max);
    let mut f = residual(&z);
    let mut fnorm = norm(&f);
    for _ in 0..40 {
        if fnorm <= 1e-13 * scale {
            break;
        }
        let d = z[..n].to_vec();
        let lam_rel = z[n..n + a - 1].to_vec();
        let r = z[n + a - 1];
        let lam = full_lambda(&lam_rel);
        let mixed = models.mixed(&lam);
        let mut jmat = vec![vec![0.0; dim]; dim];
        for row in 0..n {
            for col in 0..n {
                jmat[row][col] =
                    mixed.h.get(row, col) + if row == col { 0.5 * m * r } else { 0.0 };
            }
            for (k, &i) in active[..a - 1].iter().enumerate() {
                let hi_d = models.h[i].mat_vec(&d);
                let hl_d = models.h[last].mat_vec(&d);
                jmat[row][n + k] = hi_d[row] - hl_d[row] + models.g[i][row] - models.g[last][row];
            }
            jmat[row][n + a - 1] = 0.5 * m * d[row];
        }
        for (k, &i) in active[..a - 1].iter().enumerate() {
            let gi_hd = add_scaled(&models.g[i], 1.0, &models.h[i].mat_vec(&d));
            let gl_hd = add_scaled(&models.g[last], 1.0, &models.h[last].mat_vec(&d));
            let grad = sub(&gi_hd, &gl_hd);
            jmat[n + k][..n].copy_from_slice(&grad);
        }
        for col in 0..n {
            jmat[n + a - 1][col] = 2.0 * d[col];
        }
        jmat[n + a - 1][n + a - 1] = -2.0 * r;

        let rhs: Vec<f64> = f.iter().map(|x| -x).collect();
        let step = solve_dense(jmat, rhs)?;
        let mut t = 1.0;
        let mut accepted = false;
        for _ in 0..25 {
            let trial: Vec<f64> = z.iter().zip(&step).map(|(zi, si)| zi + t * si).collect();
            let tf = residual(&trial);
            let tn = norm(&tf);
            if tn < fnorm {
                z = trial;
                f = tf;
                fnorm = tn;
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    if fnorm > 1e-9 * scale {
        return None;
    }
    let lam = full_lambda(&z[n..n + a - 1]);
    if lam.iter().any(|&l| !(-1e-7..=1.0 + 1e-7).contains(&l)) {
        return None;
    }
    let lam: Vec<f64> = lam.into_iter().map(|l| l.clamp(0.0, 1.0)).collect();
    Some((z[..n].to_vec(), lam))
}
