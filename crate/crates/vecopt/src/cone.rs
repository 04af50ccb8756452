//! Finitely generated ordering cone and the order relations it induces.
//!
//! The cone `K ⊂ ℝᵖ` is described through a finite set `C = {ξ¹, …, ξ^ℓ}` of
//! unit vectors in the dual cone: `K = {u : ⟨u, ξ⟩ ≥ 0 for all ξ ∈ C}` and
//! `int K = {u : ⟨u, ξ⟩ > 0 for all ξ ∈ C}`. All scalarizations used by the
//! solver are finite loops over `C`.

use crate::numkernel::{all_finite, dot, norm, solve_dense};
use thiserror::Error;

/// Absolute tolerance for cone membership tests.
pub const MEMBERSHIP_TOL: f64 = 1e-12;
const DEDUP_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Error)]
pub enum ConeError {
    #[error("dimension mismatch: cone lives in R^{expected}, got a vector of length {got}")]
    Dimension { expected: usize, got: usize },
    #[error("cone needs at least one generator")]
    Empty,
    #[error("generator {index} is zero or not finite")]
    BadGenerator { index: usize },
    #[error("generators do not span a pointed cone: generator {index} is a nonpositive combination of the others")]
    NotPointed { index: usize },
}

/// Nonnegative weights over the generators summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplexWeights(Vec<f64>);

impl SimplexWeights {
    /// Clamps tiny negatives to zero and renormalizes so the sum is exactly
    /// within 1e-12 of one.
    pub fn new(raw: Vec<f64>) -> Self {
        let mut w: Vec<f64> = raw.into_iter().map(|x| x.max(0.0)).collect();
        let s: f64 = w.iter().sum();
        if s <= 0.0 {
            let n = w.len().max(1);
            w = vec![1.0 / n as f64; n];
        } else {
            for x in w.iter_mut() {
                *x /= s;
            }
        }
        SimplexWeights(w)
    }

    /// Unit weight on generator `index`.
    pub fn vertex(len: usize, index: usize) -> Self {
        let mut w = vec![0.0; len];
        w[index] = 1.0;
        SimplexWeights(w)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Indices with weight above `tol`.
    pub fn support(&self, tol: f64) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &w)| w > tol)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Ordering cone given by its dual generator set on the unit sphere.
///
/// Immutable after construction and freely shareable across threads.
#[derive(Debug, Clone)]
pub struct OrderingCone {
    p: usize,
    generators: Vec<Vec<f64>>,
    warnings: Vec<String>,
}

impl OrderingCone {
    /// Builds a cone from arbitrary-scale generators.
    ///
    /// Generators are normalized to unit length, duplicates (within 1e-10
    /// after normalization) are merged with a warning, and for ℓ ≤ 4 a
    /// pointedness check rejects a generator that is a nonpositive
    /// combination of the others. Larger generator sets are trusted with a
    /// warning; the benchmark protocol uses ℓ ∈ {2, 3}.
    pub fn new(p: usize, generators: Vec<Vec<f64>>) -> Result<Self, ConeError> {
        if generators.is_empty() {
            return Err(ConeError::Empty);
        }
        let mut warnings = Vec::new();
        let mut gens: Vec<Vec<f64>> = Vec::with_capacity(generators.len());
        for (index, g) in generators.into_iter().enumerate() {
            if g.len() != p {
                return Err(ConeError::Dimension { expected: p, got: g.len() });
            }
            if !all_finite(&g) {
                return Err(ConeError::BadGenerator { index });
            }
            let len = norm(&g);
            if len <= 0.0 {
                return Err(ConeError::BadGenerator { index });
            }
            let unit: Vec<f64> = g.iter().map(|x| x / len).collect();
            let dup = gens
                .iter()
                .any(|u| u.iter().zip(&unit).all(|(a, b)| (a - b).abs() <= DEDUP_TOL));
            if dup {
                warnings.push(format!("generator {index} duplicates an earlier one; dropped"));
            } else {
                gens.push(unit);
            }
        }
        let ell = gens.len();
        if ell <= 4 {
            for i in 0..ell {
                if ell >= 2 && is_nonpositive_combination(&gens, i) {
                    return Err(ConeError::NotPointed { index: i });
                }
            }
        } else {
            warnings.push(format!("pointedness not verified for {ell} generators"));
        }
        Ok(OrderingCone { p, generators: gens, warnings })
    }

    /// `ℝᵖ₊` through the standard basis.
    pub fn orthant(p: usize) -> Self {
        let gens = (0..p)
            .map(|i| (0..p).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect();
        OrderingCone { p, generators: gens, warnings: Vec::new() }
    }

    /// The bi-objective benchmark cone `{y ∈ ℝ²₊ : y₁ ≤ 3y₂, y₂ ≤ 3y₁}`,
    /// generated by `(−1, 3)/√10` and `(3, −1)/√10`.
    pub fn biobjective_wedge() -> Self {
        OrderingCone::new(2, vec![vec![-1.0, 3.0], vec![3.0, -1.0]]).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.p
    }

    /// Number of generators ℓ.
    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Vec<f64>] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> &[f64] {
        &self.generators[i]
    }

    /// Construction warnings (deduplication, unchecked pointedness).
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    fn check_dim(&self, u: &[f64]) -> Result<(), ConeError> {
        if u.len() != self.p {
            return Err(ConeError::Dimension { expected: self.p, got: u.len() });
        }
        Ok(())
    }

    /// `u ∈ K`, i.e. `⟨u, ξ⟩ ≥ −tol` for every generator.
    pub fn in_cone(&self, u: &[f64]) -> Result<bool, ConeError> {
        self.check_dim(u)?;
        Ok(self.generators.iter().all(|g| dot(g, u) >= -MEMBERSHIP_TOL))
    }

    /// `u ∈ int K`, i.e. `⟨u, ξ⟩ > tol` for every generator.
    pub fn in_interior(&self, u: &[f64]) -> Result<bool, ConeError> {
        self.check_dim(u)?;
        Ok(self.generators.iter().all(|g| dot(g, u) > MEMBERSHIP_TOL))
    }

    /// `u ⪯ v ⇔ u − v ∈ −K ⇔ v − u ∈ K`.
    pub fn precedes(&self, u: &[f64], v: &[f64]) -> Result<bool, ConeError> {
        self.check_dim(u)?;
        self.check_dim(v)?;
        let diff: Vec<f64> = v.iter().zip(u).map(|(a, b)| a - b).collect();
        self.in_cone(&diff)
    }

    /// `u ≺ v ⇔ v − u ∈ int K`.
    pub fn strictly_precedes(&self, u: &[f64], v: &[f64]) -> Result<bool, ConeError> {
        self.check_dim(u)?;
        self.check_dim(v)?;
        let diff: Vec<f64> = v.iter().zip(u).map(|(a, b)| a - b).collect();
        self.in_interior(&diff)
    }

    /// `max_{ξ∈C} ⟨u, ξ⟩` with the attaining generator index; ties break to
    /// the lowest index so runs are deterministic.
    pub fn max_scalarization(&self, u: &[f64]) -> (f64, usize) {
        debug_assert_eq!(u.len(), self.p);
        let mut best = f64::NEG_INFINITY;
        let mut arg = 0;
        for (i, g) in self.generators.iter().enumerate() {
            let v = dot(g, u);
            if v > best {
                best = v;
                arg = i;
            }
        }
        (best, arg)
    }

    /// `min_{ξ∈C} ‖⟨Jf, ξ⟩‖` over rows of a `p×n` Jacobian, with the
    /// attaining index. `⟨Jf, ξ⟩` is the ξ-weighted combination of the rows.
    pub fn min_generator_norm(&self, jac_rows: &[Vec<f64>]) -> (f64, usize) {
        debug_assert_eq!(jac_rows.len(), self.p);
        let mut best = f64::INFINITY;
        let mut arg = 0;
        for (i, g) in self.generators.iter().enumerate() {
            let v = norm(&self.scalarize_rows(jac_rows, g));
            if v < best {
                best = v;
                arg = i;
            }
        }
        (best, arg)
    }

    /// `Σ ξₖ · rowₖ` for a `p×n` row stack.
    pub fn scalarize_rows(&self, rows: &[Vec<f64>], xi: &[f64]) -> Vec<f64> {
        let n = rows[0].len();
        let mut out = vec![0.0; n];
        for (row, &w) in rows.iter().zip(xi) {
            for (o, r) in out.iter_mut().zip(row) {
                *o += w * r;
            }
        }
        out
    }

    /// `η(λ) = Σ λᵢ ξⁱ`.
    pub fn combine(&self, weights: &SimplexWeights) -> Vec<f64> {
        debug_assert_eq!(weights.len(), self.num_generators());
        let mut eta = vec![0.0; self.p];
        for (g, &w) in self.generators.iter().zip(weights.as_slice()) {
            for (e, x) in eta.iter_mut().zip(g) {
                *e += w * x;
            }
        }
        eta
    }
}

/// True when `-g[index] ∈ cone(g[j], j ≠ index)`, i.e. the generator is a
/// nonpositive combination of the others. Exact for small ℓ by enumerating
/// support sets of the nonnegative least-squares problem.
fn is_nonpositive_combination(gens: &[Vec<f64>], index: usize) -> bool {
    let others: Vec<&Vec<f64>> = gens
        .iter()
        .enumerate()
        .filter(|(j, _)| *j != index)
        .map(|(_, g)| g)
        .collect();
    let target: Vec<f64> = gens[index].iter().map(|x| -x).collect();
    let m = others.len();
    // residual of unconstrained LS on each support subset, feasibility c ≥ 0
    for mask in 1u32..(1 << m) {
        let support: Vec<usize> = (0..m).filter(|j| mask & (1 << j) != 0).collect();
        let gram: Vec<Vec<f64>> = support
            .iter()
            .map(|&a| support.iter().map(|&b| dot(others[a], others[b])).collect())
            .collect();
        let rhs: Vec<f64> = support.iter().map(|&a| dot(others[a], &target)).collect();
        let Some(c) = solve_dense(gram, rhs) else { continue };
        if c.iter().any(|&ci| ci < -1e-9) {
            continue;
        }
        let mut combo = vec![0.0; target.len()];
        for (&ci, &a) in c.iter().zip(&support) {
            for (o, x) in combo.iter_mut().zip(others[a]) {
                *o += ci * x;
            }
        }
        let res: f64 = combo.iter().zip(&target).map(|(a, b)| (a - b) * (a - b)).sum();
        if res.sqrt() <= 1e-9 {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wedge() -> OrderingCone {
        OrderingCone::biobjective_wedge()
    }

    #[test]
    fn generators_normalized() {
        let k = wedge();
        for g in k.generators() {
            assert!((norm(g) - 1.0).abs() <= 1e-12);
        }
        let s = 10.0_f64.sqrt();
        assert!((k.generator(0)[0] + 1.0 / s).abs() < 1e-15);
        assert!((k.generator(0)[1] - 3.0 / s).abs() < 1e-15);
    }

    #[test]
    fn wedge_interior_point() {
        // both inner products equal 2/√10 > 0
        let k = wedge();
        assert!(k.in_interior(&[1.0, 1.0]).unwrap());
        assert!(k.in_cone(&[1.0, 1.0]).unwrap());
    }

    #[test]
    fn orthant_boundary_and_outside() {
        let k = OrderingCone::orthant(3);
        assert!(k.in_cone(&[0.0, 1.0, 2.0]).unwrap());
        assert!(!k.in_interior(&[0.0, 1.0, 2.0]).unwrap());
        assert!(!k.in_cone(&[-1.0, 0.0, 0.0]).unwrap());
        assert!(!k.in_interior(&[-1.0, 0.0, 0.0]).unwrap());
    }

    #[test]
    fn precedes_examples() {
        let k = OrderingCone::orthant(2);
        assert!(k.strictly_precedes(&[1.0, 1.0], &[2.0, 2.0]).unwrap());
        let u = [0.3, -0.7];
        assert!(k.precedes(&u, &u).unwrap());
        assert!(!k.strictly_precedes(&u, &u).unwrap());
        // wedge cone: (1,0)−(0,0) has ⟨(1,0),(−1,3)/√10⟩ = −1/√10 < 0
        let kw = wedge();
        assert!(!kw.precedes(&[0.0, 0.0], &[1.0, 0.0]).unwrap());
    }

    #[test]
    fn max_scalarization_examples() {
        let k = OrderingCone::orthant(2);
        let (v, i) = k.max_scalarization(&[3.0, 5.0]);
        assert_eq!((v, i), (5.0, 1));
        // tie on the wedge cone breaks to the lowest index
        let kw = wedge();
        let (v, i) = kw.max_scalarization(&[1.0, 1.0]);
        assert!((v - 2.0 / 10.0_f64.sqrt()).abs() < 1e-15);
        assert_eq!(i, 0);
    }

    #[test]
    fn min_generator_norm_zero_jacobian() {
        let k = wedge();
        let (v, _) = k.min_generator_norm(&[vec![0.0, 0.0], vec![0.0, 0.0]]);
        assert_eq!(v, 0.0);
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let k = OrderingCone::orthant(2);
        assert!(matches!(k.in_cone(&[1.0, 2.0, 3.0]), Err(ConeError::Dimension { .. })));
        assert!(matches!(k.precedes(&[1.0], &[1.0, 2.0]), Err(ConeError::Dimension { .. })));
    }

    #[test]
    fn duplicate_generators_merged_with_warning() {
        let k = OrderingCone::new(2, vec![vec![1.0, 0.0], vec![2.0, 0.0], vec![0.0, 1.0]]).unwrap();
        assert_eq!(k.num_generators(), 2);
        assert_eq!(k.warnings().len(), 1);
    }

    #[test]
    fn non_pointed_rejected() {
        // ±e₁: K would be a degenerate slab with empty interior
        let err = OrderingCone::new(2, vec![vec![1.0, 0.0], vec![-1.0, 0.0]]);
        assert!(matches!(err, Err(ConeError::NotPointed { .. })));
        // three generators spanning more than a halfspace in the plane
        let err = OrderingCone::new(2, vec![vec![1.0, 0.0], vec![-1.0, 1.0], vec![-1.0, -1.0]]);
        assert!(matches!(err, Err(ConeError::NotPointed { .. })));
    }

    #[test]
    fn weights_normalize() {
        let w = SimplexWeights::new(vec![2.0, 2.0]);
        assert!((w.as_slice()[0] - 0.5).abs() < 1e-15);
        let w = SimplexWeights::new(vec![-1e-15, 3.0]);
        assert_eq!(w.as_slice()[0], 0.0);
        assert!((w.as_slice().iter().sum::<f64>() - 1.0).abs() <= 1e-12);
        let v = SimplexWeights::vertex(3, 1);
        assert_eq!(v.as_slice(), &[0.0, 1.0, 0.0]);
        assert_eq!(v.support(1e-9), vec![1]);
    }
}
