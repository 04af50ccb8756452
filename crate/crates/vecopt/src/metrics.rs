//! Front-quality metrics and Dolan–Moré performance profiles.
//!
//! Dominance for filtering and purity uses the run's ordering cone (strict
//! interior dominance), matching how the solver's outputs are judged.
//! Hypervolume is the Lebesgue measure of the region between a front and a
//! reference point, computed exactly for p ∈ {2, 3}.

use crate::cone::OrderingCone;
use crate::numkernel::all_finite;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum MetricsError {
    #[error("hypervolume supports 2 or 3 objectives, got {got}")]
    UnsupportedDimension { got: usize },
    #[error("reference point dimension {got} does not match points of dimension {expected}")]
    Dimension { expected: usize, got: usize },
}

/// Final objective vectors of one solver on one problem, deduplicated.
#[derive(Debug, Clone)]
pub struct FrontApproximation {
    pub points: Vec<Vec<f64>>,
    pub solver_id: String,
    pub problem_id: String,
}

impl FrontApproximation {
    /// Drops non-finite vectors and merges duplicates within 1e-10 (max
    /// norm), keeping first occurrences in input order.
    pub fn new(
        solver_id: impl Into<String>,
        problem_id: impl Into<String>,
        points: Vec<Vec<f64>>,
    ) -> Self {
        let mut kept: Vec<Vec<f64>> = Vec::with_capacity(points.len());
        for p in points {
            if !all_finite(&p) {
                continue;
            }
            let dup = kept
                .iter()
                .any(|q| q.len() == p.len() && q.iter().zip(&p).all(|(a, b)| (a - b).abs() <= 1e-10));
            if !dup {
                kept.push(p);
            }
        }
        FrontApproximation {
            points: kept,
            solver_id: solver_id.into(),
            problem_id: problem_id.into(),
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Keeps the points not strictly dominated by any other point in the list
/// (`v ≺ u` drops `u`), preserving input order.
pub fn nondominated_filter(points: &[Vec<f64>], cone: &OrderingCone) -> Vec<Vec<f64>> {
    points
        .iter()
        .filter(|u| {
            !points
                .iter()
                .any(|v| v.as_slice() != u.as_slice() && cone.strictly_precedes(v, u).unwrap_or(false))
        })
        .cloned()
        .collect()
}

/// Exact hypervolume dominated by `points` relative to `reference`, for
/// p ∈ {2, 3}. Points not componentwise below the reference are dropped;
/// the number of dropped points is also returned.
pub fn hypervolume_detailed(
    points: &[Vec<f64>],
    reference: &[f64],
) -> Result<(f64, usize), MetricsError> {
    let p = reference.len();
    if p != 2 && p != 3 {
        return Err(MetricsError::UnsupportedDimension { got: p });
    }
    let mut kept: Vec<Vec<f64>> = Vec::new();
    let mut dropped = 0usize;
    for u in points {
        if u.len() != p {
            return Err(MetricsError::Dimension { expected: p, got: u.len() });
        }
        if u.iter().zip(reference).all(|(a, r)| a <= r) && all_finite(u) {
            kept.push(u.clone());
        } else {
            dropped += 1;
        }
    }
    if kept.is_empty() {
        return Ok((0.0, dropped));
    }
    let hv = match p {
        2 => hv2(&mut kept, reference),
        _ => hv3(&mut kept, reference),
    };
    Ok((hv, dropped))
}

/// Convenience wrapper over [`hypervolume_detailed`] discarding the drop
/// count.
pub fn hypervolume(points: &[Vec<f64>], reference: &[f64]) -> Result<f64, MetricsError> {
    hypervolume_detailed(points, reference).map(|(hv, _)| hv)
}

/// Sort-and-sweep union of rectangles `[u, ref]` in the plane.
fn hv2(points: &mut [Vec<f64>], reference: &[f64]) -> f64 {
    points.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
    let mut hv = 0.0;
    let mut best_f2 = f64::INFINITY;
    // componentwise-nondominated staircase, left to right
    let mut staircase: Vec<(f64, f64)> = Vec::new();
    for pnt in points.iter() {
        if pnt[1] < best_f2 {
            staircase.push((pnt[0], pnt[1]));
            best_f2 = pnt[1];
        }
    }
    for (i, &(x, y)) in staircase.iter().enumerate() {
        let next_x = staircase.get(i + 1).map(|s| s.0).unwrap_or(reference[0]);
        hv += (next_x - x) * (reference[1] - y);
    }
    hv
}

/// Slicing along the third objective: each slab contributes its thickness
/// times the 2-D hypervolume of the points already below it.
fn hv3(points: &mut [Vec<f64>], reference: &[f64]) -> f64 {
    points.sort_by(|a, b| a[2].total_cmp(&b[2]));
    let mut zs: Vec<f64> = points.iter().map(|u| u[2]).collect();
    zs.dedup();
    zs.push(reference[2]);
    let mut hv = 0.0;
    for w in zs.windows(2) {
        let (z0, z1) = (w[0], w[1]);
        if z1 <= z0 {
            continue;
        }
        let mut slab: Vec<Vec<f64>> = points
            .iter()
            .filter(|u| u[2] <= z0)
            .map(|u| vec![u[0], u[1]])
            .collect();
        if !slab.is_empty() {
            hv += (z1 - z0) * hv2(&mut slab, &reference[..2]);
        }
    }
    hv
}

/// Fraction of a solver's front that survives nondominated filtering against
/// the union of all solvers' fronts, under the run's cone. Empty fronts
/// score zero.
pub fn purity(front: &FrontApproximation, all: &[FrontApproximation], cone: &OrderingCone) -> f64 {
    if front.is_empty() {
        return 0.0;
    }
    let union: Vec<Vec<f64>> = all.iter().flat_map(|f| f.points.iter().cloned()).collect();
    let reference = nondominated_filter(&union, cone);
    let close = |a: &[f64], b: &[f64]| a.iter().zip(b).all(|(x, y)| (x - y).abs() <= 1e-8);
    let surviving = front
        .points
        .iter()
        .filter(|u| reference.iter().any(|r| close(u, r)))
        .count();
    surviving as f64 / front.len() as f64
}

/// Spread measures over the sorted per-objective values of a front.
///
/// With interior gaps `δ₁…δ_{N−1}` per objective and the zero extreme-gap
/// convention (no true Pareto extremes are supplied):
/// `Δ = max_j Σ|δᵢ − δ̄| / ((N−1)·δ̄)` and `Γ = max_j maxᵢ δᵢ`.
/// Returns `None` for fronts with fewer than two points.
pub fn spreads(front: &FrontApproximation) -> Option<(f64, f64)> {
    let pts = &front.points;
    if pts.len() < 2 {
        return None;
    }
    let p = pts[0].len();
    let mut delta = 0.0_f64;
    let mut gamma = 0.0_f64;
    for j in 0..p {
        let mut vals: Vec<f64> = pts.iter().map(|u| u[j]).collect();
        vals.sort_by(|a, b| a.total_cmp(b));
        let gaps: Vec<f64> = vals.windows(2).map(|w| w[1] - w[0]).collect();
        let mean = gaps.iter().sum::<f64>() / gaps.len() as f64;
        gamma = gamma.max(gaps.iter().cloned().fold(0.0, f64::max));
        if mean > 0.0 {
            let dev: f64 = gaps.iter().map(|g| (g - mean).abs()).sum();
            delta = delta.max(dev / (gaps.len() as f64 * mean));
        }
    }
    Some((delta, gamma))
}

/// One solver's profile curve: `ρ(τ)` over the τ grid.
#[derive(Debug, Clone)]
pub struct ProfileCurve {
    pub solver_id: String,
    pub tau: Vec<f64>,
    pub rho: Vec<f64>,
}

/// Cost table for the profiles: `costs[s][p]` is solver `s`'s cost on
/// problem `p`, `None` when the solver failed there.
#[derive(Debug, Clone)]
pub struct CostTable {
    pub solver_ids: Vec<String>,
    pub problem_ids: Vec<String>,
    pub costs: Vec<Vec<Option<f64>>>,
}

/// Dolan–Moré performance profiles: per problem the ratio to the best
/// solver's cost (failures → ∞), per solver the fraction of problems within
/// factor τ. Problems where every solver failed are excluded and reported in
/// the returned warning list.
pub fn performance_profile(
    table: &CostTable,
    tau_grid: &[f64],
) -> (Vec<ProfileCurve>, Vec<String>) {
    let ns = table.solver_ids.len();
    let np = table.problem_ids.len();
    let mut warnings = Vec::new();
    let mut usable: Vec<usize> = Vec::new();
    for pidx in 0..np {
        let best = (0..ns).filter_map(|s| table.costs[s][pidx]).fold(f64::INFINITY, f64::min);
        if best.is_finite() && best > 0.0 {
            usable.push(pidx);
        } else {
            warnings.push(format!(
                "problem {} excluded from profiles: no successful solver",
                table.problem_ids[pidx]
            ));
        }
    }
    let mut curves = Vec::with_capacity(ns);
    for s in 0..ns {
        let ratios: Vec<f64> = usable
            .iter()
            .map(|&pidx| {
                let best =
                    (0..ns).filter_map(|t| table.costs[t][pidx]).fold(f64::INFINITY, f64::min);
                match table.costs[s][pidx] {
                    Some(c) => c / best,
                    None => f64::INFINITY,
                }
            })
            .collect();
        let denom = usable.len().max(1) as f64;
        let rho: Vec<f64> = tau_grid
            .iter()
            .map(|&tau| ratios.iter().filter(|r| **r <= tau).count() as f64 / denom)
            .collect();
        curves.push(ProfileCurve {
            solver_id: table.solver_ids[s].clone(),
            tau: tau_grid.to_vec(),
            rho,
        });
    }
    (curves, warnings)
}

/// Geometric τ grid from 1 to the largest finite ratio in the table (with a
/// small margin), used when the caller does not supply one.
pub fn default_tau_grid(table: &CostTable, len: usize) -> Vec<f64> {
    let ns = table.solver_ids.len();
    let np = table.problem_ids.len();
    let mut max_ratio = 1.0_f64;
    for pidx in 0..np {
        let best = (0..ns).filter_map(|s| table.costs[s][pidx]).fold(f64::INFINITY, f64::min);
        if !best.is_finite() || best <= 0.0 {
            continue;
        }
        for s in 0..ns {
            if let Some(c) = table.costs[s][pidx] {
                max_ratio = max_ratio.max(c / best);
            }
        }
    }
    let top = (max_ratio * 1.05).max(2.0);
    let len = len.max(2);
    (0..len)
        .map(|i| {
            let t = i as f64 / (len - 1) as f64;
            top.powf(t)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::SplitMix64;

    fn orthant2() -> OrderingCone {
        OrderingCone::orthant(2)
    }

    #[test]
    fn filter_keeps_weakly_dominated() {
        // (2,2) is not strictly dominated by (1,2): the difference (1,0) is
        // not interior to the orthant
        let pts = vec![vec![1.0, 2.0], vec![2.0, 1.0], vec![2.0, 2.0]];
        let out = nondominated_filter(&pts, &orthant2());
        assert_eq!(out.len(), 3);
        let pts = vec![vec![1.0, 1.0], vec![2.0, 2.0]];
        let out = nondominated_filter(&pts, &orthant2());
        assert_eq!(out, vec![vec![1.0, 1.0]]);
    }

    #[test]
    fn filter_matches_pairwise_oracle() {
        let mut rng = SplitMix64::new(9);
        let cone = orthant2();
        for _ in 0..50 {
            let pts: Vec<Vec<f64>> = (0..30)
                .map(|_| vec![rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)])
                .collect();
            let fast = nondominated_filter(&pts, &cone);
            let slow: Vec<Vec<f64>> = pts
                .iter()
                .filter(|u| {
                    !pts.iter().any(|v| {
                        v != *u && v[0] < u[0] - 1e-12 && v[1] < u[1] - 1e-12
                    })
                })
                .cloned()
                .collect();
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn hv2_inclusion_exclusion() {
        let hv = hypervolume(&[vec![1.0, 2.0], vec![2.0, 1.0]], &[3.0, 3.0]).unwrap();
        assert_eq!(hv, 3.0);
        // single point: product of gaps
        let hv = hypervolume(&[vec![0.5, -1.0]], &[2.0, 2.0]).unwrap();
        assert!((hv - 1.5 * 3.0).abs() < 1e-14);
        // empty effective set
        let hv = hypervolume(&[vec![4.0, 4.0]], &[3.0, 3.0]).unwrap();
        assert_eq!(hv, 0.0);
    }

    #[test]
    fn hv3_monte_carlo_oracle() {
        let mut rng = SplitMix64::new(2);
        for trial in 0..6 {
            let npts = 3 + trial;
            let pts: Vec<Vec<f64>> = (0..npts)
                .map(|_| (0..3).map(|_| rng.uniform(0.0, 1.0)).collect())
                .collect();
            let reference = vec![1.1, 1.1, 1.1];
            let exact = hypervolume(&pts, &reference).unwrap();
            let samples = 200_000;
            let mut hits = 0usize;
            let vol_box = 1.1_f64.powi(3);
            for _ in 0..samples {
                let y: Vec<f64> = (0..3).map(|_| rng.uniform(0.0, 1.1)).collect();
                if pts.iter().any(|u| u.iter().zip(&y).all(|(a, b)| a <= b)) {
                    hits += 1;
                }
            }
            let est = hits as f64 / samples as f64 * vol_box;
            let phat = hits as f64 / samples as f64;
            let sigma = (phat * (1.0 - phat) / samples as f64).sqrt() * vol_box;
            assert!(
                (est - exact).abs() <= 3.0 * sigma + 1e-9,
                "exact {exact} vs MC {est} (σ={sigma})"
            );
        }
    }

    #[test]
    fn hypervolume_monotone_under_additions() {
        let mut rng = SplitMix64::new(4);
        let reference = vec![1.0, 1.0];
        let mut pts: Vec<Vec<f64>> = Vec::new();
        let mut prev = 0.0;
        for _ in 0..30 {
            pts.push(vec![rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)]);
            let hv = hypervolume(&pts, &reference).unwrap();
            assert!(hv >= prev - 1e-12);
            prev = hv;
        }
        // moving the reference outward never decreases it
        let hv_far = hypervolume(&pts, &[2.0, 2.0]).unwrap();
        assert!(hv_far >= prev);
    }

    #[test]
    fn purity_cases() {
        let cone = orthant2();
        let a = FrontApproximation::new("a", "p", vec![vec![1.0, 2.0], vec![2.0, 1.0]]);
        // alone → 1
        assert_eq!(purity(&a, std::slice::from_ref(&a), &cone), 1.0);
        // identical fronts → both 1
        let b = FrontApproximation::new("b", "p", a.points.clone());
        assert_eq!(purity(&a, &[a.clone(), b.clone()], &cone), 1.0);
        assert_eq!(purity(&b, &[a.clone(), b.clone()], &cone), 1.0);
        // strictly dominated front → 0
        let c = FrontApproximation::new("c", "p", vec![vec![2.0, 3.0], vec![3.0, 2.0]]);
        let dom = FrontApproximation::new("d", "p", vec![vec![0.5, 0.5]]);
        assert_eq!(purity(&c, &[c.clone(), dom], &cone), 0.0);
        // empty front → 0
        let e = FrontApproximation::new("e", "p", vec![]);
        assert_eq!(purity(&e, &[a], &cone), 0.0);
    }

    #[test]
    fn spreads_examples() {
        // equally spaced on a line → Δ = 0
        let f = FrontApproximation::new(
            "s",
            "p",
            (0..5).map(|i| vec![i as f64, 5.0 - i as f64]).collect(),
        );
        let (d, g) = spreads(&f).unwrap();
        assert!(d.abs() < 1e-14);
        assert_eq!(g, 1.0);
        // Γ of {0,1,3} on one objective = 2
        let f = FrontApproximation::new(
            "s",
            "p",
            vec![vec![0.0, 0.0], vec![1.0, 0.5], vec![3.0, 1.0]],
        );
        let (_, g) = spreads(&f).unwrap();
        assert_eq!(g, 2.0);
        // 2-objective front {(0,2),(1,1),(3,0)} → Γ = 2
        let f = FrontApproximation::new(
            "s",
            "p",
            vec![vec![0.0, 2.0], vec![1.0, 1.0], vec![3.0, 0.0]],
        );
        let (_, g) = spreads(&f).unwrap();
        assert_eq!(g, 2.0);
        // fewer than two points → undefined
        let f = FrontApproximation::new("s", "p", vec![vec![1.0, 1.0]]);
        assert!(spreads(&f).is_none());
    }

    #[test]
    fn spreads_invariances() {
        let mut rng = SplitMix64::new(6);
        let pts: Vec<Vec<f64>> =
            (0..10).map(|_| vec![rng.uniform(0.0, 4.0), rng.uniform(0.0, 4.0)]).collect();
        let f = FrontApproximation::new("s", "p", pts.clone());
        let (d0, g0) = spreads(&f).unwrap();
        let mut permuted = pts.clone();
        permuted.reverse();
        let fp = FrontApproximation::new("s", "p", permuted);
        let (d1, g1) = spreads(&fp).unwrap();
        assert!((d0 - d1).abs() < 1e-12 && (g0 - g1).abs() < 1e-12);
        // duplicates are merged by the constructor
        let mut dup = pts.clone();
        dup.extend(pts.clone());
        let fd = FrontApproximation::new("s", "p", dup);
        assert_eq!(fd.len(), f.len());
    }

    #[test]
    fn profile_examples() {
        // one solver → ρ(1) = 1 everywhere
        let t = CostTable {
            solver_ids: vec!["cn".into()],
            problem_ids: vec!["a".into(), "b".into()],
            costs: vec![vec![Some(2.0), Some(5.0)]],
        };
        let (curves, warn) = performance_profile(&t, &[1.0, 2.0]);
        assert!(warn.is_empty());
        assert_eq!(curves[0].rho, vec![1.0, 1.0]);

        // two solvers, costs (1,2)
        let t = CostTable {
            solver_ids: vec!["s1".into(), "s2".into()],
            problem_ids: vec!["a".into()],
            costs: vec![vec![Some(1.0)], vec![Some(2.0)]],
        };
        let (curves, _) = performance_profile(&t, &[1.0, 2.0]);
        assert_eq!(curves[0].rho, vec![1.0, 1.0]);
        assert_eq!(curves[1].rho, vec![0.0, 1.0]);

        // all-failed problem excluded with a warning
        let t = CostTable {
            solver_ids: vec!["s1".into(), "s2".into()],
            problem_ids: vec!["a".into(), "bad".into()],
            costs: vec![vec![Some(1.0), None], vec![Some(3.0), None]],
        };
        let (curves, warn) = performance_profile(&t, &[1.0, 3.0, 10.0]);
        assert_eq!(warn.len(), 1);
        assert_eq!(curves[0].rho, vec![1.0, 1.0, 1.0]);
        assert_eq!(curves[1].rho, vec![0.0, 1.0, 1.0]);
        // curves nondecreasing
        for c in &curves {
            for w in c.rho.windows(2) {
                assert!(w[1] >= w[0]);
            }
        }
    }

    #[test]
    fn default_grid_spans_ratios() {
        let t = CostTable {
            solver_ids: vec!["s1".into(), "s2".into()],
            problem_ids: vec!["a".into()],
            costs: vec![vec![Some(1.0)], vec![Some(7.0)]],
        };
        let grid = default_tau_grid(&t, 16);
        assert_eq!(grid[0], 1.0);
        assert!(*grid.last().unwrap() >= 7.0);
        for w in grid.windows(2) {
            assert!(w[1] > w[0]);
        }
    }
}
