//! Probability-simplex helpers: Euclidean projection and the small convex QP
//! `min_λ ‖Σ λᵢ vᵢ‖²` over the simplex that both the steepest-descent dual
//! and the subproblem weight recovery reduce to.

use crate::numkernel::dot;

/// Euclidean projection onto `{λ : λ ≥ 0, Σλ = 1}` (Duchi et al. 2008).
pub fn project_to_simplex(v: &[f64]) -> Vec<f64> {
    let n = v.len();
    assert!(n >= 1);
    let mut u = v.to_vec();
    u.sort_by(|a, b| b.total_cmp(a));
    let mut cumsum = 0.0;
    let mut rho = 0;
    let mut theta = 0.0;
    for (i, &ui) in u.iter().enumerate() {
        cumsum += ui;
        let t = (cumsum - 1.0) / (i as f64 + 1.0);
        if ui - t > 0.0 {
            rho = i + 1;
            theta = t;
        }
    }
    if rho == 0 {
        // all mass on the largest coordinate
        let mut out = vec![0.0; n];
        let (idx, _) = v
            .iter()
            .enumerate()
            .max_by(|(_, a), (_, b)| a.total_cmp(b))
            .unwrap();
        out[idx] = 1.0;
        return out;
    }
    v.iter().map(|&vi| (vi - theta).max(0.0)).collect()
}

/// Minimizes `‖Σ λᵢ vᵢ‖²` over the probability simplex. Returns
/// `(λ, Σ λᵢ vᵢ)`.
///
/// For small generator counts (the benchmark uses ℓ ∈ {2, 3}) the convex QP
/// is solved exactly by enumerating active supports: on each support the
/// equality-constrained minimizer comes from the KKT system, and the best
/// feasible one wins. Beyond ℓ = 12 a projected-gradient iteration takes
/// over.
pub fn min_norm_combination(vectors: &[Vec<f64>], max_iter: usize, tol: f64) -> (Vec<f64>, Vec<f64>) {
    let ell = vectors.len();
    assert!(ell >= 1);
    let dim = vectors[0].len();
    if ell == 1 {
        return (vec![1.0], vectors[0].clone());
    }
    let gram: Vec<Vec<f64>> = (0..ell)
        .map(|i| (0..ell).map(|j| dot(&vectors[i], &vectors[j])).collect())
        .collect();
    let value = |lam: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..ell {
            s += lam[i] * dot(&gram[i], lam);
        }
        s
    };

    let lam = if ell <= 12 {
        let mut best_lam = vec![1.0 / ell as f64; ell];
        let mut best_val = value(&best_lam);
        for mask in 1u32..(1 << ell) {
            let support: Vec<usize> = (0..ell).filter(|i| mask & (1 << i) != 0).collect();
            let k = support.len();
            if let Some(sol) = support_minimizer(&gram, &support, k) {
                if sol.iter().all(|&l| l >= -1e-12) {
                    let mut lam = vec![0.0; ell];
                    for (idx, &i) in support.iter().enumerate() {
                        lam[i] = sol[idx].max(0.0);
                    }
                    let s: f64 = lam.iter().sum();
                    for l in lam.iter_mut() {
                        *l /= s;
                    }
                    let v = value(&lam);
                    if v < best_val {
                        best_val = v;
                        best_lam = lam;
                    }
                }
            }
        }
        best_lam
    } else {
        projected_gradient_qp(&gram, max_iter, tol)
    };

    let mut combo = vec![0.0; dim];
    for (li, vi) in lam.iter().zip(vectors) {
        for (c, x) in combo.iter_mut().zip(vi) {
            *c += li * x;
        }
    }
    (lam, combo)
}

/// Minimizer of `λᵀGλ` over `{λ_T : Σλ = 1}` on a fixed support, via the KKT
/// system `[2G_T, 1; 1ᵀ, 0]`.
fn support_minimizer(gram: &[Vec<f64>], support: &[usize], k: usize) -> Option<Vec<f64>> {
    let mut a = vec![vec![0.0; k + 1]; k + 1];
    let mut b = vec![0.0; k + 1];
    for (r, &i) in support.iter().enumerate() {
        for (c, &j) in support.iter().enumerate() {
            a[r][c] = 2.0 * gram[i][j];
        }
        a[r][k] = 1.0;
        a[k][r] = 1.0;
    }
    b[k] = 1.0;
    crate::numkernel::solve_dense(a, b).map(|mut s| {
        s.truncate(k);
        s
    })
}

fn projected_gradient_qp(gram: &[Vec<f64>], max_iter: usize, tol: f64) -> Vec<f64> {
    let ell = gram.len();
    let gnorm: f64 = gram.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    if gnorm == 0.0 {
        return vec![1.0 / ell as f64; ell];
    }
    let step = 1.0 / (2.0 * gnorm);
    let mut lam = vec![1.0 / ell as f64; ell];
    for _ in 0..max_iter {
        let g: Vec<f64> = (0..ell).map(|i| 2.0 * dot(&gram[i], &lam)).collect();
        let trial: Vec<f64> = lam.iter().zip(&g).map(|(l, gi)| l - step * gi).collect();
        let next = project_to_simplex(&trial);
        let moved: f64 = next.iter().zip(&lam).map(|(a, b)| (a - b).abs()).sum();
        lam = next;
        if moved <= tol {
            break;
        }
    }
    lam
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::{norm, SplitMix64};

    #[test]
    fn projection_basics() {
        let p = project_to_simplex(&[0.5, 0.5]);
        assert!((p[0] - 0.5).abs() < 1e-15 && (p[1] - 0.5).abs() < 1e-15);
        let p = project_to_simplex(&[5.0, -1.0]);
        assert!((p[0] - 1.0).abs() < 1e-15 && p[1] == 0.0);
        let mut rng = SplitMix64::new(3);
        for _ in 0..200 {
            let v: Vec<f64> = (0..4).map(|_| rng.uniform(-3.0, 3.0)).collect();
            let p = project_to_simplex(&v);
            assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-12);
            assert!(p.iter().all(|&x| x >= 0.0));
        }
    }

    #[test]
    fn min_norm_opposite_vectors() {
        // v₁ = (1,0), v₂ = (−1,0): optimum λ = (½,½) with zero combination.
        let (lam, combo) = min_norm_combination(&[vec![1.0, 0.0], vec![-1.0, 0.0]], 5000, 1e-14);
        assert!(norm(&combo) < 1e-7, "combo norm {}", norm(&combo));
        assert!((lam[0] - 0.5).abs() < 1e-6);
    }

    #[test]
    fn min_norm_vertex_solution() {
        // One short vector dominates: optimum sits at that vertex.
        let (lam, combo) = min_norm_combination(&[vec![3.0, 0.0], vec![0.1, 0.0]], 5000, 1e-14);
        assert!((lam[1] - 1.0).abs() < 1e-8);
        assert!((norm(&combo) - 0.1).abs() < 1e-8);
    }

    #[test]
    fn min_norm_matches_grid_oracle() {
        let mut rng = SplitMix64::new(11);
        for _ in 0..50 {
            let v1: Vec<f64> = (0..2).map(|_| rng.uniform(-2.0, 2.0)).collect();
            let v2: Vec<f64> = (0..2).map(|_| rng.uniform(-2.0, 2.0)).collect();
            let (_, combo) = min_norm_combination(&[v1.clone(), v2.clone()], 5000, 1e-14);
            let got = norm(&combo);
            let mut best = f64::INFINITY;
            for k in 0..=4000 {
                let t = k as f64 / 4000.0;
                let c = [t * v1[0] + (1.0 - t) * v2[0], t * v1[1] + (1.0 - t) * v2[1]];
                best = best.min(norm(&c));
            }
            assert!(got <= best + 1e-6, "got {got}, grid {best}");
        }
    }
}
