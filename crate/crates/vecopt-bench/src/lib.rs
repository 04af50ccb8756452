//! Shared fixtures for the kernel benchmarks.

use vecopt::cone::OrderingCone;
use vecopt::numkernel::{SplitMix64, SymMatrix};
use vecopt::problem::EvalPoint;

/// Deterministic random symmetric matrix.
pub fn random_sym(n: usize, rng: &mut SplitMix64, scale: f64) -> SymMatrix {
    SymMatrix::from_fn(n, |_, _| rng.uniform(-scale, scale))
}

/// Synthetic evaluation point with `p` objectives in `n` variables.
pub fn random_point(n: usize, p: usize, rng: &mut SplitMix64) -> (EvalPoint, OrderingCone) {
    let jac: Vec<Vec<f64>> =
        (0..p).map(|_| (0..n).map(|_| rng.uniform(-2.0, 2.0)).collect()).collect();
    let hess: Vec<SymMatrix> = (0..p).map(|_| random_sym(n, rng, 3.0)).collect();
    let point = EvalPoint::from_raw(vec![0.0; n], vec![0.0; p], jac, hess);
    (point, OrderingCone::orthant(p))
}
