//! Solver library for unconstrained vector optimization under a finitely
//! generated ordering cone.
//!
//! The centerpiece is a cubic-regularized Newton method: at each iterate the
//! step is the global minimizer of a max-scalarized second-order model plus a
//! cubic penalty `(M/6)‖d‖³`, with `M` adapted by doubling until a decrease
//! test on the true objectives holds. A `K`-steepest-descent baseline, the
//! benchmark problem suite, and front-quality metrics (hypervolume, purity,
//! spreads, performance profiles) round out the kit.
//!
//! Modules:
//! * [`numkernel`] — dense symmetric eigensolver, shifted solves, root finding
//! * [`cone`] — ordering cone, order relations, scalarization helpers
//! * [`problem`] — problem abstraction, benchmark registry, derivative checks
//! * [`subproblem`] — the cubic model minimizer (secular equation + dual ascent)
//! * [`solver`] — the Newton loop, steepest descent, convergence diagnostics
//! * [`metrics`] — front metrics and Dolan–Moré performance profiles

pub mod cone;
pub mod metrics;
pub mod numkernel;
pub mod problem;
pub mod simplex;
pub mod solver;
pub mod subproblem;

pub use cone::{OrderingCone, SimplexWeights};
pub use numkernel::{EigDecomposition, SymMatrix};
pub use problem::{EvalPoint, VectorProblem};
pub use solver::{SolverConfig, SolverStatus, SolverTrace};
pub use subproblem::{ScalarCubicModel, SubproblemSolution};
