//! The benchmark problem registry.
//!
//! The suite fixes (name, n, p, domain) for sixteen standard test problems
//! plus `REM1`, a one-dimensional pair with known exact behavior that doubles
//! as a golden instance. Formulas follow the usual statements in the
//! multiobjective test-problem literature (the Huband et al. review, the
//! direct-multisearch collection, and the Van Veldhuizen MOP set); where the
//! literature carries variants, the exact formulation used here is written
//! out in each constructor's doc comment and is the one the derivative
//! checks validate.

use super::VectorProblem;
use crate::numkernel::SymMatrix;
use std::f64::consts::PI;

/// All benchmark problems, in a fixed order.
pub fn registry() -> Vec<VectorProblem> {
    vec![
        mlf1(),
        far1(),
        pnr(),
        hil1(),
        kw2(),
        slcdt1(),
        mop3(),
        vu1(),
        fon(),
        toi4(),
        jos1(),
        ikk1(),
        vfm1(),
        mop5(),
        mop7(),
        slcdt2(),
        rem1(),
    ]
}

/// Case-insensitive lookup by name.
pub fn lookup(name: &str) -> Option<VectorProblem> {
    registry().into_iter().find(|p| p.name().eq_ignore_ascii_case(name))
}

// ---------------------------------------------------------------------------
// small building blocks
// ---------------------------------------------------------------------------

/// `amp · exp(k·((x₁−c₁)² + (x₂−c₂)²))` with value, gradient, Hessian.
#[derive(Clone, Copy)]
struct Gauss2 {
    amp: f64,
    k: f64,
    c1: f64,
    c2: f64,
}

impl Gauss2 {
    fn val(&self, x: &[f64]) -> f64 {
        let s1 = x[0] - self.c1;
        let s2 = x[1] - self.c2;
        self.amp * (self.k * (s1 * s1 + s2 * s2)).exp()
    }
    fn grad(&self, x: &[f64]) -> [f64; 2] {
        let e = self.val(x);
        let s1 = x[0] - self.c1;
        let s2 = x[1] - self.c2;
        [2.0 * self.k * s1 * e, 2.0 * self.k * s2 * e]
    }
    fn hess(&self, x: &[f64]) -> [[f64; 2]; 2] {
        let e = self.val(x);
        let s1 = x[0] - self.c1;
        let s2 = x[1] - self.c2;
        let k = self.k;
        [
            [e * (2.0 * k + 4.0 * k * k * s1 * s1), e * 4.0 * k * k * s1 * s2],
            [e * 4.0 * k * k * s1 * s2, e * (2.0 * k + 4.0 * k * k * s2 * s2)],
        ]
    }
}

fn sum_gauss_f(terms: &[Gauss2], x: &[f64]) -> f64 {
    terms.iter().map(|t| t.val(x)).sum()
}

fn sum_gauss_grad(terms: &[Gauss2], x: &[f64]) -> Vec<f64> {
    let mut g = vec![0.0; 2];
    for t in terms {
        let tg = t.grad(x);
        g[0] += tg[0];
        g[1] += tg[1];
    }
    g
}

fn sum_gauss_hess(terms: &[Gauss2], x: &[f64]) -> SymMatrix {
    let mut h = [[0.0; 2]; 2];
    for t in terms {
        let th = t.hess(x);
        for i in 0..2 {
            for j in 0..2 {
                h[i][j] += th[i][j];
            }
        }
    }
    SymMatrix::from_fn(2, |i, j| h[i][j])
}

/// `w·(aᵀx + b)²` quadratic term.
#[derive(Clone)]
struct Quad {
    a: Vec<f64>,
    b: f64,
    w: f64,
}

impl Quad {
    fn val(&self, x: &[f64]) -> f64 {
        let s: f64 = self.a.iter().zip(x).map(|(ai, xi)| ai * xi).sum::<f64>() + self.b;
        self.w * s * s
    }
    fn grad_into(&self, x: &[f64], g: &mut [f64]) {
        let s: f64 = self.a.iter().zip(x).map(|(ai, xi)| ai * xi).sum::<f64>() + self.b;
        for (gi, ai) in g.iter_mut().zip(&self.a) {
            *gi += 2.0 * self.w * s * ai;
        }
    }
    fn hess_into(&self, h: &mut SymMatrix) {
        let n = self.a.len();
        for i in 0..n {
            for j in i..n {
                h.set(i, j, h.get(i, j) + 2.0 * self.w * self.a[i] * self.a[j]);
            }
        }
    }
}

#[allow(clippy::type_complexity)]
fn quad_objective(
    terms: Vec<Quad>,
    constant: f64,
    n: usize,
) -> (impl Fn(&[f64]) -> f64 + Clone, impl Fn(&[f64]) -> Vec<f64> + Clone, SymMatrix) {
    let mut h = SymMatrix::zeros(n);
    for t in &terms {
        t.hess_into(&mut h);
    }
    let terms2 = terms.clone();
    let f = move |x: &[f64]| terms.iter().map(|t| t.val(x)).sum::<f64>() + constant;
    let g = move |x: &[f64]| {
        let mut grad = vec![0.0; n];
        for t in &terms2 {
            t.grad_into(x, &mut grad);
        }
        grad
    };
    (f, g, h)
}

// ---------------------------------------------------------------------------
// bi-objective problems
// ---------------------------------------------------------------------------

/// MLF1 — n=1, p=2, S=[0,20].
///
/// f₁ = (1 + x/20)·sin x, f₂ = (1 + x/20)·cos x.
/// Third derivatives are bounded by 3/20 + (1 + x/20) ≤ 2.15 on S, so 2.2 is
/// a valid Hessian Lipschitz constant.
fn mlf1() -> VectorProblem {
    VectorProblem::new(
        "MLF1",
        1,
        2,
        vec![0.0],
        vec![20.0],
        Some(2.2),
        |x| {
            let t = 1.0 + x[0] / 20.0;
            vec![t * x[0].sin(), t * x[0].cos()]
        },
        |x| {
            let t = 1.0 + x[0] / 20.0;
            let (s, c) = x[0].sin_cos();
            vec![vec![s / 20.0 + t * c], vec![c / 20.0 - t * s]]
        },
        |x| {
            let t = 1.0 + x[0] / 20.0;
            let (s, c) = x[0].sin_cos();
            vec![
                SymMatrix::from_diag(&[c / 10.0 - t * s]),
                SymMatrix::from_diag(&[-s / 10.0 - t * c]),
            ]
        },
    )
    .unwrap()
}

/// Far1 — n=2, p=2, S=[−1,1]² (Farina; as in the direct-multisearch set).
///
/// f₁ = −2e^{15(−(x₁−0.1)²−x₂²)} − e^{20(−(x₁−0.6)²−(x₂−0.6)²)}
///      + e^{20(−(x₁+0.6)²−(x₂−0.6)²)} + e^{20(−(x₁−0.6)²−(x₂+0.6)²)}
///      + e^{20(−(x₁+0.6)²−(x₂+0.6)²)}
/// f₂ = 2e^{20(−x₁²−x₂²)} + e^{20(−(x₁−0.4)²−(x₂−0.6)²)}
///      − e^{20(−(x₁+0.5)²−(x₂−0.7)²)} − e^{20(−(x₁−0.5)²−(x₂+0.7)²)}
///      + e^{20(−(x₁+0.4)²−(x₂+0.8)²)}
fn far1() -> VectorProblem {
    const F1: [Gauss2; 5] = [
        Gauss2 { amp: -2.0, k: -15.0, c1: 0.1, c2: 0.0 },
        Gauss2 { amp: -1.0, k: -20.0, c1: 0.6, c2: 0.6 },
        Gauss2 { amp: 1.0, k: -20.0, c1: -0.6, c2: 0.6 },
        Gauss2 { amp: 1.0, k: -20.0, c1: 0.6, c2: -0.6 },
        Gauss2 { amp: 1.0, k: -20.0, c1: -0.6, c2: -0.6 },
    ];
    const F2: [Gauss2; 5] = [
        Gauss2 { amp: 2.0, k: -20.0, c1: 0.0, c2: 0.0 },
        Gauss2 { amp: 1.0, k: -20.0, c1: 0.4, c2: 0.6 },
        Gauss2 { amp: -1.0, k: -20.0, c1: -0.5, c2: 0.7 },
        Gauss2 { amp: -1.0, k: -20.0, c1: 0.5, c2: -0.7 },
        Gauss2 { amp: 1.0, k: -20.0, c1: -0.4, c2: 0.8 },
    ];
    VectorProblem::new(
        "Far1",
        2,
        2,
        vec![-1.0, -1.0],
        vec![1.0, 1.0],
        None,
        |x| vec![sum_gauss_f(&F1, x), sum_gauss_f(&F2, x)],
        |x| vec![sum_gauss_grad(&F1, x), sum_gauss_grad(&F2, x)],
        |x| vec![sum_gauss_hess(&F1, x), sum_gauss_hess(&F2, x)],
    )
    .unwrap()
}

/// PNR — n=2, p=2, S=[−2,2]² (Preuss, Naujoks & Rudolph).
///
/// f₁ = x₁⁴ + x₂⁴ − x₁² + x₂² − 10x₁x₂ + 0.25x₁ + 20, f₂ = (x₁−1)² + x₂².
/// The quartic diagonal gives ‖∇²f₁(x) − ∇²f₁(y)‖ ≤ 48‖x−y‖ on S.
fn pnr() -> VectorProblem {
    VectorProblem::new(
        "PNR",
        2,
        2,
        vec![-2.0, -2.0],
        vec![2.0, 2.0],
        Some(48.0),
        |x| {
            let (a, b) = (x[0], x[1]);
            vec![
                a.powi(4) + b.powi(4) - a * a + b * b - 10.0 * a * b + 0.25 * a + 20.0,
                (a - 1.0) * (a - 1.0) + b * b,
            ]
        },
        |x| {
            let (a, b) = (x[0], x[1]);
            vec![
                vec![4.0 * a.powi(3) - 2.0 * a - 10.0 * b + 0.25, 4.0 * b.powi(3) + 2.0 * b - 10.0 * a],
                vec![2.0 * (a - 1.0), 2.0 * b],
            ]
        },
        |x| {
            let (a, b) = (x[0], x[1]);
            vec![
                SymMatrix::from_rows(&[
                    vec![12.0 * a * a - 2.0, -10.0],
                    vec![-10.0, 12.0 * b * b + 2.0],
                ]),
                SymMatrix::from_diag(&[2.0, 2.0]),
            ]
        },
    )
    .unwrap()
}

/// Hil1 — n=2, p=2, S=[0,1]² (Hillermeier).
///
/// With a = (2π/360)(45 + 40 sin(2πx₁) + 25 sin(2πx₂)) and
/// b = 1 + 0.5 cos(2πx₁): f₁ = b·cos a, f₂ = b·sin a.
fn hil1() -> VectorProblem {
    const CA: f64 = 2.0 * PI / 360.0;
    fn parts(x: &[f64]) -> (f64, f64, [f64; 2], [f64; 2], [f64; 2], f64) {
        let (s1, c1) = (2.0 * PI * x[0]).sin_cos();
        let (s2, c2) = (2.0 * PI * x[1]).sin_cos();
        let a = CA * (45.0 + 40.0 * s1 + 25.0 * s2);
        let b = 1.0 + 0.5 * c1;
        let da = [CA * 40.0 * 2.0 * PI * c1, CA * 25.0 * 2.0 * PI * c2];
        let dda = [
            -CA * 40.0 * (2.0 * PI) * (2.0 * PI) * s1,
            -CA * 25.0 * (2.0 * PI) * (2.0 * PI) * s2,
        ];
        let db = [-0.5 * 2.0 * PI * s1, 0.0];
        let ddb1 = -0.5 * (2.0 * PI) * (2.0 * PI) * c1;
        (a, b, da, dda, db, ddb1)
    }
    VectorProblem::new(
        "Hil1",
        2,
        2,
        vec![0.0, 0.0],
        vec![1.0, 1.0],
        None,
        |x| {
            let (a, b, ..) = parts(x);
            vec![b * a.cos(), b * a.sin()]
        },
        |x| {
            let (a, b, da, _, db, _) = parts(x);
            let (sa, ca) = a.sin_cos();
            vec![
                (0..2).map(|i| -sa * da[i] * b + ca * db[i]).collect(),
                (0..2).map(|i| ca * da[i] * b + sa * db[i]).collect(),
            ]
        },
        |x| {
            let (a, b, da, dda, db, ddb1) = parts(x);
            let (sa, ca) = a.sin_cos();
            let ddb = |i: usize, j: usize| if i == 0 && j == 0 { ddb1 } else { 0.0 };
            let dda2 = |i: usize, j: usize| if i == j { dda[i] } else { 0.0 };
            let h1 = SymMatrix::from_fn(2, |i, j| {
                -ca * da[i] * da[j] * b - sa * dda2(i, j) * b - sa * da[i] * db[j] - sa * da[j] * db[i]
                    + ca * ddb(i, j)
            });
            let h2 = SymMatrix::from_fn(2, |i, j| {
                -sa * da[i] * da[j] * b + ca * dda2(i, j) * b + ca * da[i] * db[j] + ca * da[j] * db[i]
                    + sa * ddb(i, j)
            });
            vec![h1, h2]
        },
    )
    .unwrap()
}

/// KW2 — n=2, p=2, S=[−3,3]² (Kim & de Weck, peaks-based pair, minimized).
///
/// f₁ = 3(1−x₁)²e^{−x₁²−(x₂+1)²} − 10(x₁/5 − x₁³ − x₂⁵)e^{−x₁²−x₂²}
///      − 3e^{−(x₁+2)²−x₂²} + 0.5(2x₁ + x₂)
/// f₂ = 3(1+x₂)²e^{−x₂²−(1−x₁)²} − 10(−x₂/5 + x₂³ + x₁⁵)e^{−x₁²−x₂²}
///      − 3e^{−(2−x₂)²−x₁²}
fn kw2() -> VectorProblem {
    // P(x)·exp(−(x₁−u)² − (x₂−v)²): value/gradient/Hessian by product rule.
    struct PolyExp {
        u: f64,
        v: f64,
        p: fn(&[f64]) -> f64,
        pg: fn(&[f64]) -> [f64; 2],
        ph: fn(&[f64]) -> [[f64; 2]; 2],
    }
    impl PolyExp {
        fn emit(&self, x: &[f64]) -> (f64, [f64; 2], [[f64; 2]; 2]) {
            let s = [x[0] - self.u, x[1] - self.v];
            let e = (-(s[0] * s[0] + s[1] * s[1])).exp();
            let phi_g = [-2.0 * s[0], -2.0 * s[1]];
            let pv = (self.p)(x);
            let pg = (self.pg)(x);
            let ph = (self.ph)(x);
            let val = pv * e;
            let mut grad = [0.0; 2];
            let mut hess = [[0.0; 2]; 2];
            for i in 0..2 {
                grad[i] = e * (pg[i] + pv * phi_g[i]);
            }
            for i in 0..2 {
                for j in 0..2 {
                    let phi_h = if i == j { -2.0 } else { 0.0 };
                    hess[i][j] = e
                        * (ph[i][j]
                            + pg[i] * phi_g[j]
                            + pg[j] * phi_g[i]
                            + pv * (phi_h + phi_g[i] * phi_g[j]));
                }
            }
            (val, grad, hess)
        }
    }
    fn f1_terms() -> [PolyExp; 3] {
        [
            PolyExp {
                u: 0.0,
                v: -1.0,
                p: |x| 3.0 * (1.0 - x[0]) * (1.0 - x[0]),
                pg: |x| [-6.0 * (1.0 - x[0]), 0.0],
                ph: |_| [[6.0, 0.0], [0.0, 0.0]],
            },
            PolyExp {
                u: 0.0,
                v: 0.0,
                p: |x| -2.0 * x[0] + 10.0 * x[0].powi(3) + 10.0 * x[1].powi(5),
                pg: |x| [-2.0 + 30.0 * x[0] * x[0], 50.0 * x[1].powi(4)],
                ph: |x| [[60.0 * x[0], 0.0], [0.0, 200.0 * x[1].powi(3)]],
            },
            PolyExp {
                u: -2.0,
                v: 0.0,
                p: |_| -3.0,
                pg: |_| [0.0, 0.0],
                ph: |_| [[0.0, 0.0], [0.0, 0.0]],
            },
        ]
    }
    fn f2_terms() -> [PolyExp; 3] {
        [
            PolyExp {
                u: 1.0,
                v: 0.0,
                p: |x| 3.0 * (1.0 + x[1]) * (1.0 + x[1]),
                pg: |x| [0.0, 6.0 * (1.0 + x[1])],
                ph: |_| [[0.0, 0.0], [0.0, 6.0]],
            },
            PolyExp {
                u: 0.0,
                v: 0.0,
                p: |x| 2.0 * x[1] - 10.0 * x[1].powi(3) - 10.0 * x[0].powi(5),
                pg: |x| [-50.0 * x[0].powi(4), 2.0 - 30.0 * x[1] * x[1]],
                ph: |x| [[-200.0 * x[0].powi(3), 0.0], [0.0, -60.0 * x[1]]],
            },
            PolyExp {
                u: 0.0,
                v: 2.0,
                p: |_| -3.0,
                pg: |_| [0.0, 0.0],
                ph: |_| [[0.0, 0.0], [0.0, 0.0]],
            },
        ]
    }
    fn assemble(terms: &[PolyExp], x: &[f64]) -> (f64, Vec<f64>, SymMatrix) {
        let mut v = 0.0;
        let mut g = vec![0.0; 2];
        let mut h = [[0.0; 2]; 2];
        for t in terms {
            let (tv, tg, th) = t.emit(x);
            v += tv;
            for i in 0..2 {
                g[i] += tg[i];
                for j in 0..2 {
                    h[i][j] += th[i][j];
                }
            }
        }
        (v, g, SymMatrix::from_fn(2, |i, j| h[i][j]))
    }
    VectorProblem::new(
        "KW2",
        2,
        2,
        vec![-3.0, -3.0],
        vec![3.0, 3.0],
        None,
        |x| {
            let (v1, ..) = assemble(&f1_terms(), x);
            let (v2, ..) = assemble(&f2_terms(), x);
            vec![v1 + x[0] + 0.5 * x[1], v2]
        },
        |x| {
            let (_, mut g1, _) = assemble(&f1_terms(), x);
            g1[0] += 1.0;
            g1[1] += 0.5;
            let (_, g2, _) = assemble(&f2_terms(), x);
            vec![g1, g2]
        },
        |x| {
            let (_, _, h1) = assemble(&f1_terms(), x);
            let (_, _, h2) = assemble(&f2_terms(), x);
            vec![h1, h2]
        },
    )
    .unwrap()
}

/// SLCDT1 — n=2, p=2, S=[−1.5,1.5]² (Schütze, Lara, Coello, Dellnitz, Talbi).
///
/// With u = x₁+x₂, v = x₁−x₂, λ = 0.85:
/// f₁ = ½(√(1+u²) + √(1+v²) + v) + λe^{−v²},
/// f₂ = ½(√(1+u²) + √(1+v²) − v) + λe^{−v²}.
fn slcdt1() -> VectorProblem {
    const LAM: f64 = 0.85;
    fn parts(x: &[f64]) -> (f64, f64, f64, f64, f64, f64, f64, f64) {
        let u = x[0] + x[1];
        let v = x[0] - x[1];
        let a = (1.0 + u * u).sqrt();
        let b = (1.0 + v * v).sqrt();
        let da = u / a;
        let db = v / b;
        let dda = 1.0 / (a * a * a);
        let ddb = 1.0 / (b * b * b);
        (u, v, a, b, da, db, dda, ddb)
    }
    VectorProblem::new(
        "SLCDT1",
        2,
        2,
        vec![-1.5, -1.5],
        vec![1.5, 1.5],
        None,
        |x| {
            let (_, v, a, b, ..) = parts(x);
            let g = LAM * (-v * v).exp();
            vec![0.5 * (a + b + v) + g, 0.5 * (a + b - v) + g]
        },
        |x| {
            let (_, v, _, _, da, db, _, _) = parts(x);
            let dg = LAM * (-2.0 * v) * (-v * v).exp();
            // ∇u = (1,1), ∇v = (1,−1)
            let g1 = vec![
                0.5 * (da + db + 1.0) + dg,
                0.5 * (da - db - 1.0) - dg,
            ];
            let g2 = vec![
                0.5 * (da + db - 1.0) + dg,
                0.5 * (da - db + 1.0) - dg,
            ];
            vec![g1, g2]
        },
        |x| {
            let (_, v, _, _, _, _, dda, ddb) = parts(x);
            let ddg = LAM * (4.0 * v * v - 2.0) * (-v * v).exp();
            // H = ½(A''·(1,1)(1,1)ᵀ + B''·(1,−1)(1,−1)ᵀ) + G''·(1,−1)(1,−1)ᵀ
            let huu = [[1.0, 1.0], [1.0, 1.0]];
            let hvv = [[1.0, -1.0], [-1.0, 1.0]];
            let h = SymMatrix::from_fn(2, |i, j| {
                0.5 * (dda * huu[i][j] + ddb * hvv[i][j]) + ddg * hvv[i][j]
            });
            vec![h.clone(), h]
        },
    )
    .unwrap()
}

/// MOP3 — n=2, p=2, S=[−π,π]² (Poloni, Van Veldhuizen's MOP3, minimized).
///
/// A₁ = 0.5 sin 1 − 2 cos 1 + sin 2 − 1.5 cos 2,
/// A₂ = 1.5 sin 1 − cos 1 + 2 sin 2 − 0.5 cos 2,
/// B₁ = 0.5 sin x₁ − 2 cos x₁ + sin x₂ − 1.5 cos x₂,
/// B₂ = 1.5 sin x₁ − cos x₁ + 2 sin x₂ − 0.5 cos x₂,
/// f₁ = 1 + (A₁−B₁)² + (A₂−B₂)², f₂ = (x₁+3)² + (x₂+1)².
fn mop3() -> VectorProblem {
    let a1 = 0.5 * 1.0_f64.sin() - 2.0 * 1.0_f64.cos() + 2.0_f64.sin() - 1.5 * 2.0_f64.cos();
    let a2 = 1.5 * 1.0_f64.sin() - 1.0_f64.cos() + 2.0 * 2.0_f64.sin() - 0.5 * 2.0_f64.cos();
    fn b_parts(x: &[f64]) -> ([f64; 2], [[f64; 2]; 2], [[f64; 2]; 2]) {
        let (s1, c1) = x[0].sin_cos();
        let (s2, c2) = x[1].sin_cos();
        let b = [
            0.5 * s1 - 2.0 * c1 + s2 - 1.5 * c2,
            1.5 * s1 - c1 + 2.0 * s2 - 0.5 * c2,
        ];
        let db = [
            [0.5 * c1 + 2.0 * s1, c2 + 1.5 * s2],
            [1.5 * c1 + s1, 2.0 * c2 + 0.5 * s2],
        ];
        // diagonal second derivatives (∂₁₂B = 0)
        let ddb = [
            [-0.5 * s1 + 2.0 * c1, -s2 + 1.5 * c2],
            [-1.5 * s1 + c1, -2.0 * s2 + 0.5 * c2],
        ];
        (b, db, ddb)
    }
    VectorProblem::new(
        "MOP3",
        2,
        2,
        vec![-PI, -PI],
        vec![PI, PI],
        None,
        move |x| {
            let (b, ..) = b_parts(x);
            vec![
                1.0 + (a1 - b[0]) * (a1 - b[0]) + (a2 - b[1]) * (a2 - b[1]),
                (x[0] + 3.0) * (x[0] + 3.0) + (x[1] + 1.0) * (x[1] + 1.0),
            ]
        },
        move |x| {
            let (b, db, _) = b_parts(x);
            let g1: Vec<f64> = (0..2)
                .map(|i| -2.0 * (a1 - b[0]) * db[0][i] - 2.0 * (a2 - b[1]) * db[1][i])
                .collect();
            vec![g1, vec![2.0 * (x[0] + 3.0), 2.0 * (x[1] + 1.0)]]
        },
        move |x| {
            let (b, db, ddb) = b_parts(x);
            let h1 = SymMatrix::from_fn(2, |i, j| {
                let mut v = 2.0 * db[0][i] * db[0][j] + 2.0 * db[1][i] * db[1][j];
                if i == j {
                    v += -2.0 * (a1 - b[0]) * ddb[0][i] - 2.0 * (a2 - b[1]) * ddb[1][i];
                }
                v
            });
            vec![h1, SymMatrix::from_diag(&[2.0, 2.0])]
        },
    )
    .unwrap()
}

/// VU1 — n=2, p=2, S=[−3,3]² (Vlennet et al.).
///
/// f₁ = 1/(x₁² + x₂² + 1), f₂ = x₁² + 3x₂² + 1.
fn vu1() -> VectorProblem {
    VectorProblem::new(
        "VU1",
        2,
        2,
        vec![-3.0, -3.0],
        vec![3.0, 3.0],
        None,
        |x| {
            let w = x[0] * x[0] + x[1] * x[1] + 1.0;
            vec![1.0 / w, x[0] * x[0] + 3.0 * x[1] * x[1] + 1.0]
        },
        |x| {
            let w = x[0] * x[0] + x[1] * x[1] + 1.0;
            vec![
                vec![-2.0 * x[0] / (w * w), -2.0 * x[1] / (w * w)],
                vec![2.0 * x[0], 6.0 * x[1]],
            ]
        },
        |x| {
            let w = x[0] * x[0] + x[1] * x[1] + 1.0;
            let h1 = SymMatrix::from_fn(2, |i, j| {
                let d = if i == j { -2.0 / (w * w) } else { 0.0 };
                d + 8.0 * x[i] * x[j] / (w * w * w)
            });
            vec![h1, SymMatrix::from_diag(&[2.0, 6.0])]
        },
    )
    .unwrap()
}

/// FON — n=3, p=2, S=[−4,4]³ (Fonseca & Fleming).
///
/// f₁ = 1 − exp(−Σ(xᵢ − 1/√3)²), f₂ = 1 − exp(−Σ(xᵢ + 1/√3)²).
fn fon() -> VectorProblem {
    let c = 1.0 / 3.0_f64.sqrt();
    let term = move |x: &[f64], sign: f64| -> (f64, Vec<f64>, SymMatrix) {
        let n = x.len();
        let s: Vec<f64> = x.iter().map(|xi| xi - sign * c).collect();
        let u: f64 = s.iter().map(|si| si * si).sum();
        let e = (-u).exp();
        let val = 1.0 - e;
        let grad: Vec<f64> = s.iter().map(|si| 2.0 * si * e).collect();
        let hess = SymMatrix::from_fn(n, |i, j| {
            let d = if i == j { 2.0 * e } else { 0.0 };
            d - 4.0 * s[i] * s[j] * e
        });
        (val, grad, hess)
    };
    VectorProblem::new(
        "FON",
        3,
        2,
        vec![-4.0; 3],
        vec![4.0; 3],
        None,
        move |x| vec![term(x, 1.0).0, term(x, -1.0).0],
        move |x| vec![term(x, 1.0).1, term(x, -1.0).1],
        move |x| vec![term(x, 1.0).2, term(x, -1.0).2],
    )
    .unwrap()
}

/// Toi4 — n=4, p=2, S=[−2,5]⁴ (Toint's convex pair, as in the MOSQP set).
///
/// f₁ = x₁² + x₂² + 1, f₂ = ½((x₁−x₂)² + (x₃−x₄)²) + 1. Quadratic, so the
/// Hessians are constant and the Lipschitz constant is 0.
fn toi4() -> VectorProblem {
    VectorProblem::new(
        "Toi4",
        4,
        2,
        vec![-2.0; 4],
        vec![5.0; 4],
        Some(0.0),
        |x| {
            vec![
                x[0] * x[0] + x[1] * x[1] + 1.0,
                0.5 * ((x[0] - x[1]) * (x[0] - x[1]) + (x[2] - x[3]) * (x[2] - x[3])) + 1.0,
            ]
        },
        |x| {
            vec![
                vec![2.0 * x[0], 2.0 * x[1], 0.0, 0.0],
                vec![x[0] - x[1], x[1] - x[0], x[2] - x[3], x[3] - x[2]],
            ]
        },
        |_| {
            vec![
                SymMatrix::from_diag(&[2.0, 2.0, 0.0, 0.0]),
                SymMatrix::from_rows(&[
                    vec![1.0, -1.0, 0.0, 0.0],
                    vec![-1.0, 1.0, 0.0, 0.0],
                    vec![0.0, 0.0, 1.0, -1.0],
                    vec![0.0, 0.0, -1.0, 1.0],
                ]),
            ]
        },
    )
    .unwrap()
}

/// JOS1 — n=4, p=2, S=[−2,2]⁴ (Jin, Olhofer & Sendhoff).
///
/// f₁ = (1/n)Σxᵢ², f₂ = (1/n)Σ(xᵢ−2)².
fn jos1() -> VectorProblem {
    const N: usize = 4;
    VectorProblem::new(
        "JOS1",
        N,
        2,
        vec![-2.0; N],
        vec![2.0; N],
        Some(0.0),
        |x| {
            let inv = 1.0 / N as f64;
            vec![
                inv * x.iter().map(|v| v * v).sum::<f64>(),
                inv * x.iter().map(|v| (v - 2.0) * (v - 2.0)).sum::<f64>(),
            ]
        },
        |x| {
            let inv = 2.0 / N as f64;
            vec![
                x.iter().map(|v| inv * v).collect(),
                x.iter().map(|v| inv * (v - 2.0)).collect(),
            ]
        },
        |_| {
            let h = SymMatrix::from_diag(&[2.0 / N as f64; N]);
            vec![h.clone(), h]
        },
    )
    .unwrap()
}

// ---------------------------------------------------------------------------
// tri-objective problems
// ---------------------------------------------------------------------------

/// IKK1 — n=2, p=3, S=[−50,50]² (Ishibuchi, Kaige & Kuwajima).
///
/// f₁ = x₁², f₂ = (x₁−20)², f₃ = x₂².
fn ikk1() -> VectorProblem {
    VectorProblem::new(
        "IKK1",
        2,
        3,
        vec![-50.0, -50.0],
        vec![50.0, 50.0],
        Some(0.0),
        |x| vec![x[0] * x[0], (x[0] - 20.0) * (x[0] - 20.0), x[1] * x[1]],
        |x| {
            vec![
                vec![2.0 * x[0], 0.0],
                vec![2.0 * (x[0] - 20.0), 0.0],
                vec![0.0, 2.0 * x[1]],
            ]
        },
        |_| {
            vec![
                SymMatrix::from_diag(&[2.0, 0.0]),
                SymMatrix::from_diag(&[2.0, 0.0]),
                SymMatrix::from_diag(&[0.0, 2.0]),
            ]
        },
    )
    .unwrap()
}

/// VFM1 — n=2, p=3, S=[−2,2]² (Viennet, Fonteix & Marc).
///
/// f₁ = x₁² + (x₂−1)², f₂ = x₁² + (x₂+1)² + 1, f₃ = (x₁−1)² + x₂² + 2.
fn vfm1() -> VectorProblem {
    VectorProblem::new(
        "VFM1",
        2,
        3,
        vec![-2.0, -2.0],
        vec![2.0, 2.0],
        Some(0.0),
        |x| {
            vec![
                x[0] * x[0] + (x[1] - 1.0) * (x[1] - 1.0),
                x[0] * x[0] + (x[1] + 1.0) * (x[1] + 1.0) + 1.0,
                (x[0] - 1.0) * (x[0] - 1.0) + x[1] * x[1] + 2.0,
            ]
        },
        |x| {
            vec![
                vec![2.0 * x[0], 2.0 * (x[1] - 1.0)],
                vec![2.0 * x[0], 2.0 * (x[1] + 1.0)],
                vec![2.0 * (x[0] - 1.0), 2.0 * x[1]],
            ]
        },
        |_| vec![SymMatrix::from_diag(&[2.0, 2.0]); 3],
    )
    .unwrap()
}

/// MOP5 — n=2, p=3, S=[−30,30]² (Viennet's third problem, Van Veldhuizen MOP5).
///
/// With s = x₁² + x₂²:
/// f₁ = ½s + sin s, f₂ = (3x₁−2x₂+4)²/8 + (x₁−x₂+1)²/27 + 15,
/// f₃ = 1/(s+1) − 1.1e^{−s}.
fn mop5() -> VectorProblem {
    let (f2v, f2g, f2h) = quad_objective(
        vec![
            Quad { a: vec![3.0, -2.0], b: 4.0, w: 1.0 / 8.0 },
            Quad { a: vec![1.0, -1.0], b: 1.0, w: 1.0 / 27.0 },
        ],
        15.0,
        2,
    );
    let f2h2 = f2h.clone();
    VectorProblem::new(
        "MOP5",
        2,
        3,
        vec![-30.0, -30.0],
        vec![30.0, 30.0],
        None,
        move |x| {
            let s = x[0] * x[0] + x[1] * x[1];
            vec![
                0.5 * s + s.sin(),
                f2v(x),
                1.0 / (s + 1.0) - 1.1 * (-s).exp(),
            ]
        },
        move |x| {
            let s = x[0] * x[0] + x[1] * x[1];
            let w1 = 0.5 + s.cos();
            let w3 = -1.0 / ((s + 1.0) * (s + 1.0)) + 1.1 * (-s).exp();
            vec![
                vec![2.0 * x[0] * w1, 2.0 * x[1] * w1],
                f2g(x),
                vec![2.0 * x[0] * w3, 2.0 * x[1] * w3],
            ]
        },
        move |x| {
            let s = x[0] * x[0] + x[1] * x[1];
            let w1 = 0.5 + s.cos();
            let h1 = SymMatrix::from_fn(2, |i, j| {
                let d = if i == j { 2.0 * w1 } else { 0.0 };
                d - 4.0 * s.sin() * x[i] * x[j]
            });
            let w3 = -1.0 / ((s + 1.0) * (s + 1.0)) + 1.1 * (-s).exp();
            let w3p = 2.0 / ((s + 1.0) * (s + 1.0) * (s + 1.0)) - 1.1 * (-s).exp();
            let h3 = SymMatrix::from_fn(2, |i, j| {
                let d = if i == j { 2.0 * w3 } else { 0.0 };
                d + 4.0 * x[i] * x[j] * w3p
            });
            vec![h1, f2h2.clone(), h3]
        },
    )
    .unwrap()
}

/// MOP7 — n=2, p=3, S=[−400,400]² (Viennet's second problem, Van Veldhuizen
/// MOP7). Convex quadratic.
///
/// f₁ = (x₁−2)²/2 + (x₂+1)²/13 + 3,
/// f₂ = (x₁+x₂−3)²/36 + (−x₁+x₂+2)²/8 − 17,
/// f₃ = (x₁+2x₂−1)²/175 + (2x₂−x₁)²/17 − 13.
fn mop7() -> VectorProblem {
    let objs: Vec<(Vec<Quad>, f64)> = vec![
        (
            vec![
                Quad { a: vec![1.0, 0.0], b: -2.0, w: 0.5 },
                Quad { a: vec![0.0, 1.0], b: 1.0, w: 1.0 / 13.0 },
            ],
            3.0,
        ),
        (
            vec![
                Quad { a: vec![1.0, 1.0], b: -3.0, w: 1.0 / 36.0 },
                Quad { a: vec![-1.0, 1.0], b: 2.0, w: 1.0 / 8.0 },
            ],
            -17.0,
        ),
        (
            vec![
                Quad { a: vec![1.0, 2.0], b: -1.0, w: 1.0 / 175.0 },
                Quad { a: vec![-1.0, 2.0], b: 0.0, w: 1.0 / 17.0 },
            ],
            -13.0,
        ),
    ];
    let parts: Vec<_> = objs
        .into_iter()
        .map(|(terms, c)| quad_objective(terms, c, 2))
        .collect();
    let vals: Vec<_> = parts.iter().map(|(f, _, _)| f.clone()).collect();
    let grads: Vec<_> = parts.iter().map(|(_, g, _)| g.clone()).collect();
    let hs: Vec<SymMatrix> = parts.iter().map(|(_, _, h)| h.clone()).collect();
    VectorProblem::new(
        "MOP7",
        2,
        3,
        vec![-400.0, -400.0],
        vec![400.0, 400.0],
        Some(0.0),
        move |x| vals.iter().map(|f| f(x)).collect(),
        move |x| grads.iter().map(|g| g(x)).collect(),
        move |_| hs.clone(),
    )
    .unwrap()
}

/// SLCDT2 — n=10, p=3, S=[−1,1]¹⁰ (Schütze et al., quartic-quadratic family).
///
/// f₁ = (x₁−1)⁴ + Σ_{j≥2}(xⱼ−1)², f₂ = (x₂+1)⁴ + Σ_{j≠2}(xⱼ+1)²,
/// f₃ = (x₃−1)⁴ + Σ_{j≠3}(xⱼ−1)². On S the quartic diagonal gives
/// Hessian Lipschitz constant 48.
fn slcdt2() -> VectorProblem {
    const N: usize = 10;
    // objective k: quartic in coordinate qk around ak, quadratic elsewhere
    const SPEC: [(usize, f64); 3] = [(0, 1.0), (1, -1.0), (2, 1.0)];
    VectorProblem::new(
        "SLCDT2",
        N,
        3,
        vec![-1.0; N],
        vec![1.0; N],
        Some(48.0),
        |x| {
            SPEC.iter()
                .map(|&(q, a)| {
                    x.iter()
                        .enumerate()
                        .map(|(j, &xj)| {
                            let s = xj - a;
                            if j == q {
                                s.powi(4)
                            } else {
                                s * s
                            }
                        })
                        .sum()
                })
                .collect()
        },
        |x| {
            SPEC.iter()
                .map(|&(q, a)| {
                    x.iter()
                        .enumerate()
                        .map(|(j, &xj)| {
                            let s = xj - a;
                            if j == q {
                                4.0 * s.powi(3)
                            } else {
                                2.0 * s
                            }
                        })
                        .collect()
                })
                .collect()
        },
        |x| {
            SPEC.iter()
                .map(|&(q, a)| {
                    let d: Vec<f64> = (0..N)
                        .map(|j| {
                            if j == q {
                                let s = x[j] - a;
                                12.0 * s * s
                            } else {
                                2.0
                            }
                        })
                        .collect();
                    SymMatrix::from_diag(&d)
                })
                .collect()
        },
    )
    .unwrap()
}

/// REM1 — n=1, p=2, S=[−1.5,1] — the worked one-dimensional pair.
///
/// f₁ = x² + 4 sin x, f₂ = x³ − 2x². Both Hessians are Lipschitz on S with
/// common constant 6 (|f₁'''| ≤ 4, |f₂'''| = 6), used as the true-L instance
/// in the invariant tests.
fn rem1() -> VectorProblem {
    VectorProblem::new(
        "REM1",
        1,
        2,
        vec![-1.5],
        vec![1.0],
        Some(6.0),
        |x| vec![x[0] * x[0] + 4.0 * x[0].sin(), x[0].powi(3) - 2.0 * x[0] * x[0]],
        |x| {
            vec![
                vec![2.0 * x[0] + 4.0 * x[0].cos()],
                vec![3.0 * x[0] * x[0] - 4.0 * x[0]],
            ]
        },
        |x| {
            vec![
                SymMatrix::from_diag(&[2.0 - 4.0 * x[0].sin()]),
                SymMatrix::from_diag(&[6.0 * x[0] - 4.0]),
            ]
        },
    )
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::SplitMix64;
    use crate::problem::{check_derivatives, interior_point};

    #[test]
    fn registry_matches_table() {
        let want: [(&str, usize, usize, f64, f64); 17] = [
            ("MLF1", 1, 2, 0.0, 20.0),
            ("Far1", 2, 2, -1.0, 1.0),
            ("PNR", 2, 2, -2.0, 2.0),
            ("Hil1", 2, 2, 0.0, 1.0),
            ("KW2", 2, 2, -3.0, 3.0),
            ("SLCDT1", 2, 2, -1.5, 1.5),
            ("MOP3", 2, 2, -PI, PI),
            ("VU1", 2, 2, -3.0, 3.0),
            ("FON", 3, 2, -4.0, 4.0),
            ("Toi4", 4, 2, -2.0, 5.0),
            ("JOS1", 4, 2, -2.0, 2.0),
            ("IKK1", 2, 3, -50.0, 50.0),
            ("VFM1", 2, 3, -2.0, 2.0),
            ("MOP5", 2, 3, -30.0, 30.0),
            ("MOP7", 2, 3, -400.0, 400.0),
            ("SLCDT2", 10, 3, -1.0, 1.0),
            ("REM1", 1, 2, -1.5, 1.0),
        ];
        let reg = registry();
        assert_eq!(reg.len(), want.len());
        for (prob, (name, n, p, lo, hi)) in reg.iter().zip(want) {
            assert_eq!(prob.name(), name);
            assert_eq!((prob.n(), prob.p()), (n, p), "{name}");
            assert!(prob.lower().iter().all(|&l| l == lo), "{name} lower");
            assert!(prob.upper().iter().all(|&u| u == hi), "{name} upper");
        }
    }

    #[test]
    fn lookup_table_entries() {
        let p = lookup("SLCDT2").unwrap();
        assert_eq!((p.n(), p.p()), (10, 3));
        let p = lookup("pnr").unwrap();
        assert_eq!((p.n(), p.p()), (2, 2));
        let p = lookup("REM1").unwrap();
        assert_eq!(p.lipschitz_hint(), Some(6.0));
        assert_eq!(p.lower(), &[-1.5]);
        assert_eq!(p.upper(), &[1.0]);
        assert!(lookup("nope").is_none());
    }

    #[test]
    fn rem1_values_match_hand_computation() {
        let p = lookup("REM1").unwrap();
        let f = p.eval_f(&[0.04]);
        assert!((f[0] - 0.16155789).abs() < 1e-6);
        assert!((f[1] + 0.003136).abs() < 1e-9);
        let j = p.eval_jac(&[0.04]);
        assert!((j[0][0] - 4.07680043).abs() < 1e-6);
        assert!((j[1][0] + 0.1552).abs() < 1e-12);
        // Jf at 0: (4, 0)
        let j0 = p.eval_jac(&[0.0]);
        assert_eq!(j0[0][0], 4.0);
        assert_eq!(j0[1][0], 0.0);
    }

    #[test]
    fn jos1_jacobian_at_origin() {
        let p = lookup("JOS1").unwrap();
        let j = p.eval_jac(&[0.0; 4]);
        assert!(j[0].iter().all(|&v| v == 0.0));
        assert!(j[1].iter().all(|&v| (v + 1.0).abs() < 1e-15)); // −4/n with n=4
    }

    #[test]
    fn derivatives_match_finite_differences_everywhere() {
        let h = 1e-5;
        let mut rng = SplitMix64::new(2024);
        for prob in registry() {
            for _ in 0..20 {
                let x = interior_point(&prob, &mut rng, 1e-3);
                let rep = check_derivatives(&prob, &x, h)
                    .unwrap_or_else(|e| panic!("{}: {e}", prob.name()));
                assert!(
                    rep.max_error() <= 1e-5,
                    "{} derivative error {} at {:?}",
                    prob.name(),
                    rep.max_error(),
                    x
                );
            }
        }
    }

    #[test]
    fn linear_or_quadratic_hessian_exact() {
        // quadratic objective → FD Hessian error at rounding level
        let p = lookup("Toi4").unwrap();
        let rep = check_derivatives(&p, &[0.3, -0.7, 1.1, 0.2], 1e-5).unwrap();
        for e in &rep.hess_err {
            assert!(*e <= 1e-9, "quadratic hessian error {e}");
        }
    }

    #[test]
    fn taylor_bounds_hold_with_hint() {
        // Lipschitz-Hessian Taylor bounds on REM1 (L=6) and JOS1 (L=0):
        // ‖⟨Jf(y)−Jf(x)−(y−x)ᵀ∇²f(x), ξ⟩‖ ≤ L/2‖y−x‖²
        // |⟨f(y)−f(x)−Jf(x)(y−x)−½(y−x)ᵀ∇²f(x)(y−x), ξ⟩| ≤ L/6‖y−x‖³
        use crate::cone::OrderingCone;
        use crate::numkernel::norm;
        let mut rng = SplitMix64::new(5);
        for name in ["REM1", "JOS1"] {
            let prob = lookup(name).unwrap();
            let l = prob.lipschitz_hint().unwrap();
            let cone = OrderingCone::orthant(prob.p());
            for _ in 0..200 {
                let x = interior_point(&prob, &mut rng, 0.0);
                let y = interior_point(&prob, &mut rng, 0.0);
                let d: Vec<f64> = y.iter().zip(&x).map(|(a, b)| a - b).collect();
                let dn = norm(&d);
                let (fx, fy) = (prob.eval_f(&x), prob.eval_f(&y));
                let (jx, jy) = (prob.eval_jac(&x), prob.eval_jac(&y));
                let hx = prob.eval_hess(&x);
                for xi in cone.generators() {
                    // Jacobian remainder, row-combined by ξ
                    let mut jrem = vec![0.0; prob.n()];
                    for k in 0..prob.p() {
                        let hd = hx[k].mat_vec(&d);
                        for i in 0..prob.n() {
                            jrem[i] += xi[k] * (jy[k][i] - jx[k][i] - hd[i]);
                        }
                    }
                    assert!(
                        norm(&jrem) <= 0.5 * l * dn * dn + 1e-9,
                        "{name} Jacobian Taylor bound"
                    );
                    let mut frem = 0.0;
                    for k in 0..prob.p() {
                        let lin: f64 = jx[k].iter().zip(&d).map(|(a, b)| a * b).sum();
                        frem += xi[k] * (fy[k] - fx[k] - lin - 0.5 * hx[k].quad_form(&d));
                    }
                    assert!(
                        frem.abs() <= l / 6.0 * dn * dn * dn + 1e-9,
                        "{name} value Taylor bound"
                    );
                }
            }
        }
    }
}
