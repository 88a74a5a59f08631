//! Floating-point search for `T_1 ⋯ T_m = I` with each `T_i` in a prescribed
//! conjugacy class. One-sided: a verified `Found` is evidence of solvability,
//! `NotFound` proves nothing.
//!
//! Each `T_i = g_i D_i g_i^{-1}` with `D_i` the diagonal eigenvalue matrix. The
//! objective is `‖T_1⋯T_m - I‖²_F + λ Σ_i (‖g_i‖²_F + ‖g_i^{-1}‖²_F)`, driven to
//! zero by Levenberg-Marquardt while `λ` follows a decreasing schedule.

use std::f64::consts::TAU;
use std::fmt;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::deligne_simpson::DSInstance;
use crate::error::{EngineError, Result};
use crate::genus::MultiplicityVector;
use crate::orbifold::ExponentSet;

type CMat = DMatrix<Complex64>;

/// Eigenvalues `ξ_1, …, ξ_n` of one point with their multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct PointClass {
    pub eigenvalues: Vec<Complex64>,
    pub multiplicities: Vec<usize>,
}

impl PointClass {
    /// `α_j = rank((T - ξ_1)⋯(T - ξ_j))` for the semisimple class, `j = 1..n`.
    pub fn ranks(&self) -> Vec<usize> {
        let d: usize = self.multiplicities.iter().sum();
        self.multiplicities
            .iter()
            .scan(d, |left, &m| {
                *left -= m;
                Some(*left)
            })
            .collect()
    }

    fn diagonal(&self) -> Vec<Complex64> {
        self.eigenvalues
            .iter()
            .zip(&self.multiplicities)
            .flat_map(|(&x, &m)| std::iter::repeat_n(x, m))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NumericClassSpec {
    d: usize,
    points: Vec<PointClass>,
}

impl NumericClassSpec {
    pub fn new(d: usize, points: Vec<PointClass>) -> Result<Self> {
        if d == 0 {
            return Err(EngineError::InvalidInstance("dimension must be positive".into()));
        }
        for (i, p) in points.iter().enumerate() {
            if p.eigenvalues.len() != p.multiplicities.len() {
                return Err(EngineError::IndexMismatch(format!(
                    "point {}: {} eigenvalues but {} multiplicities",
                    i + 1,
                    p.eigenvalues.len(),
                    p.multiplicities.len()
                )));
            }
            if p.multiplicities.iter().sum::<usize>() != d {
                return Err(EngineError::InvalidInstance(format!(
                    "point {}: multiplicities do not sum to d = {d}",
                    i + 1
                )));
            }
        }
        Ok(NumericClassSpec { d, points })
    }

    /// Eigenvalues `exp(2πi e_ij)` with multiplicities `α_{i,j-1} - α_ij`.
    pub fn from_instance(inst: &DSInstance) -> Result<Self> {
        let alpha = inst.alpha();
        let d = alpha.center() as usize;
        let points = inst
            .exponents()
            .rows()
            .iter()
            .enumerate()
            .map(|(i, row)| PointClass {
                eigenvalues: row.iter().map(|e| unit(e.to_complex())).collect(),
                multiplicities: (1..=row.len())
                    .map(|j| (alpha.leg(i, j - 1) - alpha.leg(i, j)) as usize)
                    .collect(),
            })
            .collect();
        Self::new(d, points)
    }

    pub fn from_multiplicities(e: &ExponentSet, mv: &MultiplicityVector) -> Result<Self> {
        let points = e
            .rows()
            .iter()
            .zip(mv.rows())
            .map(|(row, m)| PointClass {
                eigenvalues: row.iter().map(|x| unit(x.to_complex())).collect(),
                multiplicities: m.iter().map(|&k| k as usize).collect(),
            })
            .collect();
        Self::new(mv.d() as usize, points)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn points(&self) -> &[PointClass] {
        &self.points
    }

    fn diagonals(&self) -> Vec<Vec<Complex64>> {
        self.points.iter().map(PointClass::diagonal).collect()
    }
}

/// `exp(2πi z)`.
fn unit(z: Complex64) -> Complex64 {
    (Complex64::i() * TAU * z).exp()
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolverConfig {
    /// Frobenius residual accepted as a solution.
    pub tol: f64,
    /// Eigenvalue matching tolerance in verification.
    pub eig_tol: f64,
    /// Levenberg-Marquardt iterations per penalty stage.
    pub max_iter: usize,
    pub restarts: u32,
    pub seed: u64,
    /// Penalty weights `λ`, applied in order.
    pub penalty_schedule: Vec<f64>,
    /// Largest accepted `‖g‖·‖g^{-1}‖` for a conjugator.
    pub cond_max: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            tol: 1e-9,
            eig_tol: 1e-6,
            max_iter: 200,
            restarts: 64,
            seed: 0,
            penalty_schedule: vec![1e-2, 1e-4, 1e-7, 0.0],
            cond_max: 1e6,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NumericSolution {
    pub matrices: Vec<CMat>,
    pub residual: f64,
    /// Index of the restart that produced the solution.
    pub restart: u32,
}

impl fmt::Display for NumericSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FOUND restart={} residual={:.3e}", self.restart, self.residual)?;
        for (i, t) in self.matrices.iter().enumerate() {
            writeln!(f, "T{}", i + 1)?;
            for r in 0..t.nrows() {
                let row: Vec<String> = (0..t.ncols())
                    .map(|c| {
                        let z = t[(r, c)];
                        format!("{:+.12}{:+.12}i", z.re + 0.0, z.im + 0.0)
                    })
                    .collect();
                writeln!(f, "  {}", row.join(" "))?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum NumericOutcome {
    Found(NumericSolution),
    NotFound,
}

fn conjugate(g: &CMat, h: &CMat, diag: &[Complex64]) -> CMat {
    let mut gd = g.clone();
    for (c, &x) in diag.iter().enumerate() {
        for r in 0..gd.nrows() {
            gd[(r, c)] *= x;
        }
    }
    gd * h
}

fn product(ts: &[CMat], d: usize) -> CMat {
    ts.iter().fold(CMat::identity(d, d), |acc, t| acc * t)
}

fn frob2(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum()
}

/// `‖Π T_i - I‖²_F + λ Σ (‖g_i‖²_F + ‖g_i^{-1}‖²_F)`; infinite for a singular `g_i`.
pub fn objective(spec: &NumericClassSpec, gs: &[CMat], lambda: f64) -> f64 {
    let d = spec.d;
    let Some(hs) = gs.iter().map(|g| g.clone().try_inverse()).collect::<Option<Vec<_>>>() else {
        return f64::INFINITY;
    };
    let ts: Vec<CMat> =
        spec.diagonals().iter().zip(gs.iter().zip(&hs)).map(|(dg, (g, h))| conjugate(g, h, dg)).collect();
    let r = product(&ts, d) - CMat::identity(d, d);
    frob2(&r) + lambda * gs.iter().zip(&hs).map(|(g, h)| frob2(g) + frob2(h)).sum::<f64>()
}

/// Gradient of [`objective`] in each `g_i`, packed as `∂/∂Re + i ∂/∂Im`.
pub fn gradient(spec: &NumericClassSpec, gs: &[CMat], lambda: f64) -> Option<Vec<CMat>> {
    let d = spec.d;
    let m = gs.len();
    let hs: Vec<CMat> = gs.iter().map(|g| g.clone().try_inverse()).collect::<Option<_>>()?;
    let ts: Vec<CMat> =
        spec.diagonals().iter().zip(gs.iter().zip(&hs)).map(|(dg, (g, h))| conjugate(g, h, dg)).collect();
    let id = CMat::identity(d, d);
    let mut left = vec![id.clone(); m + 1];
    for i in 0..m {
        left[i + 1] = &left[i] * &ts[i];
    }
    let mut right = vec![id.clone(); m + 1];
    for i in (0..m).rev() {
        right[i] = &ts[i] * &right[i + 1];
    }
    let r = &left[m] - &id;
    let rh = r.adjoint();
    Some(
        (0..m)
            .map(|i| {
                // δf = 2 Re tr(G δg) with G = g^{-1}(T K - K T), K = R_i Rᴴ L_i
                let k = &right[i + 1] * &rh * &left[i];
                let n = &ts[i] * &k - &k * &ts[i];
                let big_g = &hs[i] * n;
                let h = &hs[i];
                let pen = gs[i].clone() - h.adjoint() * h * h.adjoint();
                big_g.adjoint() * Complex64::from(2.0) + pen * Complex64::from(2.0 * lambda)
            })
            .collect(),
    )
}

/// Residual vector and Jacobian over the real parameters of all `g_i`.
struct Model<'a> {
    diags: &'a [Vec<Complex64>],
    d: usize,
}

struct Eval {
    residual: DVector<f64>,
    cost: f64,
    product_residual: f64,
    ts: Vec<CMat>,
    hs: Vec<CMat>,
}

impl Model<'_> {
    fn n_params(&self) -> usize {
        2 * self.diags.len() * self.d * self.d
    }

    fn unpack(&self, theta: &DVector<f64>) -> Vec<CMat> {
        let dd = self.d * self.d;
        (0..self.diags.len())
            .map(|i| {
                CMat::from_fn(self.d, self.d, |r, c| {
                    let at = 2 * (i * dd + r * self.d + c);
                    Complex64::new(theta[at], theta[at + 1])
                })
            })
            .collect()
    }

    fn eval(&self, theta: &DVector<f64>, lambda: f64) -> Option<Eval> {
        let d = self.d;
        let gs = self.unpack(theta);
        let hs: Vec<CMat> = gs.iter().map(|g| g.clone().try_inverse()).collect::<Option<_>>()?;
        let ts: Vec<CMat> =
            self.diags.iter().zip(gs.iter().zip(&hs)).map(|(dg, (g, h))| conjugate(g, h, dg)).collect();
        let r = product(&ts, d) - CMat::identity(d, d);
        let s = lambda.sqrt();
        let mut res = Vec::with_capacity(2 * d * d * (1 + 2 * gs.len()));
        let mut push = |m: &CMat, w: f64| {
            for row in 0..d {
                for col in 0..d {
                    res.push(w * m[(row, col)].re);
                    res.push(w * m[(row, col)].im);
                }
            }
        };
        push(&r, 1.0);
        if lambda > 0.0 {
            for (g, h) in gs.iter().zip(&hs) {
                push(g, s);
                push(h, s);
            }
        }
        let residual = DVector::from_vec(res);
        let cost = residual.norm_squared();
        let product_residual = frob2(&r).sqrt();
        product_residual.is_finite().then_some(Eval { residual, cost, product_residual, ts, hs })
    }

    fn jacobian(&self, ev: &Eval, lambda: f64) -> DMatrix<f64> {
        let d = self.d;
        let m = self.diags.len();
        let id = CMat::identity(d, d);
        let mut left = vec![id.clone(); m + 1];
        for i in 0..m {
            left[i + 1] = &left[i] * &ev.ts[i];
        }
        let mut right = vec![id.clone(); m + 1];
        for i in (0..m).rev() {
            right[i] = &ev.ts[i] * &right[i + 1];
        }
        let s = lambda.sqrt();
        let mut jac = DMatrix::zeros(ev.residual.len(), self.n_params());
        let mut col = 0;
        for i in 0..m {
            let (t, h) = (&ev.ts[i], &ev.hs[i]);
            for r in 0..d {
                for c in 0..d {
                    for unit_dir in [Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)] {
                        let mut dg = CMat::zeros(d, d);
                        dg[(r, c)] = unit_dir;
                        let x = &dg * h;
                        let dt = &x * t - t * &x;
                        let dp = &left[i] * dt * &right[i + 1];
                        let mut row = 0;
                        let mut put = |mat: &CMat, w: f64, row: &mut usize| {
                            for a in 0..d {
                                for b in 0..d {
                                    jac[(*row, col)] = w * mat[(a, b)].re;
                                    jac[(*row + 1, col)] = w * mat[(a, b)].im;
                                    *row += 2;
                                }
                            }
                        };
                        put(&dp, 1.0, &mut row);
                        if lambda > 0.0 {
                            let zero = CMat::zeros(d, d);
                            for k in 0..m {
                                if k == i {
                                    let dh = -(h * &dg * h);
                                    put(&dg, s, &mut row);
                                    put(&dh, s, &mut row);
                                } else {
                                    put(&zero, s, &mut row);
                                    put(&zero, s, &mut row);
                                }
                            }
                        }
                        col += 1;
                    }
                }
            }
        }
        jac
    }
}

fn cond_estimate(g: &CMat, h: &CMat) -> f64 {
    frob2(g).sqrt() * frob2(h).sqrt()
}

fn run_restart(spec: &NumericClassSpec, cfg: &SolverConfig, restart: u32) -> Option<NumericSolution> {
    let diags = spec.diagonals();
    let model = Model { diags: &diags, d: spec.d };
    let stream = cfg.seed ^ (restart as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    let mut rng = ChaCha8Rng::seed_from_u64(stream);
    let n = model.n_params();
    let mut theta = DVector::from_fn(n, |_, _| rng.random_range(-1.0..1.0));
    // bias toward the identity so the start is well conditioned
    let dd = spec.d * spec.d;
    for i in 0..diags.len() {
        for k in 0..spec.d {
            theta[2 * (i * dd + k * spec.d + k)] += 1.5;
        }
    }

    for &lambda in &cfg.penalty_schedule {
        let mut ev = model.eval(&theta, lambda)?;
        let mut mu = 1e-3;
        for _ in 0..cfg.max_iter {
            if lambda == 0.0 && ev.product_residual < cfg.tol * 1e-2 {
                break;
            }
            let jac = model.jacobian(&ev, lambda);
            let jt = jac.transpose();
            let jtj = &jt * &jac;
            let grad = &jt * &ev.residual;
            let mut improved = false;
            while mu < 1e14 {
                let mut a = jtj.clone();
                for k in 0..n {
                    a[(k, k)] += mu * (1.0 + jtj[(k, k)]);
                }
                let Some(chol) = a.cholesky() else {
                    mu *= 4.0;
                    continue;
                };
                let step = chol.solve(&grad);
                let cand = &theta - step;
                match model.eval(&cand, lambda) {
                    Some(next) if next.cost < ev.cost => {
                        theta = cand;
                        ev = next;
                        mu = (mu / 3.0).max(1e-15);
                        improved = true;
                        break;
                    }
                    _ => mu *= 4.0,
                }
            }
            if !improved {
                break;
            }
        }
    }

    let ev = model.eval(&theta, 0.0)?;
    let gs = model.unpack(&theta);
    let conditioned = gs.iter().zip(&ev.hs).all(|(g, h)| cond_estimate(g, h) <= cfg.cond_max);
    let sol = NumericSolution { residual: ev.product_residual, matrices: ev.ts, restart };
    (conditioned && sol.residual < cfg.tol && verify_solution(&sol, spec, cfg.tol, cfg.eig_tol))
        .then_some(sol)
}

/// Runs `cfg.restarts` seeded restarts in parallel and reports the verified
/// solution of the lowest restart index, so the outcome does not depend on
/// scheduling.
pub fn solve_numeric(spec: &NumericClassSpec, cfg: &SolverConfig) -> NumericOutcome {
    (0..cfg.restarts)
        .into_par_iter()
        .map(|r| run_restart(spec, cfg, r))
        .find_first(Option::is_some)
        .flatten()
        .map_or(NumericOutcome::NotFound, NumericOutcome::Found)
}

fn eigenvalues(t: &CMat) -> Option<Vec<Complex64>> {
    nalgebra::Schur::new(t.clone()).eigenvalues().map(|v| v.iter().copied().collect())
}

fn numerical_rank(m: &CMat, tol: f64) -> usize {
    let sv = m.clone().svd(false, false).singular_values;
    let scale = sv.iter().copied().fold(1.0, f64::max);
    sv.iter().filter(|&&s| s > tol * scale).count()
}

/// Smallest total distance over matchings of two equal-size multisets.
fn matching_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    fn go(a: &[Complex64], b: &[Complex64], used: &mut [bool], i: usize, best: &mut f64, acc: f64) {
        if acc >= *best {
            return;
        }
        if i == a.len() {
            *best = acc;
            return;
        }
        for k in 0..b.len() {
            if !used[k] {
                used[k] = true;
                go(a, b, used, i + 1, best, acc.max((a[i] - b[k]).norm()));
                used[k] = false;
            }
        }
    }
    let mut best = f64::INFINITY;
    go(a, b, &mut vec![false; b.len()], 0, &mut best, 0.0);
    best
}

/// Residual, eigenvalue multisets, and the closure rank inequalities.
pub fn verify_solution(sol: &NumericSolution, spec: &NumericClassSpec, tol: f64, eig_tol: f64) -> bool {
    let d = spec.d;
    if sol.matrices.len() != spec.points.len()
        || sol.matrices.iter().any(|t| t.nrows() != d || t.ncols() != d)
    {
        return false;
    }
    let id = CMat::identity(d, d);
    if frob2(&(product(&sol.matrices, d) - &id)).sqrt() >= tol {
        return false;
    }
    sol.matrices.iter().zip(&spec.points).all(|(t, p)| {
        let Some(ev) = eigenvalues(t) else { return false };
        if matching_distance(&ev, &p.diagonal()) > eig_tol {
            return false;
        }
        let mut acc = id.clone();
        p.eigenvalues.iter().zip(p.ranks()).all(|(&x, bound)| {
            acc = &acc * (t - &id * x);
            numerical_rank(&acc, eig_tol) <= bound
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn pm_one(d: usize, m: usize) -> NumericClassSpec {
        let p = PointClass { eigenvalues: vec![c(1.0, 0.0), c(-1.0, 0.0)], multiplicities: vec![d / 2, d - d / 2] };
        NumericClassSpec::new(d, vec![p; m]).unwrap()
    }

    #[test]
    fn identity_class_is_immediate() {
        let spec = NumericClassSpec::new(
            2,
            vec![PointClass { eigenvalues: vec![c(1.0, 0.0)], multiplicities: vec![2] }],
        )
        .unwrap();
        let NumericOutcome::Found(sol) = solve_numeric(&spec, &SolverConfig::default()) else { panic!() };
        assert_eq!(sol.restart, 0);
        assert!(sol.residual < 1e-12);
    }

    fn refl(theta: f64) -> CMat {
        let (s, co) = (2.0 * theta).sin_cos();
        CMat::from_row_slice(2, 2, &[c(co, 0.0), c(s, 0.0), c(s, 0.0), c(-co, 0.0)])
    }

    #[test]
    fn four_reflections_compose_to_identity() {
        // explicit oracle first: refl(x) refl(y) is rotation by 2(x - y)
        let (a, b, t) = (0.3, 1.1, -0.4);
        let ms = vec![refl(a), refl(b), refl(t), refl(a - b + t)];
        let spec = pm_one(2, 4);
        let exact = NumericSolution { matrices: ms, residual: 0.0, restart: 0 };
        assert!(verify_solution(&exact, &spec, 1e-9, 1e-6));
        let NumericOutcome::Found(sol) = solve_numeric(&spec, &SolverConfig::default()) else { panic!() };
        assert!(verify_solution(&sol, &spec, 1e-9, 1e-6));
    }

    #[test]
    fn three_reflections_never_compose_to_identity() {
        // determinants multiply to -1
        let s3 = (refl(0.3) * refl(1.1)).try_inverse().unwrap();
        assert!((s3.determinant() - c(1.0, 0.0)).norm() < 1e-12);
        let cfg = SolverConfig { restarts: 8, ..SolverConfig::default() };
        assert_eq!(solve_numeric(&pm_one(2, 3), &cfg), NumericOutcome::NotFound);
    }

    #[test]
    fn inverse_classes_pair_up() {
        let x = c(0.0, 1.0);
        let p = PointClass { eigenvalues: vec![x, c(1.0, 0.0)], multiplicities: vec![1, 1] };
        let q = PointClass { eigenvalues: vec![x.conj(), c(1.0, 0.0)], multiplicities: vec![1, 1] };
        let spec = NumericClassSpec::new(2, vec![p, q]).unwrap();
        assert!(matches!(solve_numeric(&spec, &SolverConfig::default()), NumericOutcome::Found(_)));
    }

    #[test]
    fn perturbed_solution_fails() {
        let spec = pm_one(2, 2);
        let t = CMat::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]);
        let mut sol = NumericSolution { matrices: vec![t.clone(), t], residual: 0.0, restart: 0 };
        assert!(verify_solution(&sol, &spec, 1e-9, 1e-6));
        sol.matrices[0][(0, 1)] += c(1e-8, 0.0);
        assert!(!verify_solution(&sol, &spec, 1e-9, 1e-6));
    }

    #[test]
    fn closure_allows_collapsed_jordan_block() {
        // class of a 2×2 Jordan block at 1: ranks (1, 0); its closure contains I
        let p = PointClass { eigenvalues: vec![c(1.0, 0.0), c(1.0, 0.0)], multiplicities: vec![1, 1] };
        let spec = NumericClassSpec::new(2, vec![p]).unwrap();
        let id = CMat::identity(2, 2);
        let sol = NumericSolution { matrices: vec![id], residual: 0.0, restart: 0 };
        assert!(verify_solution(&sol, &spec, 1e-9, 1e-6));
        // but a scalar with the wrong eigenvalue is not
        let p = PointClass { eigenvalues: vec![c(-1.0, 0.0)], multiplicities: vec![2] };
        let spec = NumericClassSpec::new(2, vec![p]).unwrap();
        assert!(!verify_solution(&sol, &spec, 1e-9, 1e-6));
    }

    #[test]
    fn gradient_matches_finite_differences() {
        let spec = pm_one(2, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let gs: Vec<CMat> = (0..3)
            .map(|_| {
                CMat::from_fn(2, 2, |r, c| {
                    c_rand(&mut rng) + if r == c { Complex64::from(1.5) } else { Complex64::from(0.0) }
                })
            })
            .collect();
        let grad = gradient(&spec, &gs, 0.1).unwrap();
        let h = 1e-6;
        for i in 0..3 {
            for (r, cc) in [(0, 0), (0, 1), (1, 0)] {
                for dir in [c(1.0, 0.0), c(0.0, 1.0)] {
                    let shift = |s: f64| {
                        let mut g2 = gs.clone();
                        g2[i][(r, cc)] += dir * s;
                        objective(&spec, &g2, 0.1)
                    };
                    let fd = (shift(h) - shift(-h)) / (2.0 * h);
                    let an = if dir.re == 1.0 { grad[i][(r, cc)].re } else { grad[i][(r, cc)].im };
                    assert!((fd - an).abs() <= 1e-6 * an.abs().max(1.0), "fd {fd} vs {an}");
                }
            }
        }
    }

    fn c_rand(rng: &mut ChaCha8Rng) -> Complex64 {
        c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    }

    #[test]
    fn deterministic_for_a_seed() {
        let spec = pm_one(2, 3);
        let cfg = SolverConfig { seed: 11, ..SolverConfig::default() };
        assert_eq!(solve_numeric(&spec, &cfg), solve_numeric(&spec, &cfg));
    }

    #[test]
    fn determinant_obstruction_gives_not_found() {
        // det T1 T2 = -1 for these classes, so no solution exists
        let p = PointClass { eigenvalues: vec![c(1.0, 0.0), c(-1.0, 0.0)], multiplicities: vec![1, 1] };
        let q = PointClass { eigenvalues: vec![c(1.0, 0.0)], multiplicities: vec![2] };
        let spec = NumericClassSpec::new(2, vec![p, q]).unwrap();
        let cfg = SolverConfig { restarts: 8, ..SolverConfig::default() };
        assert_eq!(solve_numeric(&spec, &cfg), NumericOutcome::NotFound);
    }
}
