//! Floating-point sampling oracles.
//!
//! Everything here is an independent re-check of the exact deciders at the
//! level of the defining norm equalities, using float arithmetic and random
//! samples. Oracle verdicts gate regressions; they never override an exact
//! certificate.
//!
//! Besides random trials, each fuzzer probes a small deterministic family
//! of structured inputs (facet barycenters and the rank-one operators they
//! induce) chosen so that a failing exact property also fails under the
//! oracle instead of hiding between samples.

use crate::operators::LinOp;
use crate::rational::RatVector;
use crate::spaces::PolyhedralSpace;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

/// Outcome of one fuzzing run. `passed` is exactly
/// `max_violation <= tolerance`; the worst input is always recorded, and
/// the seed and tolerance are echoed for reproducibility.
#[derive(Clone, Debug, Serialize)]
pub struct FuzzReport {
    pub trials: usize,
    pub max_violation: f64,
    pub worst_input: Vec<Vec<f64>>,
    pub tolerance: f64,
    pub passed: bool,
    pub seed: u64,
}

impl FuzzReport {
    fn from_violations(
        trials: usize,
        tolerance: f64,
        seed: u64,
        outcomes: impl IntoIterator<Item = (f64, Vec<Vec<f64>>)>,
    ) -> Self {
        let mut max_violation = 0.0;
        let mut worst_input = Vec::new();
        for (violation, input) in outcomes {
            if violation > max_violation || worst_input.is_empty() {
                max_violation = violation;
                worst_input = input;
            }
        }
        FuzzReport {
            trials,
            max_violation,
            worst_input,
            tolerance,
            passed: max_violation <= tolerance,
            seed,
        }
    }
}

/// Float view of a space: vertex and dual-vertex coordinate tables.
struct FloatSpace {
    vertices: Vec<Vec<f64>>,
    duals: Vec<Vec<f64>>,
}

impl FloatSpace {
    fn new(space: &PolyhedralSpace) -> Self {
        FloatSpace {
            vertices: space.vertices().iter().map(|v| v.to_f64s()).collect(),
            duals: space.dual_vertices().iter().map(|f| f.to_f64s()).collect(),
        }
    }

    fn norm(&self, x: &[f64]) -> f64 {
        self.duals
            .iter()
            .map(|f| dot(f, x).abs())
            .fold(0.0, f64::max)
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn add_scaled(a: &[f64], b: &[f64], s: f64) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + s * y).collect()
}

fn gaussian_vector(rng: &mut ChaCha8Rng, dim: usize) -> Vec<f64> {
    (0..dim).map(|_| StandardNormal.sample(rng)).collect()
}

/// A random point of the unit sphere: Gaussian direction scaled onto the
/// polyhedral sphere by the float gauge.
fn random_unit(rng: &mut ChaCha8Rng, fs: &FloatSpace, dim: usize) -> Vec<f64> {
    loop {
        let g = gaussian_vector(rng, dim);
        let n = fs.norm(&g);
        if n > 1e-9 {
            return g.iter().map(|c| c / n).collect();
        }
    }
}

/// Barycenters of the ball facets: one relative-interior boundary point per
/// extreme dual functional. These are norming only for `±` that functional.
fn facet_barycenters(space: &PolyhedralSpace) -> Vec<Vec<f64>> {
    space
        .dual_vertices()
        .iter()
        .map(|f| {
            let face: Vec<&RatVector> = space
                .vertices()
                .iter()
                .filter(|v| f.dot(v).is_one())
                .collect();
            let mut acc = vec![0.0; space.dim()];
            for v in &face {
                for (i, c) in v.to_f64s().iter().enumerate() {
                    acc[i] += c;
                }
            }
            acc.iter().map(|c| c / face.len() as f64).collect()
        })
        .collect()
}

/// The defining spear-vector violation at one direction:
/// `|2 - max(‖z+x‖, ‖z-x‖)|` for a unit `x`.
pub fn spear_violation(space: &PolyhedralSpace, z: &[f64], x: &[f64]) -> f64 {
    let fs = FloatSpace::new(space);
    let plus = fs.norm(&add_scaled(z, x, 1.0));
    let minus = fs.norm(&add_scaled(z, x, -1.0));
    (2.0 - plus.max(minus)).abs()
}

/// Fuzzes the spear-vector norm identity `‖z + 𝕋x‖ = 2` over random unit
/// directions plus the facet-barycenter probes. Passes exactly when the
/// exact decider says `z` is a spear.
pub fn fuzz_spear_vector(
    space: &PolyhedralSpace,
    z: &RatVector,
    trials: usize,
    tol: f64,
    seed: u64,
) -> FuzzReport {
    if trials == 0 {
        return FuzzReport::from_violations(0, tol, seed, []);
    }
    let fs = FloatSpace::new(space);
    let zf = z.to_f64s();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut outcomes = Vec::new();
    for x in facet_barycenters(space) {
        let plus = fs.norm(&add_scaled(&zf, &x, 1.0));
        let minus = fs.norm(&add_scaled(&zf, &x, -1.0));
        let violation = (2.0 - plus.max(minus)).abs();
        outcomes.push((violation, vec![x]));
    }
    for _ in 0..trials {
        let x = random_unit(&mut rng, &fs, space.dim());
        let plus = fs.norm(&add_scaled(&zf, &x, 1.0));
        let minus = fs.norm(&add_scaled(&zf, &x, -1.0));
        let violation = (2.0 - plus.max(minus)).abs();
        outcomes.push((violation, vec![x]));
    }
    FuzzReport::from_violations(trials, tol, seed, outcomes)
}

/// Float view of an operator together with its spaces.
struct FloatOp {
    matrix: Vec<Vec<f64>>,
    dom: FloatSpace,
    cod: FloatSpace,
}

impl FloatOp {
    fn new(g: &LinOp) -> Self {
        FloatOp {
            matrix: g.matrix().to_f64s(),
            dom: FloatSpace::new(g.domain()),
            cod: FloatSpace::new(g.codomain()),
        }
    }

    fn apply(&self, x: &[f64]) -> Vec<f64> {
        self.matrix.iter().map(|row| dot(row, x)).collect()
    }

    fn op_norm(&self, matrix: &[Vec<f64>]) -> f64 {
        self.dom
            .vertices
            .iter()
            .map(|v| {
                let image: Vec<f64> = matrix.iter().map(|row| dot(row, v)).collect();
                self.cod.norm(&image)
            })
            .fold(0.0, f64::max)
    }
}

fn combined(g: &[Vec<f64>], t: &[Vec<f64>], s: f64) -> Vec<Vec<f64>> {
    g.iter()
        .zip(t)
        .map(|(gr, tr)| gr.iter().zip(tr).map(|(a, b)| a + s * b).collect())
        .collect()
}

/// Violation of `max_ω ‖G + ωT‖ = 1 + ‖T‖` for one float operator `t`.
fn spear_equation_violation(fo: &FloatOp, t: &[Vec<f64>]) -> f64 {
    let plus = fo.op_norm(&combined(&fo.matrix, t, 1.0));
    let minus = fo.op_norm(&combined(&fo.matrix, t, -1.0));
    let norm_t = fo.op_norm(t);
    (plus.max(minus) - 1.0 - norm_t).abs()
}

/// Structured rank-one probes for the spear equation: for every pair of a
/// domain vertex `v0` and codomain dual vertex `f0` that fails the modulus
/// condition, build `ψ ⊗ u` where `ψ` is the barycenter of the dual face at
/// `v0` (normed only at `±v0`) and `u` the barycenter of the codomain face
/// at `f0` (normed only by `±f0`). When `G` is not a spear operator, some
/// such probe breaks the equation.
#[allow(clippy::needless_range_loop)]
fn rank_one_probes(g: &LinOp, fo: &FloatOp) -> Vec<Vec<Vec<f64>>> {
    let mut probes = Vec::new();
    let dom = g.domain();
    let cod = g.codomain();
    let cod_barycenters = facet_barycenters(cod);
    for (vi, v0) in dom.vertices().iter().enumerate() {
        let gv = fo.apply(&fo.dom.vertices[vi]);
        for fi in 0..cod.dual_vertices().len() {
            if (dot(&fo.cod.duals[fi], &gv).abs() - 1.0).abs() < 1e-9 {
                continue;
            }
            // ψ = average of the dual vertices tight at v0, rescaled to
            // unit dual norm.
            let tight: Vec<&RatVector> = dom
                .dual_vertices()
                .iter()
                .filter(|h| h.dot(v0).is_one())
                .collect();
            let mut psi = vec![0.0; dom.dim()];
            for h in &tight {
                for (i, c) in h.to_f64s().iter().enumerate() {
                    psi[i] += c;
                }
            }
            let scale = fo
                .dom
                .vertices
                .iter()
                .map(|v| dot(&psi, v).abs())
                .fold(0.0, f64::max);
            for c in psi.iter_mut() {
                *c /= scale;
            }
            let u = &cod_barycenters[fi];
            let t: Vec<Vec<f64>> = u.iter().map(|ui| psi.iter().map(|pj| ui * pj).collect()).collect();
            probes.push(t);
        }
    }
    probes
}

/// Fuzzes the spear operator equation with Gaussian operators plus the
/// structured rank-one probes. Passes exactly when the exact verdict for
/// `g` is all-true.
pub fn fuzz_spear_equation(g: &LinOp, trials: usize, tol: f64, seed: u64) -> FuzzReport {
    if trials == 0 {
        return FuzzReport::from_violations(0, tol, seed, []);
    }
    let fo = FloatOp::new(g);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut outcomes = Vec::new();
    for t in rank_one_probes(g, &fo) {
        let violation = spear_equation_violation(&fo, &t);
        outcomes.push((violation, t));
    }
    let (rows, cols) = (g.codomain().dim(), g.domain().dim());
    for _ in 0..trials {
        let t: Vec<Vec<f64>> = (0..rows).map(|_| gaussian_vector(&mut rng, cols)).collect();
        let norm = fo.op_norm(&t);
        if norm < 1e-9 {
            continue;
        }
        let t: Vec<Vec<f64>> = t.iter().map(|r| r.iter().map(|c| c / norm).collect()).collect();
        let violation = spear_equation_violation(&fo, &t);
        outcomes.push((violation, t));
    }
    FuzzReport::from_violations(trials, tol, seed, outcomes)
}

/// Direct minimization oracle for the numerical index: meshes every ball
/// facet with a barycentric grid of the given density, evaluates
/// `max |f·z|` over the dual face at `u`, and locally refines around the
/// best point. Entirely independent of the linear-programming path.
pub fn brute_numerical_index(space: &PolyhedralSpace, u: &RatVector, grid_density: usize) -> f64 {
    let face_duals: Vec<Vec<f64>> = space
        .dual_vertices()
        .iter()
        .filter(|f| f.dot(u).is_one())
        .map(|f| f.to_f64s())
        .collect();
    assert!(!face_duals.is_empty(), "u must be a unit vector");
    let radius = |z: &[f64]| -> f64 {
        face_duals
            .iter()
            .map(|f| dot(f, z).abs())
            .fold(0.0, f64::max)
    };

    let mut best = f64::INFINITY;
    for g in space.dual_vertices() {
        let corners: Vec<Vec<f64>> = space
            .vertices()
            .iter()
            .filter(|v| g.dot(v).is_one())
            .map(|v| v.to_f64s())
            .collect();
        let k = corners.len();
        let point = |lambda: &[f64]| -> Vec<f64> {
            let mut z = vec![0.0; space.dim()];
            for (li, c) in lambda.iter().zip(&corners) {
                for (i, ci) in c.iter().enumerate() {
                    z[i] += li * ci;
                }
            }
            z
        };

        // Coarse pass over the barycentric grid.
        let density = grid_density.max(1);
        let mut best_lambda = vec![1.0 / k as f64; k];
        let mut best_here = radius(&point(&best_lambda));
        let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), density)];
        while let Some((prefix, rest)) = stack.pop() {
            if prefix.len() == k - 1 {
                let mut counts = prefix.clone();
                counts.push(rest);
                let lambda: Vec<f64> = counts.iter().map(|&c| c as f64 / density as f64).collect();
                let val = radius(&point(&lambda));
                if val < best_here {
                    best_here = val;
                    best_lambda = lambda;
                }
            } else {
                for c in 0..=rest {
                    let mut p = prefix.clone();
                    p.push(c);
                    stack.push((p, rest - c));
                }
            }
        }

        // Local refinement: shrinking pairwise weight transfers.
        let mut step = 1.0 / density as f64;
        for _ in 0..30 {
            let mut improved = false;
            for i in 0..k {
                for j in 0..k {
                    if i == j || best_lambda[j] < step {
                        continue;
                    }
                    let mut lambda = best_lambda.clone();
                    lambda[i] += step;
                    lambda[j] -= step;
                    let val = radius(&point(&lambda));
                    if val < best_here {
                        best_here = val;
                        best_lambda = lambda;
                        improved = true;
                    }
                }
            }
            if !improved {
                step /= 2.0;
                if step < 1e-12 {
                    break;
                }
            }
        }
        best = best.min(best_here);
    }
    best
}

/// Finite-eps float estimate of the numerical radius of `t_op` with
/// respect to `g`: the largest `|y*(Tx)|` over vertex pairs and sampled
/// unit points whose pairing satisfies `y*(Gx) > 1 - eps`. With a fixed
/// seed the admissible set shrinks as eps decreases, so the estimate
/// decreases monotonically onto the exact face-condition radius, which it
/// never undercuts (exact face pairs stay admissible at every eps).
pub fn approx_vg_radius(g: &LinOp, t_op: &LinOp, eps: f64, trials: usize, seed: u64) -> f64 {
    let fo = FloatOp::new(g);
    let t_matrix = t_op.matrix().to_f64s();
    let t_apply = |x: &[f64]| -> Vec<f64> { t_matrix.iter().map(|row| dot(row, x)).collect() };
    let mut best: f64 = 0.0;
    let mut consider = |x: &[f64]| {
        let gx = fo.apply(x);
        let tx = t_apply(x);
        for f in &fo.cod.duals {
            if dot(f, &gx) > 1.0 - eps {
                best = best.max(dot(f, &tx).abs());
            }
        }
    };
    for v in fo.dom.vertices.clone() {
        consider(&v);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let x = random_unit(&mut rng, &fo.dom, g.domain().dim());
        consider(&x);
    }
    best
}

/// Distance (in the space's norm) from `x0` to the absolutely convex hull
/// of finitely many points, via Frank-Wolfe with exact line search on the
/// Euclidean objective.
fn dist_to_aconv(fs: &FloatSpace, x0: &[f64], atoms: &[Vec<f64>]) -> f64 {
    if atoms.is_empty() {
        return fs.norm(x0);
    }
    let mut signed: Vec<Vec<f64>> = Vec::with_capacity(2 * atoms.len());
    for a in atoms {
        signed.push(a.clone());
        signed.push(a.iter().map(|c| -c).collect());
    }
    let mut current = signed[0].clone();
    for _ in 0..400 {
        let grad: Vec<f64> = current.iter().zip(x0).map(|(c, x)| c - x).collect();
        let target = signed
            .iter()
            .min_by(|a, b| dot(a, &grad).partial_cmp(&dot(b, &grad)).unwrap())
            .unwrap();
        let dir: Vec<f64> = target.iter().zip(&current).map(|(t, c)| t - c).collect();
        let denom = dot(&dir, &dir);
        if denom < 1e-18 {
            break;
        }
        let residual: Vec<f64> = x0.iter().zip(&current).map(|(x, c)| x - c).collect();
        let gamma = (dot(&residual, &dir) / denom).clamp(0.0, 1.0);
        if gamma <= 0.0 {
            break;
        }
        current = current.iter().zip(&dir).map(|(c, d)| c + gamma * d).collect();
    }
    let gap: Vec<f64> = x0.iter().zip(&current).map(|(x, c)| x - c).collect();
    fs.norm(&gap)
}

/// Fuzzes the slice-based lushness criterion at a fixed eps: for each probed
/// pair of a domain ball vertex `x0` and a unit codomain direction `y`,
/// searches the extreme codomain duals `y*` with `y*(y) > 1 - eps` for one
/// whose slice `{v : (G*y*)·v > 1 - eps}` has `x0` within `eps` of the
/// absolutely convex hull of its ball vertices. The slice is approximated by
/// its vertex set, which suffices in the finite-dimensional lush case.
pub fn fuzz_lush_slices(g: &LinOp, trials: usize, eps: f64, seed: u64) -> FuzzReport {
    if trials == 0 {
        return FuzzReport::from_violations(0, eps, seed, []);
    }
    let fo = FloatOp::new(g);
    let dom = g.domain();
    let cod = g.codomain();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let g_t: Vec<Vec<f64>> = {
        let m = g.matrix().to_f64s();
        (0..dom.dim())
            .map(|j| (0..cod.dim()).map(|i| m[i][j]).collect())
            .collect()
    };

    let pair_violation = |x0: &[f64], y: &[f64]| -> f64 {
        let mut best = f64::INFINITY;
        for f in &fo.cod.duals {
            if dot(f, y) <= 1.0 - eps {
                continue;
            }
            let functional: Vec<f64> = g_t.iter().map(|row| dot(row, f)).collect();
            let slice: Vec<Vec<f64>> = fo
                .dom
                .vertices
                .iter()
                .filter(|v| dot(&functional, v) > 1.0 - eps)
                .cloned()
                .collect();
            let d = dist_to_aconv(&fo.dom, x0, &slice);
            best = best.min(d);
            if best < eps {
                break;
            }
        }
        best
    };

    let mut outcomes = Vec::new();
    // Deterministic probes: every ball vertex against every codomain facet
    // barycenter.
    for x0 in &fo.dom.vertices {
        for y in facet_barycenters(cod) {
            let violation = pair_violation(x0, &y);
            outcomes.push((violation, vec![x0.clone(), y]));
        }
    }
    for _ in 0..trials {
        let x0 = fo.dom.vertices[rng.random_range(0..fo.dom.vertices.len())].clone();
        let y = random_unit(&mut rng, &fo.cod, cod.dim());
        let violation = pair_violation(&x0, &y);
        outcomes.push((violation, vec![x0, y]));
    }
    FuzzReport::from_violations(trials, eps, seed, outcomes)
}
