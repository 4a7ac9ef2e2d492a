//! Numerical estimate of `M(G)`: search the matrices with graph `G` for one
//! with `m` equal eigenvalues.
//!
//! The objective is the variance of the best window of `m` consecutive
//! eigenvalues, `f(A) = min_s Σ_{i in s..s+m} (λ_i - t)²` with `t` the
//! window mean, so the common eigenvalue is free (translation by `tI` stays
//! in the class). Iterates are kept normalized: centred diagonal,
//! `‖A‖_F = √n`, edge entries at least `pattern_floor` in magnitude. A
//! success is evidence that `M(G) >= m`; a failure proves nothing.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleConfig {
    pub restarts: usize,
    pub max_iters: usize,
    /// A window counts as one eigenvalue when its residual is below this.
    pub accept_tol: f64,
    /// Required distance from the window value to every other eigenvalue.
    pub gap_tol: f64,
    /// Minimum magnitude of an edge entry.
    pub pattern_floor: f64,
    /// Minimum edge magnitude for the search to report a success. Near-
    /// solutions with an edge driven toward zero approximate a matrix of a
    /// subgraph, whose multiplicity can exceed that of `G`; this margin
    /// above `pattern_floor` keeps them from counting.
    pub accept_floor: f64,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { restarts: 32, max_iters: 400, accept_tol: 1e-16, gap_tol: 1e-4, pattern_floor: 1e-3, accept_floor: 1e-2, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RealizationResult {
    /// Row-major `n x n` symmetric matrix with graph `G`.
    pub matrix: Vec<Vec<f64>>,
    pub target_corank: usize,
    /// Variance residual of the chosen window.
    pub residual: f64,
    /// The repeated eigenvalue (window mean).
    pub shift: f64,
    /// Smallest distance from `shift` to an eigenvalue outside the window;
    /// infinite when the window is the whole spectrum.
    pub spectral_gap: f64,
    /// Seed of the successful restart.
    pub seed: u64,
    pub iterations: usize,
}

impl RealizationResult {
    pub fn dmatrix(&self) -> DMatrix<f64> {
        let n = self.matrix.len();
        DMatrix::from_fn(n, n, |i, j| self.matrix[i][j])
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleVerdict {
    /// Largest `m` reached by consecutive successes from `m = 1`.
    pub m_attained: usize,
    /// `levels[k]` is the outcome for `m = k + 1`.
    pub levels: Vec<Option<RealizationResult>>,
    pub restarts_used: usize,
    pub iterations_used: usize,
}

/// Free parameters of a matrix with graph `G`: the diagonal, then one entry
/// per edge.
#[derive(Debug, Clone)]
pub struct Objective {
    n: usize,
    edges: Vec<(usize, usize)>,
    m: usize,
}

/// Spectral summary at a point.
#[derive(Debug, Clone)]
pub struct WindowEval {
    pub residual: f64,
    pub shift: f64,
    pub gap: f64,
    /// First index of the window in the ascending spectrum.
    pub start: usize,
    pub eigenvalues: Vec<f64>,
    /// Columns are eigenvectors, matching `eigenvalues`.
    pub eigenvectors: DMatrix<f64>,
}

impl Objective {
    pub fn new(g: &Graph, m: usize) -> Self {
        assert!(m >= 1 && m <= g.n(), "target corank out of range");
        Objective { n: g.n(), edges: g.edges(), m }
    }

    pub fn dim(&self) -> usize {
        self.n + self.edges.len()
    }

    pub fn matrix(&self, x: &[f64]) -> DMatrix<f64> {
        let mut a = DMatrix::zeros(self.n, self.n);
        for i in 0..self.n {
            a[(i, i)] = x[i];
        }
        for (k, &(u, v)) in self.edges.iter().enumerate() {
            a[(u, v)] = x[self.n + k];
            a[(v, u)] = x[self.n + k];
        }
        a
    }

    pub fn params(&self, a: &DMatrix<f64>) -> Vec<f64> {
        (0..self.n)
            .map(|i| a[(i, i)])
            .chain(self.edges.iter().map(|&(u, v)| a[(u, v)]))
            .collect()
    }

    pub fn evaluate(&self, x: &[f64]) -> WindowEval {
        let eig = SymmetricEigen::new(self.matrix(x));
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
        let lam: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
        let vecs = DMatrix::from_fn(self.n, self.n, |r, c| eig.eigenvectors[(r, order[c])]);
        let m = self.m;
        let (mut best, mut best_start, mut best_mean) = (f64::INFINITY, 0, 0.0);
        for s in 0..=self.n - m {
            let mean = lam[s..s + m].iter().sum::<f64>() / m as f64;
            let var: f64 = lam[s..s + m].iter().map(|l| (l - mean).powi(2)).sum();
            if var < best {
                (best, best_start, best_mean) = (var, s, mean);
            }
        }
        let gap = (0..self.n)
            .filter(|&i| i < best_start || i >= best_start + m)
            .map(|i| (lam[i] - best_mean).abs())
            .fold(f64::INFINITY, f64::min);
        WindowEval { residual: best, shift: best_mean, gap, start: best_start, eigenvalues: lam, eigenvectors: vecs }
    }

    pub fn value(&self, x: &[f64]) -> f64 {
        self.evaluate(x).residual
    }

    /// Value and gradient with respect to the parameters. With simple
    /// eigenvalues `∂λ_i/∂a_kk = v_ik²` and `∂λ_i/∂a_kl = 2 v_ik v_il` for an
    /// edge; the mean's own derivative cancels in the variance.
    pub fn value_and_gradient(&self, x: &[f64]) -> (f64, Vec<f64>) {
        let e = self.evaluate(x);
        let mut grad = vec![0.0; self.dim()];
        for i in e.start..e.start + self.m {
            let w = 2.0 * (e.eigenvalues[i] - e.shift);
            let v = e.eigenvectors.column(i);
            for k in 0..self.n {
                grad[k] += w * v[k] * v[k];
            }
            for (p, &(a, b)) in self.edges.iter().enumerate() {
                grad[self.n + p] += w * 2.0 * v[a] * v[b];
            }
        }
        (e.residual, grad)
    }

    /// Minimum-norm solution of the linearized cluster equations
    /// `Vᵀ ΔA V - δt I = -diag(λ_W - t)` over the window `W`, as a
    /// parameter step.
    fn newton_step(&self, e: &WindowEval) -> Option<Vec<f64>> {
        let m = self.m;
        let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i..m).map(move |j| (i, j))).collect();
        let cols = self.dim() + 1;
        let mut jac = DMatrix::zeros(pairs.len(), cols);
        let mut rhs = DVector::zeros(pairs.len());
        let v = |i: usize, k: usize| e.eigenvectors[(k, e.start + i)];
        for (r, &(i, j)) in pairs.iter().enumerate() {
            for k in 0..self.n {
                jac[(r, k)] = v(i, k) * v(j, k);
            }
            for (p, &(a, b)) in self.edges.iter().enumerate() {
                jac[(r, self.n + p)] = v(i, a) * v(j, b) + v(i, b) * v(j, a);
            }
            if i == j {
                jac[(r, cols - 1)] = -1.0;
                rhs[r] = -(e.eigenvalues[e.start + i] - e.shift);
            }
        }
        let sol = jac.svd(true, true).solve(&rhs, 1e-12).ok()?;
        Some(sol.iter().take(self.dim()).copied().collect())
    }

    /// Centres the diagonal, scales to `‖A‖_F = √n`, and floors edge
    /// entries.
    fn normalize(&self, x: &mut [f64], floor: f64) {
        let n = self.n;
        let mean = x[..n].iter().sum::<f64>() / n as f64;
        for d in &mut x[..n] {
            *d -= mean;
        }
        let fro2: f64 = x[..n].iter().map(|d| d * d).sum::<f64>() + 2.0 * x[n..].iter().map(|e| e * e).sum::<f64>();
        if fro2 > 0.0 {
            let s = (n as f64 / fro2).sqrt();
            for v in x.iter_mut() {
                *v *= s;
            }
        }
        for e in &mut x[n..] {
            if e.abs() < floor {
                *e = if *e < 0.0 { -floor } else { floor };
            }
        }
    }
}

fn uniform_entry(rng: &mut ChaCha8Rng) -> f64 {
    let v = rng.gen_range(0.1..2.0);
    if rng.gen_bool(0.5) {
        v
    } else {
        -v
    }
}

/// Searches for a matrix with graph `g` having an eigenvalue of
/// multiplicity `m`. Restart `k` uses seed `cfg.seed + k`; the first
/// successful restart is returned.
pub fn maximize_nullity(g: &Graph, m: usize, cfg: &OracleConfig) -> Option<RealizationResult> {
    maximize_nullity_counted(g, m, cfg).0
}

fn maximize_nullity_counted(g: &Graph, m: usize, cfg: &OracleConfig) -> (Option<RealizationResult>, usize, usize) {
    let n = g.n();
    if m == 0 || m > n {
        return (None, 0, 0);
    }
    let obj = Objective::new(g, m);
    let mut iters_total = 0;
    for k in 0..cfg.restarts {
        let seed = cfg.seed.wrapping_add(k as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (found, iters) = run_restart(&obj, cfg, &mut rng);
        iters_total += iters;
        if let Some(x) = found {
            let e = obj.evaluate(&x);
            let a = obj.matrix(&x);
            let result = RealizationResult {
                matrix: (0..n).map(|i| (0..n).map(|j| a[(i, j)]).collect()).collect(),
                target_corank: m,
                residual: e.residual,
                shift: e.shift,
                spectral_gap: e.gap,
                seed,
                iterations: iters,
            };
            return (Some(result), k + 1, iters_total);
        }
    }
    (None, cfg.restarts, iters_total)
}

/// Iterations without the residual halving before a restart counts as
/// stalled.
const PATIENCE: usize = 25;
const MAX_KICKS: usize = 8;

fn run_restart(obj: &Objective, cfg: &OracleConfig, rng: &mut ChaCha8Rng) -> (Option<Vec<f64>>, usize) {
    let mut x: Vec<f64> = (0..obj.dim()).map(|_| uniform_entry(rng)).collect();
    obj.normalize(&mut x, cfg.pattern_floor);
    let mut step = 1.0;
    let mut kicks = 0;
    let (mut best, mut best_it) = (f64::INFINITY, 0);
    for it in 0..cfg.max_iters {
        let e = obj.evaluate(&x);
        let clear = x[obj.n..].iter().all(|v| v.abs() >= cfg.accept_floor);
        if e.residual < cfg.accept_tol && e.gap > cfg.gap_tol && clear {
            return (Some(x), it);
        }
        if e.residual < 0.5 * best {
            (best, best_it) = (e.residual, it);
        }
        let next = if e.residual < cfg.accept_tol || it - best_it > PATIENCE {
            // a larger cluster than asked for, or no progress
            None
        } else {
            try_newton(obj, &x, &e, cfg).or_else(|| gradient_step(obj, &x, e.residual, &mut step, cfg))
        };
        match next {
            Some(n) => x = n,
            None => {
                kicks += 1;
                if kicks > MAX_KICKS {
                    return (None, it);
                }
                kick(obj, &mut x, cfg, rng);
                step = 1.0;
                (best, best_it) = (f64::INFINITY, it);
            }
        }
    }
    (None, cfg.max_iters)
}

/// Escapes a stall. The usual cause is an edge entry pushed to the floor
/// because the nearest solution lies on the boundary of the class (a
/// subgraph); such entries are sent through zero to the other sign. With no
/// small entry, every parameter is jittered instead.
fn kick(obj: &Objective, x: &mut [f64], cfg: &OracleConfig, rng: &mut ChaCha8Rng) {
    let pinned: Vec<usize> = (obj.n..x.len()).filter(|&k| x[k].abs() < cfg.accept_floor).collect();
    if pinned.is_empty() {
        for v in x.iter_mut() {
            *v += 1e-1 * rng.gen_range(-1.0..1.0);
        }
    } else {
        for k in pinned {
            x[k] = -x[k].signum() * rng.gen_range(0.2..1.0);
        }
    }
    obj.normalize(x, cfg.pattern_floor);
}

fn try_newton(obj: &Objective, x: &[f64], e: &WindowEval, cfg: &OracleConfig) -> Option<Vec<f64>> {
    let d = obj.newton_step(e)?;
    let mut alpha = 1.0;
    for _ in 0..8 {
        let mut trial: Vec<f64> = x.iter().zip(&d).map(|(a, b)| a + alpha * b).collect();
        obj.normalize(&mut trial, cfg.pattern_floor);
        if obj.value(&trial) < 0.5 * e.residual {
            return Some(trial);
        }
        alpha *= 0.5;
    }
    None
}

fn gradient_step(obj: &Objective, x: &[f64], f0: f64, step: &mut f64, cfg: &OracleConfig) -> Option<Vec<f64>> {
    let (_, g) = obj.value_and_gradient(x);
    let g2: f64 = g.iter().map(|v| v * v).sum();
    if g2 == 0.0 {
        return None;
    }
    let mut s = *step;
    for _ in 0..40 {
        let mut trial: Vec<f64> = x.iter().zip(&g).map(|(a, b)| a - s * b).collect();
        obj.normalize(&mut trial, cfg.pattern_floor);
        if obj.value(&trial) <= f0 - 1e-4 * s * g2 {
            *step = (s * 2.0).min(1e3);
            return Some(trial);
        }
        s *= 0.5;
    }
    None
}

/// Runs [`maximize_nullity`] for `m = 1, 2, ...` up to `cap` (or `n`) and
/// stops at the first failure. The empty graph has `M = 0`.
pub fn estimate_m(g: &Graph, cfg: &OracleConfig, cap: Option<usize>) -> OracleVerdict {
    let top = cap.map_or(g.n(), |c| c.min(g.n()));
    let mut verdict = OracleVerdict { m_attained: 0, levels: Vec::new(), restarts_used: 0, iterations_used: 0 };
    for m in 1..=top {
        let (r, restarts, iters) = maximize_nullity_counted(g, m, cfg);
        verdict.restarts_used += restarts;
        verdict.iterations_used += iters;
        let ok = r.is_some();
        verdict.levels.push(r);
        if !ok {
            break;
        }
        verdict.m_attained = m;
    }
    verdict
}

/// Re-checks a realization with the default tolerances.
pub fn verify_corank(a: &DMatrix<f64>, g: &Graph, m: usize) -> bool {
    verify_corank_with(a, g, m, &OracleConfig::default())
}

/// Pattern compliance (edge entries at least `pattern_floor` in magnitude,
/// exact zeros elsewhere, symmetry), residual below `accept_tol` and gap
/// above `gap_tol` for the best window of `m` eigenvalues.
pub fn verify_corank_with(a: &DMatrix<f64>, g: &Graph, m: usize, cfg: &OracleConfig) -> bool {
    let n = g.n();
    if a.nrows() != n || a.ncols() != n || m == 0 || m > n {
        return false;
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if a[(i, j)] != a[(j, i)] {
                return false;
            }
            let ok = if g.has_edge(i, j) { a[(i, j)].abs() >= cfg.pattern_floor } else { a[(i, j)] == 0.0 };
            if !ok {
                return false;
            }
        }
    }
    let obj = Objective::new(g, m);
    let e = obj.evaluate(&obj.params(a));
    e.residual < cfg.accept_tol && e.gap > cfg.gap_tol
}
