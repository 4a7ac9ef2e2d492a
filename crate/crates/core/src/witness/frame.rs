//! Block split `A = [A11 A12; A12ᵀ A22]` with `A22` invertible, used by the
//! corank-three constructions: `rank A = rank A22 + rank(A11 - C)` where
//! `C = A12 A22⁻¹ A12ᵀ`.

use std::collections::VecDeque;

use num_traits::{One, Zero};
use rand::Rng;

use super::rational::{det, matmul, random_nonzero, random_positive, solve, transpose, RationalMatrix, Q};
use crate::graph::Graph;

#[derive(Debug, Clone)]
pub struct SchurFrame {
    /// Vertices of the leading block, in order.
    pub labels: Vec<usize>,
    /// The remaining vertices, increasing.
    pub rest: Vec<usize>,
    /// `|labels| x |rest|`, nonzero exactly at edges.
    pub a12: Vec<Vec<Q>>,
    /// `|rest| x |rest|`, invertible.
    pub a22: Vec<Vec<Q>>,
    pub det_a22: Q,
    /// `A12 A22⁻¹ A12ᵀ`.
    pub c: Vec<Vec<Q>>,
}

impl SchurFrame {
    /// Frame with `A22 = I - mu B22` where `B22` carries random positive
    /// integers at the edges among `rest` (zero diagonal) and
    /// `mu = 1 / k` for a random `k`; `A12` carries random nonzero integers
    /// at edges. `None` if `A22` happens to be singular.
    pub fn random<R: Rng + ?Sized>(g: &Graph, labels: &[usize], rng: &mut R, range: i64) -> Option<Self> {
        let rest = complement(g.n(), labels);
        let mu = random_positive(rng, range).recip();
        let a22: Vec<Vec<Q>> = (0..rest.len())
            .map(|i| {
                (0..rest.len())
                    .map(|j| if i == j { Q::one() } else { Q::zero() })
                    .collect()
            })
            .collect();
        let mut a22 = a22;
        for i in 0..rest.len() {
            for j in i + 1..rest.len() {
                if g.has_edge(rest[i], rest[j]) {
                    let v = -(&mu * random_positive(rng, range));
                    a22[i][j] = v.clone();
                    a22[j][i] = v;
                }
            }
        }
        let a12 = random_a12(g, labels, &rest, |r: &mut R| random_nonzero(r, range), rng);
        Self::from_blocks(labels.to_vec(), rest, a12, a22)
    }

    /// Frame from given blocks; `None` if `a22` is singular.
    pub fn from_blocks(labels: Vec<usize>, rest: Vec<usize>, a12: Vec<Vec<Q>>, a22: Vec<Vec<Q>>) -> Option<Self> {
        let det_a22 = det(&a22);
        if det_a22.is_zero() {
            return None;
        }
        let c = if rest.is_empty() {
            vec![vec![Q::zero(); labels.len()]; labels.len()]
        } else {
            let x = solve(&a22, &transpose(&a12))?;
            matmul(&a12, &x)
        };
        Some(SchurFrame { labels, rest, a12, a22, det_a22, c })
    }

    /// Whether `g` has a path of length at least two from `labels[i]` to
    /// `labels[j]` with every interior vertex outside `labels`.
    pub fn external_path(&self, g: &Graph, i: usize, j: usize) -> bool {
        let in_rest = {
            let mut m = vec![false; g.n()];
            for &r in &self.rest {
                m[r] = true;
            }
            m
        };
        let (s, t) = (self.labels[i], self.labels[j]);
        let mut seen = vec![false; g.n()];
        let mut queue: VecDeque<usize> = g.neighbors(s).iter().copied().filter(|&x| in_rest[x]).collect();
        for &x in &queue {
            seen[x] = true;
        }
        while let Some(x) = queue.pop_front() {
            if g.has_edge(x, t) {
                return true;
            }
            for &y in g.neighbors(x) {
                if in_rest[y] && !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        false
    }

    /// Every off-diagonal `c_ij` whose pair is joined by an external path
    /// is nonzero.
    pub fn external_paths_give_nonzero_c(&self, g: &Graph) -> bool {
        let l = self.labels.len();
        (0..l).all(|i| (i + 1..l).all(|j| !self.external_path(g, i, j) || !self.c[i][j].is_zero()))
    }

    /// Full `n x n` matrix with the given leading block.
    pub fn assemble(&self, n: usize, a11: &[Vec<Q>]) -> RationalMatrix {
        let mut a = RationalMatrix::zeros(n);
        for (i, &x) in self.labels.iter().enumerate() {
            for (j, &y) in self.labels.iter().enumerate() {
                a.set(x, y, a11[i][j].clone());
            }
            for (j, &y) in self.rest.iter().enumerate() {
                a.set_sym(x, y, self.a12[i][j].clone());
            }
        }
        for (i, &x) in self.rest.iter().enumerate() {
            for (j, &y) in self.rest.iter().enumerate() {
                a.set(x, y, self.a22[i][j].clone());
            }
        }
        a
    }
}

pub(crate) fn complement(n: usize, labels: &[usize]) -> Vec<usize> {
    (0..n).filter(|v| !labels.contains(v)).collect()
}

pub(crate) fn random_a12<R: Rng + ?Sized>(
    g: &Graph,
    labels: &[usize],
    rest: &[usize],
    mut draw: impl FnMut(&mut R) -> Q,
    rng: &mut R,
) -> Vec<Vec<Q>> {
    labels
        .iter()
        .map(|&x| {
            rest.iter()
                .map(|&y| if g.has_edge(x, y) { draw(rng) } else { Q::zero() })
                .collect()
        })
        .collect()
}
