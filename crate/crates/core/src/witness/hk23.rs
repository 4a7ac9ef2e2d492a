//! Corank-three matrices for partial 2-trees containing a subdivided K2,3.
//!
//! With branch vertices `u`, `v` and `w_i` the neighbor of `v` on the `i`-th
//! path, the leading block is `L = (u, v, w1, w2, w3)`. `A22` is a strictly
//! diagonally dominant M-matrix and `A12` is positive, so `C` is positive
//! wherever an external path exists. The target Schur complement
//!
//! ```text
//! S = [ s·t²  s·t  t·y ]
//!     [ s·t   s    y   ]      y = (ã_{v w_i})_i
//!     [ t·yᵀ  yᵀ   0   ]
//! ```
//!
//! has rank two. Non-edges `u w_i` are handled by scaling the entries of
//! `A12` from `u` into the component of `w_i` in `G - {u, v}`, which moves
//! `c_{u w_i}` and nothing else outside the `{u, v}` block.

use num_traits::Zero;
use rand::Rng;

use super::frame::{complement, random_a12, SchurFrame};
use super::rational::{random_nonzero, random_positive, RationalMatrix, Q};
use super::WitnessError;
use crate::graph::Graph;
use crate::recognition::{HomeomorphKind, HomeomorphWitness};

const ATTEMPTS_PER_RANGE: usize = 100;
const RANGES: [i64; 3] = [1_000, 1_000_000, 1_000_000_000];

/// A rational matrix with graph exactly `g` and rank exactly `n - 3`. The
/// three paths of the witness must fall into distinct components of
/// `G - {u, v}`, which holds whenever `g` is a partial 2-tree.
pub fn construct_corank3_hk23<R: Rng + ?Sized>(
    g: &Graph,
    w: &HomeomorphWitness,
    rng: &mut R,
) -> Result<RationalMatrix, WitnessError> {
    if w.kind != HomeomorphKind::HK23 || !w.verify(g) {
        return Err(WitnessError::InvalidWitness("not a subdivided K2,3 of this graph".into()));
    }
    let (u, v) = (w.branch_vertices[0], w.branch_vertices[1]);
    let ws: Vec<usize> = w.paths.iter().map(|p| p[p.len() - 2]).collect();
    let (rest_graph, map) = g.remove_vertices(&[u, v]);
    let comp_sets = rest_graph.component_sets();
    let comp_of = |x: usize| {
        let local = map.binary_search(&x).unwrap();
        comp_sets.iter().position(|c| c.contains(&local)).unwrap()
    };
    let comps: Vec<usize> = ws.iter().map(|&x| comp_of(x)).collect();
    if comps[0] == comps[1] || comps[0] == comps[2] || comps[1] == comps[2] {
        return Err(WitnessError::Precondition(
            "the three paths are joined outside the branch vertices (the graph contains a subdivided K4)".into(),
        ));
    }
    let members: Vec<Vec<usize>> = comps.iter().map(|&c| comp_sets[c].iter().map(|&x| map[x]).collect()).collect();
    let labels = vec![u, v, ws[0], ws[1], ws[2]];
    for range in RANGES {
        for _ in 0..ATTEMPTS_PER_RANGE {
            if let Some(m) = attempt(g, &labels, &members, rng, range) {
                return Ok(m);
            }
        }
    }
    Err(WitnessError::Degenerate("K2,3 construction did not close".into()))
}

fn attempt<R: Rng + ?Sized>(
    g: &Graph,
    labels: &[usize],
    members: &[Vec<usize>],
    rng: &mut R,
    range: i64,
) -> Option<RationalMatrix> {
    let (u, v) = (labels[0], labels[1]);
    let rest = complement(g.n(), labels);
    let k = rest.len();
    let mut a22 = vec![vec![Q::zero(); k]; k];
    for i in 0..k {
        for j in i + 1..k {
            if g.has_edge(rest[i], rest[j]) {
                let x = -random_positive(rng, range);
                a22[i][j] = x.clone();
                a22[j][i] = x;
            }
        }
    }
    for i in 0..k {
        let off: Q = (0..k).filter(|&j| j != i).map(|j| -a22[i][j].clone()).sum();
        a22[i][i] = off + random_positive(rng, range);
    }
    let mut a12 = random_a12(g, labels, &rest, |r: &mut R| random_positive(r, range), rng);
    let frame0 = SchurFrame::from_blocks(labels.to_vec(), rest.clone(), a12.clone(), a22.clone())?;

    let mut a11 = vec![vec![Q::zero(); 5]; 5];
    let mut y = Vec::new();
    for i in 0..3 {
        let a = random_positive(rng, range);
        let yi = &a - &frame0.c[1][2 + i];
        if yi.is_zero() {
            return None;
        }
        a11[1][2 + i] = a.clone();
        a11[2 + i][1] = a;
        y.push(yi);
    }
    let t = random_nonzero(rng, range);
    for i in 0..3 {
        if g.has_edge(u, labels[2 + i]) {
            continue;
        }
        let c0 = &frame0.c[0][2 + i];
        if c0.is_zero() {
            return None;
        }
        let lambda = -(&t * &y[i]) / c0;
        for (j, &r) in rest.iter().enumerate() {
            if members[i].contains(&r) {
                a12[0][j] = &a12[0][j] * &lambda;
            }
        }
    }
    let frame = SchurFrame::from_blocks(labels.to_vec(), rest, a12, a22)?;
    let c = &frame.c;
    for i in 0..3 {
        let a = if g.has_edge(u, labels[2 + i]) { &t * &y[i] + &c[0][2 + i] } else { Q::zero() };
        if g.has_edge(u, labels[2 + i]) && a.is_zero() {
            return None;
        }
        a11[0][2 + i] = a.clone();
        a11[2 + i][0] = a;
        a11[2 + i][2 + i] = c[2 + i][2 + i].clone();
    }
    let s = if g.has_edge(u, v) {
        let s = random_nonzero(rng, range);
        let a = &s * &t + &c[0][1];
        if a.is_zero() {
            return None;
        }
        a11[0][1] = a.clone();
        a11[1][0] = a;
        s
    } else {
        -&c[0][1] / &t
    };
    a11[0][0] = &s * &t * &t + &c[0][0];
    a11[1][1] = &s + &c[1][1];
    let a = frame.assemble(g.n(), &a11);
    (a.has_pattern(g) && a.rank() + 3 == g.n()).then_some(a)
}
