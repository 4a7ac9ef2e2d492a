//! Moving matrices between a graph and the graph with a pendant vertex
//! removed or an edge subdivision undone, tracking the rank change.

use num_traits::Zero;

use super::rational::{RationalMatrix, Q};
use super::WitnessError;
use crate::graph::Graph;

/// How a matrix on a smaller graph is lifted over a pendant `v` with
/// neighbor `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PendantLift {
    /// From `B` on `G - v`: `A_vv = x`, `A_uv = y`, `A_uu = B_uu + y²/x`.
    /// The rank grows by one.
    KeepNeighbor { x: Q, y: Q },
    /// From `B` on `G - {u, v}`: `A_uv = x`, `A_vv = A_uu = 0`, and `A_uw = y`
    /// for the other neighbors `w` of `u`. The rank grows by two.
    DropBoth { x: Q, y: Q },
}

/// Lifts `b` to a matrix on `g`, where `v` is a pendant vertex of `g`.
/// Vertices of `b` are those of `g` without `v` (resp. without `v` and its
/// neighbor), in increasing order.
pub fn pendant_lift(b: &RationalMatrix, g: &Graph, v: usize, lift: &PendantLift) -> Result<RationalMatrix, WitnessError> {
    if v >= g.n() {
        return Err(WitnessError::OutOfRange { index: v, n: g.n() });
    }
    if g.degree(v) != 1 {
        return Err(WitnessError::Precondition(format!("vertex {v} is not a pendant")));
    }
    let u = g.neighbors(v)[0];
    let dropped: Vec<usize> = match lift {
        PendantLift::KeepNeighbor { .. } => vec![v],
        PendantLift::DropBoth { .. } => vec![u, v],
    };
    let (small, map) = g.remove_vertices(&dropped);
    if !b.has_pattern(&small) {
        return Err(WitnessError::PatternMismatch("input does not follow the smaller graph".into()));
    }
    let mut a = RationalMatrix::zeros(g.n());
    for (i, &x) in map.iter().enumerate() {
        for (j, &y) in map.iter().enumerate() {
            a.set(x, y, b.get(i, j).clone());
        }
    }
    match lift {
        PendantLift::KeepNeighbor { x, y } => {
            if x.is_zero() || y.is_zero() {
                return Err(WitnessError::ZeroScalar);
            }
            a.set(v, v, x.clone());
            a.set_sym(u, v, y.clone());
            let uu = a.get(u, u) + y * y / x;
            a.set(u, u, uu);
        }
        PendantLift::DropBoth { x, y } => {
            if x.is_zero() || y.is_zero() {
                return Err(WitnessError::ZeroScalar);
            }
            a.set_sym(u, v, x.clone());
            for &w in g.neighbors(u) {
                if w != v {
                    a.set_sym(u, w, y.clone());
                }
            }
        }
    }
    Ok(a)
}

/// Inverse of [`pendant_lift`]: from `a` on `g` and a pendant `v`, returns
/// the smaller matrix and the lift that rebuilds `a` (for `DropBoth`, when
/// `u`'s remaining entries all equal `y` and `A_uu = 0`).
pub fn pendant_reduce(a: &RationalMatrix, g: &Graph, v: usize) -> Result<(RationalMatrix, PendantLift), WitnessError> {
    if v >= g.n() {
        return Err(WitnessError::OutOfRange { index: v, n: g.n() });
    }
    if g.degree(v) != 1 {
        return Err(WitnessError::Precondition(format!("vertex {v} is not a pendant")));
    }
    if !a.has_pattern(g) {
        return Err(WitnessError::PatternMismatch("input does not follow the graph".into()));
    }
    let u = g.neighbors(v)[0];
    let x = a.get(v, v).clone();
    if !x.is_zero() {
        let y = a.get(u, v).clone();
        let keep: Vec<usize> = (0..g.n()).filter(|&w| w != v).collect();
        let mut b = a.principal(&keep);
        let iu = keep.binary_search(&u).unwrap();
        let uu = b.get(iu, iu) - &y * &y / &x;
        b.set(iu, iu, uu);
        Ok((b, PendantLift::KeepNeighbor { x, y }))
    } else {
        let keep: Vec<usize> = (0..g.n()).filter(|&w| w != v && w != u).collect();
        let y = g
            .neighbors(u)
            .iter()
            .find(|&&w| w != v)
            .map_or_else(|| Q::from_integer(1.into()), |&w| a.get(u, w).clone());
        Ok((a.principal(&keep), PendantLift::DropBoth { x: a.get(u, v).clone(), y }))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdivisionProjection {
    /// Matrix on the graph with the subdivision undone.
    pub matrix: RationalMatrix,
    pub graph: Graph,
    /// Label in `graph` -> label in the subdivided graph.
    pub map: Vec<usize>,
    /// Whether the diagonal entry at the subdivision vertex was zero and
    /// had to be shifted by one first.
    pub shifted: bool,
    /// `rank A' - rank B` for the input `A'` and output `B`.
    pub rank_delta: isize,
    /// `rank(A' + e_w e_wᵀ) - rank A'` when shifted, else 0.
    pub shift_increment: isize,
}

/// Projects `a` on a graph `g` in which `w` subdivides an edge (degree two,
/// non-adjacent neighbors) to a matrix on the graph with `w` suppressed,
/// by eliminating `w` against its diagonal entry. A zero diagonal entry is
/// first shifted to one.
pub fn subdivision_project(a: &RationalMatrix, g: &Graph, w: usize) -> Result<SubdivisionProjection, WitnessError> {
    if w >= g.n() {
        return Err(WitnessError::OutOfRange { index: w, n: g.n() });
    }
    if !a.has_pattern(g) {
        return Err(WitnessError::PatternMismatch("input does not follow the graph".into()));
    }
    let (graph, map) = g
        .suppress_vertex(w)
        .ok_or_else(|| WitnessError::Precondition(format!("vertex {w} does not subdivide an edge")))?;
    let rank_a = a.rank() as isize;
    let mut shifted_a = a.clone();
    let shifted = a.get(w, w).is_zero();
    if shifted {
        shifted_a.set(w, w, Q::from_integer(1.into()));
    }
    let shift_increment = shifted_a.rank() as isize - rank_a;
    let x = shifted_a.get(w, w).clone();
    let mut b = shifted_a.principal(&map);
    for (i, &p) in map.iter().enumerate() {
        for (j, &r) in map.iter().enumerate() {
            let v = b.get(i, j) - shifted_a.get(p, w) * shifted_a.get(r, w) / &x;
            b.set(i, j, v);
        }
    }
    let rank_delta = rank_a - b.rank() as isize;
    Ok(SubdivisionProjection { matrix: b, graph, map, shifted, rank_delta, shift_increment })
}

/// Lifts `b` on `g` to the graph with edge `v1 v2` subdivided (new vertex
/// labelled `n`), with rank one higher: `A'_ww = x`, `A'_{w v1} = a1`,
/// `A'_{w v2} = -x B_{v1 v2} / a1`, and `A'[G] = B + a aᵀ / x`.
pub fn subdivision_lift(
    b: &RationalMatrix,
    g: &Graph,
    v1: usize,
    v2: usize,
    x: &Q,
    a1: &Q,
) -> Result<(RationalMatrix, Graph), WitnessError> {
    if !b.has_pattern(g) {
        return Err(WitnessError::PatternMismatch("input does not follow the graph".into()));
    }
    if x.is_zero() || a1.is_zero() {
        return Err(WitnessError::ZeroScalar);
    }
    let g2 = g
        .subdivide_edge(v1, v2)
        .map_err(|e| WitnessError::Precondition(e.to_string()))?;
    let n = g.n();
    let a2 = -(x * b.get(v1, v2)) / a1;
    let mut col = vec![Q::zero(); n];
    col[v1] = a1.clone();
    col[v2] = a2;
    let mut a = RationalMatrix::zeros(n + 1);
    for i in 0..n {
        for j in 0..n {
            a.set(i, j, b.get(i, j) + &col[i] * &col[j] / x);
        }
        a.set_sym(i, n, col[i].clone());
    }
    a.set(n, n, x.clone());
    Ok((a, g2))
}
