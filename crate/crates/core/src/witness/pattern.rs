//! Zero–nonzero patterns and the structural rank certificate for graphs of
//! two parallel paths.

use serde::{Deserialize, Serialize};

use super::WitnessError;
use crate::graph::Graph;
use crate::recognition::ParallelPathsCover;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PatternEntry {
    /// Zero in every matrix of the class.
    StructZero,
    /// A diagonal entry; unconstrained.
    FreeDiagonal,
    /// Nonzero in every matrix of the class.
    ForcedNonzero,
}

/// The common pattern of all real symmetric matrices whose graph is `G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternMatrix {
    pub n: usize,
    pub entries: Vec<Vec<PatternEntry>>,
}

impl PatternMatrix {
    pub fn from_graph(g: &Graph) -> Self {
        let n = g.n();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            PatternEntry::FreeDiagonal
                        } else if g.has_edge(i, j) {
                            PatternEntry::ForcedNonzero
                        } else {
                            PatternEntry::StructZero
                        }
                    })
                    .collect()
            })
            .collect();
        PatternMatrix { n, entries }
    }

    pub fn get(&self, i: usize, j: usize) -> PatternEntry {
        self.entries[i][j]
    }
}

/// The pattern of `g` with rows and columns numbered along the cover: the
/// vertex at position `i` is `order[i]`, with `p1` first and `p2` after it.
/// The diagonal blocks are then irreducible tridiagonal and the
/// off-diagonal block is a staircase.
pub fn parallel_paths_pattern(
    g: &Graph,
    cover: &ParallelPathsCover,
) -> Result<(PatternMatrix, Vec<usize>), WitnessError> {
    if !cover.is_valid(g) {
        return Err(WitnessError::InvalidCover);
    }
    let order = cover.numbering();
    let renumbered = {
        let mut pos = vec![0; g.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        g.relabel(&pos)
    };
    Ok((PatternMatrix::from_graph(&renumbered), order))
}

/// Structural proof that every matrix with graph `G` has rank at least
/// `n - 2`: after deleting two rows and two columns, ordering the rest by
/// `row_order` and `col_order` gives a lower-triangular pattern whose
/// diagonal consists of edge positions. All indices are vertex labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangularCertificate {
    pub deleted_rows: [usize; 2],
    pub deleted_cols: [usize; 2],
    pub row_order: Vec<usize>,
    pub col_order: Vec<usize>,
}

/// Builds the certificate for a graph of two parallel paths.
///
/// Deletes the rows of the last vertices of both paths and the columns of
/// their first vertices, then peels: a remaining row with a single
/// remaining nonzero goes to the front, a remaining column with a single
/// remaining nonzero goes to the back. All four orientations of the two
/// paths are tried; if none peels completely every choice of deleted pairs
/// is searched.
pub fn lower_bound_certificate(g: &Graph, cover: &ParallelPathsCover) -> Result<TriangularCertificate, WitnessError> {
    if !cover.is_valid(g) {
        return Err(WitnessError::InvalidCover);
    }
    let rev = |p: &Vec<usize>| p.iter().rev().copied().collect::<Vec<_>>();
    for (p1, p2) in [
        (cover.p1.clone(), cover.p2.clone()),
        (rev(&cover.p1), rev(&cover.p2)),
        (cover.p1.clone(), rev(&cover.p2)),
        (rev(&cover.p1), cover.p2.clone()),
    ] {
        let rows = [*p1.last().unwrap(), *p2.last().unwrap()];
        let cols = [p1[0], p2[0]];
        if let Some(c) = peel(g, rows, cols) {
            return Ok(c);
        }
    }
    find_triangular_certificate(g).ok_or_else(|| WitnessError::Degenerate("no triangular submatrix of order n - 2".into()))
}

/// Searches every choice of two deleted rows and two deleted columns for a
/// certificate, without needing a cover. `None` for graphs with fewer than
/// three vertices or when no choice peels completely.
pub fn find_triangular_certificate(g: &Graph) -> Option<TriangularCertificate> {
    let n = g.n();
    for r0 in 0..n {
        for r1 in r0 + 1..n {
            for c0 in 0..n {
                for c1 in c0 + 1..n {
                    if let Some(c) = peel(g, [r0, r1], [c0, c1]) {
                        return Some(c);
                    }
                }
            }
        }
    }
    None
}

fn peel(g: &Graph, rows: [usize; 2], cols: [usize; 2]) -> Option<TriangularCertificate> {
    let n = g.n();
    if rows[0] == rows[1] || cols[0] == cols[1] {
        return None;
    }
    let nz = |r: usize, c: usize| r != c && g.has_edge(r, c);
    let diag = |r: usize, c: usize| r == c;
    let mut row_left: Vec<usize> = (0..n).filter(|v| !rows.contains(v)).collect();
    let mut col_left: Vec<usize> = (0..n).filter(|v| !cols.contains(v)).collect();
    let (mut front_r, mut front_c, mut back_r, mut back_c) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    while !row_left.is_empty() {
        // a row whose only non-structural-zero remaining entry is an edge
        let row_pick = row_left.iter().enumerate().find_map(|(ri, &r)| {
            let live: Vec<usize> = col_left.iter().copied().filter(|&c| nz(r, c) || diag(r, c)).collect();
            (live.len() == 1 && nz(r, live[0])).then(|| (ri, live[0]))
        });
        if let Some((ri, c)) = row_pick {
            let r = row_left.remove(ri);
            col_left.retain(|&x| x != c);
            front_r.push(r);
            front_c.push(c);
            continue;
        }
        let col_pick = col_left.iter().enumerate().find_map(|(ci, &c)| {
            let live: Vec<usize> = row_left.iter().copied().filter(|&r| nz(r, c) || diag(r, c)).collect();
            (live.len() == 1 && nz(live[0], c)).then(|| (ci, live[0]))
        });
        let (ci, r) = col_pick?;
        let c = col_left.remove(ci);
        row_left.retain(|&x| x != r);
        back_r.push(r);
        back_c.push(c);
    }
    front_r.extend(back_r.into_iter().rev());
    front_c.extend(back_c.into_iter().rev());
    Some(TriangularCertificate { deleted_rows: rows, deleted_cols: cols, row_order: front_r, col_order: front_c })
}

/// Checks a certificate against the pattern of `g` alone: the orders are
/// permutations of the undeleted indices, every entry strictly above the
/// diagonal is a structural zero, and every diagonal entry is an edge.
pub fn verify_certificate(g: &Graph, cert: &TriangularCertificate) -> Result<bool, WitnessError> {
    let n = g.n();
    let all = cert
        .deleted_rows
        .iter()
        .chain(&cert.deleted_cols)
        .chain(&cert.row_order)
        .chain(&cert.col_order);
    for &x in all {
        if x >= n {
            return Err(WitnessError::OutOfRange { index: x, n });
        }
    }
    let is_complement = |deleted: &[usize; 2], order: &[usize]| {
        let mut seen = vec![false; n];
        for &x in deleted.iter().chain(order) {
            if seen[x] {
                return false;
            }
            seen[x] = true;
        }
        seen.iter().all(|&s| s)
    };
    if !is_complement(&cert.deleted_rows, &cert.row_order) || !is_complement(&cert.deleted_cols, &cert.col_order) {
        return Ok(false);
    }
    let p = PatternMatrix::from_graph(g);
    for (i, &r) in cert.row_order.iter().enumerate() {
        if p.get(r, cert.col_order[i]) != PatternEntry::ForcedNonzero {
            return Ok(false);
        }
        if cert.col_order[i + 1..].iter().any(|&c| p.get(r, c) != PatternEntry::StructZero) {
            return Ok(false);
        }
    }
    Ok(true)
}
