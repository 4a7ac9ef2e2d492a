//! Decomposition of a graph into cycles glued one after another along
//! single edges, each gluing edge used once.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use super::RecognitionError;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArticulationEdge {
    /// `(u, v)` with `u < v`.
    pub edge: (usize, usize),
    /// Indices into [`SeacDecomposition::cycles`] of the two cycles that
    /// share the edge.
    pub cycles: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeacDecomposition {
    /// Constituent cycles, each in cyclic vertex order.
    pub cycles: Vec<Vec<usize>>,
    pub articulation_edges: Vec<ArticulationEdge>,
    /// `neighbors[i]` lists the cycles sharing an articulation edge with
    /// cycle `i`.
    pub neighbors: Vec<Vec<usize>>,
    /// Cycles with at most one neighbor.
    pub terminal_cycles: Vec<usize>,
    /// Vertices lying on every terminal cycle.
    pub distinguished: Vec<usize>,
    /// Every cycle has at most two neighbors.
    pub is_lseac: bool,
}

impl SeacDecomposition {
    /// Cycles that contain `v`.
    pub fn cycles_of(&self, v: usize) -> Vec<usize> {
        (0..self.cycles.len())
            .filter(|&i| self.cycles[i].contains(&v))
            .collect()
    }
}

/// Decomposes a connected graph of minimum degree two into its
/// constituent cycles, or returns `None` if it is not built that way.
///
/// Works by repeatedly removing an "ear": a maximal run of degree-two
/// vertices whose two (distinct) ends are adjacent. The ear together with
/// the closing edge is one constituent cycle and the closing edge is an
/// articulation edge.
pub fn seac_decompose(g: &Graph) -> Result<Option<SeacDecomposition>, RecognitionError> {
    if g.n() == 0 {
        return Err(RecognitionError::Empty);
    }
    if !g.is_connected() {
        return Err(RecognitionError::Disconnected);
    }
    if g.min_degree() < 2 {
        return Err(RecognitionError::NotC2);
    }
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    let mut alive_count = n;
    let mut used: HashSet<(usize, usize)> = HashSet::new();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut closing: Vec<(usize, usize)> = Vec::new();

    loop {
        if (0..n).filter(|&v| alive[v]).all(|v| adj[v].len() == 2) {
            let start = (0..n).find(|&v| alive[v]).unwrap();
            let cyc = walk_cycle(&adj, start);
            if cyc.len() != alive_count {
                return Ok(None);
            }
            cycles.push(cyc);
            break;
        }
        let Some((ear, u, w)) = find_ear(&adj, &alive) else {
            return Ok(None);
        };
        if !used.insert((u.min(w), u.max(w))) {
            return Ok(None);
        }
        let mut face = vec![u];
        face.extend(&ear);
        face.push(w);
        for &x in &ear {
            for y in std::mem::take(&mut adj[x]) {
                adj[y].remove(&x);
            }
            alive[x] = false;
            alive_count -= 1;
        }
        if adj[u].len() < 2 || adj[w].len() < 2 {
            return Ok(None);
        }
        cycles.push(face);
        closing.push((u.min(w), u.max(w)));
    }

    let on_boundary = |c: &[usize], a: usize, b: usize| {
        (0..c.len()).any(|i| {
            let (x, y) = (c[i], c[(i + 1) % c.len()]);
            (x, y) == (a, b) || (x, y) == (b, a)
        })
    };
    let mut articulation_edges = Vec::new();
    let mut neighbors = vec![Vec::new(); cycles.len()];
    for (i, &(a, b)) in closing.iter().enumerate() {
        let others: Vec<usize> = (i + 1..cycles.len())
            .filter(|&j| on_boundary(&cycles[j], a, b))
            .collect();
        let [j] = others[..] else { return Ok(None) };
        articulation_edges.push(ArticulationEdge { edge: (a, b), cycles: (i, j) });
        neighbors[i].push(j);
        neighbors[j].push(i);
    }
    for nb in &mut neighbors {
        nb.sort_unstable();
    }
    let terminal_cycles: Vec<usize> = (0..cycles.len()).filter(|&i| neighbors[i].len() <= 1).collect();
    let distinguished: Vec<usize> = (0..n)
        .filter(|v| terminal_cycles.iter().all(|&t| cycles[t].contains(v)))
        .collect();
    let is_lseac = neighbors.iter().all(|nb| nb.len() <= 2);
    Ok(Some(SeacDecomposition {
        cycles,
        articulation_edges,
        neighbors,
        terminal_cycles,
        distinguished,
        is_lseac,
    }))
}

fn walk_cycle(adj: &[BTreeSet<usize>], start: usize) -> Vec<usize> {
    let mut cyc = vec![start];
    let mut prev = start;
    let mut cur = *adj[start].iter().next().unwrap();
    while cur != start {
        cyc.push(cur);
        let next = *adj[cur].iter().find(|&&w| w != prev).unwrap();
        prev = cur;
        cur = next;
    }
    cyc
}

/// First maximal run of degree-two vertices (in vertex order) whose ends
/// are distinct and adjacent. Returns the run in order and its two ends.
fn find_ear(adj: &[BTreeSet<usize>], alive: &[bool]) -> Option<(Vec<usize>, usize, usize)> {
    let n = adj.len();
    let mut seen = vec![false; n];
    for x in 0..n {
        if !alive[x] || adj[x].len() != 2 || seen[x] {
            continue;
        }
        let mut ends = [0usize; 2];
        let mut halves: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
        for (k, &first) in adj[x].iter().enumerate() {
            let mut prev = x;
            let mut cur = first;
            while adj[cur].len() == 2 && cur != x {
                halves[k].push(cur);
                let next = *adj[cur].iter().find(|&&w| w != prev).unwrap();
                prev = cur;
                cur = next;
            }
            ends[k] = cur;
        }
        let mut run: Vec<usize> = halves[0].iter().rev().copied().collect();
        run.push(x);
        run.extend(&halves[1]);
        for &v in &run {
            seen[v] = true;
        }
        let (u, w) = (ends[0], ends[1]);
        if u != w && adj[u].contains(&w) {
            return Some((run, u, w));
        }
    }
    None
}
