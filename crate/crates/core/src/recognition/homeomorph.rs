//! Partial 2-trees and subdivided K4 / K2,3 subgraphs.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Treewidth at most two: the graph peels away by deleting vertices of
/// degree at most one, and degree-two vertices after joining their two
/// neighbors.
pub fn is_partial_two_tree(g: &Graph) -> bool {
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| adj[v].len() <= 2).collect();
    let mut removed = vec![false; n];
    let mut left = n;
    while let Some(v) = queue.pop_front() {
        if removed[v] || adj[v].len() > 2 {
            continue;
        }
        removed[v] = true;
        left -= 1;
        let nb: Vec<usize> = std::mem::take(&mut adj[v]).into_iter().collect();
        for &w in &nb {
            adj[w].remove(&v);
        }
        if let [a, b] = nb[..] {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        for &w in &nb {
            if adj[w].len() <= 2 {
                queue.push_back(w);
            }
        }
    }
    left == 0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HomeomorphKind {
    #[serde(rename = "hK4")]
    HK4,
    #[serde(rename = "hK23")]
    HK23,
}

/// A subdivided K4 or K2,3 inside a host graph.
///
/// For `HK4`, `branch_vertices` holds the four original vertices and
/// `paths` the six connecting paths in the order
/// `(0,1), (0,2), (0,3), (1,2), (1,3), (2,3)` (indices into
/// `branch_vertices`), each running from the first to the second branch
/// vertex. For `HK23`, `branch_vertices` is `[u, v]` and `paths` holds the
/// three `u`–`v` paths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomeomorphWitness {
    pub kind: HomeomorphKind,
    pub branch_vertices: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

const HK4_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

impl HomeomorphWitness {
    /// Re-checks the witness against `g`: correct endpoints, every path
    /// edge present, paths internally disjoint and avoiding the branch
    /// vertices, and K2,3 paths of at least two edges.
    pub fn verify(&self, g: &Graph) -> bool {
        let b = &self.branch_vertices;
        let ends: Vec<(usize, usize)> = match self.kind {
            HomeomorphKind::HK4 if b.len() == 4 && self.paths.len() == 6 => {
                HK4_PAIRS.iter().map(|&(i, j)| (b[i], b[j])).collect()
            }
            HomeomorphKind::HK23 if b.len() == 2 && self.paths.len() == 3 => vec![(b[0], b[1]); 3],
            _ => return false,
        };
        let mut used: BTreeSet<usize> = b.iter().copied().collect();
        if used.len() != b.len() || b.iter().any(|&v| v >= g.n()) {
            return false;
        }
        for (p, &(s, t)) in self.paths.iter().zip(&ends) {
            if p.len() < 2 || p[0] != s || p[p.len() - 1] != t {
                return false;
            }
            if self.kind == HomeomorphKind::HK23 && p.len() < 3 {
                return false;
            }
            if p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return false;
            }
            for &x in &p[1..p.len() - 1] {
                if !used.insert(x) {
                    return false;
                }
            }
        }
        true
    }

    /// All vertices of the homeomorph.
    pub fn vertices(&self) -> Vec<usize> {
        let mut all: BTreeSet<usize> = self.branch_vertices.iter().copied().collect();
        for p in &self.paths {
            all.extend(p);
        }
        all.into_iter().collect()
    }

    fn hk4_path(&self, i: usize, j: usize) -> Vec<usize> {
        let k = HK4_PAIRS
            .iter()
            .position(|&p| p == (i.min(j), i.max(j)))
            .expect("branch pair");
        let p = &self.paths[k];
        if i < j {
            p.clone()
        } else {
            p.iter().rev().copied().collect()
        }
    }

    /// Case number and vertex labelling used by the corank-three
    /// construction for subdivided K4s; `None` for K2,3 witnesses.
    ///
    /// The case is one more than the number of subdivided paths among the
    /// chosen triple of branch vertices; the triple with the fewest is
    /// chosen (ties go to the triple omitting the highest-indexed branch
    /// vertex).
    pub fn hk4_labelling(&self) -> Option<Hk4Labelling> {
        if self.kind != HomeomorphKind::HK4 {
            return None;
        }
        (0..4)
            .rev()
            .filter_map(|far| self.hk4_labelling_without(far))
            .min_by_key(|l| l.case)
    }

    /// Labelling for the triple of branch vertices that omits
    /// `branch_vertices[far]`.
    pub fn hk4_labelling_without(&self, far: usize) -> Option<Hk4Labelling> {
        if self.kind != HomeomorphKind::HK4 || far >= 4 {
            return None;
        }
        let sub = |i: usize, j: usize| self.hk4_path(i, j).len() > 2;
        let t: Vec<usize> = (0..4).filter(|&x| x != far).collect();
        let count = [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]
            .iter()
            .filter(|&&(a, b)| sub(a, b))
            .count();
        let bv = |i: usize| self.branch_vertices[i];
        let second = |p: Vec<usize>| p[1];
        // (one, two, three) in the construction's numbering
        let (one, two, three) = match count {
            0 => (t[0], t[1], t[2]),
            1 => {
                let (a, b, c) = if sub(t[1], t[2]) {
                    (t[0], t[1], t[2])
                } else if sub(t[0], t[2]) {
                    (t[1], t[0], t[2])
                } else {
                    (t[2], t[0], t[1])
                };
                (a, b, c)
            }
            2 => {
                // the unsubdivided path joins `one` and `two`
                if !sub(t[0], t[1]) {
                    (t[0], t[1], t[2])
                } else if !sub(t[0], t[2]) {
                    (t[0], t[2], t[1])
                } else {
                    (t[1], t[2], t[0])
                }
            }
            _ => (t[0], t[1], t[2]),
        };
        let mut labels = vec![bv(one), bv(two), bv(three)];
        if count >= 1 {
            labels.push(second(self.hk4_path(three, two)));
        }
        if count >= 2 {
            labels.push(second(self.hk4_path(three, one)));
        }
        if count >= 3 {
            labels.push(second(self.hk4_path(one, two)));
        }
        Some(Hk4Labelling { case: count as u8 + 1, labels, far: bv(far) })
    }
}

/// Labelled vertices of a subdivided K4 for the corank-three construction.
///
/// `labels[0..3]` are the chosen branch triple (numbered 1, 2, 3), then
/// depending on the case: 4 = the neighbor of 3 toward 2, 5 = the neighbor
/// of 3 toward 1, 6 = the neighbor of 1 toward 2. `far` is the fourth
/// branch vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hk4Labelling {
    pub case: u8,
    pub labels: Vec<usize>,
    pub far: usize,
}

/// Vertex subsets this large or smaller are searched exhaustively for a
/// smallest subdivided K4.
const EXHAUSTIVE_HK4_CAP: usize = 16;

/// A subdivided K4 in `g`, or `None` exactly when `g` is a partial 2-tree.
///
/// The witness uses as few vertices as possible for graphs with at most 16
/// vertices (so Case 1 is found whenever `g` contains a K4), and each of
/// its paths is an induced path of `g`.
pub fn find_hk4(g: &Graph) -> Option<HomeomorphWitness> {
    if is_partial_two_tree(g) {
        return None;
    }
    let n = g.n();
    let vertices: Vec<usize> = if n <= EXHAUSTIVE_HK4_CAP {
        smallest_non_p2t_subset(g)
    } else {
        let mut keep: Vec<bool> = vec![true; n];
        for v in 0..n {
            keep[v] = false;
            let rest: Vec<usize> = (0..n).filter(|&w| keep[w]).collect();
            if is_partial_two_tree(&g.induced_subgraph(&rest).0) {
                keep[v] = true;
            }
        }
        (0..n).filter(|&w| keep[w]).collect()
    };
    let (sub, map) = g.induced_subgraph(&vertices);
    let mut h = sub.clone();
    for (a, b) in sub.edges() {
        h.remove_edge(a, b);
        if is_partial_two_tree(&h) {
            h.add_edge(a, b);
        }
    }
    let w = trace_hk4(&h)?;
    let mut w = HomeomorphWitness {
        kind: HomeomorphKind::HK4,
        branch_vertices: w.branch_vertices.iter().map(|&v| map[v]).collect(),
        paths: w.paths.iter().map(|p| p.iter().map(|&v| map[v]).collect()).collect(),
    };
    shortcut_paths(g, &mut w);
    Some(w)
}

fn smallest_non_p2t_subset(g: &Graph) -> Vec<usize> {
    let n = g.n();
    for k in 4..=n {
        let mut found = None;
        for_each_subset(n, k, &mut |s: &[usize]| {
            let (sub, _) = g.induced_subgraph(s);
            if sub.edge_count() >= 6 && sub.min_degree() >= 2 && !is_partial_two_tree(&sub) {
                found = Some(s.to_vec());
            }
            found.is_none()
        });
        if let Some(s) = found {
            return s;
        }
    }
    (0..n).collect()
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it
/// returns `false`.
fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return;
    }
    loop {
        if !f(&idx) {
            return;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else { return };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Reads off the branch vertices and paths of a graph that is a subdivided
/// K4 plus isolated vertices.
fn trace_hk4(h: &Graph) -> Option<HomeomorphWitness> {
    let branch: Vec<usize> = (0..h.n()).filter(|&v| h.degree(v) == 3).collect();
    if branch.len() != 4 {
        return None;
    }
    let mut paths = vec![Vec::new(); 6];
    for (bi, &b) in branch.iter().enumerate() {
        for &first in h.neighbors(b) {
            let mut p = vec![b, first];
            let mut prev = b;
            let mut cur = first;
            while h.degree(cur) == 2 {
                let next = *h.neighbors(cur).iter().find(|&&w| w != prev)?;
                p.push(next);
                prev = cur;
                cur = next;
            }
            let bj = branch.iter().position(|&x| x == cur)?;
            if bi < bj {
                let k = HK4_PAIRS.iter().position(|&q| q == (bi, bj))?;
                paths[k] = p;
            }
        }
    }
    let complete = paths.iter().all(|p| !p.is_empty());
    complete.then_some(HomeomorphWitness { kind: HomeomorphKind::HK4, branch_vertices: branch, paths })
}

/// Replaces any path that has a chord in `g` by the shorter path through
/// the chord, until every path is induced.
fn shortcut_paths(g: &Graph, w: &mut HomeomorphWitness) {
    for p in &mut w.paths {
        'again: loop {
            for i in 0..p.len() {
                for j in (i + 2..p.len()).rev() {
                    if g.has_edge(p[i], p[j]) {
                        p.drain(i + 1..j);
                        continue 'again;
                    }
                }
            }
            break;
        }
    }
}

/// A subdivided K2,3 in `g`: two vertices joined by three internally
/// disjoint paths of at least two edges each. Pairs are tried in
/// lexicographic order.
pub fn find_hk23(g: &Graph) -> Option<HomeomorphWitness> {
    let n = g.n();
    for u in 0..n {
        if g.degree(u) < 3 {
            continue;
        }
        for v in u + 1..n {
            if g.degree(v) < 3 {
                continue;
            }
            if let Some(paths) = disjoint_paths(g, u, v, 3) {
                return Some(HomeomorphWitness {
                    kind: HomeomorphKind::HK23,
                    branch_vertices: vec![u, v],
                    paths,
                });
            }
        }
    }
    None
}

/// Up to `want` internally vertex-disjoint `s`–`t` paths avoiding the edge
/// `st`, by unit-capacity augmenting paths on the split graph.
fn disjoint_paths(g: &Graph, s: usize, t: usize, want: usize) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    // node 2v = v_in, 2v+1 = v_out
    let size = 2 * n;
    let mut cap = vec![vec![0i32; size]; size];
    for v in 0..n {
        cap[2 * v][2 * v + 1] = if v == s || v == t { want as i32 } else { 1 };
    }
    for (a, b) in g.edges() {
        if (a, b) == (s.min(t), s.max(t)) {
            continue;
        }
        cap[2 * a + 1][2 * b] = 1;
        cap[2 * b + 1][2 * a] = 1;
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow = vec![vec![0i32; size]; size];
    let mut total = 0;
    while total < want {
        let mut prev = vec![usize::MAX; size];
        prev[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for y in 0..size {
                if prev[y] == usize::MAX && cap[x][y] - flow[x][y] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[sink] == usize::MAX {
            return None;
        }
        let mut y = sink;
        while y != source {
            let x = prev[y];
            flow[x][y] += 1;
            flow[y][x] -= 1;
            y = x;
        }
        total += 1;
    }
    let mut paths = Vec::new();
    for _ in 0..want {
        let mut p = vec![s];
        let mut x = source;
        while x != sink {
            let y = (0..size).find(|&y| flow[x][y] > 0 && cap[x][y] > 0)?;
            flow[x][y] -= 1;
            if y % 2 == 0 {
                p.push(y / 2);
                x = if y == sink { y } else { y + 1 };
            } else {
                x = y;
            }
        }
        paths.push(p);
    }
    Some(paths)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e).unwrap()
    }

    #[test]
    fn partial_two_tree_examples() {
        assert!(is_partial_two_tree(&Graph::complete_bipartite(2, 3)));
        assert!(!is_partial_two_tree(&Graph::complete(4)));
        assert!(is_partial_two_tree(&Graph::path(6)));
        let mut star = Graph::complete_bipartite(1, 5);
        star.add_pendant(3);
        assert!(is_partial_two_tree(&star));
        assert!(is_partial_two_tree(&Graph::new(0)));
        assert!(!is_partial_two_tree(&Graph::complete_bipartite(3, 3)));
    }

    #[test]
    fn hk4_examples() {
        let k4 = find_hk4(&Graph::complete(4)).unwrap();
        assert!(k4.verify(&Graph::complete(4)));
        assert_eq!(k4.hk4_labelling().unwrap().case, 1);

        // one subdivided edge still leaves a triangle of branch vertices;
        // the triple through the subdivided edge gives Case 2
        let s = Graph::complete(4).subdivide_edge(0, 1).unwrap();
        let w = find_hk4(&s).unwrap();
        assert!(w.verify(&s));
        let best = w.hk4_labelling().unwrap();
        assert_eq!(best.case, 1);
        let cases: Vec<u8> = (0..4).map(|far| w.hk4_labelling_without(far).unwrap().case).collect();
        assert_eq!(cases.iter().filter(|&&c| c == 2).count(), 2);
        let two = (0..4).map(|far| w.hk4_labelling_without(far).unwrap()).find(|l| l.case == 2).unwrap();
        assert_eq!(two.labels.len(), 4);
        assert!(s.has_edge(two.labels[2], two.labels[3]));
        assert!(!s.has_edge(two.labels[1], two.labels[2]));

        assert!(find_hk4(&Graph::complete_bipartite(2, 3)).is_none());
    }

    #[test]
    fn hk4_cases_three_and_four() {
        // two subdivided edges at a common vertex leave the opposite
        // triangle intact
        let s = Graph::complete(4)
            .subdivide_edge(0, 1)
            .unwrap()
            .subdivide_edge(0, 2)
            .unwrap();
        assert_eq!(find_hk4(&s).unwrap().hk4_labelling().unwrap().case, 1);

        // leave only a perfect matching unsubdivided
        let s = Graph::complete(4)
            .subdivide_edge(0, 2)
            .unwrap()
            .subdivide_edge(0, 3)
            .unwrap()
            .subdivide_edge(1, 2)
            .unwrap()
            .subdivide_edge(1, 3)
            .unwrap();
        let w = find_hk4(&s).unwrap();
        let lab = w.hk4_labelling().unwrap();
        assert_eq!(lab.case, 3);
        assert_eq!(lab.labels.len(), 5);
        assert!(s.has_edge(lab.labels[0], lab.labels[1]));
        assert!(s.has_edge(lab.labels[2], lab.labels[3]));
        assert!(s.has_edge(lab.labels[2], lab.labels[4]));

        let mut all = Graph::complete(4);
        for (a, b) in Graph::complete(4).edges() {
            all = all.subdivide_edge(a, b).unwrap();
        }
        let w = find_hk4(&all).unwrap();
        assert!(w.verify(&all));
        let lab = w.hk4_labelling().unwrap();
        assert_eq!(lab.case, 4);
        assert!(all.has_edge(lab.labels[0], lab.labels[5]));
    }

    #[test]
    fn hk4_larger_graph_uses_greedy_route() {
        let mut big = Graph::complete(4);
        for (a, b) in Graph::complete(4).edges() {
            big = big.subdivide_edge(a, b).unwrap().subdivide_edge(a, big.n()).unwrap();
        }
        // 4 + 12 = 16 vertices; add pendants to go past the exhaustive cap
        big.add_pendant(0);
        big.add_pendant(1);
        let w = find_hk4(&big).unwrap();
        assert!(w.verify(&big));
        assert_eq!(w.vertices().len(), 16);
    }

    #[test]
    fn hk23_examples() {
        let k23 = Graph::complete_bipartite(2, 3);
        let w = find_hk23(&k23).unwrap();
        assert_eq!(w.branch_vertices, vec![0, 1]);
        assert!(w.verify(&k23));

        let diamond = g(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]);
        assert!(find_hk23(&diamond).is_none());

        // two 4-cycles sharing the path 0-1-2
        let two_c4 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 0)]);
        let w = find_hk23(&two_c4).unwrap();
        assert!(w.verify(&two_c4));
        assert_eq!(w.branch_vertices, vec![0, 2]);
    }

    #[test]
    fn witness_verify_rejects_tampering() {
        let k23 = Graph::complete_bipartite(2, 3);
        let mut w = find_hk23(&k23).unwrap();
        w.paths[1] = w.paths[0].clone();
        assert!(!w.verify(&k23));
        let mut w = find_hk4(&Graph::complete(4)).unwrap();
        w.paths.pop();
        assert!(!w.verify(&Graph::complete(4)));
    }
}
