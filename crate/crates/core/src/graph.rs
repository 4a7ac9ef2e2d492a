//! Simple undirected graphs on dense vertex labels `0..n`.
//!
//! Every operation that produces a subgraph relabels the surviving vertices
//! to `0..k` (preserving relative order) and hands back the map from new
//! labels to the parent's labels, so that certificates computed on the
//! subgraph can be pulled back.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("vertex {vertex} out of range for n = {n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is acyclic (a tree); its core is empty")]
    Acyclic,
    #[error("no edge between {0} and {1}")]
    NoSuchEdge(usize, usize),
}

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph { n, adj: vec![Vec::new(); n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `u -- v`; duplicates are ignored.
    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::OutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { line: 0, vertex: u });
        }
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if let Ok(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].remove(pos);
            let pos = self.adj[v].binary_search(&u).unwrap();
            self.adj[v].remove(pos);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as sorted pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Neighborhood bitmask; only meaningful for `n <= 64`.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v].iter().fold(0u64, |m, &w| m | (1u64 << w))
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Disjoint union; `other` is relabeled to `self.n()..`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        g
    }

    /// Appends a vertex adjacent to `attach` and returns its label.
    pub fn add_pendant(&mut self, attach: usize) -> usize {
        let v = self.n;
        self.n += 1;
        self.adj.push(Vec::new());
        self.add_edge(attach, v);
        v
    }

    /// Applies `perm` (old label -> new label).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Subgraph induced by `keep` (any order; duplicates ignored). The
    /// returned map sends new labels to parent labels and is increasing.
    pub fn induced_subgraph(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut map: Vec<usize> = keep.to_vec();
        map.sort_unstable();
        map.dedup();
        let mut back = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            back[v] = i;
        }
        let mut g = Graph::new(map.len());
        for (i, &v) in map.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = back[w];
                if j != usize::MAX && i < j {
                    g.add_edge(i, j);
                }
            }
        }
        (g, map)
    }

    pub fn remove_vertices(&self, drop: &[usize]) -> (Graph, Vec<usize>) {
        let mut gone = vec![false; self.n];
        for &v in drop {
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !gone[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// Connected components as vertex lists (each sorted), ordered by
    /// smallest vertex.
    pub fn component_sets(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Components relabeled `0..k`, each with its map to parent labels.
    pub fn components(&self) -> Vec<(Graph, Vec<usize>)> {
        self.component_sets()
            .iter()
            .map(|c| self.induced_subgraph(c))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_sets().len() == 1
    }

    /// True when the graph has no cycle.
    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.component_sets().len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Connected with minimum degree at least two.
    pub fn is_c2(&self) -> bool {
        self.is_connected() && self.min_degree() >= 2
    }

    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.adj.iter().all(|a| a.len() == 2)
    }

    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Degree-one neighbors of `v`.
    pub fn pendant_neighbors(&self, v: usize) -> Vec<usize> {
        self.adj[v]
            .iter()
            .copied()
            .filter(|&w| self.degree(w) == 1)
            .collect()
    }

    /// The vertex ordering along the path if the graph is a path (a single
    /// vertex counts). The ordering starts at the smaller endpoint.
    pub fn is_path(&self) -> Option<Vec<usize>> {
        if self.n == 0 || !self.is_connected() || self.edge_count() + 1 != self.n {
            return None;
        }
        if self.n == 1 {
            return Some(vec![0]);
        }
        if self.max_degree() > 2 {
            return None;
        }
        let start = (0..self.n).find(|&v| self.degree(v) == 1)?;
        Some(self.walk_path(start))
    }

    /// Follows a path of degree <= 2 vertices from an endpoint.
    fn walk_path(&self, start: usize) -> Vec<usize> {
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = self.adj[cur].iter().copied().find(|&w| w != prev);
            match next {
                Some(w) if order.len() < self.n => {
                    order.push(w);
                    prev = cur;
                    cur = w;
                }
                _ => break,
            }
        }
        order
    }

    /// Vertices whose removal disconnects the graph (low-link DFS).
    pub fn cut_vertices(&self) -> Result<Vec<usize>, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let n = self.n;
        let mut order = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut counter = 0;
        // iterative DFS: (vertex, parent, next neighbor index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
        order[0] = counter;
        low[0] = counter;
        counter += 1;
        let mut root_children = 0;
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < self.adj[v].len() {
                let w = self.adj[v][*idx];
                *idx += 1;
                if order[w] == usize::MAX {
                    order[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    if v == 0 {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(order[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if p != 0 && low[v] >= order[p] {
                        is_cut[p] = true;
                    }
                }
            }
        }
        is_cut[0] = root_children > 1;
        Ok((0..n).filter(|&v| is_cut[v]).collect())
    }

    /// Maximal induced subgraph of minimum degree two, obtained by
    /// repeatedly deleting vertices of degree at most one.
    pub fn core_of(&self) -> Result<Core, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let mut deg: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; self.n];
        let mut order = Vec::new();
        let mut queue: VecDeque<usize> = (0..self.n).filter(|&v| deg[v] <= 1).collect();
        while let Some(v) = queue.pop_front() {
            if removed[v] {
                continue;
            }
            removed[v] = true;
            order.push(v);
            for &w in &self.adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        queue.push_back(w);
                    }
                }
            }
        }
        if order.len() == self.n {
            return Err(GraphError::Acyclic);
        }
        let (graph, map) = self.remove_vertices(&order);
        Ok(Core { graph, map, removal_order: order })
    }

    /// Repeatedly deletes a pendant vertex whose unique neighbor is a
    /// degree-two vertex outside the core, so that every hanging path is
    /// shortened to a single pendant edge. The maximum multiplicity is
    /// unchanged by each deletion.
    pub fn pendant_path_contract(&self) -> Result<(Graph, ContractionLog), GraphError> {
        let core = self.core_of()?;
        let mut in_core = vec![false; self.n];
        for &v in &core.map {
            in_core[v] = true;
        }
        let mut deg: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; self.n];
        let mut steps = Vec::new();
        loop {
            let next = (0..self.n).find_map(|v| {
                if removed[v] || deg[v] != 1 {
                    return None;
                }
                let u = *self.adj[v].iter().find(|&&w| !removed[w])?;
                (!in_core[u] && deg[u] == 2).then_some((v, u))
            });
            let Some((v, u)) = next else { break };
            removed[v] = true;
            deg[u] -= 1;
            steps.push(ContractionStep { removed: v, neighbor: u });
        }
        let drop: Vec<usize> = steps.iter().map(|s| s.removed).collect();
        let (graph, map) = self.remove_vertices(&drop);
        Ok((graph, ContractionLog { steps, map }))
    }

    /// Replaces `u -- v` by `u -- w -- v` where `w = n` is a new vertex.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NoSuchEdge(u, v));
        }
        let mut g = self.clone();
        g.remove_edge(u, v);
        let w = g.add_pendant(u);
        g.add_edge(w, v);
        Ok(g)
    }

    /// Inverse of [`Graph::subdivide_edge`] for a degree-two vertex whose
    /// neighbors are not adjacent: removes `w` and joins its neighbors.
    pub fn suppress_vertex(&self, w: usize) -> Option<(Graph, Vec<usize>)> {
        let [a, b] = self.adj[w][..] else { return None };
        if self.has_edge(a, b) {
            return None;
        }
        let (mut g, map) = self.remove_vertices(&[w]);
        let pos = |x: usize| map.binary_search(&x).unwrap();
        g.add_edge(pos(a), pos(b));
        Some((g, map))
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            msg: "missing vertex count".into(),
        })?;
        let n: usize = header.parse().map_err(|_| GraphError::Parse {
            line: hline,
            msg: format!("expected vertex count, found {header:?}"),
        })?;
        let mut g = Graph::new(n);
        for (line, l) in lines {
            let parts: Vec<&str> = l.split_whitespace().collect();
            let parsed: Option<Vec<usize>> = parts.iter().map(|p| p.parse().ok()).collect();
            let (u, v) = match parsed.as_deref() {
                Some(&[u, v]) => (u, v),
                _ => {
                    return Err(GraphError::Parse {
                        line,
                        msg: format!("expected \"u v\", found {l:?}"),
                    })
                }
            };
            if u == v {
                return Err(GraphError::SelfLoop { line, vertex: u });
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::Parse {
                        line,
                        msg: format!("vertex {w} out of range for n = {n}"),
                    });
                }
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Decodes one graph6 record (an optional `>>graph6<<` header and
    /// surrounding whitespace are accepted). Only `n <= 62` is supported.
    pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
        let s = text.trim();
        let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
        let bytes = s.as_bytes();
        let (&first, payload) = bytes
            .split_first()
            .ok_or_else(|| GraphError::Graph6("empty input".into()))?;
        if first == b'~' {
            return Err(GraphError::Graph6("n > 62 is not supported".into()));
        }
        if !(63..=126).contains(&first) {
            return Err(GraphError::Graph6(format!("invalid character {:?}", first as char)));
        }
        let n = (first - 63) as usize;
        let bits = n * n.saturating_sub(1) / 2;
        let need = bits.div_ceil(6);
        if payload.len() < need {
            return Err(GraphError::Graph6(format!(
                "truncated payload: expected {need} bytes, found {}",
                payload.len()
            )));
        }
        if payload.len() > need {
            return Err(GraphError::Graph6(format!(
                "trailing data: expected {need} bytes, found {}",
                payload.len()
            )));
        }
        let mut g = Graph::new(n);
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                let byte = payload[k / 6];
                if !(63..=126).contains(&byte) {
                    return Err(GraphError::Graph6(format!("invalid character {:?}", byte as char)));
                }
                if ((byte - 63) >> (5 - k % 6)) & 1 == 1 {
                    g.add_edge(u, v);
                }
                k += 1;
            }
        }
        // Characters past the last data bit still have to be printable.
        if let Some(&b) = payload.iter().find(|b| !(63..=126).contains(*b)) {
            return Err(GraphError::Graph6(format!("invalid character {:?}", b as char)));
        }
        Ok(g)
    }

    /// Encodes the graph as graph6 (upper triangle, column-major, 6-bit
    /// big-endian chunks offset by 63).
    pub fn to_graph6(&self) -> String {
        assert!(self.n <= 62, "graph6 encoding supports n <= 62");
        let mut out = vec![(self.n as u8) + 63];
        let mut acc = 0u8;
        let mut k = 0;
        for v in 1..self.n {
            for u in 0..v {
                acc = (acc << 1) | self.has_edge(u, v) as u8;
                k += 1;
                if k % 6 == 0 {
                    out.push(acc + 63);
                    acc = 0;
                }
            }
        }
        if k % 6 != 0 {
            out.push((acc << (6 - k % 6)) + 63);
        }
        String::from_utf8(out).expect("graph6 is ASCII")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Core {
    pub graph: Graph,
    /// Core label -> parent label.
    pub map: Vec<usize>,
    /// Parent vertices in deletion order.
    pub removal_order: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionStep {
    pub removed: usize,
    pub neighbor: usize,
}

/// Record of [`Graph::pendant_path_contract`], in parent labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionLog {
    pub steps: Vec<ContractionStep>,
    /// Contracted label -> parent label.
    pub map: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e).unwrap()
    }

    #[test]
    fn edge_list_examples() {
        let k3 = Graph::parse_edge_list("3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(k3, Graph::complete(3));
        let k4 = Graph::parse_edge_list("4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3").unwrap();
        assert_eq!(k4, Graph::complete(4));
        assert_eq!(
            Graph::parse_edge_list("2\n0 0"),
            Err(GraphError::SelfLoop { line: 2, vertex: 0 })
        );
        // duplicates tolerated
        let p = Graph::parse_edge_list("3\n0 1\n1 0\n1 2\n").unwrap();
        assert_eq!(p, Graph::path(3));
    }

    #[test]
    fn edge_list_errors_name_the_line() {
        match Graph::parse_edge_list("3\n0 1\n1 x\n") {
            Err(GraphError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        match Graph::parse_edge_list("3\n0 3\n") {
            Err(GraphError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(Graph::parse_edge_list("").is_err());
        assert!(Graph::parse_edge_list("x\n").is_err());
    }

    #[test]
    fn graph6_examples() {
        assert_eq!(Graph::parse_graph6("D~{").unwrap(), Graph::complete(5));
        assert_eq!(Graph::parse_graph6("A_").unwrap(), Graph::path(2));
        assert_eq!(Graph::parse_graph6("@").unwrap(), Graph::new(1));
        assert_eq!(Graph::parse_graph6(">>graph6<<A_\n").unwrap(), Graph::path(2));
        assert_eq!(Graph::complete(5).to_graph6(), "D~{");
        assert_eq!(Graph::new(1).to_graph6(), "@");
        assert_eq!(Graph::new(0).to_graph6(), "?");
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(Graph::parse_graph6("D~"), Err(GraphError::Graph6(_))));
        assert!(matches!(Graph::parse_graph6("D~{{"), Err(GraphError::Graph6(_))));
        assert!(matches!(Graph::parse_graph6("D~\u{7f}"), Err(GraphError::Graph6(_))));
        assert!(matches!(Graph::parse_graph6(""), Err(GraphError::Graph6(_))));
        assert!(matches!(Graph::parse_graph6(" A"), Err(GraphError::Graph6(_))));
    }

    #[test]
    fn components_examples() {
        let two = Graph::complete(3).disjoint_union(&Graph::complete(3));
        let comps = two.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|(c, _)| *c == Graph::complete(3)));
        assert_eq!(comps[1].1, vec![3, 4, 5]);
        assert_eq!(Graph::cycle(5).components().len(), 1);
        assert!(Graph::new(0).components().is_empty());
    }

    #[test]
    fn is_path_examples() {
        let p5 = Graph::path(5);
        assert_eq!(p5.is_path(), Some(vec![0, 1, 2, 3, 4]));
        assert_eq!(Graph::cycle(4).is_path(), None);
        assert_eq!(Graph::complete_bipartite(1, 3).is_path(), None);
        assert_eq!(Graph::new(1).is_path(), Some(vec![0]));
        assert_eq!(Graph::new(2).is_path(), None);
        let scrambled = g(4, &[(2, 0), (0, 3), (3, 1)]);
        assert_eq!(scrambled.is_path(), Some(vec![1, 3, 0, 2]));
    }

    #[test]
    fn cut_vertex_examples() {
        let bowtie = g(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        assert_eq!(bowtie.cut_vertices().unwrap(), vec![2]);
        assert!(Graph::cycle(6).cut_vertices().unwrap().is_empty());
        assert_eq!(Graph::path(4).cut_vertices().unwrap(), vec![1, 2]);
        assert_eq!(Graph::new(2).cut_vertices(), Err(GraphError::Disconnected));
        // root of the DFS is a cut vertex here
        let star = Graph::complete_bipartite(1, 3);
        assert_eq!(star.cut_vertices().unwrap(), vec![0]);
    }

    #[test]
    fn core_examples() {
        let mut tri = Graph::complete(3);
        tri.add_pendant(0);
        let core = tri.core_of().unwrap();
        assert_eq!(core.graph, Graph::complete(3));
        assert_eq!(core.removal_order, vec![3]);

        let mut c5 = Graph::cycle(5);
        let a = c5.add_pendant(0);
        let b = c5.add_pendant(a);
        c5.add_pendant(b);
        let core = c5.core_of().unwrap();
        assert_eq!(core.graph, Graph::cycle(5));
        assert_eq!(core.map, vec![0, 1, 2, 3, 4]);

        assert_eq!(Graph::path(6).core_of(), Err(GraphError::Acyclic));
        assert_eq!(Graph::complete_bipartite(1, 4).core_of(), Err(GraphError::Acyclic));
    }

    #[test]
    fn pendant_path_contract_examples() {
        let mut c4 = Graph::cycle(4);
        let a = c4.add_pendant(0);
        let b = c4.add_pendant(a);
        c4.add_pendant(b);
        let (h, log) = c4.pendant_path_contract().unwrap();
        let mut expect = Graph::cycle(4);
        expect.add_pendant(0);
        assert_eq!(h, expect);
        assert_eq!(log.steps.len(), 2);
        assert_eq!(log.map, vec![0, 1, 2, 3, 4]);

        let (h, log) = expect.pendant_path_contract().unwrap();
        assert_eq!(h, expect);
        assert!(log.steps.is_empty());

        let (h, log) = Graph::cycle(5).pendant_path_contract().unwrap();
        assert_eq!(h, Graph::cycle(5));
        assert!(log.steps.is_empty());

        assert_eq!(Graph::path(3).pendant_path_contract(), Err(GraphError::Acyclic));
    }

    #[test]
    fn contraction_keeps_branching_trees() {
        // a fork hanging off the cycle is not a path and stays untouched
        let mut c4 = Graph::cycle(4);
        let a = c4.add_pendant(0);
        c4.add_pendant(a);
        c4.add_pendant(a);
        let (h, log) = c4.pendant_path_contract().unwrap();
        assert_eq!(h, c4);
        assert!(log.steps.is_empty());
    }

    #[test]
    fn subdivide_examples() {
        let c4 = Graph::complete(3).subdivide_edge(0, 1).unwrap();
        assert!(c4.is_cycle() && c4.n() == 4);
        let c5 = Graph::cycle(4).subdivide_edge(1, 2).unwrap();
        assert!(c5.is_cycle() && c5.n() == 5);
        let p3 = Graph::path(2).subdivide_edge(0, 1).unwrap();
        assert!(p3.is_path().is_some() && p3.n() == 3);
        assert_eq!(Graph::path(3).subdivide_edge(0, 2), Err(GraphError::NoSuchEdge(0, 2)));
    }

    #[test]
    fn suppress_inverts_subdivide() {
        let k4 = Graph::complete(4);
        let s = k4.subdivide_edge(1, 3).unwrap();
        let (back, map) = s.suppress_vertex(4).unwrap();
        assert_eq!(map, vec![0, 1, 2, 3]);
        assert_eq!(back, k4);
        assert!(Graph::complete(3).suppress_vertex(0).is_none());
    }
}
