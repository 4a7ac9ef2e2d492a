//! Minimum path covers of forests.

use serde::{Deserialize, Serialize};

use super::RecognitionError;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathCover {
    pub count: usize,
    /// Vertex-disjoint paths, each in path order.
    pub paths: Vec<Vec<usize>>,
}

/// Minimum number of vertex-disjoint paths covering a forest, with an
/// optimal cover.
///
/// Bottom-up greedy: every vertex joins up to two children whose paths
/// still end at that child; joining is never worse than leaving a child's
/// path open.
pub fn tree_path_cover(g: &Graph) -> Result<PathCover, RecognitionError> {
    if !g.is_forest() {
        return Err(RecognitionError::HasCycle);
    }
    let n = g.n();
    let mut links: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut parent = vec![usize::MAX; n];
    let mut visited = vec![false; n];
    for root in 0..n {
        if visited[root] {
            continue;
        }
        // DFS preorder, then process in reverse
        let mut order = Vec::new();
        let mut stack = vec![root];
        visited[root] = true;
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in g.neighbors(v) {
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = v;
                    stack.push(w);
                }
            }
        }
        let mut open = vec![false; n];
        for &v in order.iter().rev() {
            let mut joined = 0;
            for &c in g.neighbors(v) {
                if parent[c] == v && open[c] && joined < 2 {
                    links[v].push(c);
                    links[c].push(v);
                    joined += 1;
                }
            }
            open[v] = joined < 2;
        }
    }
    let mut seen = vec![false; n];
    let mut paths = Vec::new();
    for s in 0..n {
        if seen[s] || links[s].len() == 2 {
            continue;
        }
        let mut path = vec![s];
        seen[s] = true;
        let mut cur = s;
        while let Some(&next) = links[cur].iter().find(|&&w| !seen[w]) {
            seen[next] = true;
            path.push(next);
            cur = next;
        }
        paths.push(path);
    }
    Ok(PathCover { count: paths.len(), paths })
}
