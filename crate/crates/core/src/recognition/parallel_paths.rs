//! Covers of a graph by two induced paths whose connecting edges do not
//! cross.

use serde::{Deserialize, Serialize};

use super::{seac_decompose, RecognitionError, SeacDecomposition};
use crate::graph::Graph;

/// Graphs up to this order are searched over every vertex bipartition.
pub const EXHAUSTIVE_COVER_CAP: usize = 12;

/// Two disjoint induced paths covering the graph, each listed in path
/// order, with non-crossing connecting edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParallelPathsCover {
    pub p1: Vec<usize>,
    pub p2: Vec<usize>,
}

impl ParallelPathsCover {
    /// Whether this is a valid cover of `g`.
    pub fn is_valid(&self, g: &Graph) -> bool {
        check_staircase(g, &self.p1, &self.p2).unwrap_or(false)
    }

    /// The numbering used by the pattern form: positions `0..k1` hold
    /// `p1`, then `p2`. Entry `i` is the vertex numbered `i`.
    pub fn numbering(&self) -> Vec<usize> {
        self.p1.iter().chain(&self.p2).copied().collect()
    }

    /// Relabels the cover through `map` (local label -> parent label).
    pub fn mapped(&self, map: &[usize]) -> ParallelPathsCover {
        ParallelPathsCover {
            p1: self.p1.iter().map(|&v| map[v]).collect(),
            p2: self.p2.iter().map(|&v| map[v]).collect(),
        }
    }
}

/// True iff `seq` lists distinct vertices forming an induced path in that
/// order.
fn is_induced_path_seq(g: &Graph, seq: &[usize]) -> bool {
    for (i, &a) in seq.iter().enumerate() {
        for (j, &b) in seq.iter().enumerate().skip(i + 1) {
            if a == b || g.has_edge(a, b) != (j == i + 1) {
                return false;
            }
        }
    }
    true
}

/// Checks the non-crossing condition for the edges between `p1` and `p2`
/// using the orientations exactly as given: two connecting edges `(i, j)`
/// and `(k, l)` (positions along `p1` and `p2`) cross when
/// `(k - i)(l - j) < 0`. A pair whose union is a single path is rejected.
pub fn check_staircase(g: &Graph, p1: &[usize], p2: &[usize]) -> Result<bool, RecognitionError> {
    let n = g.n();
    if p1.is_empty() || p2.is_empty() {
        return Err(RecognitionError::InvalidCover("both paths must be nonempty".into()));
    }
    let mut pos = vec![None; n];
    for (side, path) in [p1, p2].into_iter().enumerate() {
        for (i, &v) in path.iter().enumerate() {
            if v >= n {
                return Err(RecognitionError::InvalidCover(format!("vertex {v} out of range")));
            }
            if pos[v].is_some() {
                return Err(RecognitionError::InvalidCover(format!("vertex {v} listed twice")));
            }
            pos[v] = Some((side, i));
        }
    }
    if pos.iter().any(Option::is_none) {
        return Err(RecognitionError::InvalidCover("paths do not cover every vertex".into()));
    }
    for path in [p1, p2] {
        if !is_induced_path_seq(g, path) {
            return Err(RecognitionError::InvalidCover(format!(
                "{path:?} is not an induced path"
            )));
        }
    }
    if g.is_path().is_some() {
        return Ok(false);
    }
    let mut links = Vec::new();
    for (i, &a) in p1.iter().enumerate() {
        for &b in g.neighbors(a) {
            if let Some((1, j)) = pos[b] {
                links.push((i as i64, j as i64));
            }
        }
    }
    let crossing = links.iter().enumerate().any(|(x, &(i, j))| {
        links[x + 1..]
            .iter()
            .any(|&(k, l)| (k - i) * (l - j) < 0)
    });
    Ok(!crossing)
}

/// Vertex ordering of the subgraph induced by `mask` if it is a path.
/// Requires `n <= 64`.
pub fn induced_path_order(g: &Graph, mask: u64) -> Option<Vec<usize>> {
    if mask == 0 {
        return None;
    }
    let k = mask.count_ones() as usize;
    let mut ends = Vec::new();
    let mut edge_ends = 0;
    for v in bits(mask) {
        let d = (g.neighbor_mask(v) & mask).count_ones() as usize;
        if d > 2 {
            return None;
        }
        if d <= 1 {
            ends.push(v);
        }
        edge_ends += d;
    }
    if edge_ends != 2 * (k - 1) {
        return None;
    }
    let start = *ends.first()?;
    let mut order = vec![start];
    let mut seen = 1u64 << start;
    let mut cur = start;
    while let Some(next) = bits(g.neighbor_mask(cur) & mask & !seen).next() {
        order.push(next);
        seen |= 1u64 << next;
        cur = next;
    }
    (order.len() == k).then_some(order)
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let v = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(v)
    })
}

/// Tries both orientations of `p2` against `p1` as given.
fn orient(g: &Graph, p1: Vec<usize>, p2: Vec<usize>) -> Option<ParallelPathsCover> {
    if check_staircase(g, &p1, &p2).ok()? {
        return Some(ParallelPathsCover { p1, p2 });
    }
    let rev: Vec<usize> = p2.iter().rev().copied().collect();
    check_staircase(g, &p1, &rev)
        .ok()?
        .then_some(ParallelPathsCover { p1, p2: rev })
}

/// Finds a pair of parallel paths covering `g`, if one exists.
///
/// Graphs with at most [`EXHAUSTIVE_COVER_CAP`] vertices are searched over
/// every bipartition. Larger biconnected-cycle graphs use the linear chain
/// of cycles; anything else falls back to enumerating induced paths
/// through vertex 0.
pub fn find_two_parallel_paths(g: &Graph) -> Option<ParallelPathsCover> {
    let n = g.n();
    if n < 2 {
        return None;
    }
    if n <= EXHAUSTIVE_COVER_CAP {
        return exhaustive(g);
    }
    let comps = g.component_sets();
    match comps.len() {
        1 => {}
        2 => {
            let order = |c: &Vec<usize>| {
                let (sub, map) = g.induced_subgraph(c);
                sub.is_path().map(|o| o.into_iter().map(|v| map[v]).collect::<Vec<_>>())
            };
            return Some(ParallelPathsCover { p1: order(&comps[0])?, p2: order(&comps[1])? });
        }
        _ => return None,
    }
    if g.min_degree() >= 2 {
        let decomp = seac_decompose(g).ok()??;
        if !decomp.is_lseac {
            return None;
        }
        if let Some(cover) = lseac_cover(g, &decomp) {
            return Some(cover);
        }
    }
    enumerate_through_zero(g)
}

fn exhaustive(g: &Graph) -> Option<ParallelPathsCover> {
    let n = g.n();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    // vertex 0 is placed on the first path; the condition is symmetric
    let mut rest = 0u64;
    while rest < full >> 1 {
        let s = (rest << 1) | 1;
        rest += 1;
        let Some(p1) = induced_path_order(g, s) else { continue };
        let Some(p2) = induced_path_order(g, full & !s) else { continue };
        if let Some(cover) = orient(g, p1, p2) {
            return Some(cover);
        }
    }
    None
}

/// Splits the outer cycle of a linear chain of cycles at one
/// non-articulation edge in each terminal cycle.
fn lseac_cover(g: &Graph, d: &SeacDecomposition) -> Option<ParallelPathsCover> {
    let mut outer = g.clone();
    for e in &d.articulation_edges {
        outer.remove_edge(e.edge.0, e.edge.1);
    }
    if !outer.is_cycle() {
        return None;
    }
    let is_art = |a: usize, b: usize| {
        d.articulation_edges
            .iter()
            .any(|e| e.edge == (a.min(b), a.max(b)))
    };
    let face_edge = |f: &[usize]| -> Option<(usize, usize)> {
        (0..f.len())
            .map(|i| (f[i], f[(i + 1) % f.len()]))
            .find(|&(a, b)| !is_art(a, b))
    };
    let (first, last) = match d.terminal_cycles[..] {
        [only] => (only, only),
        [a, b] => (a, b),
        _ => return None,
    };
    let x = face_edge(&d.cycles[first])?;
    let y = if first == last {
        // a single cycle: cut beside `x` so one side is a lone vertex
        let f = &d.cycles[first];
        let i = f.iter().position(|&v| v == x.0)?;
        (f[(i + f.len() - 1) % f.len()], x.0)
    } else {
        face_edge(&d.cycles[last])?
    };
    // walk the outer cycle starting at x.1 away from x.0
    let n = g.n();
    let mut walk = vec![x.1];
    let mut prev = x.0;
    while walk.len() < n {
        let cur = *walk.last().unwrap();
        let next = *outer.neighbors(cur).iter().find(|&&w| w != prev)?;
        prev = cur;
        walk.push(next);
    }
    let cut = (1..n).find(|&i| {
        let (a, b) = (walk[i - 1], walk[i]);
        (a, b) == y || (b, a) == y
    })?;
    let p1 = walk[..cut].to_vec();
    let p2 = walk[cut..].to_vec();
    orient(g, p1, p2)
}

/// Exact search over induced paths containing vertex 0 whose complement
/// is an induced path.
fn enumerate_through_zero(g: &Graph) -> Option<ParallelPathsCover> {
    let n = g.n();
    let mut in_path = vec![false; n];
    let mut left: Vec<usize> = Vec::new();
    let mut right: Vec<usize> = vec![0];
    in_path[0] = true;

    fn attachable(g: &Graph, in_path: &[bool], end: usize, w: usize) -> bool {
        !in_path[w] && g.neighbors(w).iter().all(|&x| x == end || !in_path[x])
    }

    fn current(left: &[usize], right: &[usize]) -> Vec<usize> {
        left.iter().rev().chain(right).copied().collect()
    }

    fn test(g: &Graph, in_path: &[bool], left: &[usize], right: &[usize]) -> Option<ParallelPathsCover> {
        let rest: Vec<usize> = (0..g.n()).filter(|&v| !in_path[v]).collect();
        if rest.is_empty() {
            return None;
        }
        let (sub, map) = g.induced_subgraph(&rest);
        let order = sub.is_path()?;
        orient(g, current(left, right), order.into_iter().map(|v| map[v]).collect())
    }

    // Grow the right end first; once the left end has started growing the
    // right end is frozen, so every path through 0 is produced once.
    fn grow_left(
        g: &Graph,
        in_path: &mut Vec<bool>,
        left: &mut Vec<usize>,
        right: &[usize],
    ) -> Option<ParallelPathsCover> {
        if let Some(c) = test(g, in_path, left, right) {
            return Some(c);
        }
        let end = *left.last().unwrap_or(&right[0]);
        for &w in g.neighbors(end) {
            if attachable(g, in_path, end, w) {
                in_path[w] = true;
                left.push(w);
                let found = grow_left(g, in_path, left, right);
                left.pop();
                in_path[w] = false;
                if found.is_some() {
                    return found;
                }
            }
        }
        None
    }

    fn grow_right(
        g: &Graph,
        in_path: &mut Vec<bool>,
        left: &mut Vec<usize>,
        right: &mut Vec<usize>,
    ) -> Option<ParallelPathsCover> {
        if let Some(c) = grow_left(g, in_path, left, right) {
            return Some(c);
        }
        let end = *right.last().unwrap();
        for &w in g.neighbors(end) {
            if attachable(g, in_path, end, w) {
                in_path[w] = true;
                right.push(w);
                let found = grow_right(g, in_path, left, right);
                right.pop();
                in_path[w] = false;
                if found.is_some() {
                    return found;
                }
            }
        }
        None
    }

    grow_right(g, &mut in_path, &mut left, &mut right)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e).unwrap()
    }

    #[test]
    fn staircase_examples() {
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert_eq!(check_staircase(&c4, &[0, 1], &[3, 2]), Ok(true));
        assert_eq!(check_staircase(&c4, &[0, 1], &[2, 3]), Ok(false));
        let star_like = g(4, &[(0, 2), (1, 2), (2, 3)]);
        assert_eq!(check_staircase(&star_like, &[0], &[1, 2, 3]), Ok(true));
    }

    #[test]
    fn staircase_rejects_bad_input() {
        let c4 = Graph::cycle(4);
        assert!(check_staircase(&c4, &[0, 2], &[1, 3]).is_err());
        assert!(check_staircase(&c4, &[0, 1], &[1, 2, 3]).is_err());
        assert!(check_staircase(&c4, &[0, 1], &[2]).is_err());
        assert!(check_staircase(&c4, &[], &[0, 1, 2, 3]).is_err());
    }

    #[test]
    fn staircase_excludes_single_paths() {
        let p4 = Graph::path(4);
        assert_eq!(check_staircase(&p4, &[0, 1], &[2, 3]), Ok(false));
        assert_eq!(check_staircase(&Graph::path(2), &[0], &[1]), Ok(false));
        assert_eq!(check_staircase(&Graph::new(2), &[0], &[1]), Ok(true));
    }

    #[test]
    fn find_examples() {
        let k3 = find_two_parallel_paths(&Graph::complete(3)).unwrap();
        assert_eq!(k3, ParallelPathsCover { p1: vec![0], p2: vec![1, 2] });
        assert!(find_two_parallel_paths(&Graph::path(4)).is_none());
        assert!(find_two_parallel_paths(&Graph::complete(4)).is_none());
        let two = Graph::path(2).disjoint_union(&Graph::path(2));
        let c = find_two_parallel_paths(&two).unwrap();
        assert!(c.is_valid(&two));
        assert!(find_two_parallel_paths(&Graph::new(1)).is_none());
        assert!(find_two_parallel_paths(&Graph::complete_bipartite(2, 3)).is_none());
    }

    #[test]
    fn induced_path_order_examples() {
        let c5 = Graph::cycle(5);
        assert_eq!(induced_path_order(&c5, 0b00111), Some(vec![0, 1, 2]));
        assert_eq!(induced_path_order(&c5, 0b11111), None);
        assert_eq!(induced_path_order(&c5, 0b00101), None);
        assert_eq!(induced_path_order(&c5, 0b01000), Some(vec![3]));
    }

    fn ladder(k: usize) -> Graph {
        let mut g = Graph::new(2 * k);
        for i in 0..k {
            g.add_edge(i, k + i);
            if i + 1 < k {
                g.add_edge(i, i + 1);
                g.add_edge(k + i, k + i + 1);
            }
        }
        g
    }

    #[test]
    fn large_graphs_use_non_exhaustive_routes() {
        // ladders are chains of 4-cycles
        let l = ladder(9);
        let c = find_two_parallel_paths(&l).unwrap();
        assert!(c.is_valid(&l));
        let cyc = Graph::cycle(15);
        assert!(find_two_parallel_paths(&cyc).unwrap().is_valid(&cyc));
        // ladder with a pendant at a corner (not C2)
        let mut lp = ladder(8);
        lp.add_pendant(0);
        let c = find_two_parallel_paths(&lp).unwrap();
        assert!(c.is_valid(&lp));
        // three pendants on one vertex of a long cycle: no cover
        let mut bad = Graph::cycle(13);
        for _ in 0..3 {
            bad.add_pendant(0);
        }
        assert!(find_two_parallel_paths(&bad).is_none());
        assert!(find_two_parallel_paths(&Graph::path(14)).is_none());
        let two = Graph::path(7).disjoint_union(&Graph::path(7));
        assert!(find_two_parallel_paths(&two).unwrap().is_valid(&two));
    }
}
