#![allow(dead_code)]

use maxmult::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every graph on 1..=7 vertices up to isomorphism.
pub fn atlas() -> Vec<Graph> {
    include_str!("../data/graphs_n1_7.g6")
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| Graph::parse_graph6(l).expect("corpus line"))
        .collect()
}

pub fn connected_atlas() -> Vec<Graph> {
    atlas().into_iter().filter(Graph::is_connected).collect()
}

/// Every 8-vertex graph obtained by adding a vertex, with any nonempty
/// neighborhood, to a 7-vertex graph of the atlas. Covers every connected
/// 8-vertex graph (delete a non-cut vertex), with repetitions.
pub fn one_vertex_extensions_n8() -> Vec<Graph> {
    let mut out = Vec::new();
    for g in atlas().into_iter().filter(|g| g.n() == 7) {
        for mask in 1u32..128 {
            let mut h = g.clone();
            let x = h.add_pendant(0);
            h.remove_edge(x, 0);
            for v in 0..7 {
                if mask >> v & 1 == 1 {
                    h.add_edge(x, v);
                }
            }
            out.push(h);
        }
    }
    out
}

/// A uniformly random labelled graph on `n` vertices with edge
/// probability `p`, conditioned on being connected.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    loop {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        if g.is_connected() {
            return g;
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random permutation of `0..n`.
pub fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
