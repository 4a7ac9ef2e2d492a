mod common;

use maxmult::Graph;
use proptest::prelude::*;

type Row = (String, usize, Vec<(usize, usize)>);

/// Each line is `graph6 <TAB> n <TAB> space-separated u-v edges`, written by
/// an independent encoder.
fn reference() -> Vec<Row> {
    include_str!("data/graph6_reference_n1_5.tsv")
        .lines()
        .filter(|l| !l.is_empty())
        .map(|l| {
            let mut f = l.split('\t');
            let code = f.next().unwrap().to_string();
            let n = f.next().unwrap().parse().unwrap();
            let edges = f
                .next()
                .unwrap_or("")
                .split_whitespace()
                .map(|e| {
                    let (u, v) = e.split_once('-').unwrap();
                    (u.parse().unwrap(), v.parse().unwrap())
                })
                .collect();
            (code, n, edges)
        })
        .collect()
}

#[test]
fn matches_the_reference_encoder() {
    let table = reference();
    assert_eq!(table.len(), 52);
    for (code, n, edges) in table {
        let g = Graph::parse_graph6(&code).unwrap();
        assert_eq!(g.n(), n, "{code}");
        let mut expected: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        expected.sort();
        assert_eq!(g.edges(), expected, "{code}");
        assert_eq!(g.to_graph6(), code);
    }
}

#[test]
fn atlas_round_trips() {
    for g in common::atlas() {
        assert_eq!(Graph::parse_graph6(&g.to_graph6()).unwrap(), g);
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }
}

proptest! {
    #[test]
    fn random_graphs_round_trip(n in 0usize..=62, seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rand::Rng::gen_bool(&mut rng, 0.3) {
                    g.add_edge(u, v);
                }
            }
        }
        prop_assert_eq!(Graph::parse_graph6(&g.to_graph6()).unwrap(), g);
    }
}
