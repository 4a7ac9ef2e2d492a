mod common;

use maxmult::classifier::{classify, Certificate, Verdict};
use maxmult::recognition::{find_hk23, find_hk4, is_partial_two_tree};
use maxmult::witness::{
    construct_corank3_hk23, construct_corank3_hk4, construct_corank3_hk4_without, exact_rank,
    find_triangular_certificate, lower_bound_certificate, pendant_lift, pendant_reduce, verify_certificate, PendantLift,
    RationalMatrix, SchurFrame, Q,
};
use maxmult::Graph;
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn random_member(g: &Graph, rng: &mut ChaCha8Rng) -> RationalMatrix {
    let n = g.n();
    let mut a = RationalMatrix::zeros(n);
    for i in 0..n {
        a.set(i, i, Q::from_integer(BigInt::from(rng.gen_range(-3..=3))));
        for j in i + 1..n {
            if g.has_edge(i, j) {
                let mut v = 0;
                while v == 0 {
                    v = rng.gen_range(-3..=3);
                }
                a.set_sym(i, j, Q::new(BigInt::from(v), BigInt::from(rng.gen_range(1..=3))));
            }
        }
    }
    a
}

#[test]
fn every_m2_graph_up_to_seven_vertices_has_a_structural_certificate() {
    let mut count = 0;
    for g in common::connected_atlas() {
        let c = classify(&g).unwrap();
        if c.verdict != Verdict::M2 {
            continue;
        }
        let cert = match &c.certificate {
            Certificate::Tpp { cover } => lower_bound_certificate(&g, cover).unwrap(),
            _ => find_triangular_certificate(&g).unwrap(),
        };
        assert!(verify_certificate(&g, &cert).unwrap(), "{}", g.to_graph6());
        count += 1;
    }
    assert!(count > 0);
}

#[test]
fn exceptional_graphs_have_no_triangular_certificate() {
    // the peel is complete for each deleted pair, so this is a property of
    // the pattern: the lower bound for this family is not triangular
    let mut g = Graph::from_edges(5, &[(0, 1), (0, 3), (1, 3), (1, 2), (0, 2), (2, 4), (0, 4)]).unwrap();
    for v in [0, 1, 2] {
        g.add_pendant(v);
    }
    assert_eq!(classify(&g).unwrap().verdict, Verdict::M2);
    assert!(find_triangular_certificate(&g).is_none());
}

#[test]
fn certified_graphs_have_no_low_rank_members() {
    let mut rng = common::rng(11);
    let graphs: Vec<Graph> = common::connected_atlas()
        .into_iter()
        .filter(|g| g.n() >= 5)
        .filter(|g| classify(g).unwrap().verdict == Verdict::M2)
        .collect();
    let mut checked = 0;
    for k in 0..20 {
        let g = &graphs[(k * 37) % graphs.len()];
        assert!(find_triangular_certificate(g).is_some());
        for _ in 0..50 {
            assert!(exact_rank(&random_member(g, &mut rng)) + 2 >= g.n());
            checked += 1;
        }
    }
    assert_eq!(checked, 1000);
}

#[test]
fn hk4_constructions_for_all_non_partial_two_trees_up_to_six_vertices() {
    let mut rng = common::rng(2);
    let mut count = 0;
    for g in common::connected_atlas().into_iter().filter(|g| g.n() <= 6 && !is_partial_two_tree(g)) {
        let w = find_hk4(&g).unwrap();
        let a = construct_corank3_hk4(&g, &w, &mut rng).unwrap();
        assert!(a.has_pattern(&g));
        assert_eq!(exact_rank(&a), g.n() - 3, "{}", g.to_graph6());
        for far in 0..4 {
            let a = construct_corank3_hk4_without(&g, &w, far, &mut rng).unwrap();
            assert!(a.has_pattern(&g));
            assert_eq!(exact_rank(&a), g.n() - 3, "{} far {far}", g.to_graph6());
        }
        count += 1;
    }
    assert!(count > 0);
}

#[test]
fn hk4_constructions_on_seven_vertices() {
    let mut rng = common::rng(3);
    for g in common::connected_atlas().into_iter().filter(|g| g.n() == 7 && !is_partial_two_tree(g)).step_by(7) {
        let w = find_hk4(&g).unwrap();
        let a = construct_corank3_hk4(&g, &w, &mut rng).unwrap();
        assert!(a.has_pattern(&g));
        assert_eq!(exact_rank(&a), 4);
    }
}

#[test]
fn hk23_constructions_for_partial_two_trees_up_to_seven_vertices() {
    let mut rng = common::rng(4);
    let mut count = 0;
    for g in common::connected_atlas().into_iter().filter(is_partial_two_tree) {
        if let Some(w) = find_hk23(&g) {
            let a = construct_corank3_hk23(&g, &w, &mut rng).unwrap();
            assert!(a.has_pattern(&g));
            assert_eq!(exact_rank(&a) + 3, g.n(), "{}", g.to_graph6());
            count += 1;
        }
    }
    assert!(count > 0);
}

#[test]
fn external_paths_make_schur_entries_nonzero() {
    let mut rng = common::rng(8);
    let mut done = 0;
    while done < 50 {
        let n = rng.gen_range(5..=9);
        let g = common::random_connected(&mut rng, n, 0.45);
        let Some(w) = find_hk4(&g) else { continue };
        let lab = w.hk4_labelling().unwrap();
        let frame = SchurFrame::random(&g, &lab.labels, &mut rng, 1000).unwrap();
        assert!(frame.external_paths_give_nonzero_c(&g), "{}", g.to_graph6());
        done += 1;
    }
}

#[test]
fn drop_both_lift_keeps_corank_three() {
    let k23 = Graph::complete_bipartite(2, 3);
    let w = find_hk23(&k23).unwrap();
    let b = construct_corank3_hk23(&k23, &w, &mut common::rng(1)).unwrap();
    let mut g = k23.clone();
    let x = g.add_pendant(0);
    let v = g.add_pendant(x);
    let lift = PendantLift::DropBoth { x: Q::from_integer(2.into()), y: Q::from_integer((-1).into()) };
    let a = pendant_lift(&b, &g, v, &lift).unwrap();
    assert!(a.has_pattern(&g));
    assert_eq!(g.n() - exact_rank(&a), 3);
    let (back, _) = pendant_reduce(&a, &g, v).unwrap();
    assert_eq!(back, b);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]
    #[test]
    fn pendant_lift_round_trips(idx in 0usize..996, seed in any::<u64>(), keep in any::<bool>(), x in 1i64..50, y in 1i64..50) {
        let atlas = common::connected_atlas();
        let mut g = atlas[idx].clone();
        let mut rng = common::rng(seed);
        let attach = rng.gen_range(0..g.n());
        let v = g.add_pendant(attach);
        let (small, _) = if keep { g.remove_vertices(&[v]) } else { g.remove_vertices(&[attach, v]) };
        let b = random_member(&small, &mut rng);
        let (xq, yq) = (Q::from_integer(x.into()), Q::from_integer((-y).into()));
        let lift = if keep { PendantLift::KeepNeighbor { x: xq, y: yq } } else { PendantLift::DropBoth { x: xq, y: yq } };
        let a = pendant_lift(&b, &g, v, &lift).unwrap();
        prop_assert!(a.has_pattern(&g));
        prop_assert_eq!(exact_rank(&a), exact_rank(&b) + if keep { 1 } else { 2 });
        let (back, _) = pendant_reduce(&a, &g, v).unwrap();
        prop_assert_eq!(back, b);
    }
}
