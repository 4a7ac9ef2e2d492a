//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use maxmult::classifier::{classify, Certificate, Ge3Reason, Verdict};
use maxmult::oracle::{estimate_m, maximize_nullity, verify_corank, Objective, OracleConfig};
use maxmult::recognition::{find_hk23, find_hk4, find_two_parallel_paths, is_partial_two_tree, seac_decompose};
use maxmult::witness::{
    construct_corank3_hk23, construct_corank3_hk4, exact_rank, lower_bound_certificate, verify_certificate,
    RationalMatrix,
};
use maxmult::Graph;
use rand::Rng;
use rayon::prelude::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Oracle estimate capped at three, the trichotomy's resolution.
fn oracle_capped(g: &Graph, cfg: &OracleConfig) -> usize {
    estimate_m(g, cfg, Some(3)).m_attained
}

fn anchors() -> Outcome {
    let start = Instant::now();
    for n in 1..=10 {
        ensure(classify(&Graph::path(n)).unwrap().verdict == Verdict::M1, format!("P{n} is not M1"))?;
    }

    let k4 = Graph::complete(4);
    let c = classify(&k4).unwrap();
    let hk4 = matches!(c.certificate, Certificate::Ge3 { reason: Ge3Reason::Hk4 { .. } });
    ensure(c.verdict == Verdict::MGe3 && hk4, "K4 is not MGe3 by a subdivided K4")?;
    let m = estimate_m(&k4, &OracleConfig::default(), None).m_attained;
    ensure(m == 3, format!("oracle reaches {m} on K4"))?;
    let a1 = RationalMatrix::from_i64(&vec![vec![1; 4]; 4]).unwrap();
    ensure(a1.has_pattern(&k4) && exact_rank(&a1) == 1, "all-ones matrix on K4 does not have rank 1")?;

    let k23 = Graph::complete_bipartite(2, 3);
    let c = classify(&k23).unwrap();
    let hk23 = matches!(c.certificate, Certificate::Ge3 { reason: Ge3Reason::Hk23 { .. } });
    ensure(c.verdict == Verdict::MGe3 && hk23, "K2,3 is not MGe3 by a subdivided K2,3")?;
    let w = find_hk23(&k23).unwrap();
    let a2 = construct_corank3_hk23(&k23, &w, &mut common::rng(1)).unwrap();
    ensure(a2.has_pattern(&k23) && exact_rank(&a2) == 2, "K2,3 construction does not have rank 2")?;

    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(5), format!("took {elapsed:?}"))?;
    Ok(format!("paths, K4 (oracle 3, rank 1), K2,3 (rank 2) in {elapsed:.2?}"))
}

fn exhaustive_cross_validation() -> Outcome {
    let graphs = common::connected_atlas();
    ensure(graphs.len() == 996, format!("corpus has {} connected graphs", graphs.len()))?;
    let cfg = OracleConfig::default();
    let problems: Vec<String> = graphs
        .par_iter()
        .filter_map(|g| {
            let c = classify(g).unwrap();
            let o = estimate_m(g, &cfg, Some(3));
            let oracle = Verdict::from_capped(o.m_attained as u8);
            if oracle != Some(c.verdict) {
                return Some(format!("{}: classifier {:?}, oracle {}", g.to_graph6(), c.verdict, o.m_attained));
            }
            if c.verdict == Verdict::M2 {
                let Certificate::Tpp { cover } = &c.certificate else {
                    return Some(format!("{}: M2 without a parallel-paths cover", g.to_graph6()));
                };
                let cert = lower_bound_certificate(g, cover);
                if !cert.is_ok_and(|c| verify_certificate(g, &c) == Ok(true)) {
                    return Some(format!("{}: no verified triangular certificate", g.to_graph6()));
                }
                let r = o.levels[1].as_ref().unwrap();
                let ok = r.residual < cfg.accept_tol && r.spectral_gap > cfg.gap_tol;
                if !ok || !verify_corank(&r.dmatrix(), g, 2) {
                    return Some(format!("{}: corank-2 realization fails its re-check", g.to_graph6()));
                }
            }
            None
        })
        .collect();
    ensure(problems.is_empty(), problems.join("; "))?;
    let m2 = graphs.iter().filter(|g| classify(g).unwrap().verdict == Verdict::M2).count();
    Ok(format!("996 graphs, 0 mismatches, {m2} M2 graphs with certificate and realization"))
}

fn parallel_paths_iff_linear_chain() -> Outcome {
    let mut graphs = common::connected_atlas();
    graphs.extend(common::one_vertex_extensions_n8().into_iter().filter(Graph::is_connected));
    let c2: Vec<Graph> = graphs.into_iter().filter(Graph::is_c2).collect();
    let bad: Vec<String> = c2
        .par_iter()
        .filter_map(|g| {
            let tpp = find_two_parallel_paths(g).is_some();
            let lseac = seac_decompose(g).unwrap().is_some_and(|d| d.is_lseac);
            (tpp != lseac).then(|| format!("{}: parallel paths {tpp}, linear chain {lseac}", g.to_graph6()))
        })
        .collect();
    ensure(bad.is_empty(), bad.join("; "))?;
    Ok(format!("{} minimum-degree-two graphs on up to 8 vertices", c2.len()))
}

fn subdivision_effect() -> Outcome {
    let cfg = OracleConfig::default();
    let c5 = Graph::cycle(5);
    ensure(oracle_capped(&c5, &cfg) == 2, "C5 is not at 2")?;
    for (u, v) in c5.edges() {
        let m = oracle_capped(&c5.subdivide_edge(u, v).unwrap(), &cfg);
        ensure(m == 2, format!("C5 with {u}-{v} subdivided reaches {m}"))?;
    }
    // triangles 0-1-2 and 0-1-3 sharing the edge 0-1
    let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
    let before = oracle_capped(&diamond, &cfg);
    let after = oracle_capped(&diamond.subdivide_edge(0, 1).unwrap(), &cfg);
    ensure(before == 2 && after == 3, format!("shared edge subdivision goes {before} -> {after}"))?;
    Ok("C5 subdivisions stay at 2; shared-edge subdivision goes 2 -> 3".into())
}

fn pendant_max_rule() -> Outcome {
    let mut rng = common::rng(42);
    let cfg = OracleConfig::default();
    let mut cases = Vec::new();
    while cases.len() < 200 {
        let n = rng.gen_range(2..=7);
        let p = rng.gen_range(0.2..0.7);
        let g = common::random_connected(&mut rng, n, p);
        let pendants = g.pendant_vertices();
        if !pendants.is_empty() {
            let v = pendants[rng.gen_range(0..pendants.len())];
            cases.push((g, v));
        }
    }
    let bad: Vec<String> = cases
        .par_iter()
        .filter_map(|(g, v)| {
            let u = g.neighbors(*v)[0];
            let whole = oracle_capped(g, &cfg);
            let keep = oracle_capped(&g.remove_vertices(&[*v]).0, &cfg);
            let drop = oracle_capped(&g.remove_vertices(&[u, *v]).0, &cfg);
            (whole != keep.max(drop)).then(|| format!("{} at {v}: {whole} vs max({keep}, {drop})", g.to_graph6()))
        })
        .collect();
    ensure(bad.is_empty(), bad.join("; "))?;
    Ok("200 random graphs with a pendant".into())
}

fn hk4_constructions() -> Outcome {
    let graphs: Vec<Graph> =
        common::connected_atlas().into_iter().filter(|g| g.n() <= 6 && !is_partial_two_tree(g)).collect();
    let mut rng = common::rng(6);
    for g in &graphs {
        let w = find_hk4(g).ok_or_else(|| format!("{}: no subdivided K4 found", g.to_graph6()))?;
        let a = construct_corank3_hk4(g, &w, &mut rng).map_err(|e| format!("{}: {e}", g.to_graph6()))?;
        ensure(a.has_pattern(g), format!("{}: pattern differs", g.to_graph6()))?;
        let r = exact_rank(&a);
        ensure(r + 3 == g.n(), format!("{}: rank {r}", g.to_graph6()))?;
    }
    Ok(format!("{} graphs, exact rank n - 3", graphs.len()))
}

fn exceptional_smoke() -> Outcome {
    // triangles {u,a,x}, {u,a,b}, {u,b,y} with u=0, a=1, b=2, x=3, y=4
    let mut g = Graph::from_edges(5, &[(0, 1), (0, 3), (1, 3), (1, 2), (0, 2), (2, 4), (0, 4)]).unwrap();
    for v in [0, 1, 2] {
        g.add_pendant(v);
    }
    let c = classify(&g).unwrap();
    let exceptional = matches!(c.certificate, Certificate::Exceptional { .. });
    ensure(c.verdict == Verdict::M2 && exceptional, format!("classified {:?}", c.verdict))?;
    ensure(c.verify(&g), "exceptional certificate fails its re-check")?;
    ensure(find_two_parallel_paths(&g).is_none(), "has a parallel-paths cover")?;
    let cfg = OracleConfig::default();
    let two = maximize_nullity(&g, 2, &cfg);
    ensure(two.is_some_and(|r| verify_corank(&r.dmatrix(), &g, 2)), "oracle does not reach corank 2")?;
    ensure(maximize_nullity(&g, 3, &cfg).is_none(), "oracle reaches corank 3")?;
    Ok("3-triangle chain: M2 exceptional, no cover, oracle 2 but not 3".into())
}

fn gradient_check() -> Outcome {
    let mut rng = common::rng(8);
    let mut worst: f64 = 0.0;
    for k in 0..100 {
        let n = rng.gen_range(2..=6);
        let g = common::random_connected(&mut rng, n, 0.5);
        let m = rng.gen_range(1..=n);
        let obj = Objective::new(&g, m);
        let x: Vec<f64> =
            (0..obj.dim()).map(|_| rng.gen_range(0.1..2.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 }).collect();
        let (_, grad) = obj.value_and_gradient(&x);
        let h = 1e-6;
        let fd: Vec<f64> = (0..obj.dim())
            .map(|i| {
                let (mut xp, mut xm) = (x.clone(), x.clone());
                xp[i] += h;
                xm[i] -= h;
                (obj.value(&xp) - obj.value(&xm)) / (2.0 * h)
            })
            .collect();
        let norm = |v: &mut dyn Iterator<Item = f64>| v.map(|t| t * t).sum::<f64>().sqrt();
        let diff = norm(&mut fd.iter().zip(&grad).map(|(a, b)| a - b));
        let rel = diff / norm(&mut grad.iter().copied()).max(1e-8);
        worst = worst.max(rel);
        ensure(rel < 1e-5, format!("instance {k} ({}, m={m}): relative error {rel:e}", g.to_graph6()))?;
    }
    Ok(format!("100 instances, worst relative error {worst:.1e}"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("anchor examples", anchors),
        ("exhaustive cross-validation, n <= 7", exhaustive_cross_validation),
        ("parallel paths iff linear cycle chain, n <= 8", parallel_paths_iff_linear_chain),
        ("edge subdivision", subdivision_effect),
        ("pendant max rule", pendant_max_rule),
        ("corank-3 subdivided K4 constructions, n <= 6", hk4_constructions),
        ("exceptional family", exceptional_smoke),
        ("gradient check", gradient_check),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|p| Err(p.downcast_ref::<String>().cloned().unwrap_or_else(|| "panicked".into())));
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} ({t:.1?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({t:.1?}): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
