use maxmult::classifier::{classify, Certificate};
use maxmult::oracle::{maximize_nullity, OracleConfig};
use maxmult::recognition::{find_hk23, find_hk4};
use maxmult::witness::{
    construct_corank3_hk23, construct_corank3_hk4, exact_rank, find_triangular_certificate, lower_bound_certificate,
    verify_certificate,
};
use maxmult::Graph;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Request {
    /// A matrix in the class with the given corank: exact for corank three
    /// via a subdivided K4 or K2,3, numeric otherwise.
    Corank(usize),
    /// A structural proof that every matrix has rank at least `n - 2`.
    LowerBound,
}

pub fn witness(g: &Graph, request: Request, oracle: &OracleConfig) -> Result<Value, CliError> {
    let c = classify(g).map_err(|e| CliError::Input(e.to_string()))?;
    let graph6 = g.to_graph6();
    match request {
        Request::LowerBound => {
            let cert = match &c.certificate {
                Certificate::Tpp { cover } => lower_bound_certificate(g, cover).ok(),
                _ => find_triangular_certificate(g),
            }
            .ok_or_else(|| {
                CliError::Unsupported(format!("no triangular submatrix of order n - 2 (verdict {:?})", c.verdict))
            })?;
            let verified = verify_certificate(g, &cert).unwrap_or(false);
            Ok(json!({
                "graph6": graph6,
                "kind": "lower_bound",
                "rank_at_least": g.n() - 2,
                "certificate": cert,
                "verified": verified,
            }))
        }
        Request::Corank(m) => {
            if m == 0 || m > g.n() {
                return Err(CliError::Unsupported(format!("corank {m} is outside 1..={}", g.n())));
            }
            let capped = c.verdict.capped() as usize;
            if capped < 3 && m > capped {
                return Err(CliError::Unsupported(format!("M(G) = {capped}, so no matrix has corank {m}")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(oracle.seed);
            if m == 3 && g.is_connected() {
                let exact = if let Some(w) = find_hk4(g) {
                    construct_corank3_hk4(g, &w, &mut rng).ok().map(|a| ("hK4", a))
                } else {
                    find_hk23(g).and_then(|w| construct_corank3_hk23(g, &w, &mut rng).ok()).map(|a| ("hK23", a))
                };
                if let Some((construction, a)) = exact {
                    let rank = exact_rank(&a);
                    return Ok(json!({
                        "graph6": graph6,
                        "kind": "exact",
                        "construction": construction,
                        "matrix": a.to_json(Some(g)),
                        "rank": rank,
                        "corank": g.n() - rank,
                    }));
                }
            }
            let r = maximize_nullity(g, m, oracle)
                .ok_or_else(|| CliError::Unsupported(format!("the numeric search found no matrix of corank {m}")))?;
            Ok(json!({
                "graph6": graph6,
                "kind": "numeric",
                "matrix": r.matrix,
                "corank": m,
                "eigenvalue": r.shift,
                "residual": r.residual,
                "spectral_gap": r.spectral_gap,
                "seed": r.seed,
            }))
        }
    }
}
