//! Exact rational matrices and fraction-free rank.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::WitnessError;
use crate::graph::Graph;

pub type Q = BigRational;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

/// A nonzero integer drawn uniformly from `±1..=range`.
pub(crate) fn random_nonzero<R: Rng + ?Sized>(rng: &mut R, range: i64) -> Q {
    let v = rng.gen_range(1..=range);
    q(if rng.gen_bool(0.5) { v } else { -v })
}

/// A positive integer drawn uniformly from `1..=range`.
pub(crate) fn random_positive<R: Rng + ?Sized>(rng: &mut R, range: i64) -> Q {
    q(rng.gen_range(1..=range))
}

/// Square matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<Vec<Q>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct RationalMatrixJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    graph6: Option<String>,
    n: usize,
    entries: Vec<Vec<String>>,
}

impl RationalMatrix {
    pub fn zeros(n: usize) -> Self {
        RationalMatrix { n, entries: vec![vec![Q::zero(); n]; n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i][i] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Result<Self, WitnessError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(WitnessError::Shape("rows must form a square matrix".into()));
        }
        Ok(RationalMatrix { n, entries: rows })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self, WitnessError> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<Q>] {
        &self.entries
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.entries[i][j] = v;
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set_sym(&mut self, i: usize, j: usize, v: Q) {
        self.entries[j][i] = v.clone();
        self.entries[i][j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// Symmetric, with nonzero off-diagonal entries exactly at the edges of
    /// `g`.
    pub fn has_pattern(&self, g: &Graph) -> bool {
        self.n == g.n()
            && self.is_symmetric()
            && (0..self.n).all(|i| (0..i).all(|j| self.entries[i][j].is_zero() != g.has_edge(i, j)))
    }

    /// Principal submatrix on `keep` (in the given order).
    pub fn principal(&self, keep: &[usize]) -> RationalMatrix {
        RationalMatrix {
            n: keep.len(),
            entries: keep
                .iter()
                .map(|&i| keep.iter().map(|&j| self.entries[i][j].clone()).collect())
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        exact_rank(self)
    }

    pub fn to_json(&self, g: Option<&Graph>) -> serde_json::Value {
        let j = RationalMatrixJson {
            graph6: g.map(Graph::to_graph6),
            n: self.n,
            entries: self.entries.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect(),
        };
        serde_json::to_value(j).expect("serializable")
    }

    /// Parses the JSON form; entries are `"p"` or `"p/q"` strings. Returns
    /// the graph too when present, after checking the matrix follows its
    /// pattern.
    pub fn from_json(v: &serde_json::Value) -> Result<(Self, Option<Graph>), WitnessError> {
        let j: RationalMatrixJson =
            serde_json::from_value(v.clone()).map_err(|e| WitnessError::Parse(e.to_string()))?;
        let rows = j
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| s.parse::<Q>().map_err(|e| WitnessError::Parse(format!("{s:?}: {e}"))))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let m = Self::from_rows(rows)?;
        if m.n != j.n {
            return Err(WitnessError::Shape(format!("declared n = {}, found {}", j.n, m.n)));
        }
        let g = match j.graph6 {
            Some(s) => {
                let g = Graph::parse_graph6(&s).map_err(|e| WitnessError::Parse(e.to_string()))?;
                if !m.has_pattern(&g) {
                    return Err(WitnessError::PatternMismatch("matrix does not follow its graph".into()));
                }
                Some(g)
            }
            None => None,
        };
        Ok((m, g))
    }

    pub fn to_f64(&self) -> nalgebra::DMatrix<f64> {
        use num_traits::ToPrimitive;
        nalgebra::DMatrix::from_fn(self.n, self.n, |i, j| self.entries[i][j].to_f64().unwrap_or(f64::NAN))
    }
}

/// Rank over the rationals: each row is scaled to integers, then
/// fraction-free (Bareiss) elimination runs on the integer matrix.
pub fn exact_rank(m: &RationalMatrix) -> usize {
    let rows: Vec<Vec<BigInt>> = m.entries.iter().map(|r| integer_row(r)).collect();
    integer_rank(rows)
}

fn integer_row(r: &[Q]) -> Vec<BigInt> {
    let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    r.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

fn integer_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = (&a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Solves `a x = b` for square invertible `a` (Gauss–Jordan over the
/// rationals); `b` may have several columns. `None` if `a` is singular.
pub(crate) fn solve(a: &[Vec<Q>], b: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = a.len();
    let k = b.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Q>> = a.iter().zip(b).map(|(ra, rb)| ra.iter().chain(rb).cloned().collect()).collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, p);
        let inv = m[col][col].recip();
        for x in &mut m[col] {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..n + k {
                    let v = &m[col][c] * &f;
                    m[r][c] -= v;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Determinant by Gaussian elimination over the rationals.
pub(crate) fn det(a: &[Vec<Q>]) -> Q {
    let n = a.len();
    let mut m = a.to_vec();
    let mut d = Q::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else { return Q::zero() };
        if p != col {
            m.swap(col, p);
            d = -d;
        }
        d *= &m[col][col];
        for r in col + 1..n {
            if !m[r][col].is_zero() {
                let f = &m[r][col] / &m[col][col];
                for c in col..n {
                    let v = &m[col][c] * &f;
                    m[r][c] -= v;
                }
            }
        }
    }
    d
}

pub(crate) fn matmul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|r| {
            (0..cols)
                .map(|c| (0..inner).fold(Q::zero(), |acc, k| acc + &r[k] * &b[k][c]))
                .collect()
        })
        .collect()
}

pub(crate) fn transpose(a: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|c| a.iter().map(|r| r[c].clone()).collect()).collect()
}
