//! Corank-three matrices for graphs containing a subdivided K4.
//!
//! With the labelled vertices `L` of the witness in the leading block,
//! `rank A = (n - |L|) + rank S` where `S = A11 - C`. The construction picks
//! a pivot set `P` of size `|L| - 3` and writes `S = Mᵀ T⁻¹ M` with
//! `T = S[P]` and `M = S[P, L]`, so `rank S = |L| - 3` as soon as `T` is
//! invertible. Entries of `S` at non-edges are forced (`-c_ij`), at edges
//! outside the case's free positions they are `a_ij - c_ij` for a random
//! `a_ij`; the free positions absorb what is left. In every case at most one
//! forced entry lies outside `P`, giving one scalar equation
//! `F = m_iᵀ adj(T) m_j - s_ij det T = 0`, solved for an unknown in which
//! `F` is affine (`F = ψ t - φ`).

use num_traits::Zero;
use rand::Rng;

use super::frame::SchurFrame;
use super::rational::{det, random_nonzero, RationalMatrix, Q};
use super::WitnessError;
use crate::graph::Graph;
use crate::recognition::{Hk4Labelling, HomeomorphKind, HomeomorphWitness};

const ATTEMPTS_PER_RANGE: usize = 100;
const RANGES: [i64; 3] = [1_000, 1_000_000, 1_000_000_000];

/// Pivot indices (into the labels) for each case.
fn pivots(case: u8) -> &'static [usize] {
    match case {
        1 => &[],
        2 => &[1],
        3 => &[0, 1],
        _ => &[0, 1, 5],
    }
}

/// Off-diagonal positions of `S` left free in each case.
fn free_pairs(case: u8) -> &'static [(usize, usize)] {
    match case {
        1 => &[(0, 1), (0, 2), (1, 2)],
        2 => &[(0, 1), (0, 2), (2, 3)],
        3 => &[(0, 1), (2, 3), (2, 4)],
        _ => &[(0, 5), (2, 3), (2, 4)],
    }
}

/// A rational matrix with graph exactly `g` and rank exactly `n - 3`,
/// built from a subdivided K4 in `g`. Triples of branch vertices are tried
/// from the lowest case upward.
pub fn construct_corank3_hk4<R: Rng + ?Sized>(
    g: &Graph,
    w: &HomeomorphWitness,
    rng: &mut R,
) -> Result<RationalMatrix, WitnessError> {
    check_witness(g, w)?;
    let mut labellings: Vec<Hk4Labelling> = (0..4).rev().filter_map(|f| w.hk4_labelling_without(f)).collect();
    labellings.sort_by_key(|l| l.case);
    let mut last = None;
    for lab in &labellings {
        match construct_with_labelling(g, lab, rng) {
            Ok(m) => return Ok(m),
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap_or_else(|| WitnessError::InvalidWitness("no labelling".into())))
}

/// As [`construct_corank3_hk4`], using the branch triple that omits
/// `w.branch_vertices[far]`.
pub fn construct_corank3_hk4_without<R: Rng + ?Sized>(
    g: &Graph,
    w: &HomeomorphWitness,
    far: usize,
    rng: &mut R,
) -> Result<RationalMatrix, WitnessError> {
    check_witness(g, w)?;
    let lab = w
        .hk4_labelling_without(far)
        .ok_or_else(|| WitnessError::InvalidWitness(format!("no branch vertex {far}")))?;
    construct_with_labelling(g, &lab, rng)
}

fn check_witness(g: &Graph, w: &HomeomorphWitness) -> Result<(), WitnessError> {
    if w.kind != HomeomorphKind::HK4 || !w.verify(g) {
        return Err(WitnessError::InvalidWitness("not a subdivided K4 of this graph".into()));
    }
    Ok(())
}

fn construct_with_labelling<R: Rng + ?Sized>(
    g: &Graph,
    lab: &Hk4Labelling,
    rng: &mut R,
) -> Result<RationalMatrix, WitnessError> {
    let l = lab.labels.len();
    if l != lab.case as usize + 2 {
        return Err(WitnessError::InvalidWitness(format!("case {} needs {} labels", lab.case, lab.case + 2)));
    }
    for &(i, j) in free_pairs(lab.case) {
        if !g.has_edge(lab.labels[i], lab.labels[j]) {
            return Err(WitnessError::InvalidWitness(format!(
                "free position {}-{} is not an edge",
                lab.labels[i], lab.labels[j]
            )));
        }
    }
    for range in RANGES {
        for _ in 0..ATTEMPTS_PER_RANGE {
            if let Some(m) = attempt(g, lab, rng, range) {
                return Ok(m);
            }
        }
    }
    Err(WitnessError::Degenerate(format!("case {} construction did not close", lab.case)))
}

/// Unknown entries of `S`.
#[derive(Clone, Copy)]
enum Unknown {
    Diag(usize),
    Pair(usize, usize),
}

fn attempt<R: Rng + ?Sized>(g: &Graph, lab: &Hk4Labelling, rng: &mut R, range: i64) -> Option<RationalMatrix> {
    let labels = &lab.labels;
    let l = labels.len();
    let frame = SchurFrame::random(g, labels, rng, range)?;
    let p = pivots(lab.case);
    let free = free_pairs(lab.case);
    let is_free = |i: usize, j: usize| free.contains(&(i.min(j), i.max(j)));

    // s[i][j]: entries of S that are fixed before solving
    let mut s = vec![vec![Q::zero(); l]; l];
    let mut a11 = vec![vec![Q::zero(); l]; l];
    for i in 0..l {
        for j in i + 1..l {
            if is_free(i, j) {
                continue;
            }
            let a = if g.has_edge(labels[i], labels[j]) { random_nonzero(rng, range) } else { Q::zero() };
            let v = &a - &frame.c[i][j];
            s[i][j] = v.clone();
            s[j][i] = v;
            a11[i][j] = a.clone();
            a11[j][i] = a;
        }
    }

    let mut unknowns: Vec<Unknown> = p.iter().map(|&i| Unknown::Diag(i)).collect();
    for &(i, j) in free {
        if p.contains(&i) || p.contains(&j) {
            unknowns.push(Unknown::Pair(i, j));
        }
    }
    for &u in &unknowns {
        set_unknown(&mut s, u, random_nonzero(rng, range));
    }
    let outside: Vec<usize> = (0..l).filter(|i| !p.contains(i)).collect();
    let constraints: Vec<(usize, usize)> = outside
        .iter()
        .flat_map(|&i| outside.iter().map(move |&j| (i, j)))
        .filter(|&(i, j)| i < j && !is_free(i, j))
        .collect();
    if constraints.len() > 1 {
        return None;
    }
    if let Some(&(ci, cj)) = constraints.first() {
        let target = s[ci][cj].clone();
        let f = |s: &Vec<Vec<Q>>| constraint_value(s, p, ci, cj, &target);
        let mut solved = false;
        for &u in &unknowns {
            let at = |t: i64| {
                let mut trial = s.clone();
                set_unknown(&mut trial, u, Q::from_integer(t.into()));
                f(&trial)
            };
            let (f0, f1, f2) = (at(0), at(1), at(2));
            if &f2 - &f1 * Q::from_integer(2.into()) + &f0 != Q::zero() {
                continue;
            }
            let psi = &f1 - &f0;
            let phi = -f0.clone();
            if psi.is_zero() {
                if phi.is_zero() {
                    solved = true;
                    break;
                }
                continue;
            }
            set_unknown(&mut s, u, phi / psi);
            solved = true;
            break;
        }
        if !solved || !f(&s).is_zero() {
            return None;
        }
    }

    let t: Vec<Vec<Q>> = p.iter().map(|&i| p.iter().map(|&j| s[i][j].clone()).collect()).collect();
    let full_s = if p.is_empty() {
        vec![vec![Q::zero(); l]; l]
    } else {
        if det(&t).is_zero() {
            return None;
        }
        let m: Vec<Vec<Q>> = p.iter().map(|&i| s[i].clone()).collect();
        let tinv_m = super::rational::solve(&t, &m)?;
        super::rational::matmul(&super::rational::transpose(&m), &tinv_m)
    };
    // S must keep every entry fixed above
    for i in 0..l {
        for j in i + 1..l {
            if !is_free(i, j) && full_s[i][j] != s[i][j] {
                return None;
            }
        }
    }
    for i in 0..l {
        for j in 0..l {
            if i == j || is_free(i, j) {
                a11[i][j] = &full_s[i][j] + &frame.c[i][j];
            }
        }
    }
    let a = frame.assemble(g.n(), &a11);
    (a.has_pattern(g) && a.rank() + 3 == g.n()).then_some(a)
}

fn set_unknown(s: &mut [Vec<Q>], u: Unknown, v: Q) {
    match u {
        Unknown::Diag(i) => s[i][i] = v,
        Unknown::Pair(i, j) => {
            s[i][j] = v.clone();
            s[j][i] = v;
        }
    }
}

/// `m_iᵀ adj(T) m_j - target · det T` for the current `S`.
fn constraint_value(s: &[Vec<Q>], p: &[usize], i: usize, j: usize, target: &Q) -> Q {
    let t: Vec<Vec<Q>> = p.iter().map(|&a| p.iter().map(|&b| s[a][b].clone()).collect()).collect();
    let d = det(&t);
    let k = p.len();
    let mut acc = Q::zero();
    for (x, &px) in p.iter().enumerate() {
        for (y, &py) in p.iter().enumerate() {
            // adj(T)[x][y] = (-1)^(x+y) det(T without row y, column x)
            let minor: Vec<Vec<Q>> = (0..k)
                .filter(|&r| r != y)
                .map(|r| (0..k).filter(|&c| c != x).map(|c| t[r][c].clone()).collect())
                .collect();
            let mut cof = det(&minor);
            if (x + y) % 2 == 1 {
                cof = -cof;
            }
            acc += &s[px][i] * cof * &s[py][j];
        }
    }
    acc - target * d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognition::find_hk4;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn check(g: &Graph) {
        let w = find_hk4(g).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for far in 0..4 {
            let a = construct_corank3_hk4_without(g, &w, far, &mut rng).unwrap();
            assert!(a.has_pattern(g));
            assert_eq!(a.rank(), g.n() - 3, "far = {far}");
        }
    }

    #[test]
    fn k4() {
        check(&Graph::complete(4));
    }

    #[test]
    fn subdivided_k4s() {
        let k4 = Graph::complete(4);
        let one = k4.subdivide_edge(0, 1).unwrap();
        check(&one);
        let two = one.subdivide_edge(2, 3).unwrap();
        check(&two);
        let adjacent = one.subdivide_edge(0, 2).unwrap();
        check(&adjacent);
        let mut all = k4.clone();
        for (u, v) in k4.edges() {
            all = all.subdivide_edge(u, v).unwrap();
        }
        check(&all);
    }

    #[test]
    fn case_two_on_one_subdivision() {
        let g = Graph::complete(4).subdivide_edge(0, 1).unwrap();
        let w = find_hk4(&g).unwrap();
        let far = (0..4)
            .find(|&f| w.hk4_labelling_without(f).is_some_and(|l| l.case == 2))
            .unwrap();
        let a = construct_corank3_hk4_without(&g, &w, far, &mut ChaCha8Rng::seed_from_u64(3)).unwrap();
        assert_eq!(a.rank(), 2);
    }
}
