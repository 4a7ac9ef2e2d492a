//! Exact evaluation of the maximum multiplicity, capped at three, by
//! repeatedly splitting off pendant vertices:
//! `M(G) = max(M(G - v), M(G - {u, v}))` for a pendant `v` with neighbor
//! `u`, `M` adds over components, and the leaves (paths, trees, graphs of
//! minimum degree two) have known values.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::ClassifyError;
use crate::graph::Graph;
use crate::recognition::{seac_decompose, tree_path_cover};

/// A value of `M`, or a lower bound for it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MBound {
    Exact(usize),
    AtLeast(usize),
}

impl MBound {
    pub fn lower(self) -> usize {
        match self {
            MBound::Exact(k) | MBound::AtLeast(k) => k,
        }
    }

    /// The bound as a value in `0..=3`, where 3 stands for "three or more".
    pub fn capped(self) -> u8 {
        self.lower().min(3) as u8
    }

    fn from_capped(k: u8) -> Self {
        if k >= 3 {
            MBound::AtLeast(3)
        } else {
            MBound::Exact(k as usize)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LeafKind {
    Empty,
    Path,
    /// A tree; `M` is its path cover number.
    Tree { path_cover: usize },
    /// Minimum degree two and a linear chain of cycles: `M = 2`.
    LinearCycleChain,
    /// Minimum degree two but not a linear chain of cycles: `M >= 3`.
    OtherMinDegreeTwo,
}

/// One node of a pendant reduction. Vertex labels are those of the graph
/// the reduction started from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum ReductionStep {
    Leaf { vertices: Vec<usize>, kind: LeafKind, bound: MBound },
    Union { parts: Vec<ReductionStep>, bound: MBound },
    Pendant {
        pendant: usize,
        neighbor: usize,
        /// Reduction of the graph without the pendant vertex.
        keep: Box<ReductionStep>,
        /// Reduction of the graph without the pendant and its neighbor;
        /// omitted once `keep` already reaches three.
        drop: Option<Box<ReductionStep>>,
        bound: MBound,
    },
}

impl ReductionStep {
    pub fn bound(&self) -> MBound {
        match self {
            ReductionStep::Leaf { bound, .. }
            | ReductionStep::Union { bound, .. }
            | ReductionStep::Pendant { bound, .. } => *bound,
        }
    }
}

fn mask_vertices(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

struct Reducer<'a> {
    g: &'a Graph,
    masks: Vec<u64>,
    memo: HashMap<u64, u8>,
}

enum Shape {
    Empty,
    Split(Vec<u64>),
    Leaf(LeafKind),
    Pendant { v: usize, u: usize },
}

impl<'a> Reducer<'a> {
    fn new(g: &'a Graph) -> Self {
        let masks = (0..g.n()).map(|v| g.neighbor_mask(v)).collect();
        Reducer { g, masks, memo: HashMap::new() }
    }

    fn components(&self, mask: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut left = mask;
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            loop {
                let grown = mask_vertices(comp)
                    .into_iter()
                    .fold(comp, |acc, v| acc | (self.masks[v] & mask));
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }

    fn shape(&self, mask: u64) -> Shape {
        if mask == 0 {
            return Shape::Empty;
        }
        let comps = self.components(mask);
        if comps.len() > 1 {
            return Shape::Split(comps);
        }
        let verts = mask_vertices(mask);
        let deg = |v: usize| (self.masks[v] & mask).count_ones() as usize;
        let edges: usize = verts.iter().map(|&v| deg(v)).sum::<usize>() / 2;
        if edges + 1 == verts.len() {
            if verts.iter().all(|&v| deg(v) <= 2) {
                return Shape::Leaf(LeafKind::Path);
            }
            let (sub, _) = self.g.induced_subgraph(&verts);
            let cover = tree_path_cover(&sub).expect("acyclic").count;
            return Shape::Leaf(LeafKind::Tree { path_cover: cover });
        }
        if let Some(&v) = verts.iter().find(|&&v| deg(v) == 1) {
            let u = (self.masks[v] & mask).trailing_zeros() as usize;
            return Shape::Pendant { v, u };
        }
        let (sub, _) = self.g.induced_subgraph(&verts);
        let linear = matches!(seac_decompose(&sub), Ok(Some(d)) if d.is_lseac);
        Shape::Leaf(if linear { LeafKind::LinearCycleChain } else { LeafKind::OtherMinDegreeTwo })
    }

    fn leaf_value(kind: LeafKind) -> u8 {
        match kind {
            LeafKind::Empty => 0,
            LeafKind::Path => 1,
            LeafKind::Tree { path_cover } => path_cover.min(3) as u8,
            LeafKind::LinearCycleChain => 2,
            LeafKind::OtherMinDegreeTwo => 3,
        }
    }

    fn value(&mut self, mask: u64) -> u8 {
        if let Some(&m) = self.memo.get(&mask) {
            return m;
        }
        let m = match self.shape(mask) {
            Shape::Empty => 0,
            Shape::Leaf(kind) => Self::leaf_value(kind),
            Shape::Split(comps) => {
                let mut total = 0u8;
                for c in comps {
                    total = (total + self.value(c)).min(3);
                    if total >= 3 {
                        break;
                    }
                }
                total
            }
            Shape::Pendant { v, u } => {
                let keep = self.value(mask & !(1u64 << v));
                if keep >= 3 {
                    3
                } else {
                    keep.max(self.value(mask & !(1u64 << v) & !(1u64 << u)))
                }
            }
        };
        self.memo.insert(mask, m);
        m
    }

    fn tree(&mut self, mask: u64) -> ReductionStep {
        match self.shape(mask) {
            Shape::Empty => ReductionStep::Leaf {
                vertices: Vec::new(),
                kind: LeafKind::Empty,
                bound: MBound::Exact(0),
            },
            Shape::Leaf(kind) => {
                let bound = match kind {
                    LeafKind::Tree { path_cover } => MBound::Exact(path_cover),
                    other => MBound::from_capped(Self::leaf_value(other)),
                };
                ReductionStep::Leaf { vertices: mask_vertices(mask), kind, bound }
            }
            Shape::Split(comps) => {
                let parts: Vec<ReductionStep> = comps.into_iter().map(|c| self.tree(c)).collect();
                let exact = parts.iter().all(|p| matches!(p.bound(), MBound::Exact(_)));
                let sum = parts.iter().map(|p| p.bound().lower()).sum();
                let bound = if exact { MBound::Exact(sum) } else { MBound::AtLeast(sum) };
                ReductionStep::Union { parts, bound }
            }
            Shape::Pendant { v, u } => {
                let keep = self.tree(mask & !(1u64 << v));
                let (drop, bound) = if keep.bound().capped() >= 3 {
                    (None, MBound::AtLeast(keep.bound().lower()))
                } else {
                    let drop = self.tree(mask & !(1u64 << v) & !(1u64 << u));
                    let bound = match (keep.bound(), drop.bound()) {
                        (MBound::Exact(a), MBound::Exact(b)) => MBound::Exact(a.max(b)),
                        (a, b) => MBound::AtLeast(a.lower().max(b.lower())),
                    };
                    (Some(Box::new(drop)), bound)
                };
                ReductionStep::Pendant { pendant: v, neighbor: u, keep: Box::new(keep), drop, bound }
            }
        }
    }
}

/// `min(M(G), 3)`, computed exactly by pendant reduction. Requires
/// `n <= 64`.
pub fn pendant_reduction_m(g: &Graph) -> Result<u8, ClassifyError> {
    if g.n() > 64 {
        return Err(ClassifyError::TooLarge(g.n()));
    }
    Ok(Reducer::new(g).value(full_mask(g.n())))
}

/// Reduction tree for `G` with its bound. Leaves are paths, trees, and
/// graphs of minimum degree two, so the bound is exact whenever it is
/// below three. Requires `n <= 64`.
pub fn m_upper_by_pendant_reduction(g: &Graph) -> Result<(MBound, ReductionStep), ClassifyError> {
    if g.n() > 64 {
        return Err(ClassifyError::TooLarge(g.n()));
    }
    let step = Reducer::new(g).tree(full_mask(g.n()));
    Ok((step.bound(), step))
}

/// Re-checks a reduction tree against `g`: every pendant step removes a
/// degree-one vertex and its neighbor from the current vertex set, unions
/// split into the actual components, leaves have the claimed kind, and the
/// bounds combine as claimed.
pub fn verify_reduction(g: &Graph, step: &ReductionStep) -> bool {
    if g.n() > 64 {
        return false;
    }
    fn check(r: &Reducer, mask: u64, step: &ReductionStep) -> Option<MBound> {
        let got = match step {
            ReductionStep::Leaf { vertices, kind, .. } => {
                let m = vertices.iter().try_fold(0u64, |m, &v| (v < 64).then_some(m | 1u64 << v))?;
                if m != mask {
                    return None;
                }
                let actual = match r.shape(mask) {
                    Shape::Empty => LeafKind::Empty,
                    Shape::Leaf(k) => k,
                    _ => return None,
                };
                if actual != *kind {
                    return None;
                }
                match kind {
                    LeafKind::Tree { path_cover } => MBound::Exact(*path_cover),
                    other => MBound::from_capped(Reducer::leaf_value(*other)),
                }
            }
            ReductionStep::Union { parts, .. } => {
                let Shape::Split(comps) = r.shape(mask) else { return None };
                if comps.len() != parts.len() {
                    return None;
                }
                let mut exact = true;
                let mut sum = 0;
                for (c, p) in comps.iter().zip(parts) {
                    let b = check(r, *c, p)?;
                    exact &= matches!(b, MBound::Exact(_));
                    sum += b.lower();
                }
                if exact {
                    MBound::Exact(sum)
                } else {
                    MBound::AtLeast(sum)
                }
            }
            ReductionStep::Pendant { pendant, neighbor, keep, drop, .. } => {
                let (v, u) = (*pendant, *neighbor);
                if v >= 64 || u >= 64 || mask >> v & 1 == 0 || r.masks[v] & mask != 1u64 << u {
                    return None;
                }
                let k = check(r, mask & !(1u64 << v), keep)?;
                match drop {
                    None if k.capped() >= 3 => MBound::AtLeast(k.lower()),
                    None => return None,
                    Some(d) => {
                        let d = check(r, mask & !(1u64 << v) & !(1u64 << u), d)?;
                        match (k, d) {
                            (MBound::Exact(a), MBound::Exact(b)) => MBound::Exact(a.max(b)),
                            (a, b) => MBound::AtLeast(a.lower().max(b.lower())),
                        }
                    }
                }
            }
        };
        (got == step.bound()).then_some(got)
    }
    let r = Reducer::new(g);
    check(&r, full_mask(g.n()), step).is_some()
}
