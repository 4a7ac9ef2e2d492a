//! Decides whether `M(G)` is 1, 2, or at least 3, always with a
//! certificate that can be re-checked against the graph.

mod exceptional;
mod reduction;

pub use exceptional::{
    exceptional_test, final_criterion, ExceptionalReport, FamilyFacts, FinalCriterion, NecessaryConditions, Remainder,
};
pub use reduction::{m_upper_by_pendant_reduction, pendant_reduction_m, verify_reduction, LeafKind, MBound, ReductionStep};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{ContractionLog, Graph};
use crate::recognition::{
    find_hk23, find_hk4, find_two_parallel_paths, is_partial_two_tree, seac_decompose, tree_path_cover,
    HomeomorphKind, HomeomorphWitness, ParallelPathsCover, PathCover,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("pendant reduction supports at most 64 vertices, got {0}")]
    TooLarge(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Verdict {
    M1,
    M2,
    MGe3,
}

impl Verdict {
    /// `min(M, 3)`.
    pub fn capped(self) -> u8 {
        match self {
            Verdict::M1 => 1,
            Verdict::M2 => 2,
            Verdict::MGe3 => 3,
        }
    }

    /// Verdict for a capped multiplicity value (`0` is not a verdict).
    pub fn from_capped(m: u8) -> Option<Verdict> {
        match m {
            1 => Some(Verdict::M1),
            2 => Some(Verdict::M2),
            m if m >= 3 => Some(Verdict::MGe3),
            _ => None,
        }
    }
}

/// One component of a disconnected graph: its vertices (component label
/// -> parent label) and its classification in component labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentVerdict {
    pub vertices: Vec<usize>,
    pub classification: Classification,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Ge3Reason {
    /// Contains a subdivided K4.
    Hk4 { witness: HomeomorphWitness },
    /// Contains a subdivided K2,3.
    Hk23 { witness: HomeomorphWitness },
    /// An induced subgraph of minimum degree two with a cut vertex.
    CutVertexC2 { core_vertices: Vec<usize>, cut_vertex: usize },
    /// A pendant reduction whose value reaches three.
    PendantReductionWitness { reduction: ReductionStep },
    /// A vertex with three or more pendant neighbors in a graph that is not
    /// a star.
    ThreePendantNeighbors { vertex: usize, pendants: Vec<usize> },
    /// A cycle of the core's cycle decomposition with three or more
    /// neighboring cycles.
    SeacBranching { core_vertices: Vec<usize>, cycle: Vec<usize>, neighbor_count: usize },
    /// A tree whose minimum path cover has three or more paths.
    TreeCoverGe3 { cover: PathCover },
    /// Component values adding up to three or more.
    ComponentSum { components: Vec<ComponentVerdict> },
}

impl Ge3Reason {
    pub fn kind(&self) -> &'static str {
        match self {
            Ge3Reason::Hk4 { .. } => "hK4",
            Ge3Reason::Hk23 { .. } => "hK23",
            Ge3Reason::CutVertexC2 { .. } => "CutVertexC2",
            Ge3Reason::PendantReductionWitness { .. } => "PendantReductionWitness",
            Ge3Reason::ThreePendantNeighbors { .. } => "ThreePendantNeighbors",
            Ge3Reason::SeacBranching { .. } => "SeacBranching",
            Ge3Reason::TreeCoverGe3 { .. } => "TreeCoverGe3",
            Ge3Reason::ComponentSum { .. } => "ComponentSum",
        }
    }

    /// Re-checks the payload against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            Ge3Reason::Hk4 { witness } => witness.kind == HomeomorphKind::HK4 && witness.verify(g),
            Ge3Reason::Hk23 { witness } => witness.kind == HomeomorphKind::HK23 && witness.verify(g),
            Ge3Reason::CutVertexC2 { core_vertices, cut_vertex } => {
                let Some(sub) = induced(g, core_vertices) else { return false };
                let Ok(local) = core_vertices.binary_search(cut_vertex) else { return false };
                sub.is_connected()
                    && sub.min_degree() >= 2
                    && sub.cut_vertices().is_ok_and(|c| c.contains(&local))
            }
            Ge3Reason::PendantReductionWitness { reduction } => {
                reduction.bound().capped() >= 3 && verify_reduction(g, reduction)
            }
            Ge3Reason::ThreePendantNeighbors { vertex, pendants } => {
                let mut p = pendants.clone();
                p.sort_unstable();
                p.dedup();
                *vertex < g.n()
                    && p.len() >= 3
                    && p.len() == pendants.len()
                    && p.iter().all(|&x| x < g.n() && g.degree(x) == 1 && g.has_edge(x, *vertex))
                    && g.n() > p.len() + 1
            }
            Ge3Reason::SeacBranching { core_vertices, cycle, neighbor_count } => {
                let Some(sub) = induced(g, core_vertices) else { return false };
                if *neighbor_count < 3 || !sub.is_connected() || sub.min_degree() < 2 {
                    return false;
                }
                let Ok(Some(dec)) = seac_decompose(&sub) else { return false };
                let mut want = cycle.clone();
                want.sort_unstable();
                dec.cycles.iter().enumerate().any(|(i, c)| {
                    let mut have: Vec<usize> = c.iter().map(|&x| core_vertices[x]).collect();
                    have.sort_unstable();
                    have == want && dec.neighbors[i].len() == *neighbor_count
                })
            }
            Ge3Reason::TreeCoverGe3 { cover } => {
                let mut all = cover.paths.concat();
                all.sort_unstable();
                g.is_tree()
                    && cover.count >= 3
                    && cover.count == cover.paths.len()
                    && all == (0..g.n()).collect::<Vec<_>>()
                    && cover.paths.iter().all(|p| p.windows(2).all(|w| g.has_edge(w[0], w[1])))
                    && tree_path_cover(g).is_ok_and(|c| c.count == cover.count)
            }
            Ge3Reason::ComponentSum { components } => {
                verify_components(g, components)
                    && components.iter().map(|c| c.classification.verdict.capped() as usize).sum::<usize>() >= 3
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Certificate {
    Path { ordering: Vec<usize> },
    Tpp { cover: ParallelPathsCover },
    /// The report is in labels of the pendant-path-contracted graph
    /// described by `contraction`.
    Exceptional { contraction: ContractionLog, report: Box<ExceptionalReport> },
    Disconnected { components: Vec<ComponentVerdict> },
    Ge3 { reason: Ge3Reason },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub verdict: Verdict,
    pub certificate: Certificate,
}

impl Classification {
    /// Re-checks the certificate against `g` and its consistency with the
    /// verdict.
    pub fn verify(&self, g: &Graph) -> bool {
        match (&self.verdict, &self.certificate) {
            (Verdict::M1, Certificate::Path { ordering }) => {
                let mut sorted = ordering.clone();
                sorted.sort_unstable();
                g.is_path().is_some()
                    && sorted == (0..g.n()).collect::<Vec<_>>()
                    && ordering.windows(2).all(|w| g.has_edge(w[0], w[1]))
            }
            (Verdict::M2, Certificate::Tpp { cover }) => cover.is_valid(g),
            (Verdict::M2, Certificate::Exceptional { contraction, report }) => {
                let Ok((h, log)) = g.pendant_path_contract() else { return false };
                log == *contraction
                    && report.conditions.all()
                    && report.final_criterion.verify(&h, report.distinguished_vertex, report.its_pendant)
                    && exceptional::exceptional_unchecked(&h).is_some()
            }
            (Verdict::M2, Certificate::Disconnected { components }) => {
                components.len() == 2
                    && components.iter().all(|c| c.classification.verdict == Verdict::M1)
                    && verify_components(g, components)
            }
            (Verdict::MGe3, Certificate::Ge3 { reason }) => reason.verify(g),
            _ => false,
        }
    }
}

fn induced(g: &Graph, vertices: &[usize]) -> Option<Graph> {
    if vertices.is_empty() || vertices.windows(2).any(|w| w[0] >= w[1]) || vertices.iter().any(|&v| v >= g.n()) {
        return None;
    }
    Some(g.induced_subgraph(vertices).0)
}

fn verify_components(g: &Graph, components: &[ComponentVerdict]) -> bool {
    let mut sets: Vec<Vec<usize>> = components.iter().map(|c| c.vertices.clone()).collect();
    sets.sort();
    let mut actual = g.component_sets();
    for s in &mut actual {
        s.sort_unstable();
    }
    actual.sort();
    sets == actual
        && components.iter().all(|c| {
            induced(g, &c.vertices).is_some_and(|sub| c.classification.verify(&sub))
        })
}

/// Classifies any graph with at least one vertex. Disconnected graphs
/// combine their components additively.
pub fn classify(g: &Graph) -> Result<Classification, ClassifyError> {
    if g.n() == 0 {
        return Err(ClassifyError::Empty);
    }
    if g.is_connected() {
        return classify_connected(g);
    }
    let mut components = Vec::new();
    for (sub, map) in g.components() {
        components.push(ComponentVerdict { vertices: map, classification: classify_connected(&sub)? });
    }
    let total: usize = components.iter().map(|c| c.classification.verdict.capped() as usize).sum();
    Ok(if total == 2 {
        Classification { verdict: Verdict::M2, certificate: Certificate::Disconnected { components } }
    } else {
        Classification {
            verdict: Verdict::MGe3,
            certificate: Certificate::Ge3 { reason: Ge3Reason::ComponentSum { components } },
        }
    })
}

/// Classifies a connected graph: path, tree, two parallel paths, the
/// exceptional families, and otherwise `M >= 3` with the first reason
/// found.
pub fn classify_connected(g: &Graph) -> Result<Classification, ClassifyError> {
    if g.n() == 0 {
        return Err(ClassifyError::Empty);
    }
    if !g.is_connected() {
        return Err(ClassifyError::Disconnected);
    }
    if let Some(ordering) = g.is_path() {
        return Ok(Classification { verdict: Verdict::M1, certificate: Certificate::Path { ordering } });
    }
    if g.is_tree() {
        let cover = tree_path_cover(g).map_err(|e| ClassifyError::Inconsistent(e.to_string()))?;
        return Ok(if cover.count == 2 {
            let cover = ParallelPathsCover { p1: cover.paths[0].clone(), p2: cover.paths[1].clone() };
            Classification { verdict: Verdict::M2, certificate: Certificate::Tpp { cover } }
        } else {
            Classification {
                verdict: Verdict::MGe3,
                certificate: Certificate::Ge3 { reason: Ge3Reason::TreeCoverGe3 { cover } },
            }
        });
    }
    if let Some(cover) = find_two_parallel_paths(g) {
        return Ok(Classification { verdict: Verdict::M2, certificate: Certificate::Tpp { cover } });
    }
    let (h, contraction) = g
        .pendant_path_contract()
        .map_err(|e| ClassifyError::Inconsistent(e.to_string()))?;
    if let Some(report) = exceptional::exceptional_unchecked(&h) {
        return Ok(Classification {
            verdict: Verdict::M2,
            certificate: Certificate::Exceptional { contraction, report: Box::new(report) },
        });
    }
    let reason = ge3_reason(g)?;
    Ok(Classification { verdict: Verdict::MGe3, certificate: Certificate::Ge3 { reason } })
}

fn ge3_reason(g: &Graph) -> Result<Ge3Reason, ClassifyError> {
    if !is_partial_two_tree(g) {
        if let Some(witness) = find_hk4(g) {
            return Ok(Ge3Reason::Hk4 { witness });
        }
    }
    if let Some(witness) = find_hk23(g) {
        return Ok(Ge3Reason::Hk23 { witness });
    }
    if let Ok(core) = g.core_of() {
        if let Some(&c) = core.graph.cut_vertices().ok().and_then(|c| c.first().copied()).as_ref() {
            return Ok(Ge3Reason::CutVertexC2 { core_vertices: core.map.clone(), cut_vertex: core.map[c] });
        }
        if let Ok(Some(dec)) = seac_decompose(&core.graph) {
            if let Some(i) = (0..dec.cycles.len()).find(|&i| dec.neighbors[i].len() >= 3) {
                return Ok(Ge3Reason::SeacBranching {
                    cycle: dec.cycles[i].iter().map(|&x| core.map[x]).collect(),
                    neighbor_count: dec.neighbors[i].len(),
                    core_vertices: core.map,
                });
            }
        }
    }
    if g.n() > 4 {
        if let Some(vertex) = (0..g.n()).find(|&v| g.pendant_neighbors(v).len() >= 3) {
            let pendants = g.pendant_neighbors(vertex);
            if g.n() > pendants.len() + 1 {
                return Ok(Ge3Reason::ThreePendantNeighbors { vertex, pendants });
            }
        }
    }
    let (bound, reduction) = m_upper_by_pendant_reduction(g)?;
    if bound.capped() >= 3 {
        Ok(Ge3Reason::PendantReductionWitness { reduction })
    } else {
        Err(ClassifyError::Inconsistent(format!(
            "no parallel-path cover or exceptional structure, but pendant reduction gives {bound:?}"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let c = classify(&Graph::path(6)).unwrap();
        assert_eq!(c.verdict, Verdict::M1);
        assert!(c.verify(&Graph::path(6)));

        let k4 = Graph::complete(4);
        let c = classify(&k4).unwrap();
        assert_eq!(c.verdict, Verdict::MGe3);
        assert!(matches!(c.certificate, Certificate::Ge3 { reason: Ge3Reason::Hk4 { .. } }));
        assert!(c.verify(&k4));

        let c6 = Graph::cycle(6);
        let c = classify(&c6).unwrap();
        assert!(matches!(c.certificate, Certificate::Tpp { .. }));
        assert!(c.verify(&c6));

        let two = Graph::path(3).disjoint_union(&Graph::path(2));
        let c = classify(&two).unwrap();
        assert_eq!(c.verdict, Verdict::M2);
        assert!(matches!(c.certificate, Certificate::Disconnected { .. }));
        assert!(c.verify(&two));

        let k23 = Graph::complete_bipartite(2, 3);
        let c = classify(&k23).unwrap();
        assert!(matches!(c.certificate, Certificate::Ge3 { reason: Ge3Reason::Hk23 { .. } }));
        assert!(c.verify(&k23));

        assert_eq!(classify(&Graph::new(0)), Err(ClassifyError::Empty));
        assert_eq!(classify_connected(&two), Err(ClassifyError::Disconnected));
    }

    #[test]
    fn triangle_with_pendants_everywhere_is_parallel_paths() {
        let mut g = Graph::complete(3);
        for v in 0..3 {
            g.add_pendant(v);
        }
        let c = classify(&g).unwrap();
        assert!(matches!(c.certificate, Certificate::Tpp { .. }));
        assert!(c.verify(&g));
    }

    #[test]
    fn single_cycle_with_pendants() {
        let mut c5 = Graph::cycle(5);
        for v in 0..5 {
            c5.add_pendant(v);
        }
        assert_eq!(pendant_reduction_m(&c5).unwrap(), 2);
        let c = classify(&c5).unwrap();
        assert_eq!(c.verdict, Verdict::M2);
        let Certificate::Exceptional { report, .. } = &c.certificate else { panic!("{c:?}") };
        assert_eq!(report.core_cycle_count, 1);
        assert!(report.family_facts.matches_family);
        assert!(c.verify(&c5));

        let mut c6 = Graph::cycle(6);
        for v in [0, 2, 4] {
            c6.add_pendant(v);
        }
        let c = classify(&c6).unwrap();
        assert_eq!(c.verdict, Verdict::MGe3);
        assert!(c.verify(&c6));
    }

    #[test]
    fn trees() {
        let star = Graph::complete_bipartite(1, 5);
        let c = classify(&star).unwrap();
        let Certificate::Ge3 { reason: Ge3Reason::TreeCoverGe3 { cover } } = &c.certificate else { panic!() };
        assert_eq!(cover.count, 4);
        assert!(c.verify(&star));
        let t = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        let c = classify(&t).unwrap();
        assert_eq!(c.verdict, Verdict::M2);
        assert!(c.verify(&t));
    }

    #[test]
    fn disconnected_sum() {
        let g = Graph::path(2).disjoint_union(&Graph::cycle(3));
        let c = classify(&g).unwrap();
        assert_eq!(c.verdict, Verdict::MGe3);
        assert!(matches!(c.certificate, Certificate::Ge3 { reason: Ge3Reason::ComponentSum { .. } }));
        assert!(c.verify(&g));
        let three = Graph::new(3);
        assert_eq!(classify(&three).unwrap().verdict, Verdict::MGe3);
    }

    #[test]
    fn forged_certificates_fail() {
        let k4 = Graph::complete(4);
        let fake = Classification { verdict: Verdict::M1, certificate: Certificate::Path { ordering: vec![0, 1, 2, 3] } };
        assert!(!fake.verify(&k4));
        let c5 = Graph::cycle(5);
        let wrong = Classification {
            verdict: Verdict::MGe3,
            certificate: Certificate::Ge3 { reason: Ge3Reason::CutVertexC2 { core_vertices: vec![0, 1, 2, 3, 4], cut_vertex: 0 } },
        };
        assert!(!wrong.verify(&c5));
    }
}
