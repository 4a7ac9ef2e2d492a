//! Membership test for the graphs with maximum multiplicity two that are
//! not graphs of two parallel paths.

use serde::{Deserialize, Serialize};

use super::ClassifyError;
use crate::graph::Graph;
use crate::recognition::{find_two_parallel_paths, is_partial_two_tree, seac_decompose, ParallelPathsCover};

/// Shape of `G - {u, v}` in an accepted exceptional graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum Remainder {
    Path { ordering: Vec<usize> },
    ParallelPaths { cover: ParallelPathsCover },
}

/// Outcome of the two subtests deciding membership.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinalCriterion {
    /// A cover of `G - v`, in labels of `G`.
    pub without_pendant: ParallelPathsCover,
    /// `G - {u, v}`, in labels of `G`.
    pub without_pair: Remainder,
}

/// The necessary conditions, each recorded as checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NecessaryConditions {
    pub partial_two_tree_with_linear_core: bool,
    pub has_distinguished_vertex: bool,
    pub distinguished_with_one_pendant: bool,
    pub at_most_one_pendant_each: bool,
    pub at_most_five_pendants: bool,
}

impl NecessaryConditions {
    pub fn all(&self) -> bool {
        self.partial_two_tree_with_linear_core
            && self.has_distinguished_vertex
            && self.distinguished_with_one_pendant
            && self.at_most_one_pendant_each
            && self.at_most_five_pendants
    }
}

/// Structural facts of the accepted graph, matched against the known
/// shapes of the one-, two-, and three-cycle families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyFacts {
    pub cycle_sizes: Vec<usize>,
    pub terminal_cycle_sizes: Vec<usize>,
    /// With three cycles: size of the middle cycle.
    pub middle_cycle_size: Option<usize>,
    /// With two cycles: size of the cycle holding two adjacent
    /// non-distinguished pendant hosts.
    pub z_cycle_size: Option<usize>,
    /// `(host, pendant)` pairs.
    pub pendant_hosts: Vec<(usize, usize)>,
    pub distinguished: Vec<usize>,
    /// One cycle: a 5-cycle with five pendants. Two cycles: the cycle `Z`
    /// exists and has four vertices. Three cycles: the middle cycle is a
    /// triangle whose vertices each host exactly one pendant.
    pub matches_family: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalReport {
    pub core_cycle_count: usize,
    pub distinguished_vertex: usize,
    pub its_pendant: usize,
    pub conditions: NecessaryConditions,
    pub family_facts: FamilyFacts,
    pub final_criterion: FinalCriterion,
}

/// Decides membership of a pendant-path-contracted graph in the
/// exceptional families.
///
/// After checking the necessary conditions (partial 2-tree with a linear
/// cycle-chain core, a distinguished vertex, one with exactly one pendant
/// neighbor, no vertex with two pendant neighbors, at most five pendants),
/// tries each distinguished `u` with a single pendant neighbor `v` and
/// accepts iff `G - v` is a graph of two parallel paths and `G - {u, v}`
/// is one or is a path.
pub fn exceptional_test(g: &Graph) -> Result<Option<ExceptionalReport>, ClassifyError> {
    if g.n() == 0 {
        return Err(ClassifyError::Empty);
    }
    if !g.is_connected() {
        return Err(ClassifyError::Disconnected);
    }
    if g.is_forest() {
        return Err(ClassifyError::Precondition("graph is a tree".into()));
    }
    let (_, log) = g.pendant_path_contract().map_err(|e| ClassifyError::Precondition(e.to_string()))?;
    if !log.steps.is_empty() {
        return Err(ClassifyError::Precondition("graph is not pendant-path contracted".into()));
    }
    if find_two_parallel_paths(g).is_some() {
        return Err(ClassifyError::Precondition("graph is a graph of two parallel paths".into()));
    }
    Ok(exceptional_unchecked(g))
}

/// [`exceptional_test`] without the precondition checks.
pub(crate) fn exceptional_unchecked(g: &Graph) -> Option<ExceptionalReport> {
    if !is_partial_two_tree(g) {
        return None;
    }
    let core = g.core_of().ok()?;
    let dec = seac_decompose(&core.graph).ok()??;
    if !dec.is_lseac {
        return None;
    }
    let cycles: Vec<Vec<usize>> = dec
        .cycles
        .iter()
        .map(|c| c.iter().map(|&x| core.map[x]).collect())
        .collect();
    let distinguished: Vec<usize> = dec.distinguished.iter().map(|&x| core.map[x]).collect();
    if distinguished.is_empty() {
        return None;
    }
    let pend: Vec<Vec<usize>> = (0..g.n()).map(|v| g.pendant_neighbors(v)).collect();
    if pend.iter().any(|p| p.len() > 1) {
        return None;
    }
    let pendant_count = g.pendant_vertices().len();
    if pendant_count > 5 {
        return None;
    }
    let candidates: Vec<usize> = distinguished.iter().copied().filter(|&u| pend[u].len() == 1).collect();
    if candidates.is_empty() {
        return None;
    }
    let conditions = NecessaryConditions {
        partial_two_tree_with_linear_core: true,
        has_distinguished_vertex: true,
        distinguished_with_one_pendant: true,
        at_most_one_pendant_each: true,
        at_most_five_pendants: true,
    };
    for u in candidates {
        let v = pend[u][0];
        let Some(final_criterion) = final_criterion(g, u, v) else { continue };
        let pendant_hosts: Vec<(usize, usize)> =
            (0..g.n()).filter(|&h| pend[h].len() == 1).map(|h| (h, pend[h][0])).collect();
        let family_facts = family_facts(&cycles, &dec.neighbors, &dec.terminal_cycles, distinguished.clone(), pendant_hosts, g);
        return Some(ExceptionalReport {
            core_cycle_count: cycles.len(),
            distinguished_vertex: u,
            its_pendant: v,
            conditions,
            family_facts,
            final_criterion,
        });
    }
    None
}

/// The two subtests for distinguished `u` with pendant `v`.
pub fn final_criterion(g: &Graph, u: usize, v: usize) -> Option<FinalCriterion> {
    let (gv, map_v) = g.remove_vertices(&[v]);
    let without_pendant = find_two_parallel_paths(&gv)?.mapped(&map_v);
    let (guv, map_uv) = g.remove_vertices(&[u, v]);
    let without_pair = if let Some(order) = guv.is_path() {
        Remainder::Path { ordering: order.iter().map(|&x| map_uv[x]).collect() }
    } else {
        Remainder::ParallelPaths { cover: find_two_parallel_paths(&guv)?.mapped(&map_uv) }
    };
    Some(FinalCriterion { without_pendant, without_pair })
}

impl FinalCriterion {
    /// Re-checks both covers against `g` with `u`, `v` removed.
    pub fn verify(&self, g: &Graph, u: usize, v: usize) -> bool {
        if u >= g.n() || v >= g.n() || !g.has_edge(u, v) || g.degree(v) != 1 {
            return false;
        }
        let (gv, map_v) = g.remove_vertices(&[v]);
        let Some(c) = pull_back(&self.without_pendant, &map_v) else { return false };
        if !c.is_valid(&gv) {
            return false;
        }
        let (guv, map_uv) = g.remove_vertices(&[u, v]);
        match &self.without_pair {
            Remainder::Path { ordering } => {
                let Some(local) = pull_back_seq(ordering, &map_uv) else { return false };
                local.len() == guv.n() && guv.is_path().is_some() && local.windows(2).all(|w| guv.has_edge(w[0], w[1]))
            }
            Remainder::ParallelPaths { cover } => pull_back(cover, &map_uv).is_some_and(|c| c.is_valid(&guv)),
        }
    }
}

fn pull_back_seq(seq: &[usize], map: &[usize]) -> Option<Vec<usize>> {
    seq.iter().map(|x| map.binary_search(x).ok()).collect()
}

fn pull_back(c: &ParallelPathsCover, map: &[usize]) -> Option<ParallelPathsCover> {
    Some(ParallelPathsCover { p1: pull_back_seq(&c.p1, map)?, p2: pull_back_seq(&c.p2, map)? })
}

fn family_facts(
    cycles: &[Vec<usize>],
    neighbors: &[Vec<usize>],
    terminal: &[usize],
    distinguished: Vec<usize>,
    pendant_hosts: Vec<(usize, usize)>,
    g: &Graph,
) -> FamilyFacts {
    let cycle_sizes: Vec<usize> = cycles.iter().map(Vec::len).collect();
    let terminal_cycle_sizes: Vec<usize> = terminal.iter().map(|&t| cycles[t].len()).collect();
    let is_host = |x: usize| pendant_hosts.iter().any(|&(h, _)| h == x);
    let hosts_of = |c: &[usize]| c.iter().filter(|&&x| is_host(x)).count();
    let mut middle_cycle_size = None;
    let mut z_cycle_size = None;
    let matches_family = match cycles.len() {
        1 => cycle_sizes[0] == 5 && pendant_hosts.len() == 5,
        2 => {
            let z = cycles.iter().find(|c| {
                (0..c.len()).any(|i| {
                    let (a, b) = (c[i], c[(i + 1) % c.len()]);
                    g.has_edge(a, b)
                        && is_host(a)
                        && is_host(b)
                        && !distinguished.contains(&a)
                        && !distinguished.contains(&b)
                })
            });
            z_cycle_size = z.map(Vec::len);
            z_cycle_size == Some(4)
        }
        3 => {
            let mid = (0..3).find(|&i| neighbors[i].len() == 2);
            middle_cycle_size = mid.map(|i| cycles[i].len());
            mid.is_some_and(|i| cycles[i].len() == 3 && hosts_of(&cycles[i]) == 3)
        }
        _ => false,
    };
    FamilyFacts {
        cycle_sizes,
        terminal_cycle_sizes,
        middle_cycle_size,
        z_cycle_size,
        pendant_hosts,
        distinguished,
        matches_family,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Triangles {u,a,x}, {u,a,b}, {u,b,y} with pendants at u, a, b.
    pub(crate) fn three_triangle_chain(with_pu: bool) -> Graph {
        // u=0 a=1 b=2 x=3 y=4
        let mut g = Graph::from_edges(5, &[(0, 1), (0, 3), (1, 3), (1, 2), (0, 2), (2, 4), (0, 4)]).unwrap();
        if with_pu {
            g.add_pendant(0);
        }
        g.add_pendant(1);
        g.add_pendant(2);
        g
    }

    #[test]
    fn three_triangle_chain_is_exceptional() {
        let g = three_triangle_chain(true);
        let r = exceptional_test(&g).unwrap().unwrap();
        assert_eq!(r.core_cycle_count, 3);
        assert_eq!(r.distinguished_vertex, 0);
        assert_eq!(r.its_pendant, 5);
        assert!(r.conditions.all());
        assert!(r.family_facts.matches_family);
        assert_eq!(r.family_facts.middle_cycle_size, Some(3));
        assert!(r.final_criterion.verify(&g, 0, 5));
        assert!(!r.final_criterion.verify(&g, 1, 6));
    }

    #[test]
    fn preconditions() {
        let g = three_triangle_chain(false);
        assert!(matches!(exceptional_test(&g), Err(ClassifyError::Precondition(_))));
        assert!(matches!(exceptional_test(&Graph::path(3)), Err(ClassifyError::Precondition(_))));
        let mut long = Graph::cycle(4);
        let x = long.add_pendant(0);
        long.add_pendant(x);
        assert!(matches!(exceptional_test(&long), Err(ClassifyError::Precondition(_))));
    }

    #[test]
    fn six_cycle_with_three_spread_pendants_is_rejected() {
        let mut g = Graph::cycle(6);
        for v in [0, 2, 4] {
            g.add_pendant(v);
        }
        assert_eq!(exceptional_test(&g).unwrap(), None);
    }
}
