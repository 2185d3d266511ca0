//! Crossing-critical graphs: testing, extraction, and construction by
//! zipping.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::cuts::enumerate_min_cuts;
use crate::decompose::{choose_split, DecomposePolicy};
use crate::graph::{Edge, EdgeId, MultiGraph, VertexId};
use crate::solver::{Outcome, Solver};
use crate::zip::{zip, ZipError, ZipSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Criticality {
    /// Every edge deletion lowers the crossing number of `value`.
    Critical { value: u32 },
    /// Deleting `edge` keeps the crossing number at `value`.
    NotCritical { value: u32, edge: EdgeId },
    /// The solver ran out of resources before a verdict.
    Indeterminate,
}

impl Criticality {
    pub fn is_critical(&self) -> bool {
        matches!(self, Criticality::Critical { .. })
    }
}

/// Decides whether `cr(G - e) < cr(G)` for every edge `e`, using one budget
/// query `cr(G - e) <= cr(G) - 1` per edge.
pub fn is_crossing_critical(g: &MultiGraph, solver: &mut Solver<'_>) -> Criticality {
    let Some(value) = solver.crossing_number(g, None).value() else {
        return Criticality::Indeterminate;
    };
    let mut unsure = false;
    for e in g.edges() {
        if value == 0 {
            return Criticality::NotCritical { value, edge: e.id };
        }
        let h = g.delete_edge(e.id).expect("edge is present");
        match solver.crossing_number(&h, Some(value - 1)) {
            Outcome::Solved(_) => {}
            Outcome::ExceedsBudget { .. } => return Criticality::NotCritical { value, edge: e.id },
            Outcome::Unknown { .. } => unsure = true,
        }
    }
    if unsure {
        Criticality::Indeterminate
    } else {
        Criticality::Critical { value }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Indeterminate;

impl fmt::Display for Indeterminate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "solver resources exhausted before a verdict")
    }
}

impl core::error::Error for Indeterminate {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extraction {
    pub graph: MultiGraph,
    pub value: u32,
    /// Protected edges whose deletion would keep the crossing number.
    pub noncritical_protected: Vec<EdgeId>,
}

/// `true` when deleting `e` from `g` keeps the crossing number at `k`.
fn removable(g: &MultiGraph, e: EdgeId, k: u32, solver: &mut Solver<'_>) -> Result<bool, Indeterminate> {
    if k == 0 {
        return Ok(true);
    }
    let h = g.delete_edge(e).expect("edge is present");
    match solver.crossing_number(&h, Some(k - 1)) {
        Outcome::Solved(_) => Ok(false),
        Outcome::ExceedsBudget { .. } => Ok(true),
        Outcome::Unknown { .. } => Err(Indeterminate),
    }
}

/// Greedily deletes unprotected edges, in ascending id order, whose removal
/// keeps the crossing number. One pass suffices: crossing number is
/// monotone under edge deletion, so an edge that was needed stays needed
/// in every smaller graph.
pub fn extract_critical_subgraph(
    g: &MultiGraph,
    protected: &[EdgeId],
    solver: &mut Solver<'_>,
) -> Result<Extraction, Indeterminate> {
    let value = solver.crossing_number(g, None).value().ok_or(Indeterminate)?;
    let mut cur = g.clone();
    for e in g.edges().iter().map(|e| e.id) {
        if protected.contains(&e) {
            continue;
        }
        if removable(&cur, e, value, solver)? {
            cur = cur.delete_edge(e).expect("edge is present");
        }
    }
    let mut noncritical_protected = Vec::new();
    for e in cur.edges().iter().map(|e| e.id) {
        if protected.contains(&e) && removable(&cur, e, value, solver)? {
            noncritical_protected.push(e);
        }
    }
    Ok(Extraction {
        graph: cur,
        value,
        noncritical_protected,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverError {
    NotACover(EdgeId),
    BadDegree { vertex: VertexId, degree: usize },
    MissingSeed(VertexId),
    Zip(ZipError),
}

impl fmt::Display for CoverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverError::NotACover(e) => write!(f, "edge {e} has no endpoint in the cover"),
            CoverError::BadDegree { vertex, degree } => {
                write!(f, "cover vertex {vertex} has degree {degree}, need 2 or 3")
            }
            CoverError::MissingSeed(v) => write!(f, "no seed graph for cover vertex {v}"),
            CoverError::Zip(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for CoverError {}

/// Zips a seed graph `G_v` at `u_v` into every vertex `v` of the vertex cover
/// `cover`, one after the other in ascending order of `v`.
pub fn zip_cover(
    g: &MultiGraph,
    cover: &[VertexId],
    seeds: &BTreeMap<VertexId, (MultiGraph, VertexId)>,
) -> Result<MultiGraph, CoverError> {
    for &v in cover {
        if !g.has_vertex(v) {
            return Err(CoverError::Zip(ZipError::MissingVertex(v)));
        }
        let d = g.degree(v);
        if !(2..=3).contains(&d) {
            return Err(CoverError::BadDegree { vertex: v, degree: d });
        }
        if !seeds.contains_key(&v) {
            return Err(CoverError::MissingSeed(v));
        }
    }
    if let Some(e) = g
        .edges()
        .iter()
        .find(|e| !cover.contains(&e.u) && !cover.contains(&e.v))
    {
        return Err(CoverError::NotACover(e.id));
    }
    let mut order: Vec<VertexId> = cover.to_vec();
    order.sort_unstable();
    order.dedup();
    let mut cur = g.clone();
    for v in order {
        let (seed, u) = &seeds[&v];
        cur = zip(&ZipSpec::identity(cur, v, seed.clone(), *u)).map_err(CoverError::Zip)?;
    }
    Ok(cur)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FourEcError {
    Disconnected,
    MinDegree(usize),
    NotCritical(EdgeId),
    Indeterminate,
}

impl fmt::Display for FourEcError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FourEcError::Disconnected => write!(f, "graph is not connected"),
            FourEcError::MinDegree(d) => write!(f, "minimum degree is {d}, need at least 3"),
            FourEcError::NotCritical(e) => {
                write!(
                    f,
                    "graph is not crossing-critical: deleting {e} keeps the crossing number"
                )
            }
            FourEcError::Indeterminate => write!(f, "solver resources exhausted before a verdict"),
        }
    }
}

impl core::error::Error for FourEcError {}

/// Removes vertices of degree at most one and suppresses vertices of degree
/// two; neither changes the crossing number.
pub fn smooth(g: &MultiGraph) -> MultiGraph {
    let mut cur = g.clone();
    loop {
        let low = cur.vertices().iter().copied().find(|&v| cur.degree(v) <= 1);
        if let Some(v) = low {
            cur = cur.delete_vertex(v).expect("vertex is present");
            continue;
        }
        let two = cur.vertices().iter().copied().find(|&v| {
            cur.degree(v) == 2 && {
                let es: Vec<&Edge> = cur.incident_edges(v).collect();
                es[0].other(v) != es[1].other(v)
            }
        });
        let Some(v) = two else {
            return cur;
        };
        let es: Vec<Edge> = cur.incident_edges(v).copied().collect();
        let (a, b) = (es[0].other(v), es[1].other(v));
        let mut edges: Vec<Edge> = cur.edges().iter().copied().filter(|e| !e.touches(v)).collect();
        edges.push(Edge::new(es[0].id, a, b));
        let vertices: Vec<VertexId> = cur.vertices().iter().copied().filter(|&x| x != v).collect();
        cur = MultiGraph::from_parts(vertices, edges).expect("suppression keeps invariants");
    }
}

/// Splits a crossing-critical graph at nontrivial cuts of size at most
/// three, reducing every factor to a crossing-critical subgraph, until no
/// factor has such a cut. Factor values add up to `cr(G)`.
pub fn decompose_internally_4ec(g: &MultiGraph, solver: &mut Solver<'_>) -> Result<Vec<MultiGraph>, FourEcError> {
    if !g.is_connected() {
        return Err(FourEcError::Disconnected);
    }
    if g.min_degree() < 3 {
        return Err(FourEcError::MinDegree(g.min_degree()));
    }
    match is_crossing_critical(g, solver) {
        Criticality::Critical { .. } => {}
        Criticality::NotCritical { edge, .. } => return Err(FourEcError::NotCritical(edge)),
        Criticality::Indeterminate => return Err(FourEcError::Indeterminate),
    }
    let policy = DecomposePolicy::default();
    let mut work = alloc::vec![g.clone()];
    let mut out = Vec::new();
    while let Some(h) = work.pop() {
        match choose_split(&h, &policy).map_err(|_| FourEcError::Disconnected)? {
            None => out.push(h),
            Some((_, spec, _)) => {
                for f in [spec.g2, spec.g1] {
                    let j = extract_critical_subgraph(&f, &[], solver).map_err(|_| FourEcError::Indeterminate)?;
                    work.push(smooth(&j.graph));
                }
            }
        }
    }
    Ok(out)
}

/// Connected, minimum degree at least 3, and every minimal cut of size at
/// most three isolates a vertex.
pub fn is_internally_4ec(g: &MultiGraph) -> bool {
    g.is_connected() && g.min_degree() >= 3 && enumerate_min_cuts(g, 3, true).is_ok_and(|c| c.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::zip::k33_chain;

    #[test]
    fn small_critical_graphs() {
        let mut s = Solver::default();
        assert_eq!(
            is_crossing_critical(&families::complete(5), &mut s),
            Criticality::Critical { value: 1 }
        );
        assert!(is_crossing_critical(&families::complete_bipartite(3, 3), &mut s).is_critical());
        let mut pairs = families::complete(5).index_pairs();
        pairs.push((0, 5));
        let g = MultiGraph::from_edges(6, &pairs).unwrap();
        assert_eq!(
            is_crossing_critical(&g, &mut s),
            Criticality::NotCritical {
                value: 1,
                edge: EdgeId(10)
            }
        );
    }

    #[test]
    fn extraction_drops_parallel_copy() {
        let mut s = Solver::default();
        let mut pairs = families::complete(5).index_pairs();
        pairs.push((0, 1));
        let g = MultiGraph::from_edges(5, &pairs).unwrap();
        let x = extract_critical_subgraph(&g, &[], &mut s).unwrap();
        assert_eq!(x.graph, families::complete(5));
        assert_eq!(x.value, 1);
        let k5 = extract_critical_subgraph(&families::complete(5), &[], &mut s).unwrap();
        assert_eq!(k5.graph, families::complete(5));
    }

    #[test]
    fn extraction_of_planar_keeps_only_protected() {
        let mut s = Solver::default();
        let g = families::complete(4);
        let x = extract_critical_subgraph(&g, &[EdgeId(0), EdgeId(1)], &mut s).unwrap();
        assert_eq!(x.graph.edge_count(), 2);
        assert_eq!(x.noncritical_protected, alloc::vec![EdgeId(0), EdgeId(1)]);
    }

    #[test]
    fn cover_preconditions() {
        let k2 = families::path(2);
        let seeds: BTreeMap<_, _> = [(VertexId(0), (families::path(2), VertexId(0)))].into_iter().collect();
        assert_eq!(
            zip_cover(&k2, &[VertexId(0)], &seeds),
            Err(CoverError::BadDegree {
                vertex: VertexId(0),
                degree: 1
            })
        );
        let c4 = families::cycle(4);
        let tri = families::cycle(3);
        let seeds: BTreeMap<_, _> = [
            (VertexId(0), (tri.clone(), VertexId(0))),
            (VertexId(2), (tri, VertexId(0))),
        ]
        .into_iter()
        .collect();
        let g = zip_cover(&c4, &[VertexId(0), VertexId(2)], &seeds).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 6));
        assert_eq!(Solver::default().crossing_number(&g, None).value(), Some(0));
        assert_eq!(
            zip_cover(&c4, &[VertexId(0)], &seeds),
            Err(CoverError::NotACover(EdgeId(1)))
        );
    }

    #[test]
    fn four_ec_pieces_of_chains() {
        let mut s = Solver::default();
        let k33 = families::complete_bipartite(3, 3);
        let parts = decompose_internally_4ec(&k33_chain(2), &mut s).unwrap();
        assert_eq!(parts.len(), 2);
        for p in &parts {
            assert_eq!(crate::canon::canonical_key(p), crate::canon::canonical_key(&k33));
        }
        assert_eq!(
            decompose_internally_4ec(&families::complete(5), &mut s).unwrap().len(),
            1
        );
        assert!(is_internally_4ec(&families::complete(5)));
        assert!(!is_internally_4ec(&families::prism()));
    }

    #[test]
    fn smoothing() {
        let g = families::cycle(5);
        let s = smooth(&g);
        // a cycle smooths down to a digon
        assert_eq!((s.vertex_count(), s.edge_count()), (2, 2));
        let p = smooth(&families::path(4));
        assert_eq!(p.vertex_count(), 0);
    }
}
