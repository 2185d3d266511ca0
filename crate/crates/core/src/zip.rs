//! Zip products and their inverse.
//!
//! `zip` deletes `v1` from `G1` and `v2` from `G2` and joins the former
//! neighbors through the bijection `sigma` between the edges at `v1` and at
//! `v2`. Edges of `G1 - v1` become green, edges of `G2 - v2` red, and the new
//! edges blue.
//!
//! Ids: the `G1` side keeps its vertex and edge ids. `G2` ids are kept when
//! they do not clash with `G1`, otherwise they are shifted past `G1`'s
//! largest id. Each blue edge reuses the id of its edge at `v1`. With these
//! rules `zip(split_at_cut(G, F))` rebuilds `G` with its original ids.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::cuts::EdgeCut;
use crate::graph::{Color, Edge, EdgeId, GraphError, MultiGraph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZipSpec {
    pub g1: MultiGraph,
    pub v1: VertexId,
    pub g2: MultiGraph,
    pub v2: VertexId,
    /// The `i`-th edge at `v1` (ascending ids) is matched with the
    /// `sigma[i]`-th edge at `v2`.
    pub sigma: Vec<usize>,
}

impl ZipSpec {
    /// Spec with the identity bijection.
    pub fn identity(g1: MultiGraph, v1: VertexId, g2: MultiGraph, v2: VertexId) -> Self {
        let d = g1.degree(v1);
        ZipSpec {
            g1,
            v1,
            g2,
            v2,
            sigma: (0..d).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.g1.degree(self.v1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZipError {
    MissingVertex(VertexId),
    DegreeMismatch { d1: usize, d2: usize },
    BadSigma,
    InvalidCut,
    Graph(GraphError),
}

impl fmt::Display for ZipError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZipError::MissingVertex(v) => write!(f, "zip vertex {v} is not in its graph"),
            ZipError::DegreeMismatch { d1, d2 } => {
                write!(f, "zip vertices have degrees {d1} and {d2}")
            }
            ZipError::BadSigma => write!(f, "sigma is not a bijection between the incident edges"),
            ZipError::InvalidCut => write!(f, "edge set is not a minimal cut of the graph"),
            ZipError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ZipError {}

impl From<GraphError> for ZipError {
    fn from(e: GraphError) -> Self {
        ZipError::Graph(e)
    }
}

/// A zip product with the bookkeeping needed to trace ids back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Zipped {
    pub graph: MultiGraph,
    /// Where each vertex of `G2 - v2` ended up.
    pub vertex_map: BTreeMap<VertexId, VertexId>,
    /// Where each edge of `G2 - v2` ended up.
    pub edge_map: BTreeMap<EdgeId, EdgeId>,
    /// Blue edge ids, ascending.
    pub blue: Vec<EdgeId>,
}

pub fn zip(spec: &ZipSpec) -> Result<MultiGraph, ZipError> {
    zip_detailed(spec).map(|z| z.graph)
}

pub fn zip_detailed(spec: &ZipSpec) -> Result<Zipped, ZipError> {
    let ZipSpec { g1, v1, g2, v2, sigma } = spec;
    let (v1, v2) = (*v1, *v2);
    if !g1.has_vertex(v1) {
        return Err(ZipError::MissingVertex(v1));
    }
    if !g2.has_vertex(v2) {
        return Err(ZipError::MissingVertex(v2));
    }
    let f1: Vec<Edge> = g1.incident_edges(v1).copied().collect();
    let f2: Vec<Edge> = g2.incident_edges(v2).copied().collect();
    if f1.len() != f2.len() {
        return Err(ZipError::DegreeMismatch {
            d1: f1.len(),
            d2: f2.len(),
        });
    }
    let mut check: Vec<usize> = sigma.clone();
    check.sort_unstable();
    if check.len() != f1.len() || check.iter().enumerate().any(|(i, &s)| i != s) {
        return Err(ZipError::BadSigma);
    }

    let left_vertices: Vec<VertexId> = g1.vertices().iter().copied().filter(|&x| x != v1).collect();
    let right_vertices: Vec<VertexId> = g2.vertices().iter().copied().filter(|&x| x != v2).collect();
    let vclash = right_vertices.iter().any(|x| left_vertices.binary_search(x).is_ok());
    let vshift = if vclash { g1.next_vertex_id().0 } else { 0 };
    let vertex_map: BTreeMap<VertexId, VertexId> =
        right_vertices.iter().map(|&x| (x, VertexId(x.0 + vshift))).collect();

    let g1_ids: Vec<EdgeId> = g1.edges().iter().map(|e| e.id).collect();
    let right_edges: Vec<Edge> = g2.edges().iter().copied().filter(|e| !e.touches(v2)).collect();
    let eclash = right_edges.iter().any(|e| g1_ids.binary_search(&e.id).is_ok());
    let eshift = if eclash { g1.next_edge_id().0 } else { 0 };

    let mut edges: Vec<Edge> = Vec::with_capacity(g1.edge_count() + right_edges.len());
    for e in g1.edges().iter().filter(|e| !e.touches(v1)) {
        edges.push(Edge {
            color: Some(Color::Green),
            ..*e
        });
    }
    let mut edge_map = BTreeMap::new();
    for e in &right_edges {
        let id = EdgeId(e.id.0 + eshift);
        edge_map.insert(e.id, id);
        edges.push(Edge {
            id,
            u: vertex_map[&e.u],
            v: vertex_map[&e.v],
            color: Some(Color::Red),
        });
    }
    let mut blue = Vec::with_capacity(f1.len());
    for (i, e1) in f1.iter().enumerate() {
        let e2 = &f2[sigma[i]];
        blue.push(e1.id);
        edges.push(Edge {
            id: e1.id,
            u: e1.other(v1),
            v: vertex_map[&e2.other(v2)],
            color: Some(Color::Blue),
        });
    }
    let mut vertices = left_vertices;
    vertices.extend(vertex_map.values().copied());
    let graph = MultiGraph::from_parts(vertices, edges)?;
    Ok(Zipped {
        graph,
        vertex_map,
        edge_map,
        blue,
    })
}

/// The two factors of `g` at a minimal cut: each side with the other side
/// contracted to one new vertex. Zipping them with the returned spec's
/// identity `sigma` gives back `g`.
pub fn split_at_cut(g: &MultiGraph, cut: &EdgeCut) -> Result<ZipSpec, ZipError> {
    if !cut.validate(g) {
        return Err(ZipError::InvalidCut);
    }
    let (g1, v1) = g.contract_set(&cut.sides.1)?;
    let (g2, v2) = g.contract_set(&cut.sides.0)?;
    Ok(ZipSpec::identity(g1, v1, g2, v2))
}

/// Chain of `t` copies of K3,3, each zipped to the next at a vertex. Every
/// link is the same side of its K3,3, so the chain has `4t + 2` vertices and
/// `6t + 3` edges.
pub fn k33_chain(t: usize) -> MultiGraph {
    let link = crate::families::complete_bipartite(3, 3);
    if t == 0 {
        return MultiGraph::default();
    }
    let mut cur = link.clone();
    let mut attach = VertexId(1);
    for _ in 1..t {
        let z =
            zip_detailed(&ZipSpec::identity(cur, attach, link.clone(), VertexId(0))).expect("K3,3 links are 3-regular");
        attach = z.vertex_map[&VertexId(1)];
        cur = z.graph;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuts::enumerate_min_cuts;
    use crate::families;
    use crate::planarity::is_planar_fast;

    #[test]
    fn two_k4_make_a_prism() {
        let k4 = families::complete(4);
        let g = zip(&ZipSpec::identity(k4.clone(), VertexId(0), k4, VertexId(0))).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 9));
        assert!(is_planar_fast(&g));
        assert!(g.degrees().values().all(|&d| d == 3));
        let blue = g.edges().iter().filter(|e| e.color == Some(Color::Blue)).count();
        assert_eq!(blue, 3);
    }

    #[test]
    fn degree_one_zip_is_a_block_sum() {
        let p = families::path(3);
        let g = zip(&ZipSpec::identity(p.clone(), VertexId(0), p, VertexId(2))).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 3));
        assert!(g.is_connected());
    }

    #[test]
    fn errors() {
        let k4 = families::complete(4);
        let c4 = families::cycle(4);
        assert_eq!(
            zip(&ZipSpec::identity(k4.clone(), VertexId(0), c4, VertexId(0))),
            Err(ZipError::DegreeMismatch { d1: 3, d2: 2 })
        );
        let mut spec = ZipSpec::identity(k4.clone(), VertexId(0), k4, VertexId(0));
        spec.sigma = alloc::vec![0, 0, 1];
        assert_eq!(zip(&spec), Err(ZipError::BadSigma));
    }

    #[test]
    fn split_inverts_zip() {
        let g = families::prism();
        let cut = &enumerate_min_cuts(&g, 3, true).unwrap()[0];
        let spec = split_at_cut(&g, cut).unwrap();
        assert_eq!(spec.g1.simplify().edge_count(), 6);
        assert!(spec.g1.degrees().values().all(|&d| d == 3));
        let back = zip(&spec).unwrap();
        assert_eq!(back, g);
        let ids: Vec<EdgeId> = back.edges().iter().map(|e| e.id).collect();
        let orig: Vec<EdgeId> = g.edges().iter().map(|e| e.id).collect();
        assert_eq!(ids, orig);
    }

    #[test]
    fn bridge_split_gives_pendant_factors() {
        let g = MultiGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]).unwrap();
        let cut = &enumerate_min_cuts(&g, 1, true).unwrap()[0];
        let spec = split_at_cut(&g, cut).unwrap();
        for (h, x) in [(&spec.g1, spec.v1), (&spec.g2, spec.v2)] {
            assert_eq!((h.vertex_count(), h.edge_count()), (4, 4));
            assert_eq!(h.degree(x), 1);
        }
        assert_eq!(zip(&spec).unwrap(), g);
    }

    #[test]
    fn chain_sizes_and_cuts() {
        for t in 1..=5 {
            let c = k33_chain(t);
            assert_eq!((c.vertex_count(), c.edge_count()), (4 * t + 2, 6 * t + 3));
            assert!(c.degrees().values().all(|&d| d == 3));
            assert_eq!(enumerate_min_cuts(&c, 3, true).unwrap().len(), t - 1);
        }
        let two = k33_chain(2);
        let cut = &enumerate_min_cuts(&two, 3, true).unwrap()[0];
        let spec = split_at_cut(&two, cut).unwrap();
        let k33 = families::complete_bipartite(3, 3);
        assert_eq!(crate::canon::canonical_key(&spec.g1), crate::canon::canonical_key(&k33));
        assert_eq!(crate::canon::canonical_key(&spec.g2), crate::canon::canonical_key(&k33));
    }
}
