//! Loopless undirected multigraphs with stable vertex and edge ids.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Opaque vertex identifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

/// Opaque edge identifier, unique within a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// Edge coloring of a zip product: edges of the first factor are green,
/// edges of the second factor red, and the joining edges blue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    Green,
    Red,
    Blue,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
    pub color: Option<Color>,
}

impl Edge {
    pub fn new(id: EdgeId, u: VertexId, v: VertexId) -> Self {
        Edge { id, u, v, color: None }
    }

    /// The endpoint opposite to `x`. `x` must be an endpoint.
    pub fn other(&self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }

    pub fn shares_endpoint(&self, other: &Edge) -> bool {
        self.touches(other.u) || self.touches(other.v)
    }

    /// Endpoints ordered so that the smaller id comes first.
    pub fn ends(&self) -> (VertexId, VertexId) {
        if self.u <= self.v {
            (self.u, self.v)
        } else {
            (self.v, self.u)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// `make_graph` was handed a pair `(u, u)`.
    LoopPair {
        index: usize,
        pair: (usize, usize),
    },
    /// `make_graph` was handed an endpoint `>= n`.
    EndpointOutOfRange {
        index: usize,
        pair: (usize, usize),
        n: usize,
    },
    MissingVertex(VertexId),
    MissingEdge(EdgeId),
    DuplicateVertex(VertexId),
    DuplicateEdge(EdgeId),
    SameEdge(EdgeId),
    AdjacentEdges(EdgeId, EdgeId),
    EmptyVertexSet,
    Disconnected,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::LoopPair { index, pair } => {
                write!(f, "edge #{index} ({}, {}) is a loop", pair.0, pair.1)
            }
            GraphError::EndpointOutOfRange { index, pair, n } => write!(
                f,
                "edge #{index} ({}, {}) has an endpoint outside 0..{n}",
                pair.0, pair.1
            ),
            GraphError::MissingVertex(v) => write!(f, "vertex {v} is not in the graph"),
            GraphError::MissingEdge(e) => write!(f, "edge {e} is not in the graph"),
            GraphError::DuplicateVertex(v) => write!(f, "vertex {v} listed twice"),
            GraphError::DuplicateEdge(e) => write!(f, "edge id {e} listed twice"),
            GraphError::SameEdge(e) => write!(f, "edge {e} cannot cross itself"),
            GraphError::AdjacentEdges(a, b) => {
                write!(f, "edges {a} and {b} share an endpoint")
            }
            GraphError::EmptyVertexSet => write!(f, "vertex set must be nonempty"),
            GraphError::Disconnected => write!(f, "graph is not connected"),
        }
    }
}

impl core::error::Error for GraphError {}

/// A loopless undirected multigraph.
///
/// Vertices and edges are kept sorted by id. Values are never mutated in
/// place; every operation builds a new graph. Equality compares the vertex
/// set and the multiset of edge endpoints, ignoring edge ids and colors.
#[derive(Clone, Debug, Default)]
pub struct MultiGraph {
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
}

impl PartialEq for MultiGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.endpoint_multiset() == other.endpoint_multiset()
    }
}

impl Eq for MultiGraph {}

impl MultiGraph {
    /// Graph on vertices `0..n` with the given edges; edge ids follow input order.
    pub fn from_edges(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(pairs.len());
        for (index, &(a, b)) in pairs.iter().enumerate() {
            if a >= n || b >= n {
                return Err(GraphError::EndpointOutOfRange { index, pair: (a, b), n });
            }
            if a == b {
                return Err(GraphError::LoopPair { index, pair: (a, b) });
            }
            edges.push(Edge::new(EdgeId(index as u32), VertexId(a as u32), VertexId(b as u32)));
        }
        Ok(MultiGraph {
            vertices: (0..n as u32).map(VertexId).collect(),
            edges,
        })
    }

    /// Builds a graph from explicit parts, validating every invariant.
    /// Loop edges are dropped.
    pub fn from_parts(vertices: Vec<VertexId>, edges: Vec<Edge>) -> Result<Self, GraphError> {
        let mut vertices = vertices;
        vertices.sort_unstable();
        for w in vertices.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateVertex(w[0]));
            }
        }
        let mut kept: Vec<Edge> = edges.into_iter().filter(|e| e.u != e.v).collect();
        kept.sort_unstable_by_key(|e| e.id);
        for w in kept.windows(2) {
            if w[0].id == w[1].id {
                return Err(GraphError::DuplicateEdge(w[0].id));
            }
        }
        for e in &kept {
            for x in [e.u, e.v] {
                if vertices.binary_search(&x).is_err() {
                    return Err(GraphError::MissingVertex(x));
                }
            }
        }
        Ok(MultiGraph { vertices, edges: kept })
    }

    /// Unchecked construction for internal callers that already uphold the
    /// invariants (sorted, unique, loop-free, endpoints present).
    pub(crate) fn from_sorted_parts(vertices: Vec<VertexId>, edges: Vec<Edge>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.windows(2).all(|w| w[0].id < w[1].id));
        debug_assert!(edges.iter().all(|e| e.u != e.v));
        MultiGraph { vertices, edges }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Position of `v` in the sorted vertex list.
    pub fn vertex_index(&self, v: VertexId) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    /// Position of `e` in the sorted edge list.
    pub fn edge_index(&self, e: EdgeId) -> Option<usize> {
        self.edges.binary_search_by_key(&e, |x| x.id).ok()
    }

    pub fn edge(&self, e: EdgeId) -> Option<&Edge> {
        self.edge_index(e).map(|i| &self.edges[i])
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    pub fn incident_edges(&self, v: VertexId) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.iter().filter(move |e| e.touches(v))
    }

    /// Distinct neighbors of `v`, ascending.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let set: BTreeSet<VertexId> = self.incident_edges(v).map(|e| e.other(v)).collect();
        set.into_iter().collect()
    }

    /// Number of parallel edges between `a` and `b`.
    pub fn multiplicity(&self, a: VertexId, b: VertexId) -> usize {
        self.edges
            .iter()
            .filter(|e| (e.u == a && e.v == b) || (e.u == b && e.v == a))
            .count()
    }

    pub fn degrees(&self) -> BTreeMap<VertexId, usize> {
        let mut deg: BTreeMap<VertexId, usize> = self.vertices.iter().map(|&v| (v, 0)).collect();
        for e in &self.edges {
            *deg.get_mut(&e.u).unwrap() += 1;
            *deg.get_mut(&e.v).unwrap() += 1;
        }
        deg
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().values().copied().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().values().copied().max().unwrap_or(0)
    }

    /// The smallest vertex id not yet in use above every existing one.
    pub fn next_vertex_id(&self) -> VertexId {
        VertexId(self.vertices.last().map_or(0, |v| v.0 + 1))
    }

    pub fn next_edge_id(&self) -> EdgeId {
        EdgeId(self.edges.last().map_or(0, |e| e.id.0 + 1))
    }

    fn endpoint_multiset(&self) -> Vec<(VertexId, VertexId)> {
        let mut ends: Vec<_> = self.edges.iter().map(Edge::ends).collect();
        ends.sort_unstable();
        ends
    }

    /// Same graph with edge `e` tagged by `color`.
    pub fn with_color(&self, e: EdgeId, color: Option<Color>) -> Result<Self, GraphError> {
        let i = self.edge_index(e).ok_or(GraphError::MissingEdge(e))?;
        let mut g = self.clone();
        g.edges[i].color = color;
        Ok(g)
    }

    pub fn color(&self, e: EdgeId) -> Option<Color> {
        self.edge(e).and_then(|x| x.color)
    }

    /// Contracts `set` into one fresh vertex. Edges inside the set vanish,
    /// edges leaving it are re-attached to the new vertex and keep their ids.
    /// Returns the new graph and the id of the merged vertex.
    pub fn contract_set(&self, set: &[VertexId]) -> Result<(Self, VertexId), GraphError> {
        if set.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        for &v in set {
            if !self.has_vertex(v) {
                return Err(GraphError::MissingVertex(v));
            }
        }
        let inside: BTreeSet<VertexId> = set.iter().copied().collect();
        let x = self.next_vertex_id();
        let mut vertices: Vec<VertexId> = self.vertices.iter().copied().filter(|v| !inside.contains(v)).collect();
        vertices.push(x);
        let map = |v: VertexId| if inside.contains(&v) { x } else { v };
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                u: map(e.u),
                v: map(e.v),
                ..*e
            })
            .filter(|e| e.u != e.v)
            .collect();
        Ok((Self::from_sorted_parts(vertices, edges), x))
    }

    /// Subdivides `e` and `f` and identifies the two subdivision vertices.
    ///
    /// With `e = uv` and `f = wz`, the result drops both edges and adds a
    /// vertex `x = next_vertex_id()` with edges `ux, xv, wx, xz` whose ids
    /// are `next_edge_id() + 0..4` in that order.
    pub fn cross_identify(&self, e: EdgeId, f: EdgeId) -> Result<Self, GraphError> {
        if e == f {
            return Err(GraphError::SameEdge(e));
        }
        let ee = *self.edge(e).ok_or(GraphError::MissingEdge(e))?;
        let ff = *self.edge(f).ok_or(GraphError::MissingEdge(f))?;
        if ee.shares_endpoint(&ff) {
            return Err(GraphError::AdjacentEdges(e, f));
        }
        let x = self.next_vertex_id();
        let base = self.next_edge_id().0;
        let mut vertices = self.vertices.clone();
        vertices.push(x);
        let mut edges: Vec<Edge> = self.edges.iter().copied().filter(|g| g.id != e && g.id != f).collect();
        let fresh = [(ee.u, x), (x, ee.v), (ff.u, x), (x, ff.v)];
        for (k, (a, b)) in fresh.into_iter().enumerate() {
            edges.push(Edge::new(EdgeId(base + k as u32), a, b));
        }
        Ok(Self::from_sorted_parts(vertices, edges))
    }

    /// Replaces `e = uv` by a path `u x v` through a fresh vertex. Both new
    /// edges get fresh ids and inherit the color of `e`.
    pub fn subdivide(&self, e: EdgeId) -> Result<Self, GraphError> {
        let ee = *self.edge(e).ok_or(GraphError::MissingEdge(e))?;
        let x = self.next_vertex_id();
        let base = self.next_edge_id().0;
        let mut vertices = self.vertices.clone();
        vertices.push(x);
        let mut edges: Vec<Edge> = self.edges.iter().copied().filter(|g| g.id != e).collect();
        edges.push(Edge {
            id: EdgeId(base),
            u: ee.u,
            v: x,
            color: ee.color,
        });
        edges.push(Edge {
            id: EdgeId(base + 1),
            u: x,
            v: ee.v,
            color: ee.color,
        });
        Ok(Self::from_sorted_parts(vertices, edges))
    }

    pub fn delete_edge(&self, e: EdgeId) -> Result<Self, GraphError> {
        self.delete_edges(&[e])
    }

    pub fn delete_edges(&self, del: &[EdgeId]) -> Result<Self, GraphError> {
        for &e in del {
            if self.edge_index(e).is_none() {
                return Err(GraphError::MissingEdge(e));
            }
        }
        let edges = self.edges.iter().copied().filter(|x| !del.contains(&x.id)).collect();
        Ok(Self::from_sorted_parts(self.vertices.clone(), edges))
    }

    pub fn delete_vertex(&self, v: VertexId) -> Result<Self, GraphError> {
        self.delete_vertices(&[v])
    }

    pub fn delete_vertices(&self, del: &[VertexId]) -> Result<Self, GraphError> {
        for &v in del {
            if !self.has_vertex(v) {
                return Err(GraphError::MissingVertex(v));
            }
        }
        let vertices = self.vertices.iter().copied().filter(|v| !del.contains(v)).collect();
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|e| !del.contains(&e.u) && !del.contains(&e.v))
            .collect();
        Ok(Self::from_sorted_parts(vertices, edges))
    }

    /// Subgraph induced by `keep`; ids unchanged.
    pub fn induced(&self, keep: &[VertexId]) -> Self {
        let set: BTreeSet<VertexId> = keep.iter().copied().filter(|v| self.has_vertex(*v)).collect();
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|e| set.contains(&e.u) && set.contains(&e.v))
            .collect();
        Self::from_sorted_parts(set.into_iter().collect(), edges)
    }

    /// Spanning subgraph keeping only the listed edges.
    pub fn edge_subgraph(&self, keep: &[EdgeId]) -> Self {
        let set: BTreeSet<EdgeId> = keep.iter().copied().collect();
        let edges = self.edges.iter().copied().filter(|e| set.contains(&e.id)).collect();
        Self::from_sorted_parts(self.vertices.clone(), edges)
    }

    /// Drops vertices of degree zero.
    pub fn without_isolated(&self) -> Self {
        let deg = self.degrees();
        let vertices = self.vertices.iter().copied().filter(|v| deg[v] > 0).collect();
        Self::from_sorted_parts(vertices, self.edges.clone())
    }

    /// Keeps the lowest-id edge of every parallel class.
    pub fn simplify(&self) -> Self {
        let mut seen = BTreeSet::new();
        let edges = self.edges.iter().copied().filter(|e| seen.insert(e.ends())).collect();
        Self::from_sorted_parts(self.vertices.clone(), edges)
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|e| seen.insert(e.ends()))
    }

    /// Join with an independent set of `count` new vertices: each new vertex
    /// gets one edge to every old vertex, and none among themselves.
    pub fn join_independent(&self, count: usize) -> Self {
        let mut vertices = self.vertices.clone();
        let mut edges = self.edges.clone();
        let first = self.next_vertex_id().0;
        let mut next_e = self.next_edge_id().0;
        for x in (first..first + count as u32).map(VertexId) {
            for &v in &self.vertices {
                edges.push(Edge::new(EdgeId(next_e), v, x));
                next_e += 1;
            }
            vertices.push(x);
        }
        Self::from_sorted_parts(vertices, edges)
    }

    /// Disjoint union; `other` is shifted above every id of `self`.
    /// Returns the union and the vertex map applied to `other`.
    pub fn disjoint_union(&self, other: &Self) -> (Self, BTreeMap<VertexId, VertexId>) {
        let v_off = self.next_vertex_id().0;
        let e_off = self.next_edge_id().0;
        let map: BTreeMap<VertexId, VertexId> = other.vertices.iter().map(|&v| (v, VertexId(v.0 + v_off))).collect();
        let mut vertices = self.vertices.clone();
        vertices.extend(map.values().copied());
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge {
            id: EdgeId(e.id.0 + e_off),
            u: map[&e.u],
            v: map[&e.v],
            color: e.color,
        }));
        (Self::from_sorted_parts(vertices, edges), map)
    }

    /// Renumbers vertices to `0..n` and edges to `0..m`, preserving order.
    pub fn compact(&self) -> Self {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| Edge {
                id: EdgeId(i as u32),
                u: VertexId(self.vertex_index(e.u).unwrap() as u32),
                v: VertexId(self.vertex_index(e.v).unwrap() as u32),
                color: e.color,
            })
            .collect();
        Self::from_sorted_parts((0..self.vertices.len() as u32).map(VertexId).collect(), edges)
    }

    /// Endpoints of every edge as positions in the vertex list, in edge order.
    pub fn index_pairs(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .map(|e| (self.vertex_index(e.u).unwrap(), self.vertex_index(e.v).unwrap()))
            .collect()
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertices.len();
        let mut uf = UnionFind::new(n);
        for (a, b) in self.index_pairs() {
            uf.union(a, b);
        }
        let mut groups: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
        let mut order: Vec<usize> = Vec::new();
        for i in 0..n {
            let r = uf.find(i);
            groups
                .entry(r)
                .or_insert_with(|| {
                    order.push(r);
                    Vec::new()
                })
                .push(self.vertices[i]);
        }
        order.into_iter().map(|r| groups.remove(&r).unwrap()).collect()
    }

    /// Connected means exactly one component; the empty graph is not.
    pub fn is_connected(&self) -> bool {
        !self.vertices.is_empty() && self.components().len() == 1
    }

    /// Biconnected components (blocks) as sorted edge-id lists. Parallel
    /// edges land in the same block; a bridge is a block of its own.
    pub fn blocks(&self) -> Vec<Vec<EdgeId>> {
        let n = self.vertices.len();
        let adj = self.adjacency();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut time = 0;
        let mut edge_stack: Vec<usize> = Vec::new();
        let mut out: Vec<Vec<EdgeId>> = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            // frames: (vertex, edge used to enter, next adjacency index)
            let mut frames: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            while let Some(&mut (v, in_edge, ref mut next)) = frames.last_mut() {
                if *next < adj[v].len() {
                    let (w, e) = adj[v][*next];
                    *next += 1;
                    if e == in_edge {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        edge_stack.push(e);
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        frames.push((w, e, 0));
                    } else if disc[w] < disc[v] {
                        edge_stack.push(e);
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    frames.pop();
                    if let Some(&(p, _, _)) = frames.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] >= disc[p] {
                            let mut block = Vec::new();
                            while let Some(x) = edge_stack.pop() {
                                block.push(self.edges[x].id);
                                if x == in_edge {
                                    break;
                                }
                            }
                            block.sort_unstable();
                            out.push(block);
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Adjacency lists over vertex positions: `(neighbor position, edge position)`.
    pub(crate) fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (i, (a, b)) in self.index_pairs().into_iter().enumerate() {
            adj[a].push((b, i));
            adj[b].push((a, i));
        }
        adj
    }
}

/// Plain union-find over `0..n`.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}
