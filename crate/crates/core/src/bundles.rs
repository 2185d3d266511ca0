//! Bundles and coherent bundle pairs.
//!
//! A bundle of `v` with sink `w` is a family of `d(v)` edge-disjoint paths
//! in `G - v`, one per edge at `v`, each starting at the far end of that
//! edge and ending at `w`. Single bundles are a unit-capacity flow problem.
//! A coherent pair needs two edge-disjoint bundles with distinct sinks,
//! which is a two-commodity problem: a combined flow to both sinks is only
//! necessary. The pair search enumerates path systems for the first bundle,
//! pruned by flow bounds, and completes the second one by flow.

use alloc::vec;
use alloc::vec::Vec;

use crate::flow::FlowNetwork;
use crate::graph::{EdgeId, MultiGraph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundlePath {
    pub start: VertexId,
    /// Edges from `start` to the sink; empty when `start` is the sink.
    pub edges: Vec<EdgeId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bundle {
    pub center: VertexId,
    pub sink: VertexId,
    pub paths: Vec<BundlePath>,
}

impl Bundle {
    pub fn edges(&self) -> Vec<EdgeId> {
        let mut v: Vec<EdgeId> = self.paths.iter().flat_map(|p| p.edges.iter().copied()).collect();
        v.sort_unstable();
        v
    }

    /// Checks every bundle invariant against `g`.
    pub fn validate(&self, g: &MultiGraph) -> bool {
        let v = self.center;
        if !g.has_vertex(v) || !g.has_vertex(self.sink) || v == self.sink {
            return false;
        }
        if self.paths.len() != g.degree(v) {
            return false;
        }
        let mut starts: Vec<VertexId> = self.paths.iter().map(|p| p.start).collect();
        starts.sort_unstable();
        let mut expected: Vec<VertexId> = g.incident_edges(v).map(|e| e.other(v)).collect();
        expected.sort_unstable();
        if starts != expected {
            return false;
        }
        let all = self.edges();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        self.paths.iter().all(|p| {
            let mut seen = vec![p.start];
            let mut at = p.start;
            for &e in &p.edges {
                let Some(edge) = g.edge(e) else {
                    return false;
                };
                if !edge.touches(at) || edge.touches(v) {
                    return false;
                }
                at = edge.other(at);
                if seen.contains(&at) {
                    return false;
                }
                seen.push(at);
            }
            at == self.sink
        })
    }
}

/// Network for paths in `G - v` plus any extra removed edges: one node per
/// vertex position and a source joined to each neighbor of `v` with
/// capacity equal to the number of demanded paths from there.
struct BundleNet {
    net: FlowNetwork,
    source: usize,
    /// handle -> edge id for graph edges
    edge_of: Vec<Option<EdgeId>>,
}

fn bundle_net(g: &MultiGraph, v: VertexId, blocked: &[EdgeId], demand: &[(usize, i64)]) -> BundleNet {
    let n = g.vertex_count();
    let mut net = FlowNetwork::new(n + 1);
    let mut edge_of = Vec::new();
    for (e, (a, b)) in g.edges().iter().zip(g.index_pairs()) {
        if e.touches(v) || blocked.binary_search(&e.id).is_ok() {
            continue;
        }
        net.add_edge(a, b, 1);
        edge_of.push(Some(e.id));
    }
    for &(u, c) in demand {
        net.add_arc(n, u, c);
        edge_of.push(None);
    }
    BundleNet {
        net,
        source: n,
        edge_of,
    }
}

/// Neighbor positions of `v` with edge multiplicities, ascending.
fn demand_at(g: &MultiGraph, v: VertexId) -> Vec<(usize, i64)> {
    let mut d: Vec<(usize, i64)> = Vec::new();
    for e in g.incident_edges(v) {
        let u = g.vertex_index(e.other(v)).unwrap();
        match d.iter_mut().find(|x| x.0 == u) {
            Some(x) => x.1 += 1,
            None => d.push((u, 1)),
        }
    }
    d.sort_unstable();
    d
}

fn flow_value(g: &MultiGraph, v: VertexId, blocked: &[EdgeId], demand: &[(usize, i64)], sink: usize) -> i64 {
    let mut b = bundle_net(g, v, blocked, demand);
    b.net.max_flow(b.source, sink)
}

fn bundle_with(g: &MultiGraph, v: VertexId, w: VertexId, blocked: &[EdgeId]) -> Option<Bundle> {
    if v == w || !g.has_vertex(v) || !g.has_vertex(w) {
        return None;
    }
    let demand = demand_at(g, v);
    let need: i64 = demand.iter().map(|d| d.1).sum();
    let sink = g.vertex_index(w).unwrap();
    let mut b = bundle_net(g, v, blocked, &demand);
    if b.net.max_flow(b.source, sink) != need {
        return None;
    }
    let vs = g.vertices();
    let mut paths: Vec<BundlePath> = b
        .net
        .decompose(b.source, sink)
        .into_iter()
        .map(|p| BundlePath {
            start: vs[p.nodes[1]],
            edges: p.handles[1..].iter().map(|&h| b.edge_of[h].unwrap()).collect(),
        })
        .collect();
    paths.sort_by(|a, b| (a.start, &a.edges).cmp(&(b.start, &b.edges)));
    Some(Bundle {
        center: v,
        sink: w,
        paths,
    })
}

/// A bundle of `v` with sink `w`, if one exists.
pub fn find_bundle(g: &MultiGraph, v: VertexId, w: VertexId) -> Option<Bundle> {
    bundle_with(g, v, w, &[])
}

/// Every sink that admits a bundle of `v`, with one bundle each.
pub fn all_bundles(g: &MultiGraph, v: VertexId) -> Vec<Bundle> {
    g.vertices()
        .iter()
        .filter(|&&w| w != v)
        .filter_map(|&w| find_bundle(g, v, w))
        .collect()
}

/// Two edge-disjoint bundles of `v` with distinct sinks, if they exist.
/// Sink pairs are tried in ascending order.
pub fn find_coherent_bundles(g: &MultiGraph, v: VertexId) -> Option<(Bundle, Bundle)> {
    if !g.has_vertex(v) {
        return None;
    }
    let demand = demand_at(g, v);
    let sinks: Vec<VertexId> = g.vertices().iter().copied().filter(|&w| w != v).collect();
    let single: Vec<VertexId> = sinks
        .iter()
        .copied()
        .filter(|&w| find_bundle(g, v, w).is_some())
        .collect();
    for (i, &w1) in single.iter().enumerate() {
        for &w2 in &single[i + 1..] {
            if !combined_flow_ok(g, v, &[], &demand, &demand, w1, w2) {
                continue;
            }
            let mut search = PairSearch {
                g,
                v,
                w1,
                w2,
                sink1: g.vertex_index(w1).unwrap(),
                full: demand.clone(),
                adj: g.adjacency(),
                used: Vec::new(),
                paths: Vec::new(),
            };
            let mut starts: Vec<usize> = Vec::new();
            for &(u, c) in &demand {
                for _ in 0..c {
                    starts.push(u);
                }
            }
            if let Some(b2) = search.run(&starts, 0) {
                let vs = g.vertices();
                let mut paths: Vec<BundlePath> = search
                    .paths
                    .iter()
                    .map(|(u, es)| BundlePath {
                        start: vs[*u],
                        edges: es.clone(),
                    })
                    .collect();
                paths.sort_by(|a, b| (a.start, &a.edges).cmp(&(b.start, &b.edges)));
                let b1 = Bundle {
                    center: v,
                    sink: w1,
                    paths,
                };
                return Some((b1, b2));
            }
        }
    }
    None
}

/// Relaxation: one flow that routes the remaining demand of the first
/// bundle to `w1` and the full demand of the second to `w2` at once.
fn combined_flow_ok(
    g: &MultiGraph,
    v: VertexId,
    blocked: &[EdgeId],
    demand1: &[(usize, i64)],
    demand2: &[(usize, i64)],
    w1: VertexId,
    w2: VertexId,
) -> bool {
    let mut merged: Vec<(usize, i64)> = demand1.to_vec();
    for &(u, c) in demand2 {
        match merged.iter_mut().find(|x| x.0 == u) {
            Some(x) => x.1 += c,
            None => merged.push((u, c)),
        }
    }
    let need1: i64 = demand1.iter().map(|d| d.1).sum();
    let need2: i64 = demand2.iter().map(|d| d.1).sum();
    let mut b = bundle_net(g, v, blocked, &merged);
    let sink = b.net.add_node();
    let s1 = g.vertex_index(w1).unwrap();
    let s2 = g.vertex_index(w2).unwrap();
    b.net.add_arc(s1, sink, need1);
    b.net.add_arc(s2, sink, need2);
    b.net.max_flow(b.source, sink) == need1 + need2
}

struct PairSearch<'g> {
    g: &'g MultiGraph,
    v: VertexId,
    w1: VertexId,
    w2: VertexId,
    sink1: usize,
    full: Vec<(usize, i64)>,
    adj: Vec<Vec<(usize, usize)>>,
    /// edges used by the first bundle so far, sorted
    used: Vec<EdgeId>,
    paths: Vec<(usize, Vec<EdgeId>)>,
}

impl PairSearch<'_> {
    /// Chooses a path for `starts[i]` and recurses; returns the second
    /// bundle once every first-bundle path is placed.
    fn run(&mut self, starts: &[usize], i: usize) -> Option<Bundle> {
        if i == starts.len() {
            return bundle_with(self.g, self.v, self.w2, &self.used);
        }
        let mut rest: Vec<(usize, i64)> = Vec::new();
        for &u in &starts[i..] {
            match rest.iter_mut().find(|x| x.0 == u) {
                Some(x) => x.1 += 1,
                None => rest.push((u, 1)),
            }
        }
        let need: i64 = (starts.len() - i) as i64;
        if flow_value(self.g, self.v, &self.used, &rest, self.sink1) < need {
            return None;
        }
        let total: i64 = self.full.iter().map(|d| d.1).sum();
        if flow_value(
            self.g,
            self.v,
            &self.used,
            &self.full,
            self.g.vertex_index(self.w2).unwrap(),
        ) < total
        {
            return None;
        }
        if !combined_flow_ok(self.g, self.v, &self.used, &rest, &self.full, self.w1, self.w2) {
            return None;
        }
        let u = starts[i];
        if u == self.sink1 {
            self.paths.push((u, Vec::new()));
            let r = self.run(starts, i + 1);
            if r.is_none() {
                self.paths.pop();
            }
            return r;
        }
        // paths from the same start come with increasing first edges
        let min_first = match self.paths.last() {
            Some((p, es)) if i > 0 && starts[i - 1] == u && *p == u => es.first().copied(),
            _ => None,
        };
        let mut candidates: Vec<Vec<EdgeId>> = Vec::new();
        let mut on_path = vec![false; self.g.vertex_count()];
        let vpos = self.g.vertex_index(self.v).unwrap();
        on_path[vpos] = true;
        on_path[u] = true;
        let mut stack: Vec<EdgeId> = Vec::new();
        self.simple_paths(u, &mut on_path, &mut stack, &mut candidates, min_first);
        for path in candidates {
            let before = self.used.clone();
            self.used.extend(path.iter().copied());
            self.used.sort_unstable();
            self.paths.push((u, path));
            if let Some(b2) = self.run(starts, i + 1) {
                return Some(b2);
            }
            self.paths.pop();
            self.used = before;
        }
        None
    }

    fn simple_paths(
        &self,
        at: usize,
        on_path: &mut [bool],
        stack: &mut Vec<EdgeId>,
        out: &mut Vec<Vec<EdgeId>>,
        min_first: Option<EdgeId>,
    ) {
        if at == self.sink1 {
            out.push(stack.clone());
            return;
        }
        for &(w, ei) in &self.adj[at] {
            let e = self.g.edges()[ei].id;
            if on_path[w] || self.used.binary_search(&e).is_ok() {
                continue;
            }
            if stack.is_empty() {
                if let Some(m) = min_first {
                    if e <= m {
                        continue;
                    }
                }
            }
            on_path[w] = true;
            stack.push(e);
            self.simple_paths(w, on_path, stack, out, min_first);
            stack.pop();
            on_path[w] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn k4_bundle_uses_direct_edges() {
        let g = families::complete(4);
        let b = find_bundle(&g, VertexId(0), VertexId(1)).unwrap();
        assert!(b.validate(&g));
        assert_eq!(b.paths.len(), 3);
        assert!(b.paths.iter().any(|p| p.start == VertexId(1) && p.edges.is_empty()));
        assert!(b.paths.iter().all(|p| p.edges.len() <= 1));
        assert_eq!(all_bundles(&g, VertexId(0)).len(), 3);
    }

    #[test]
    fn star_has_no_bundle() {
        let g = families::star(3);
        assert!(find_bundle(&g, VertexId(0), VertexId(1)).is_none());
    }

    #[test]
    fn k33_bundle_to_opposite_part() {
        let g = families::complete_bipartite(3, 3);
        let b = find_bundle(&g, VertexId(0), VertexId(3)).unwrap();
        assert!(b.validate(&g));
    }

    #[test]
    fn coherent_examples() {
        let g = families::apex_over_doubled_k4();
        let (b1, b2) = find_coherent_bundles(&g, VertexId(4)).unwrap();
        assert!(b1.validate(&g) && b2.validate(&g));
        assert_ne!(b1.sink, b2.sink);
        let mut all = b1.edges();
        all.extend(b2.edges());
        all.sort_unstable();
        assert!(all.windows(2).all(|w| w[0] != w[1]));
        assert!(find_coherent_bundles(&families::complete(5), VertexId(0)).is_none());
    }

    #[test]
    fn cut_vertex_blocks_coherent_pair() {
        let k4 = families::complete(4);
        let (mut g, _) = k4.disjoint_union(&k4);
        // glue: join vertex 0 to the second copy so 0 is a cut vertex
        g = MultiGraph::from_edges(
            8,
            &g.index_pairs()
                .into_iter()
                .chain([(0, 4), (0, 5), (0, 6)])
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert!(find_coherent_bundles(&g, VertexId(0)).is_none());
    }
}
