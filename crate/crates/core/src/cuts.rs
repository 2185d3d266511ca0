//! Minimal edge cuts of bounded size.
//!
//! A minimal cut `F` of size `k` is found exactly once: with `b` its edge of
//! largest index, `F - b` is a `(k-1)`-subset whose removal leaves `b` as a
//! bridge. So the enumeration walks `(k-1)`-subsets in index order and
//! collects the later-indexed bridges of what remains.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{EdgeId, MultiGraph, UnionFind, VertexId};

/// Largest cut size the enumeration accepts.
pub const MAX_CUT_SIZE: usize = 4;

/// A minimal edge cut with both of its sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCut {
    /// Cut edges, ascending.
    pub edges: Vec<EdgeId>,
    /// Sides as sorted vertex lists; the first holds the smallest vertex.
    pub sides: (Vec<VertexId>, Vec<VertexId>),
}

impl EdgeCut {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// One side is a single vertex.
    pub fn is_trivial(&self) -> bool {
        self.sides.0.len() == 1 || self.sides.1.len() == 1
    }

    /// Vertex count of the smaller side.
    pub fn balance(&self) -> usize {
        self.sides.0.len().min(self.sides.1.len())
    }

    /// Checks that the sides partition `V(g)`, both induce connected
    /// subgraphs, and the cut edges are exactly the edges between them.
    pub fn validate(&self, g: &MultiGraph) -> bool {
        let (a, b) = &self.sides;
        if a.is_empty() || b.is_empty() || a.len() + b.len() != g.vertex_count() {
            return false;
        }
        let mut side = vec![2u8; g.vertex_count()];
        for (s, list) in [(0u8, a), (1u8, b)] {
            for &v in list {
                match g.vertex_index(v) {
                    Some(i) if side[i] == 2 => side[i] = s,
                    _ => return false,
                }
            }
        }
        let mut crossing: Vec<EdgeId> = Vec::new();
        let mut uf = UnionFind::new(g.vertex_count());
        for (e, (x, y)) in g.edges().iter().zip(g.index_pairs()) {
            if side[x] != side[y] {
                crossing.push(e.id);
            } else {
                uf.union(x, y);
            }
        }
        if crossing != self.edges {
            return false;
        }
        let roots: Vec<usize> = (0..g.vertex_count()).map(|i| uf.find(i)).collect();
        let mut reps = [usize::MAX; 2];
        for i in 0..g.vertex_count() {
            let s = side[i] as usize;
            if reps[s] == usize::MAX {
                reps[s] = roots[i];
            } else if reps[s] != roots[i] {
                return false;
            }
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CutError {
    Disconnected,
    SizeTooLarge { requested: usize, max: usize },
}

impl fmt::Display for CutError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CutError::Disconnected => write!(f, "graph is not connected"),
            CutError::SizeTooLarge { requested, max } => {
                write!(f, "cut size {requested} requested, at most {max} supported")
            }
        }
    }
}

impl core::error::Error for CutError {}

/// Bridges of `g` restricted to edges not in `removed`, as edge positions.
fn bridges(adj: &[Vec<(usize, usize)>], removed: &[bool]) -> Vec<usize> {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut frames: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, in_edge, ref mut next)) = frames.last_mut() {
            if *next < adj[v].len() {
                let (w, e) = adj[v][*next];
                *next += 1;
                if e == in_edge || removed[e] {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, e, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(&(p, _, _)) = frames.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        out.push(in_edge);
                    }
                }
            }
        }
    }
    out
}

/// Sides of `g - cut` if it has exactly two components and every cut edge
/// joins them.
fn cut_sides(g: &MultiGraph, pairs: &[(usize, usize)], cut: &[usize]) -> Option<EdgeCut> {
    let n = g.vertex_count();
    let mut uf = UnionFind::new(n);
    for (i, &(a, b)) in pairs.iter().enumerate() {
        if !cut.contains(&i) {
            uf.union(a, b);
        }
    }
    let r0 = uf.find(0);
    let mut other = usize::MAX;
    let mut side = vec![false; n];
    for (i, s) in side.iter_mut().enumerate() {
        let r = uf.find(i);
        if r == r0 {
            continue;
        }
        if other == usize::MAX {
            other = r;
        } else if other != r {
            return None;
        }
        *s = true;
    }
    if other == usize::MAX {
        return None;
    }
    if cut.iter().any(|&i| side[pairs[i].0] == side[pairs[i].1]) {
        return None;
    }
    let mut edges: Vec<EdgeId> = cut.iter().map(|&i| g.edges()[i].id).collect();
    edges.sort_unstable();
    let vs = g.vertices();
    Some(EdgeCut {
        edges,
        sides: (
            (0..n).filter(|&i| !side[i]).map(|i| vs[i]).collect(),
            (0..n).filter(|&i| side[i]).map(|i| vs[i]).collect(),
        ),
    })
}

/// All minimal edge cuts of `g` with at most `max_size` edges, ordered by
/// size and then by edge ids. With `nontrivial_only`, cuts isolating a
/// single vertex are left out.
pub fn enumerate_min_cuts(g: &MultiGraph, max_size: usize, nontrivial_only: bool) -> Result<Vec<EdgeCut>, CutError> {
    if max_size > MAX_CUT_SIZE {
        return Err(CutError::SizeTooLarge {
            requested: max_size,
            max: MAX_CUT_SIZE,
        });
    }
    if !g.is_connected() {
        return Err(CutError::Disconnected);
    }
    let m = g.edge_count();
    let adj = g.adjacency();
    let pairs = g.index_pairs();
    let mut out = Vec::new();
    let mut removed = vec![false; m];
    for k in 1..=max_size.min(m) {
        let mut prefix: Vec<usize> = Vec::with_capacity(k);
        subsets(m, k - 1, &mut prefix, &mut |prefix| {
            for &i in prefix {
                removed[i] = true;
            }
            let after = prefix.last().map_or(0, |&l| l + 1);
            let mut found: Vec<usize> = bridges(&adj, &removed).into_iter().filter(|&b| b >= after).collect();
            found.sort_unstable();
            for b in found {
                let mut cut = prefix.to_vec();
                cut.push(b);
                if let Some(c) = cut_sides(g, &pairs, &cut) {
                    if !(nontrivial_only && c.is_trivial()) {
                        out.push(c);
                    }
                }
            }
            for &i in prefix {
                removed[i] = false;
            }
        });
    }
    out.sort_by(|a, b| (a.size(), &a.edges).cmp(&(b.size(), &b.edges)));
    Ok(out)
}

fn subsets(m: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    let start = cur.last().map_or(0, |&l| l + 1);
    for i in start..m {
        if m - i < k - cur.len() {
            break;
        }
        cur.push(i);
        subsets(m, k, cur, f);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use std::collections::BTreeSet;

    fn two_triangles_bridge() -> MultiGraph {
        MultiGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]).unwrap()
    }

    /// Every edge subset of size <= k whose removal leaves exactly two
    /// components with all removed edges between them.
    fn brute(g: &MultiGraph, k: usize, nontrivial: bool) -> BTreeSet<Vec<EdgeId>> {
        let m = g.edge_count();
        let mut out = BTreeSet::new();
        for mask in 1u64..(1u64 << m) {
            if mask.count_ones() as usize > k {
                continue;
            }
            let del: Vec<EdgeId> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| g.edges()[i].id).collect();
            let h = g.delete_edges(&del).unwrap();
            let comps = h.components();
            if comps.len() != 2 {
                continue;
            }
            let side0: BTreeSet<VertexId> = comps[0].iter().copied().collect();
            let all_cross = del.iter().all(|&e| {
                let ed = g.edge(e).unwrap();
                side0.contains(&ed.u) != side0.contains(&ed.v)
            });
            if all_cross && !(nontrivial && (comps[0].len() == 1 || comps[1].len() == 1)) {
                out.insert(del);
            }
        }
        out
    }

    fn check_against_brute(g: &MultiGraph, k: usize) {
        for nontrivial in [false, true] {
            let cuts = enumerate_min_cuts(g, k, nontrivial).unwrap();
            for c in &cuts {
                assert!(c.validate(g), "{c:?}");
            }
            let got: BTreeSet<Vec<EdgeId>> = cuts.iter().map(|c| c.edges.clone()).collect();
            assert_eq!(got.len(), cuts.len(), "duplicates");
            assert_eq!(got, brute(g, k, nontrivial));
        }
    }

    #[test]
    fn bridge_between_triangles() {
        let g = two_triangles_bridge();
        let cuts = enumerate_min_cuts(&g, 1, false).unwrap();
        assert_eq!(cuts.len(), 1);
        assert_eq!(cuts[0].edges, vec![EdgeId(6)]);
        assert_eq!((cuts[0].sides.0.len(), cuts[0].sides.1.len()), (3, 3));
    }

    #[test]
    fn prism_has_one_nontrivial_cut() {
        let g = families::prism();
        let nt = enumerate_min_cuts(&g, 3, true).unwrap();
        assert_eq!(nt.len(), 1);
        assert_eq!(nt[0].edges, vec![EdgeId(6), EdgeId(7), EdgeId(8)]);
        let all = enumerate_min_cuts(&g, 3, false).unwrap();
        assert_eq!(all.len(), 7);
        check_against_brute(&g, 3);
    }

    #[test]
    fn k4_has_only_trivial_small_cuts() {
        let g = families::complete(4);
        assert!(enumerate_min_cuts(&g, 3, true).unwrap().is_empty());
        check_against_brute(&g, 3);
    }

    #[test]
    fn agrees_with_brute_force_on_multigraphs() {
        let graphs = [
            families::doubled(&families::cycle(4)),
            families::petersen(),
            families::complete_bipartite(2, 4),
            two_triangles_bridge(),
            MultiGraph::from_edges(5, &[(0, 1), (0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)]).unwrap(),
        ];
        for g in &graphs {
            check_against_brute(g, 4.min(g.edge_count()));
        }
    }

    #[test]
    fn errors() {
        let g = MultiGraph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(enumerate_min_cuts(&g, 2, false), Err(CutError::Disconnected));
        assert_eq!(
            enumerate_min_cuts(&families::complete(4), 5, false),
            Err(CutError::SizeTooLarge { requested: 5, max: 4 })
        );
    }
}
