//! Named graphs used throughout tests, examples and the CLI.

use alloc::vec::Vec;

use crate::graph::MultiGraph;

fn build(n: usize, pairs: &[(usize, usize)]) -> MultiGraph {
    MultiGraph::from_edges(n, pairs).expect("family generators emit valid pairs")
}

/// Complete graph K_n.
pub fn complete(n: usize) -> MultiGraph {
    let pairs: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    build(n, &pairs)
}

/// Complete bipartite graph K_{a,b}; the first part is `0..a`.
pub fn complete_bipartite(a: usize, b: usize) -> MultiGraph {
    let pairs: Vec<_> = (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y))).collect();
    build(a + b, &pairs)
}

pub fn cycle(n: usize) -> MultiGraph {
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &pairs)
}

/// Path on `n` vertices.
pub fn path(n: usize) -> MultiGraph {
    let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &pairs)
}

/// Star K_{1,k} with center 0.
pub fn star(k: usize) -> MultiGraph {
    let pairs: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    build(k + 1, &pairs)
}

/// Triangular prism: triangles 0-1-2 and 3-4-5 joined by the matching i, i+3.
pub fn prism() -> MultiGraph {
    build(
        6,
        &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
    )
}

pub fn petersen() -> MultiGraph {
    let mut pairs = Vec::new();
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
        pairs.push((i, i + 5));
        pairs.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &pairs)
}

/// Every edge of `g` duplicated, copies appended after the originals.
pub fn doubled(g: &MultiGraph) -> MultiGraph {
    let mut pairs = g.index_pairs();
    pairs.extend(g.index_pairs());
    build(g.vertex_count(), &pairs)
}

/// Apex vertex 4 joined once to each vertex of K4 on 0..4, with every K4
/// edge doubled.
pub fn apex_over_doubled_k4() -> MultiGraph {
    let mut pairs = doubled(&complete(4)).index_pairs();
    pairs.extend((0..4).map(|i| (4, i)));
    build(5, &pairs)
}
