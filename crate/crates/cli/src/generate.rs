//! Seeded instance generators.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zipcross_core::zip::ZipSpec;
use zipcross_core::{MultiGraph, VertexId};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connected graph on `n` vertices with `m` edges (at least `n - 1`): a
/// random tree plus random extra edges. Without `multi`, extra edges avoid
/// existing pairs while the graph is not complete.
pub fn random_connected(rng: &mut impl Rng, n: usize, m: usize, multi: bool) -> MultiGraph {
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(m);
    for i in 1..n {
        pairs.push((rng.gen_range(0..i), i));
    }
    let full = n * n.saturating_sub(1) / 2;
    while pairs.len() < m && n >= 2 {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a == b {
            continue;
        }
        let key = (a.min(b), a.max(b));
        let present = pairs.iter().any(|&(x, y)| (x.min(y), x.max(y)) == key);
        if present && !multi && pairs.len() < full {
            continue;
        }
        pairs.push(key);
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let pairs: Vec<(usize, usize)> = pairs.into_iter().map(|(a, b)| (perm[a], perm[b])).collect();
    MultiGraph::from_edges(n, &pairs).expect("generated pairs are valid")
}

/// A random connected graph with one extra vertex of degree `d` attached to
/// `d` random vertices (repeats allowed only when there are too few
/// vertices). Returns the graph and the planted vertex.
pub fn planted(rng: &mut impl Rng, n: usize, m: usize, d: usize) -> (MultiGraph, VertexId) {
    let base = random_connected(rng, n, m, false);
    let mut pairs = base.index_pairs();
    let mut targets: Vec<usize> = (0..n).collect();
    targets.shuffle(rng);
    for i in 0..d {
        let t = targets.get(i).copied().unwrap_or_else(|| rng.gen_range(0..n));
        pairs.push((n, t));
    }
    let g = MultiGraph::from_edges(n + 1, &pairs).expect("generated pairs are valid");
    (g, VertexId(n as u32))
}

/// Random zip instance at degree `d`: two planted graphs with
/// `2..=max_n - 1` base vertices and a uniformly random bijection.
pub fn random_zip(rng: &mut impl Rng, max_n: usize, d: usize, extra_edges: usize) -> ZipSpec {
    let side = |rng: &mut ChaCha8Rng| {
        let n = rng.gen_range(2.max(d.min(max_n - 1))..max_n);
        let full = n * (n - 1) / 2;
        let m = (n - 1 + rng.gen_range(0..=extra_edges)).min(full);
        planted(rng, n, m, d)
    };
    let mut local = ChaCha8Rng::seed_from_u64(rng.gen());
    let (g1, v1) = side(&mut local);
    let (g2, v2) = side(&mut local);
    let mut sigma: Vec<usize> = (0..d).collect();
    sigma.shuffle(&mut local);
    ZipSpec { g1, v1, g2, v2, sigma }
}
