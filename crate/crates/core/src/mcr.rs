//! Minor crossing number over cubic-tree expansions.
//!
//! Every vertex of degree `d >= 4` is replaced by a cubic tree whose `d`
//! leaves are the edges at that vertex; vertices of degree at most three are
//! kept. There are `(2d - 5)!!` such trees per vertex. Values reported here
//! are minima over that class, paired with a lower bound that holds for the
//! true minor crossing number: the number of vertex-disjoint Kuratowski
//! subdivisions, or `cr(G)` itself when `G` has maximum degree three (a
//! graph containing such a `G` as a minor contains a subdivision of it).

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::canon::canonical_key_with_cap;
use crate::graph::{Edge, EdgeId, MultiGraph, VertexId};
use crate::planarity::kuratowski_witness;
use crate::solver::{Outcome, Solver};
use crate::zip::{zip, ZipError, ZipSpec};

/// Degree cap used when callers do not pick one.
pub const DEFAULT_DEGREE_CAP: usize = 6;

/// A graph `host` with a map from its vertices onto `G`; the preimage of
/// each vertex of `G` is a tree, and contracting those trees gives `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub host: MultiGraph,
    /// Pairs `(host vertex, vertex of G)`, sorted by host vertex.
    pub witness: Vec<(VertexId, VertexId)>,
}

impl Expansion {
    /// The trivial expansion of `g` by itself.
    pub fn identity(g: &MultiGraph) -> Self {
        Expansion {
            host: g.clone(),
            witness: g.vertices().iter().map(|&v| (v, v)).collect(),
        }
    }

    /// Contracts every preimage tree and checks the result is `g`, edge ids
    /// included.
    pub fn validate(&self, g: &MultiGraph) -> bool {
        if self.witness.len() != self.host.vertex_count() {
            return false;
        }
        let image = |x: VertexId| {
            self.witness
                .binary_search_by_key(&x, |p| p.0)
                .ok()
                .map(|i| self.witness[i].1)
        };
        let mut kept = Vec::new();
        let mut inner: Vec<(VertexId, VertexId)> = Vec::new();
        for e in self.host.edges() {
            let (Some(a), Some(b)) = (image(e.u), image(e.v)) else {
                return false;
            };
            if a == b {
                inner.push((e.u, e.v));
            } else {
                kept.push(Edge::new(e.id, a, b));
            }
        }
        // each preimage must be a tree
        for &v in g.vertices() {
            let pre: Vec<VertexId> = self.witness.iter().filter(|p| p.1 == v).map(|p| p.0).collect();
            let edges = inner.iter().filter(|(a, _)| pre.contains(a)).count();
            if pre.is_empty() || edges + 1 != pre.len() {
                return false;
            }
            let sub = self.host.induced(&pre);
            if !sub.is_connected() {
                return false;
            }
        }
        let Ok(h) = MultiGraph::from_parts(g.vertices().to_vec(), kept) else {
            return false;
        };
        h == *g
            && h.edges().iter().zip(g.edges()).all(|(x, y)| {
                x.id == y.id && {
                    let (p, q) = x.ends();
                    let (r, s) = y.ends();
                    (p, q) == (r, s) || (p, q) == (s, r)
                }
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum McrError {
    DegreeOverCap {
        vertex: VertexId,
        degree: usize,
        cap: usize,
    },
    NotATree,
    Zip(ZipError),
}

impl fmt::Display for McrError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            McrError::DegreeOverCap { vertex, degree, cap } => {
                write!(f, "vertex {vertex} has degree {degree}, above the cap of {cap}")
            }
            McrError::NotATree => write!(f, "first factor is not a tree"),
            McrError::Zip(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for McrError {}

/// Cubic trees with leaves `0..d` and internal nodes `d..2d-2`, as edge lists.
pub fn cubic_trees(d: usize) -> Vec<Vec<(usize, usize)>> {
    if d < 3 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let start = vec![(0, d), (1, d), (2, d)];
    grow(d, 3, d + 1, start, &mut out);
    out
}

fn grow(d: usize, leaf: usize, next_inner: usize, tree: Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
    if leaf == d {
        out.push(tree);
        return;
    }
    for i in 0..tree.len() {
        let (a, b) = tree[i];
        let mut t = tree.clone();
        t[i] = (a, next_inner);
        t.push((next_inner, b));
        t.push((leaf, next_inner));
        grow(d, leaf + 1, next_inner + 1, t, out);
    }
}

/// Number of raw expansions, `prod (2d - 5)!!` over vertices of degree
/// `d >= 4`. Saturates at `u64::MAX`.
pub fn expansion_count(g: &MultiGraph) -> u64 {
    let mut total: u64 = 1;
    for &v in g.vertices() {
        let d = g.degree(v) as u64;
        if d >= 4 {
            let mut f = 1u64;
            let mut k = 2 * d - 5;
            while k > 1 {
                f = f.saturating_mul(k);
                k -= 2;
            }
            total = total.saturating_mul(f);
        }
    }
    total
}

fn check_cap(g: &MultiGraph, cap: usize) -> Result<(), McrError> {
    for &v in g.vertices() {
        let d = g.degree(v);
        if d > cap {
            return Err(McrError::DegreeOverCap {
                vertex: v,
                degree: d,
                cap,
            });
        }
    }
    Ok(())
}

/// A vertex to expand, its incident edge ids and the cubic trees to try.
type Slot = (VertexId, Vec<EdgeId>, Vec<Vec<(usize, usize)>>);

/// Lazily enumerates all raw expansions in mixed-radix order.
pub struct Expansions<'g> {
    g: &'g MultiGraph,
    slots: Vec<Slot>,
    digits: Vec<usize>,
    done: bool,
}

impl<'g> Expansions<'g> {
    fn build(&self) -> Expansion {
        let g = self.g;
        let mut next_v = g.next_vertex_id().0;
        let mut next_e = g.next_edge_id().0;
        let mut vertices: Vec<VertexId> = g.vertices().to_vec();
        let mut witness: Vec<(VertexId, VertexId)> = g.vertices().iter().map(|&v| (v, v)).collect();
        let mut edges: Vec<Edge> = g.edges().to_vec();
        for (slot, &digit) in self.slots.iter().zip(&self.digits) {
            let (v, inc, trees) = slot;
            let d = inc.len();
            let tree = &trees[digit];
            // internal node d is v itself; the rest are fresh
            let mut name = vec![*v; d - 2];
            for n in name.iter_mut().skip(1) {
                *n = VertexId(next_v);
                next_v += 1;
                vertices.push(*n);
                witness.push((*n, *v));
            }
            for &(a, b) in tree {
                if a < d {
                    let id = inc[a];
                    let e = edges.iter_mut().find(|e| e.id == id).unwrap();
                    let x = name[b - d];
                    if e.u == *v {
                        e.u = x;
                    } else {
                        e.v = x;
                    }
                } else {
                    edges.push(Edge::new(EdgeId(next_e), name[a - d], name[b - d]));
                    next_e += 1;
                }
            }
        }
        witness.sort_unstable();
        Expansion {
            host: MultiGraph::from_parts(vertices, edges).expect("expansion keeps invariants"),
            witness,
        }
    }
}

impl Iterator for Expansions<'_> {
    type Item = Expansion;

    fn next(&mut self) -> Option<Expansion> {
        if self.done {
            return None;
        }
        let out = self.build();
        let mut i = self.digits.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.digits[i] += 1;
            if self.digits[i] < self.slots[i].2.len() {
                break;
            }
            self.digits[i] = 0;
        }
        Some(out)
    }
}

/// All raw expansions of `g`, without isomorphism reduction.
pub fn expansions_raw(g: &MultiGraph, degree_cap: usize) -> Result<Expansions<'_>, McrError> {
    check_cap(g, degree_cap)?;
    let mut slots = Vec::new();
    for &v in g.vertices() {
        let inc: Vec<EdgeId> = g.incident_edges(v).map(|e| e.id).collect();
        if inc.len() >= 4 {
            let trees = cubic_trees(inc.len());
            slots.push((v, inc, trees));
        }
    }
    let digits = vec![0; slots.len()];
    Ok(Expansions {
        g,
        slots,
        digits,
        done: false,
    })
}

/// Expansions of `g` with isomorphic hosts removed; hosts above the
/// canonical-key cap are all kept.
pub fn expansions(g: &MultiGraph, degree_cap: usize) -> Result<impl Iterator<Item = Expansion> + '_, McrError> {
    let mut seen = BTreeSet::new();
    Ok(
        expansions_raw(g, degree_cap)?.filter(move |x| match canonical_key_with_cap(&x.host, 24) {
            Ok(k) => seen.insert(k),
            Err(_) => true,
        }),
    )
}

/// Number of vertex-disjoint Kuratowski subdivisions found greedily. Every
/// graph with `g` as a minor has at least this many crossings.
pub fn disjoint_kuratowski_bound(g: &MultiGraph) -> u32 {
    let mut cur = g.clone();
    let mut count = 0;
    while let Some(w) = kuratowski_witness(&cur) {
        let mut vs: Vec<VertexId> = Vec::new();
        for e in w.edges() {
            let (a, b) = cur.edge(e).unwrap().ends();
            vs.push(a);
            vs.push(b);
        }
        vs.sort_unstable();
        vs.dedup();
        cur = cur.delete_vertices(&vs).expect("witness vertices are present");
        count += 1;
    }
    count
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct McrLimits {
    /// Stop after solving this many distinct expansions.
    pub max_expansions: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McrResult {
    /// Valid lower bound on the minor crossing number.
    pub lower: u32,
    /// Crossing number of `realizing`, the best expansion found.
    pub upper: u32,
    pub realizing: Expansion,
    /// Every expansion was examined and solved, so `upper` is the minimum
    /// over the cubic-expansion class.
    pub class_complete: bool,
    pub examined: usize,
}

impl McrResult {
    /// `lower == upper`, so the minor crossing number is known.
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    /// Minimum over the cubic-expansion class, when the search finished.
    pub fn class_value(&self) -> Option<u32> {
        if self.class_complete || self.is_exact() {
            Some(self.upper)
        } else {
            None
        }
    }
}

/// Minor crossing number of `g` within the cubic-expansion class.
///
/// Returns `Ok(None)` when even `cr(G)` could not be determined.
pub fn minor_crossing_number(
    g: &MultiGraph,
    degree_cap: usize,
    limits: McrLimits,
    solver: &mut Solver<'_>,
) -> Result<Option<McrResult>, McrError> {
    check_cap(g, degree_cap)?;
    let base = solver.crossing_number(g, None);
    let Some(cr) = base.value() else {
        return Ok(None);
    };
    let cubic = g.max_degree() <= 3;
    let lower = if cubic {
        cr
    } else {
        disjoint_kuratowski_bound(g).min(cr)
    };
    let mut best = McrResult {
        lower,
        upper: cr,
        realizing: Expansion::identity(g),
        class_complete: cubic,
        examined: 0,
    };
    if cubic || best.upper == lower {
        return Ok(Some(best));
    }
    let mut complete = true;
    for x in expansions(g, degree_cap)? {
        if limits.max_expansions.is_some_and(|m| best.examined >= m) {
            complete = false;
            break;
        }
        best.examined += 1;
        match solver.crossing_number(&x.host, Some(best.upper - 1)) {
            Outcome::Solved(r) => {
                best.upper = r.value;
                best.realizing = x;
                if best.upper == lower {
                    break;
                }
            }
            Outcome::ExceedsBudget { .. } => {}
            Outcome::Unknown { .. } => complete = false,
        }
    }
    best.class_complete = complete;
    Ok(Some(best))
}

/// Three-valued outcome of a claimed inequality or equality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Pass,
    Fail,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McrZipReport {
    pub zipped: McrResult,
    pub g1: McrResult,
    pub g2: McrResult,
    /// `mcr(G) >= mcr(G1) + mcr(G2)`.
    pub superadditive: Check,
    /// `mcr(G) = mcr(G1) + mcr(G2)`, checked only at degree at most three.
    pub additive: Option<Check>,
}

/// Minor crossing numbers of a zip product and its factors, with the
/// inequality checked on the proven intervals.
pub fn mcr_zip_check(
    spec: &ZipSpec,
    degree_cap: usize,
    limits: McrLimits,
    solver: &mut Solver<'_>,
) -> Result<Option<McrZipReport>, McrError> {
    let g = zip(spec).map_err(McrError::Zip)?;
    let (Some(zipped), Some(g1), Some(g2)) = (
        minor_crossing_number(&g, degree_cap, limits, solver)?,
        minor_crossing_number(&spec.g1, degree_cap, limits, solver)?,
        minor_crossing_number(&spec.g2, degree_cap, limits, solver)?,
    ) else {
        return Ok(None);
    };
    let (lo, hi) = (g1.lower + g2.lower, g1.upper + g2.upper);
    let superadditive = if zipped.lower >= hi {
        Check::Pass
    } else if zipped.upper < lo {
        Check::Fail
    } else {
        Check::Unknown
    };
    let additive = (spec.degree() <= 3).then(|| {
        if zipped.is_exact() && g1.is_exact() && g2.is_exact() {
            if zipped.lower == lo {
                Check::Pass
            } else {
                Check::Fail
            }
        } else if zipped.upper < lo || zipped.lower > hi {
            Check::Fail
        } else {
            Check::Unknown
        }
    });
    Ok(Some(McrZipReport {
        zipped,
        g1,
        g2,
        superadditive,
        additive,
    }))
}

/// Lower bound on `mcr(G)` that needs no expansion search: `cr(G)` when
/// `G` has maximum degree three, the disjoint Kuratowski count otherwise.
pub fn mcr_lower_bound(g: &MultiGraph, solver: &mut Solver<'_>) -> u32 {
    if g.max_degree() <= 3 {
        solver.crossing_number(g, None).bounds().0
    } else {
        disjoint_kuratowski_bound(g)
    }
}

/// Lower bound on `mcr(T □ G)`: the sum over vertices `v` of `T` of a lower
/// bound on `mcr(G^(d_T(v)))`.
pub fn tree_product_bound(t: &MultiGraph, g: &MultiGraph, solver: &mut Solver<'_>) -> Result<u32, McrError> {
    if !t.is_connected() || t.edge_count() + 1 != t.vertex_count() {
        return Err(McrError::NotATree);
    }
    Ok(t.vertices()
        .iter()
        .map(|&v| mcr_lower_bound(&g.join_independent(t.degree(v)), solver))
        .sum())
}

/// Cartesian product: vertex `(i, j)` sits at position `i * |B| + j`.
pub fn cartesian_product(a: &MultiGraph, b: &MultiGraph) -> MultiGraph {
    let nb = b.vertex_count();
    let mut pairs = Vec::new();
    for (x, y) in a.index_pairs() {
        for j in 0..nb {
            pairs.push((x * nb + j, y * nb + j));
        }
    }
    for i in 0..a.vertex_count() {
        for (x, y) in b.index_pairs() {
            pairs.push((i * nb + x, i * nb + y));
        }
    }
    MultiGraph::from_edges(a.vertex_count() * nb, &pairs).expect("product pairs are in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn tree_counts() {
        assert_eq!(cubic_trees(3).len(), 1);
        assert_eq!(cubic_trees(4).len(), 3);
        assert_eq!(cubic_trees(5).len(), 15);
        assert_eq!(cubic_trees(6).len(), 105);
        for t in cubic_trees(5) {
            let mut deg = [0usize; 8];
            for (a, b) in t {
                deg[a] += 1;
                deg[b] += 1;
            }
            assert!(deg[..5].iter().all(|&d| d == 1));
            assert!(deg[5..].iter().all(|&d| d == 3));
        }
    }

    #[test]
    fn expansion_examples() {
        let k33 = families::complete_bipartite(3, 3);
        let xs: Vec<_> = expansions_raw(&k33, 6).unwrap().collect();
        assert_eq!(xs.len(), 1);
        assert_eq!(xs[0].host, k33);
        let star = families::star(4);
        let xs: Vec<_> = expansions_raw(&star, 6).unwrap().collect();
        assert_eq!(xs.len(), 3);
        for x in &xs {
            assert!(x.validate(&star));
            assert_eq!((x.host.vertex_count(), x.host.edge_count()), (6, 5));
        }
        let k5 = families::complete(5);
        assert_eq!(expansion_count(&k5), 243);
        let raw: Vec<_> = expansions_raw(&k5, 6).unwrap().collect();
        assert_eq!(raw.len(), 243);
        assert!(raw.iter().all(|x| x.validate(&k5) && x.host.max_degree() == 3));
        assert!(expansions(&k5, 6).unwrap().count() < 243);
        assert_eq!(
            expansions_raw(&families::star(7), 6).err(),
            Some(McrError::DegreeOverCap {
                vertex: VertexId(0),
                degree: 7,
                cap: 6
            })
        );
    }

    #[test]
    fn small_values() {
        let mut s = Solver::default();
        let mcr = |g: &MultiGraph, s: &mut Solver<'_>| {
            let r = minor_crossing_number(g, 6, McrLimits::default(), s).unwrap().unwrap();
            assert!(r.is_exact());
            r.upper
        };
        assert_eq!(mcr(&families::complete(4), &mut s), 0);
        assert_eq!(mcr(&families::complete(5), &mut s), 1);
        assert_eq!(mcr(&families::complete_bipartite(3, 3), &mut s), 1);
        assert_eq!(mcr(&families::petersen(), &mut s), 2);
    }

    #[test]
    fn products() {
        let k2 = families::path(2);
        let c4 = cartesian_product(&k2, &k2);
        assert_eq!(
            crate::canon::canonical_key(&c4),
            crate::canon::canonical_key(&families::cycle(4))
        );
        let p = cartesian_product(&families::cycle(3), &k2);
        assert_eq!(
            crate::canon::canonical_key(&p),
            crate::canon::canonical_key(&families::prism())
        );
        let q = cartesian_product(&families::complete(4), &k2);
        assert_eq!((q.vertex_count(), q.edge_count()), (8, 16));
        assert!(q.degrees().values().all(|&d| d == 4));
    }

    #[test]
    fn product_bounds() {
        let mut s = Solver::default();
        assert_eq!(
            tree_product_bound(&families::path(2), &families::complete(4), &mut s),
            Ok(2)
        );
        assert_eq!(
            tree_product_bound(&families::path(3), &families::cycle(3), &mut s),
            Ok(0)
        );
        assert_eq!(
            tree_product_bound(&families::path(2), &families::cycle(3), &mut s),
            Ok(0)
        );
        assert_eq!(
            tree_product_bound(&families::cycle(3), &families::cycle(3), &mut s),
            Err(McrError::NotATree)
        );
    }
}
