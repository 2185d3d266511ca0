//! Left-right planarity test with rotation-system output, plus Kuratowski
//! subdivision extraction for non-planar inputs.
//!
//! The core routine [`lr_planar`] works on simple graphs over dense vertex
//! positions. [`is_planar`] lifts it to multigraphs: parallel edges never
//! change the verdict, and on success they are threaded into the rotation
//! next to each other.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{EdgeId, MultiGraph, VertexId};

const NONE: usize = usize::MAX;

/// Clockwise rotation of neighbor positions around every vertex.
pub type Rotation = Vec<Vec<usize>>;

#[derive(Clone, Copy, Debug, Default)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        core::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LrState<'a> {
    adj: &'a [Vec<(usize, usize)>],
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    // per undirected edge, once oriented
    oriented: Vec<bool>,
    src: Vec<usize>,
    dst: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<i64>,
    refs: Vec<Option<usize>>,
    side: Vec<i8>,
    lowpt_edge: Vec<usize>,
    stack_bottom: Vec<usize>,
    out: Vec<Vec<usize>>,
    stack: Vec<ConflictPair>,
    left_ref: Vec<usize>,
    right_ref: Vec<usize>,
    rotation: Rotation,
}

impl<'a> LrState<'a> {
    fn new(adj: &'a [Vec<(usize, usize)>], m: usize) -> Self {
        let n = adj.len();
        LrState {
            adj,
            height: vec![NONE; n],
            parent_edge: vec![NONE; n],
            oriented: vec![false; m],
            src: vec![NONE; m],
            dst: vec![NONE; m],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting: vec![0; m],
            refs: vec![None; m],
            side: vec![1; m],
            lowpt_edge: vec![NONE; m],
            stack_bottom: vec![0; m],
            out: vec![Vec::new(); n],
            stack: Vec::new(),
            left_ref: vec![NONE; n],
            right_ref: vec![NONE; n],
            rotation: vec![Vec::new(); n],
        }
    }

    fn orient(&mut self, v: usize) {
        let pe = self.parent_edge[v];
        for i in 0..self.adj[v].len() {
            let (w, e) = self.adj[v][i];
            if self.oriented[e] {
                continue;
            }
            self.oriented[e] = true;
            self.src[e] = v;
            self.dst[e] = w;
            self.out[v].push(e);
            self.lowpt[e] = self.height[v];
            self.lowpt2[e] = self.height[v];
            if self.height[w] == NONE {
                self.parent_edge[w] = e;
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                self.lowpt[e] = self.height[w];
            }
            self.nesting[e] = 2 * self.lowpt[e] as i64;
            if self.lowpt2[e] < self.height[v] {
                // chordal
                self.nesting[e] += 1;
            }
            if pe != NONE {
                if self.lowpt[e] < self.lowpt[pe] {
                    self.lowpt2[pe] = self.lowpt[pe].min(self.lowpt2[e]);
                    self.lowpt[pe] = self.lowpt[e];
                } else if self.lowpt[e] > self.lowpt[pe] {
                    self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt[e]);
                } else {
                    self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt2[e]);
                }
            }
        }
    }

    fn conflicting(&self, iv: &Interval, b: usize) -> bool {
        match iv.high {
            Some(h) => self.lowpt[h] > self.lowpt[b],
            None => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low.unwrap()];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low.unwrap()];
        }
        self.lowpt[p.left.low.unwrap()].min(self.lowpt[p.right.low.unwrap()])
    }

    fn test(&mut self, v: usize) -> bool {
        let pe = self.parent_edge[v];
        for idx in 0..self.out[v].len() {
            let ei = self.out[v][idx];
            let w = self.dst[ei];
            self.stack_bottom[ei] = self.stack.len();
            if self.parent_edge[w] == ei {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = ei;
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval {
                        low: Some(ei),
                        high: Some(ei),
                    },
                });
            }
            if self.lowpt[ei] < self.height[v] {
                if idx == 0 {
                    if pe != NONE {
                        self.lowpt_edge[pe] = self.lowpt_edge[ei];
                    }
                } else if !self.add_constraints(ei, pe) {
                    return false;
                }
            }
        }
        if pe != NONE {
            self.remove_back_edges(pe);
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        loop {
            let mut q = self.stack.pop().unwrap();
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let qlow = q.right.low.unwrap();
            if self.lowpt[qlow] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else if let Some(pl) = p.right.low {
                    self.refs[pl] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.refs[qlow] = Some(self.lowpt_edge[e]);
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(pl) = p.right.low {
                self.refs[pl] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(pl) = p.left.low {
                self.refs[pl] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            let p = self.stack.pop().unwrap();
            if let Some(l) = p.left.low {
                self.side[l] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.dst[h] != u {
                    break;
                }
                p.left.high = self.refs[h];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.refs[l] = p.right.low;
                    self.side[l] = -1;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.dst[h] != u {
                    break;
                }
                p.right.high = self.refs[h];
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low {
                    self.refs[r] = p.left.low;
                    self.side[r] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            let top = self.stack.last().unwrap();
            let (hl, hr) = (top.left.high, top.right.high);
            let pick_left = match (hl, hr) {
                (Some(_), None) => true,
                (Some(l), Some(r)) => self.lowpt[l] > self.lowpt[r],
                _ => false,
            };
            self.refs[e] = if pick_left { hl } else { hr };
        }
    }

    fn sign(&mut self, e: usize) -> i8 {
        // iterative resolution of the reference chain
        let mut chain = Vec::new();
        let mut cur = e;
        while let Some(r) = self.refs[cur] {
            chain.push(cur);
            cur = r;
        }
        let mut s = self.side[cur];
        while let Some(x) = chain.pop() {
            self.side[x] *= s;
            self.refs[x] = None;
            s = self.side[x];
        }
        self.side[e]
    }

    fn embed(&mut self, v: usize) {
        for idx in 0..self.out[v].len() {
            let ei = self.out[v][idx];
            let w = self.dst[ei];
            if self.parent_edge[w] == ei {
                self.rotation[w].insert(0, v);
                self.left_ref[v] = w;
                self.right_ref[v] = w;
                self.embed(w);
            } else if self.side[ei] == 1 {
                let r = self.right_ref[w];
                let pos = self.rotation[w].iter().position(|&x| x == r).unwrap();
                self.rotation[w].insert(pos + 1, v);
            } else {
                let r = self.left_ref[w];
                let pos = self.rotation[w].iter().position(|&x| x == r).unwrap();
                self.rotation[w].insert(pos, v);
                self.left_ref[w] = v;
            }
        }
    }
}

/// Left-right planarity test on a simple graph given by adjacency lists of
/// `(neighbor, edge index)` with `m` edges. Returns a clockwise rotation
/// system of a planar embedding, or `None` when the graph is not planar.
pub fn lr_planar(adj: &[Vec<(usize, usize)>], m: usize) -> Option<Rotation> {
    let n = adj.len();
    if n > 2 && m > 3 * n - 6 {
        return None;
    }
    let mut st = LrState::new(adj, m);
    let mut roots = Vec::new();
    for v in 0..n {
        if st.height[v] == NONE {
            st.height[v] = 0;
            roots.push(v);
            st.orient(v);
        }
    }
    for v in 0..n {
        let nesting = &st.nesting;
        st.out[v].sort_by_key(|&e| nesting[e]);
    }
    for &r in &roots {
        if !st.test(r) {
            return None;
        }
    }
    for e in 0..m {
        let s = st.sign(e) as i64;
        st.nesting[e] *= s;
    }
    for v in 0..n {
        let nesting = &st.nesting;
        st.out[v].sort_by_key(|&e| nesting[e]);
        let dst = &st.dst;
        st.rotation[v] = st.out[v].iter().map(|&e| dst[e]).collect();
    }
    for &r in &roots {
        st.embed(r);
    }
    Some(st.rotation)
}

/// Counts faces of a rotation system over a simple graph.
pub fn count_faces(rotation: &Rotation) -> usize {
    let n = rotation.len();
    // dart (v, position in rotation[v])
    let mut seen: Vec<Vec<bool>> = rotation.iter().map(|r| vec![false; r.len()]).collect();
    let mut faces = 0;
    for v in 0..n {
        for i in 0..rotation[v].len() {
            if seen[v][i] {
                continue;
            }
            faces += 1;
            let (mut a, mut ai) = (v, i);
            while !seen[a][ai] {
                seen[a][ai] = true;
                let b = rotation[a][ai];
                let rb = &rotation[b];
                let pos = rb.iter().position(|&x| x == a).unwrap();
                let next = (pos + rb.len() - 1) % rb.len();
                a = b;
                ai = next;
            }
        }
    }
    faces
}

/// A combinatorial plane embedding of a multigraph: the clockwise cyclic
/// order of incident edge ids around every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub rotations: BTreeMap<VertexId, Vec<EdgeId>>,
}

impl Embedding {
    /// Number of faces traced by the rotation system. Isolated vertices
    /// count as one face each.
    pub fn face_count(&self, g: &MultiGraph) -> usize {
        let mut seen: BTreeMap<(EdgeId, VertexId), bool> = BTreeMap::new();
        for e in g.edges() {
            seen.insert((e.id, e.u), false);
            seen.insert((e.id, e.v), false);
        }
        let mut faces = 0;
        let darts: Vec<(EdgeId, VertexId)> = seen.keys().copied().collect();
        for start in darts {
            if seen[&start] {
                continue;
            }
            faces += 1;
            let mut cur = start;
            while !seen[&cur] {
                seen.insert(cur, true);
                let (e, from) = cur;
                let to = g.edge(e).unwrap().other(from);
                let rot = &self.rotations[&to];
                let pos = rot.iter().position(|&x| x == e).unwrap();
                let next = rot[(pos + rot.len() - 1) % rot.len()];
                cur = (next, to);
            }
        }
        faces + g.degrees().values().filter(|&&d| d == 0).count()
    }

    /// Checks that the rotation system lists every incident edge exactly
    /// once and satisfies Euler's formula for the sphere on every component.
    pub fn is_plane_embedding_of(&self, g: &MultiGraph) -> bool {
        for &v in g.vertices() {
            let Some(rot) = self.rotations.get(&v) else {
                return false;
            };
            let mut a: Vec<EdgeId> = rot.clone();
            let mut b: Vec<EdgeId> = g.incident_edges(v).map(|e| e.id).collect();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return false;
            }
        }
        let c = g.components().len() as i64;
        let (n, m) = (g.vertex_count() as i64, g.edge_count() as i64);
        n - m + self.face_count(g) as i64 == 2 * c
    }
}

/// Which Kuratowski graph a witness subdivides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A path of the subdivision between two branch vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessPath {
    pub ends: (VertexId, VertexId),
    pub edges: Vec<EdgeId>,
}

/// A subdivision of K5 or K3,3 contained in a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<VertexId>,
    pub paths: Vec<WitnessPath>,
}

impl KuratowskiWitness {
    pub fn edges(&self) -> Vec<EdgeId> {
        let mut all: Vec<EdgeId> = self.paths.iter().flat_map(|p| p.edges.iter().copied()).collect();
        all.sort_unstable();
        all
    }

    pub fn edge_count(&self) -> usize {
        self.paths.iter().map(|p| p.edges.len()).sum()
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.paths.iter().any(|p| p.edges.contains(&e))
    }

    /// Edge pairs `(e, f)` with `e` and `f` on two vertex-disjoint paths.
    ///
    /// In any drawing of the host graph the subdivision must have two such
    /// edges crossing each other (strong Hanani-Tutte applied to the paths).
    pub fn independent_pairs(&self) -> Vec<(EdgeId, EdgeId)> {
        let mut pairs = Vec::new();
        for (i, a) in self.paths.iter().enumerate() {
            for b in &self.paths[i + 1..] {
                let (a0, a1) = a.ends;
                if b.ends.0 == a0 || b.ends.0 == a1 || b.ends.1 == a0 || b.ends.1 == a1 {
                    continue;
                }
                for &e in &a.edges {
                    for &f in &b.edges {
                        pairs.push((e, f));
                    }
                }
            }
        }
        pairs
    }

    pub fn independent_pair_count(&self) -> usize {
        let mut count = 0;
        for (i, a) in self.paths.iter().enumerate() {
            for b in &self.paths[i + 1..] {
                let (a0, a1) = a.ends;
                if b.ends.0 == a0 || b.ends.0 == a1 || b.ends.1 == a0 || b.ends.1 == a1 {
                    continue;
                }
                count += a.edges.len() * b.edges.len();
            }
        }
        count
    }

    /// Structural check that this really is a K5 or K3,3 subdivision of `g`.
    pub fn validate(&self, g: &MultiGraph) -> bool {
        let b = &self.branch_vertices;
        let (nb, np) = match self.kind {
            KuratowskiKind::K5 => (5, 10),
            KuratowskiKind::K33 => (6, 9),
        };
        if b.len() != nb || self.paths.len() != np {
            return false;
        }
        let mut seen_pairs = Vec::new();
        let mut used_vertices: BTreeMap<VertexId, usize> = BTreeMap::new();
        let mut used_edges = Vec::new();
        for p in &self.paths {
            let (s, t) = p.ends;
            if !b.contains(&s) || !b.contains(&t) || s == t || p.edges.is_empty() {
                return false;
            }
            let key = if s < t { (s, t) } else { (t, s) };
            if seen_pairs.contains(&key) {
                return false;
            }
            seen_pairs.push(key);
            let mut cur = s;
            for (k, &e) in p.edges.iter().enumerate() {
                let Some(edge) = g.edge(e) else {
                    return false;
                };
                if !edge.touches(cur) || used_edges.contains(&e) {
                    return false;
                }
                used_edges.push(e);
                cur = edge.other(cur);
                if k + 1 < p.edges.len() {
                    if b.contains(&cur) {
                        return false;
                    }
                    *used_vertices.entry(cur).or_insert(0) += 1;
                }
            }
            if cur != t {
                return false;
            }
        }
        if used_vertices.values().any(|&c| c > 1) {
            return false;
        }
        if self.kind == KuratowskiKind::K33 {
            // the six branch vertices must split into two triples with all
            // nine paths running across
            let first = b[0];
            let side_a: Vec<VertexId> = b
                .iter()
                .copied()
                .filter(|&x| {
                    x == first
                        || !seen_pairs
                            .iter()
                            .any(|&(p, q)| (p == first && q == x) || (q == first && p == x))
                })
                .collect();
            if side_a.len() != 3 {
                return false;
            }
            for &(p, q) in &seen_pairs {
                if side_a.contains(&p) == side_a.contains(&q) {
                    return false;
                }
            }
        }
        true
    }
}

/// Outcome of a planarity test.
#[derive(Clone, Debug)]
pub enum Planarity {
    Planar(Embedding),
    NonPlanar(KuratowskiWitness),
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }
}

/// Simple-graph view of a multigraph restricted to a subset of its edges:
/// one representative edge per parallel class.
pub(crate) struct SimpleView {
    pub n: usize,
    /// (a, b, representative edge id), a < b, deduplicated
    pub edges: Vec<(usize, usize, EdgeId)>,
    /// Planarity tests run through this view.
    pub tests: core::cell::Cell<u64>,
}

impl SimpleView {
    pub(crate) fn new(g: &MultiGraph) -> Self {
        let mut seen = alloc::collections::BTreeSet::new();
        let mut edges = Vec::new();
        for (e, (a, b)) in g.edges().iter().zip(g.index_pairs()) {
            let key = (a.min(b), a.max(b));
            if seen.insert(key) {
                edges.push((key.0, key.1, e.id));
            }
        }
        SimpleView {
            n: g.vertex_count(),
            edges,
            tests: core::cell::Cell::new(0),
        }
    }

    fn adjacency(&self, keep: &[bool]) -> (Vec<Vec<(usize, usize)>>, usize) {
        let mut adj = vec![Vec::new(); self.n];
        let mut m = 0;
        for (i, &(a, b, _)) in self.edges.iter().enumerate() {
            if keep[i] {
                adj[a].push((b, m));
                adj[b].push((a, m));
                m += 1;
            }
        }
        (adj, m)
    }

    pub(crate) fn planar_with(&self, keep: &[bool]) -> bool {
        self.tests.set(self.tests.get() + 1);
        let (adj, m) = self.adjacency(keep);
        lr_planar(&adj, m).is_some()
    }
}

/// Planarity verdict for the simple graph underlying `g`; cheap path used
/// by the solver when no witness or embedding is needed.
pub fn is_planar_fast(g: &MultiGraph) -> bool {
    let view = SimpleView::new(g);
    view.planar_with(&vec![true; view.edges.len()])
}

/// Full planarity test with an embedding on success and a Kuratowski
/// subdivision on failure.
pub fn is_planar(g: &MultiGraph) -> Planarity {
    let view = SimpleView::new(g);
    let keep = vec![true; view.edges.len()];
    let (adj, m) = view.adjacency(&keep);
    match lr_planar(&adj, m) {
        Some(rot) => Planarity::Planar(lift_rotation(g, &view, &rot)),
        None => {
            Planarity::NonPlanar(extract_witness(g, &view, keep).expect("non-planar graph has a Kuratowski subgraph"))
        }
    }
}

/// Finds a Kuratowski subdivision in `g`, or `None` if `g` is planar.
pub fn kuratowski_witness(g: &MultiGraph) -> Option<KuratowskiWitness> {
    let view = SimpleView::new(g);
    let keep = vec![true; view.edges.len()];
    if view.planar_with(&keep) {
        return None;
    }
    extract_witness(g, &view, keep)
}

/// Shrinks a non-planar edge set to an edge-minimal non-planar one, which
/// is a Kuratowski subdivision, and classifies it.
pub(crate) fn extract_witness(g: &MultiGraph, view: &SimpleView, mut keep: Vec<bool>) -> Option<KuratowskiWitness> {
    let m = keep.len();
    // peel vertices of degree <= 1 first; they never matter
    let mut deg = vec![0usize; view.n];
    for (i, &(a, b, _)) in view.edges.iter().enumerate() {
        if keep[i] {
            deg[a] += 1;
            deg[b] += 1;
        }
    }
    loop {
        let mut changed = false;
        for (i, &(a, b, _)) in view.edges.iter().enumerate() {
            if keep[i] && (deg[a] <= 1 || deg[b] <= 1) {
                keep[i] = false;
                deg[a] -= 1;
                deg[b] -= 1;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    // chunked deletion, then single-edge deletion
    let mut chunk = m / 4;
    while chunk >= 2 {
        let alive: Vec<usize> = (0..m).filter(|&i| keep[i]).collect();
        for block in alive.chunks(chunk) {
            for &i in block {
                keep[i] = false;
            }
            if view.planar_with(&keep) {
                for &i in block {
                    keep[i] = true;
                }
            }
        }
        chunk /= 2;
    }
    for i in 0..m {
        if !keep[i] {
            continue;
        }
        keep[i] = false;
        if view.planar_with(&keep) {
            keep[i] = true;
        }
    }
    classify(g, view, &keep)
}

fn classify(g: &MultiGraph, view: &SimpleView, keep: &[bool]) -> Option<KuratowskiWitness> {
    let mut adj: Vec<Vec<(usize, EdgeId)>> = vec![Vec::new(); view.n];
    for (i, &(a, b, id)) in view.edges.iter().enumerate() {
        if keep[i] {
            adj[a].push((b, id));
            adj[b].push((a, id));
        }
    }
    let branch: Vec<usize> = (0..view.n).filter(|&v| adj[v].len() >= 3).collect();
    let kind = match (branch.len(), branch.iter().all(|&v| adj[v].len() == 4)) {
        (5, true) => KuratowskiKind::K5,
        (6, _) if branch.iter().all(|&v| adj[v].len() == 3) => KuratowskiKind::K33,
        _ => return None,
    };
    let vid = |i: usize| g.vertices()[i];
    let mut paths = Vec::new();
    for &s in &branch {
        for &(first, e0) in &adj[s] {
            let mut edges = vec![e0];
            let mut cur = first;
            while adj[cur].len() == 2 {
                let last = *edges.last().unwrap();
                let &(next, e) = adj[cur].iter().find(|&&(_, e)| e != last).unwrap();
                edges.push(e);
                cur = next;
            }
            if s < cur {
                paths.push(WitnessPath {
                    ends: (vid(s), vid(cur)),
                    edges,
                });
            }
        }
    }
    Some(KuratowskiWitness {
        kind,
        branch_vertices: branch.into_iter().map(vid).collect(),
        paths,
    })
}

fn lift_rotation(g: &MultiGraph, view: &SimpleView, rot: &Rotation) -> Embedding {
    // parallel classes keyed by (a, b) positions, ids ascending
    let mut classes: BTreeMap<(usize, usize), Vec<EdgeId>> = BTreeMap::new();
    for (e, (a, b)) in g.edges().iter().zip(g.index_pairs()) {
        classes.entry((a.min(b), a.max(b))).or_default().push(e.id);
    }
    let _ = view;
    let mut rotations = BTreeMap::new();
    for (v, order) in rot.iter().enumerate() {
        let mut ids = Vec::new();
        for &w in order {
            let class = &classes[&(v.min(w), v.max(w))];
            if v < w {
                ids.extend(class.iter().copied());
            } else {
                ids.extend(class.iter().rev().copied());
            }
        }
        rotations.insert(g.vertices()[v], ids);
    }
    for &v in g.vertices() {
        rotations.entry(v).or_insert_with(Vec::new);
    }
    Embedding { rotations }
}
