//! Exact crossing numbers by iterative deepening over crossing insertions.
//!
//! A non-planar graph has `cr(G) = 1 + min cr(G^(e,f))` over pairs of
//! non-adjacent edges, where `G^(e,f)` replaces the crossing of `e` and `f`
//! by a degree-four vertex. The search only branches on pairs drawn from two
//! vertex-disjoint paths of one Kuratowski subdivision: any drawing of the
//! subdivision crosses such a pair. Edge-disjoint subdivisions found along
//! the way give a lower bound and are handed down to children, where they
//! remain valid because crossing insertion never touches their edges.
//!
//! Graphs are split into blocks first; crossing number is additive over
//! blocks and over components.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::canon::{canonical_key_with_cap, CanonicalKey, DEFAULT_CANON_CAP};
use crate::graph::{EdgeId, GraphError, MultiGraph};
use crate::planarity::{extract_witness, is_planar_fast, KuratowskiWitness, SimpleView};

/// Cooperative cancellation hook polled once per search node.
pub trait Interrupt {
    fn should_stop(&self) -> bool;
}

/// An [`Interrupt`] that never fires.
#[derive(Clone, Copy, Debug, Default)]
pub struct Never;

impl Interrupt for Never {
    fn should_stop(&self) -> bool {
        false
    }
}

static NEVER: Never = Never;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Abort after this many search nodes.
    pub node_limit: Option<u64>,
    /// Cache refuted levels by canonical key.
    pub memoize: bool,
    /// Largest vertex count that still gets a canonical key.
    pub canon_cap: usize,
    /// Entries per memo generation before rotation.
    pub memo_capacity: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            node_limit: None,
            memoize: true,
            canon_cap: DEFAULT_CANON_CAP,
            memo_capacity: 1 << 18,
        }
    }
}

/// Lower bounds on crossing numbers keyed by isomorphism class.
///
/// Two generations: when the current one fills up it becomes the previous
/// one and the old previous is dropped. Values only ever grow.
#[derive(Clone, Debug, Default)]
pub struct Memo {
    current: BTreeMap<CanonicalKey, u32>,
    previous: BTreeMap<CanonicalKey, u32>,
    capacity: usize,
}

impl Memo {
    pub fn new(capacity: usize) -> Self {
        Memo {
            capacity: capacity.max(1),
            ..Default::default()
        }
    }

    pub fn lower(&self, key: &CanonicalKey) -> u32 {
        let a = self.current.get(key).copied().unwrap_or(0);
        let b = self.previous.get(key).copied().unwrap_or(0);
        a.max(b)
    }

    pub fn raise(&mut self, key: CanonicalKey, lower: u32) {
        if lower <= self.lower(&key) {
            return;
        }
        if self.current.len() >= self.capacity && !self.current.contains_key(&key) {
            self.previous = core::mem::take(&mut self.current);
        }
        self.current.insert(key, lower);
    }

    pub fn len(&self) -> usize {
        self.current.len() + self.previous.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Address of an edge inside a certificate trace: an edge of the base graph
/// by position, or one of the four edges created by an earlier step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum EdgeRef {
    Original(usize),
    Created { step: usize, part: u8 },
}

/// A planarization trace: replaying the crossing insertions from the base
/// graph ends in a planar graph, so the base graph has a drawing with
/// `trace.len()` crossings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingCertificate {
    pub base_n: usize,
    /// Endpoints of the base edges as vertex positions, in edge order.
    pub base_edges: Vec<(usize, usize)>,
    pub trace: Vec<[EdgeRef; 2]>,
    pub value: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateError {
    BaseMismatch,
    BadReference { step: usize, reference: EdgeRef },
    IllegalStep { step: usize, error: GraphError },
    NotPlanar,
    ValueMismatch { claimed: u32, steps: usize },
}

impl fmt::Display for CertificateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateError::BaseMismatch => write!(f, "certificate was issued for a different graph"),
            CertificateError::BadReference { step, reference } => {
                write!(f, "step {step}: unresolvable edge reference {reference:?}")
            }
            CertificateError::IllegalStep { step, error } => write!(f, "step {step}: {error}"),
            CertificateError::NotPlanar => write!(f, "replayed graph is not planar"),
            CertificateError::ValueMismatch { claimed, steps } => {
                write!(f, "claims {claimed} crossings but has {steps} steps")
            }
        }
    }
}

impl core::error::Error for CertificateError {}

impl CrossingCertificate {
    pub fn base_graph(&self) -> Result<MultiGraph, GraphError> {
        MultiGraph::from_edges(self.base_n, &self.base_edges)
    }

    /// Replays the trace on `g` and returns the planarized graph.
    pub fn replay(&self, g: &MultiGraph) -> Result<MultiGraph, CertificateError> {
        if self.base_n != g.vertex_count() || self.base_edges != g.index_pairs() {
            return Err(CertificateError::BaseMismatch);
        }
        let mut cur = g.clone();
        let mut created: Vec<[EdgeId; 4]> = Vec::with_capacity(self.trace.len());
        for (step, pair) in self.trace.iter().enumerate() {
            let mut ids = [EdgeId(0); 2];
            for (slot, &r) in pair.iter().enumerate() {
                let resolved = match r {
                    EdgeRef::Original(i) => g.edges().get(i).map(|e| e.id),
                    EdgeRef::Created { step: s, part } if s < step && part < 4 => Some(created[s][part as usize]),
                    EdgeRef::Created { .. } => None,
                };
                ids[slot] = resolved.ok_or(CertificateError::BadReference { step, reference: r })?;
            }
            let base = cur.next_edge_id().0;
            cur = cur
                .cross_identify(ids[0], ids[1])
                .map_err(|error| CertificateError::IllegalStep { step, error })?;
            created.push([EdgeId(base), EdgeId(base + 1), EdgeId(base + 2), EdgeId(base + 3)]);
        }
        Ok(cur)
    }
}

/// Checks that `cert` replays legally on `g`, ends planar, and that its
/// value equals its length.
pub fn verify_certificate(g: &MultiGraph, cert: &CrossingCertificate) -> Result<(), CertificateError> {
    let end = cert.replay(g)?;
    if !is_planar_fast(&end) {
        return Err(CertificateError::NotPlanar);
    }
    if cert.value as usize != cert.trace.len() {
        return Err(CertificateError::ValueMismatch {
            claimed: cert.value,
            steps: cert.trace.len(),
        });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes: u64,
    pub planarity_tests: u64,
    pub memo_hits: u64,
}

impl SolveStats {
    fn since(&self, before: &SolveStats) -> SolveStats {
        SolveStats {
            nodes: self.nodes - before.nodes,
            planarity_tests: self.planarity_tests - before.planarity_tests,
            memo_hits: self.memo_hits - before.memo_hits,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub value: u32,
    pub certificate: CrossingCertificate,
    pub stats: SolveStats,
}

/// Result of [`Solver::crossing_number`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Solved(SolveResult),
    /// `cr(G) > budget`; `lower` is the best proven lower bound.
    ExceedsBudget {
        budget: u32,
        lower: u32,
        stats: SolveStats,
    },
    /// Resources ran out; `lower <= cr(G) <= upper`.
    Unknown {
        lower: u32,
        upper: u32,
        stats: SolveStats,
    },
}

impl Outcome {
    pub fn value(&self) -> Option<u32> {
        match self {
            Outcome::Solved(r) => Some(r.value),
            _ => None,
        }
    }

    /// Proven interval; the upper end is `None` only when a budget was
    /// exceeded.
    pub fn bounds(&self) -> (u32, Option<u32>) {
        match self {
            Outcome::Solved(r) => (r.value, Some(r.value)),
            Outcome::ExceedsBudget { lower, .. } => (*lower, None),
            Outcome::Unknown { lower, upper, .. } => (*lower, Some(*upper)),
        }
    }

    pub fn stats(&self) -> SolveStats {
        match self {
            Outcome::Solved(r) => r.stats,
            Outcome::ExceedsBudget { stats, .. } | Outcome::Unknown { stats, .. } => *stats,
        }
    }
}

/// Search was stopped by the node limit or the interrupt hook.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Aborted;

/// A crossing insertion between two edges of the graph it is applied to.
pub type Step = (EdgeId, EdgeId);

enum BlockOutcome {
    Solved(Vec<Step>),
    Exceeds { lower: u32 },
    Unknown { lower: u32 },
}

/// Exact crossing number solver with a memo table shared across calls.
pub struct Solver<'a> {
    config: SolverConfig,
    memo: Memo,
    interrupt: &'a dyn Interrupt,
    stats: SolveStats,
}

impl Solver<'static> {
    pub fn new(config: SolverConfig) -> Self {
        Solver::with_interrupt(config, &NEVER)
    }
}

impl Default for Solver<'static> {
    fn default() -> Self {
        Solver::new(SolverConfig::default())
    }
}

impl<'a> Solver<'a> {
    pub fn with_interrupt(config: SolverConfig, interrupt: &'a dyn Interrupt) -> Self {
        let memo = Memo::new(config.memo_capacity);
        Solver {
            config,
            memo,
            interrupt,
            stats: SolveStats::default(),
        }
    }

    pub fn config(&self) -> &SolverConfig {
        &self.config
    }

    /// Cumulative statistics over the lifetime of this solver.
    pub fn stats(&self) -> SolveStats {
        self.stats
    }

    /// Folds statistics gathered by helper solvers into this one.
    pub fn add_stats(&mut self, other: SolveStats) {
        self.stats.nodes += other.nodes;
        self.stats.planarity_tests += other.planarity_tests;
        self.stats.memo_hits += other.memo_hits;
    }

    pub fn memo(&self) -> &Memo {
        &self.memo
    }

    /// Exact crossing number of `g` with a certificate.
    ///
    /// With a budget, answers the decision question `cr(G) <= budget` and
    /// reports [`Outcome::ExceedsBudget`] when it is false.
    pub fn crossing_number(&mut self, g: &MultiGraph, budget: Option<u32>) -> Outcome {
        self.crossing_number_by(g, budget, |s, block, k| s.decide(block, k))
    }

    /// Like [`Solver::crossing_number`], with the per-block decision
    /// `cr(B) <= k` delegated to `decide`; used to parallelize the search.
    pub fn crossing_number_by<F>(&mut self, g: &MultiGraph, budget: Option<u32>, mut decide: F) -> Outcome
    where
        F: FnMut(&mut Self, &MultiGraph, u32) -> Result<Option<Vec<Step>>, Aborted>,
    {
        let before = self.stats;
        let blocks = nontrivial_blocks(g);
        let lbs: Vec<u32> = blocks.iter().map(|b| self.quick_lower_bound(b)).collect();
        let total_lb: u32 = lbs.iter().sum();
        if let Some(bu) = budget {
            if total_lb > bu {
                return Outcome::ExceedsBudget {
                    budget: bu,
                    lower: total_lb,
                    stats: self.stats.since(&before),
                };
            }
        }
        let mut traces: Vec<(MultiGraph, Vec<Step>)> = Vec::new();
        let mut solved = 0u32;
        let mut lower_sum = 0u32;
        let mut upper_sum = 0u32;
        let mut unknown = false;
        for (i, block) in blocks.iter().enumerate() {
            let rest_lb: u32 = lbs[i + 1..].iter().sum();
            let outcome = match budget.map(|bu| bu.checked_sub(solved + lower_sum + rest_lb)) {
                Some(None) => BlockOutcome::Exceeds { lower: lbs[i] },
                Some(Some(bb)) => self.solve_block(block, lbs[i], Some(bb), &mut decide),
                None => self.solve_block(block, lbs[i], None, &mut decide),
            };
            match outcome {
                BlockOutcome::Solved(trace) => {
                    solved += trace.len() as u32;
                    traces.push((block.clone(), trace));
                }
                BlockOutcome::Exceeds { lower } => {
                    return Outcome::ExceedsBudget {
                        budget: budget.unwrap_or(0),
                        lower: solved + lower_sum + lower + rest_lb,
                        stats: self.stats.since(&before),
                    };
                }
                BlockOutcome::Unknown { lower } => {
                    unknown = true;
                    lower_sum += lower;
                    upper_sum += convex_upper_bound(block);
                }
            }
        }
        if unknown {
            return Outcome::Unknown {
                lower: solved + lower_sum,
                upper: solved + upper_sum,
                stats: self.stats.since(&before),
            };
        }
        let certificate = certificate_from_block_traces(g, &traces);
        if let Some(key) = self.key(g) {
            self.memo.raise(key, certificate.value);
        }
        Outcome::Solved(SolveResult {
            value: certificate.value,
            certificate,
            stats: self.stats.since(&before),
        })
    }

    /// Euler bound combined with whatever the memo already knows.
    pub fn quick_lower_bound(&mut self, g: &MultiGraph) -> u32 {
        let mut lb = euler_lower_bound(g);
        if let Some(key) = self.key(g) {
            lb = lb.max(self.memo.lower(&key));
        }
        lb
    }

    fn solve_block<F>(&mut self, block: &MultiGraph, lb: u32, budget: Option<u32>, decide: &mut F) -> BlockOutcome
    where
        F: FnMut(&mut Self, &MultiGraph, u32) -> Result<Option<Vec<Step>>, Aborted>,
    {
        let mut k = lb;
        loop {
            if let Some(bu) = budget {
                if k > bu {
                    return BlockOutcome::Exceeds { lower: k };
                }
            }
            match decide(self, block, k) {
                Ok(Some(trace)) => return BlockOutcome::Solved(trace),
                Ok(None) => k += 1,
                Err(Aborted) => return BlockOutcome::Unknown { lower: k },
            }
        }
    }

    /// Decides `cr(G) <= k`; on success returns a trace of at most `k`
    /// crossing insertions ending in a planar graph.
    pub fn decide(&mut self, g: &MultiGraph, k: u32) -> Result<Option<Vec<Step>>, Aborted> {
        self.search(g, k, Vec::new())
    }

    /// The pairs the search would branch on at `g`, or `None` if `g` is
    /// planar. Every optimal drawing crosses at least one of them.
    pub fn branch_pairs(&mut self, g: &MultiGraph) -> Option<Vec<Step>> {
        let (ws, _) = self.collect_witnesses(g, Vec::new(), 0);
        let w = ws.iter().min_by_key(|w| w.independent_pair_count())?;
        Some(w.independent_pairs())
    }

    fn key(&self, g: &MultiGraph) -> Option<CanonicalKey> {
        if !self.config.memoize {
            return None;
        }
        canonical_key_with_cap(g, self.config.canon_cap).ok()
    }

    fn tick(&mut self) -> Result<(), Aborted> {
        self.stats.nodes += 1;
        if let Some(limit) = self.config.node_limit {
            if self.stats.nodes > limit {
                return Err(Aborted);
            }
        }
        if self.interrupt.should_stop() {
            return Err(Aborted);
        }
        Ok(())
    }

    /// Extends `ws` by greedily extracting edge-disjoint Kuratowski
    /// subdivisions until more than `k` are known or the rest is planar.
    /// Returns the list and whether the remainder was found planar.
    fn collect_witnesses(
        &mut self,
        g: &MultiGraph,
        mut ws: Vec<KuratowskiWitness>,
        k: u32,
    ) -> (Vec<KuratowskiWitness>, bool) {
        loop {
            if ws.len() as u32 > k && !ws.is_empty() {
                return (ws, false);
            }
            let used: Vec<EdgeId> = {
                let mut v: Vec<EdgeId> = ws.iter().flat_map(|w| w.edges()).collect();
                v.sort_unstable();
                v
            };
            let rest = if used.is_empty() {
                g.clone()
            } else {
                let keep: Vec<EdgeId> = g
                    .edges()
                    .iter()
                    .map(|e| e.id)
                    .filter(|id| used.binary_search(id).is_err())
                    .collect();
                g.edge_subgraph(&keep)
            };
            let view = SimpleView::new(&rest);
            let keep = vec![true; view.edges.len()];
            if view.planar_with(&keep) {
                self.stats.planarity_tests += view.tests.get();
                return (ws, true);
            }
            let w = extract_witness(&rest, &view, keep).expect("non-planar graph has a Kuratowski subdivision");
            self.stats.planarity_tests += view.tests.get();
            ws.push(w);
        }
    }

    fn search(
        &mut self,
        g: &MultiGraph,
        k: u32,
        inherited: Vec<KuratowskiWitness>,
    ) -> Result<Option<Vec<Step>>, Aborted> {
        self.tick()?;
        if k == 0 {
            self.stats.planarity_tests += 1;
            return Ok(if is_planar_fast(g) { Some(Vec::new()) } else { None });
        }
        let euler = euler_lower_bound(g);
        if euler > k {
            return Ok(None);
        }
        let key = self.key(g);
        if let Some(key) = &key {
            if self.memo.lower(key) > k {
                self.stats.memo_hits += 1;
                return Ok(None);
            }
        }
        let (ws, _) = self.collect_witnesses(g, inherited, k);
        if ws.is_empty() {
            return Ok(Some(Vec::new()));
        }
        if ws.len() as u32 > k {
            if let Some(key) = key {
                self.memo.raise(key, ws.len() as u32);
            }
            return Ok(None);
        }
        let pick = (0..ws.len()).min_by_key(|&i| ws[i].independent_pair_count()).unwrap();
        let others: Vec<KuratowskiWitness> = ws
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != pick)
            .map(|(_, w)| w.clone())
            .collect();
        for (e, f) in ws[pick].independent_pairs() {
            let child = g
                .cross_identify(e, f)
                .expect("independent witness edges are non-adjacent");
            if let Some(mut trace) = self.search(&child, k - 1, others.clone())? {
                trace.insert(0, (e, f));
                return Ok(Some(trace));
            }
        }
        if let Some(key) = key {
            self.memo.raise(key, k + 1);
        }
        Ok(None)
    }
}

/// Blocks of `g` that can be non-planar (at least five vertices), each as a
/// subgraph carrying the original ids.
pub fn nontrivial_blocks(g: &MultiGraph) -> Vec<MultiGraph> {
    g.blocks()
        .into_iter()
        .map(|edges| g.edge_subgraph(&edges).without_isolated())
        .filter(|b| b.vertex_count() >= 5)
        .collect()
}

/// Assembles one certificate for `g` from traces computed on subgraphs of
/// `g` that share its edge ids (blocks or components).
pub fn certificate_from_block_traces(g: &MultiGraph, traces: &[(MultiGraph, Vec<Step>)]) -> CrossingCertificate {
    let mut trace = Vec::new();
    for (part, steps) in traces {
        let mut refs: BTreeMap<EdgeId, EdgeRef> = part
            .edges()
            .iter()
            .map(|e| {
                (
                    e.id,
                    EdgeRef::Original(g.edge_index(e.id).expect("part edges belong to g")),
                )
            })
            .collect();
        let mut cur = part.clone();
        for &(e, f) in steps {
            let step = trace.len();
            trace.push([refs[&e], refs[&f]]);
            let base = cur.next_edge_id().0;
            cur = cur.cross_identify(e, f).expect("trace steps are legal");
            for p in 0..4u8 {
                refs.insert(EdgeId(base + p as u32), EdgeRef::Created { step, part: p });
            }
        }
    }
    CrossingCertificate {
        base_n: g.vertex_count(),
        base_edges: g.index_pairs(),
        value: trace.len() as u32,
        trace,
    }
}

/// Length of a shortest cycle in the simple graph on positions `0..n`.
fn girth(n: usize, adj: &[Vec<usize>]) -> Option<usize> {
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        queue.clear();
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.push(s);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    if best.is_none_or(|b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

/// Counting lower bound on the crossing number.
///
/// Per component of the simplification with `n >= 3` vertices, `m` edges
/// and girth `g`, a planar subgraph has at most `g (n - 2) / (g - 2)` edges,
/// so at least `m - g (n - 2) / (g - 2)` edges carry a crossing. For girth 3
/// and 4 this is `m - 3n + 6` and `m - 2n + 4`.
pub fn euler_lower_bound(g: &MultiGraph) -> u32 {
    let simple = g.simplify();
    let mut total = 0u32;
    for comp in simple.components() {
        let h = simple.induced(&comp);
        let n = h.vertex_count();
        let m = h.edge_count();
        if n < 3 {
            continue;
        }
        let mut adj = vec![Vec::new(); n];
        for (a, b) in h.index_pairs() {
            adj[a].push(b);
            adj[b].push(a);
        }
        let Some(gi) = girth(n, &adj) else {
            continue;
        };
        let max_planar = gi * (n - 2) / (gi - 2);
        if m > max_planar {
            total += (m - max_planar) as u32;
        }
    }
    total
}

/// Crossings of the drawing that puts the vertices on a circle in id order
/// and every edge on a chord. A valid upper bound on `cr(G)`.
pub fn convex_upper_bound(g: &MultiGraph) -> u32 {
    let pairs: Vec<(usize, usize)> = g.index_pairs().into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    let mut count = 0u32;
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for &(c, d) in &pairs[i + 1..] {
            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                count += 1;
            }
        }
    }
    count
}
