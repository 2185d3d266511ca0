//! Integral maximum flow with path decomposition.
//!
//! Arcs are stored in pairs `(2k, 2k + 1)`. A directed arc has capacity on
//! its forward half only; an undirected edge has the same capacity on both
//! halves, so its net flow is one signed number and opposing units cancel.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Debug)]
pub struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
    flow: Vec<i64>,
}

/// A unit path of a decomposed flow: the nodes visited and the handles of
/// the arcs or edges used, in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowPath {
    pub nodes: Vec<usize>,
    pub handles: Vec<usize>,
}

impl FlowNetwork {
    pub fn new(n: usize) -> Self {
        FlowNetwork {
            head: vec![Vec::new(); n],
            to: Vec::new(),
            cap: Vec::new(),
            flow: Vec::new(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.head.len()
    }

    pub fn add_node(&mut self) -> usize {
        self.head.push(Vec::new());
        self.head.len() - 1
    }

    fn push_pair(&mut self, u: usize, v: usize, cu: i64, cv: i64) -> usize {
        let k = self.to.len() / 2;
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(cu);
        self.flow.push(0);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(cv);
        self.flow.push(0);
        k
    }

    /// Directed arc `u -> v`; returns its handle.
    pub fn add_arc(&mut self, u: usize, v: usize, cap: i64) -> usize {
        self.push_pair(u, v, cap, 0)
    }

    /// Undirected edge usable in either direction up to `cap`.
    pub fn add_edge(&mut self, u: usize, v: usize, cap: i64) -> usize {
        self.push_pair(u, v, cap, cap)
    }

    /// Net flow along a handle, positive in the direction it was added.
    pub fn flow_on(&self, handle: usize) -> i64 {
        self.flow[2 * handle]
    }

    fn residual(&self, a: usize) -> i64 {
        self.cap[a] - self.flow[a]
    }

    /// Augments from `s` to `t` by shortest paths until no augmenting path
    /// remains or `limit` units have been sent. Returns the flow added.
    pub fn max_flow_limited(&mut self, s: usize, t: usize, limit: i64) -> i64 {
        if s == t {
            return 0;
        }
        let n = self.head.len();
        let mut total = 0;
        let mut pred = vec![usize::MAX; n];
        while total < limit {
            pred.iter_mut().for_each(|p| *p = usize::MAX);
            let mut queue = VecDeque::new();
            queue.push_back(s);
            let mut seen = vec![false; n];
            seen[s] = true;
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for &a in &self.head[u] {
                    let v = self.to[a];
                    if !seen[v] && self.residual(a) > 0 {
                        seen[v] = true;
                        pred[v] = a;
                        queue.push_back(v);
                    }
                }
            }
            if !seen[t] {
                break;
            }
            let mut push = limit - total;
            let mut v = t;
            while v != s {
                let a = pred[v];
                push = push.min(self.residual(a));
                v = self.to[a ^ 1];
            }
            let mut v = t;
            while v != s {
                let a = pred[v];
                self.flow[a] += push;
                self.flow[a ^ 1] -= push;
                v = self.to[a ^ 1];
            }
            total += push;
        }
        total
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        self.max_flow_limited(s, t, i64::MAX)
    }

    /// Splits the current `s`-`t` flow into unit paths, discarding flow
    /// cycles. Paths are simple and found in a deterministic order.
    pub fn decompose(&self, s: usize, t: usize) -> Vec<FlowPath> {
        let mut rest = self.flow.clone();
        let mut paths = Vec::new();
        loop {
            let mut nodes = vec![s];
            let mut arcs: Vec<usize> = Vec::new();
            let mut at = vec![usize::MAX; self.head.len()];
            at[s] = 0;
            let mut u = s;
            while u != t {
                let next = self.head[u].iter().copied().find(|&a| rest[a] > 0);
                let Some(a) = next else {
                    return paths;
                };
                let v = self.to[a];
                if at[v] != usize::MAX {
                    // cancel the cycle and resume from v
                    let from = at[v];
                    for &c in &arcs[from..] {
                        rest[c] -= 1;
                        rest[c ^ 1] += 1;
                    }
                    rest[a] -= 1;
                    rest[a ^ 1] += 1;
                    for &w in &nodes[from + 1..] {
                        at[w] = usize::MAX;
                    }
                    nodes.truncate(from + 1);
                    arcs.truncate(from);
                    u = v;
                    continue;
                }
                at[v] = nodes.len();
                nodes.push(v);
                arcs.push(a);
                u = v;
            }
            if arcs.is_empty() {
                return paths;
            }
            for &a in &arcs {
                rest[a] -= 1;
                rest[a ^ 1] += 1;
            }
            paths.push(FlowPath {
                nodes,
                handles: arcs.iter().map(|a| a / 2).collect(),
            });
        }
    }
}
