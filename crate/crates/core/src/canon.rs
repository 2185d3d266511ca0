//! Exact canonical forms of small multigraphs.
//!
//! Colour refinement followed by individualization over the first
//! non-singleton cell; the canonical form is the lexicographically smallest
//! multiplicity matrix over all leaves of that search tree. The leaf set
//! depends only on the isomorphism class, so the minimum is a complete
//! invariant. Cost grows with the automorphism group, hence the vertex cap.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::MultiGraph;

/// Vertex cap used when callers do not pick one.
pub const DEFAULT_CANON_CAP: usize = 16;

/// Canonical byte string of a multigraph: equal iff the graphs are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Lowercase hex rendering, used in reports.
    pub fn to_hex(&self) -> alloc::string::String {
        use core::fmt::Write;
        let mut s = alloc::string::String::with_capacity(self.0.len() * 2);
        for b in &self.0 {
            let _ = write!(s, "{b:02x}");
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KeyError {
    /// Too many vertices for exact canonicalization; run without memoization.
    TooManyVertices { n: usize, cap: usize },
}

impl fmt::Display for KeyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KeyError::TooManyVertices { n, cap } => write!(
                f,
                "graph has {n} vertices, canonical keys are capped at {cap}; disable memoization for graphs this large"
            ),
        }
    }
}

impl core::error::Error for KeyError {}

pub fn canonical_key(g: &MultiGraph) -> Result<CanonicalKey, KeyError> {
    canonical_key_with_cap(g, DEFAULT_CANON_CAP)
}

pub fn canonical_key_with_cap(g: &MultiGraph, cap: usize) -> Result<CanonicalKey, KeyError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(KeyError::TooManyVertices { n, cap });
    }
    let mut mat = vec![0u16; n * n];
    for (a, b) in g.index_pairs() {
        mat[a * n + b] += 1;
        mat[b * n + a] += 1;
    }
    let mut canon = Canon { n, mat, best: None };
    let mut colors = vec![0u32; n];
    canon.refine(&mut colors);
    canon.search(colors);
    let body = canon.best.unwrap_or_default();
    let mut bytes = Vec::with_capacity(2 + 2 * body.len());
    bytes.extend_from_slice(&(n as u16).to_le_bytes());
    for x in body {
        bytes.extend_from_slice(&x.to_le_bytes());
    }
    Ok(CanonicalKey(bytes))
}

struct Canon {
    n: usize,
    mat: Vec<u16>,
    best: Option<Vec<u16>>,
}

impl Canon {
    fn color_count(colors: &[u32]) -> usize {
        colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0)
    }

    /// Refines `colors` to the coarsest equitable partition below it.
    /// Colors stay a dense range `0..k` and old cells keep their order.
    fn refine(&self, colors: &mut [u32]) {
        let n = self.n;
        let mut k = Self::color_count(colors);
        loop {
            let mut sigs: Vec<(Vec<u32>, usize)> = (0..n)
                .map(|v| {
                    let mut sig = vec![0u32; k + 1];
                    sig[0] = colors[v];
                    for w in 0..n {
                        let m = self.mat[v * n + w];
                        if m > 0 {
                            sig[1 + colors[w] as usize] += m as u32;
                        }
                    }
                    (sig, v)
                })
                .collect();
            sigs.sort();
            let mut next = 0u32;
            for i in 0..n {
                if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                    next += 1;
                }
                colors[sigs[i].1] = next;
            }
            let k2 = if n == 0 { 0 } else { next as usize + 1 };
            if k2 == k {
                return;
            }
            k = k2;
        }
    }

    fn search(&mut self, colors: Vec<u32>) {
        let n = self.n;
        let k = Self::color_count(&colors);
        if k == n {
            self.leaf(&colors);
            return;
        }
        let mut size = vec![0usize; k];
        for &c in &colors {
            size[c as usize] += 1;
        }
        let target = (0..k).find(|&c| size[c] > 1).unwrap() as u32;
        for v in 0..n {
            if colors[v] != target {
                continue;
            }
            let mut next: Vec<u32> = colors.iter().map(|&c| if c > target { c + 1 } else { c }).collect();
            for (w, c) in next.iter_mut().enumerate() {
                if colors[w] == target && w != v {
                    *c = target + 1;
                }
            }
            self.refine(&mut next);
            self.search(next);
        }
    }

    fn leaf(&mut self, colors: &[u32]) {
        let n = self.n;
        let mut inv = vec![0usize; n];
        for (v, &c) in colors.iter().enumerate() {
            inv[c as usize] = v;
        }
        let mut code = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                code.push(self.mat[inv[i] * n + inv[j]]);
            }
        }
        match &self.best {
            Some(b) if *b <= code => {}
            _ => self.best = Some(code),
        }
    }
}
