//! Divide and conquer along small minimal edge cuts.
//!
//! At a nontrivial minimal cut of size at most three the crossing number of
//! a graph is the sum over its two factors, so the engine splits, recurses
//! and solves only the pieces that have no such cut. Cuts of size four are
//! used only on request and only when both split vertices carry coherent
//! bundles; there the sum is a lower bound and the tree is marked inexact.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use crate::bundles::find_coherent_bundles;
use crate::cuts::{enumerate_min_cuts, CutError, EdgeCut};
use crate::graph::MultiGraph;
use crate::solver::{Outcome, Solver};
use crate::zip::{split_at_cut, ZipSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecomposePolicy {
    /// 3 or 4.
    pub max_cut_size: usize,
    /// Allow size-4 splits, which only give a lower bound.
    pub allow_lower_bound: bool,
}

impl Default for DecomposePolicy {
    fn default() -> Self {
        DecomposePolicy {
            max_cut_size: 3,
            allow_lower_bound: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompositionTree {
    Leaf {
        graph: MultiGraph,
        outcome: Outcome,
    },
    Split {
        graph: MultiGraph,
        cut: EdgeCut,
        /// `true` for cuts of size at most three.
        exact: bool,
        children: Box<[DecompositionTree; 2]>,
    },
}

/// Aggregate of a tree: `lower <= cr(G)`, and `cr(G) <= upper` when an
/// upper bound is known. `exact` means `lower == upper == cr(G)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeValue {
    pub lower: u32,
    pub upper: Option<u32>,
    pub exact: bool,
}

impl DecompositionTree {
    pub fn graph(&self) -> &MultiGraph {
        match self {
            DecompositionTree::Leaf { graph, .. } | DecompositionTree::Split { graph, .. } => graph,
        }
    }

    pub fn value(&self) -> TreeValue {
        match self {
            DecompositionTree::Leaf { outcome, .. } => {
                let (lower, upper) = outcome.bounds();
                TreeValue {
                    lower,
                    upper,
                    exact: upper == Some(lower),
                }
            }
            DecompositionTree::Split { exact, children, .. } => {
                let a = children[0].value();
                let b = children[1].value();
                let lower = a.lower + b.lower;
                let upper = match (exact, a.upper, b.upper) {
                    (true, Some(x), Some(y)) => Some(x + y),
                    _ => None,
                };
                TreeValue {
                    lower,
                    upper,
                    exact: *exact && a.exact && b.exact,
                }
            }
        }
    }

    /// Number of split nodes.
    pub fn split_count(&self) -> usize {
        match self {
            DecompositionTree::Leaf { .. } => 0,
            DecompositionTree::Split { children, .. } => 1 + children[0].split_count() + children[1].split_count(),
        }
    }

    /// Leaves from left to right.
    pub fn leaves(&self) -> Vec<&DecompositionTree> {
        match self {
            DecompositionTree::Leaf { .. } => alloc::vec![self],
            DecompositionTree::Split { children, .. } => {
                let mut v = children[0].leaves();
                v.extend(children[1].leaves());
                v
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecomposeError {
    Disconnected,
    BadPolicy,
}

impl fmt::Display for DecomposeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecomposeError::Disconnected => write!(f, "graph is not connected"),
            DecomposeError::BadPolicy => write!(f, "maximum cut size must be 3 or 4"),
        }
    }
}

impl core::error::Error for DecomposeError {}

impl From<CutError> for DecomposeError {
    fn from(_: CutError) -> Self {
        DecomposeError::Disconnected
    }
}

/// Most balanced first, then fewest edges, then smallest edge ids.
fn preference(c: &EdgeCut) -> (core::cmp::Reverse<usize>, usize, Vec<crate::graph::EdgeId>) {
    (core::cmp::Reverse(c.balance()), c.size(), c.edges.clone())
}

/// The cut the engine would split `g` at, with the factors and whether the
/// split is exact.
pub fn choose_split(
    g: &MultiGraph,
    policy: &DecomposePolicy,
) -> Result<Option<(EdgeCut, ZipSpec, bool)>, DecomposeError> {
    if !(3..=4).contains(&policy.max_cut_size) {
        return Err(DecomposeError::BadPolicy);
    }
    if !g.is_connected() {
        return Err(DecomposeError::Disconnected);
    }
    let use_four = policy.max_cut_size == 4 && policy.allow_lower_bound;
    let cuts = enumerate_min_cuts(g, if use_four { 4 } else { 3 }, true)?;
    let mut small: Vec<&EdgeCut> = cuts.iter().filter(|c| c.size() <= 3).collect();
    small.sort_by_key(|c| preference(c));
    if let Some(c) = small.first() {
        let spec = split_at_cut(g, c).expect("enumerated cuts are valid");
        return Ok(Some(((*c).clone(), spec, true)));
    }
    if use_four {
        let mut four: Vec<&EdgeCut> = cuts.iter().filter(|c| c.size() == 4).collect();
        four.sort_by_key(|c| preference(c));
        for c in four {
            let spec = split_at_cut(g, c).expect("enumerated cuts are valid");
            if find_coherent_bundles(&spec.g1, spec.v1).is_some() && find_coherent_bundles(&spec.g2, spec.v2).is_some()
            {
                return Ok(Some((c.clone(), spec, false)));
            }
        }
    }
    Ok(None)
}

/// Splits `g` recursively and solves the leaves with `solver`.
pub fn cr_via_decomposition(
    g: &MultiGraph,
    policy: &DecomposePolicy,
    solver: &mut Solver<'_>,
) -> Result<DecompositionTree, DecomposeError> {
    match choose_split(g, policy)? {
        None => Ok(DecompositionTree::Leaf {
            graph: g.clone(),
            outcome: solver.crossing_number(g, None),
        }),
        Some((cut, spec, exact)) => {
            let left = cr_via_decomposition(&spec.g1, policy, solver)?;
            let right = cr_via_decomposition(&spec.g2, policy, solver)?;
            Ok(DecompositionTree::Split {
                graph: g.clone(),
                cut,
                exact,
                children: Box::new([left, right]),
            })
        }
    }
}
