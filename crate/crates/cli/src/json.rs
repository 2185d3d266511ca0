//! JSON documents for certificates, solver reports and decomposition trees.

use serde::{Deserialize, Serialize};
use zipcross_core::canon::canonical_key;
use zipcross_core::decompose::DecompositionTree;
use zipcross_core::solver::{EdgeRef, SolveStats};
use zipcross_core::{CrossingCertificate, Outcome};

/// An edge reference: a base edge by index, or `[step, part]` for an edge
/// created by an earlier step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EdgeRefDoc {
    Index(usize),
    Created([usize; 2]),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub base_n: usize,
    pub base_edges: Vec<[usize; 2]>,
    pub trace: Vec<[EdgeRefDoc; 2]>,
    pub value: u32,
}

impl From<&CrossingCertificate> for CertificateDoc {
    fn from(c: &CrossingCertificate) -> Self {
        let r = |e: EdgeRef| match e {
            EdgeRef::Original(i) => EdgeRefDoc::Index(i),
            EdgeRef::Created { step, part } => EdgeRefDoc::Created([step, part as usize]),
        };
        CertificateDoc {
            base_n: c.base_n,
            base_edges: c.base_edges.iter().map(|&(a, b)| [a, b]).collect(),
            trace: c.trace.iter().map(|[a, b]| [r(*a), r(*b)]).collect(),
            value: c.value,
        }
    }
}

impl CertificateDoc {
    /// Back to the core type; `part` must fit in `0..4`.
    pub fn to_certificate(&self) -> Result<CrossingCertificate, String> {
        let r = |e: &EdgeRefDoc| match *e {
            EdgeRefDoc::Index(i) => Ok(EdgeRef::Original(i)),
            EdgeRefDoc::Created([step, part]) if part < 4 => Ok(EdgeRef::Created { step, part: part as u8 }),
            EdgeRefDoc::Created([_, part]) => Err(format!("edge part {part} outside 0..4")),
        };
        let mut trace = Vec::with_capacity(self.trace.len());
        for [a, b] in &self.trace {
            trace.push([r(a)?, r(b)?]);
        }
        Ok(CrossingCertificate {
            base_n: self.base_n,
            base_edges: self.base_edges.iter().map(|&[a, b]| (a, b)).collect(),
            trace,
            value: self.value,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsDoc {
    pub nodes: u64,
    pub planarity_tests: u64,
    pub memo_hits: u64,
    pub wall_ms: u64,
}

impl StatsDoc {
    pub fn new(s: SolveStats, wall_ms: u64) -> Self {
        StatsDoc {
            nodes: s.nodes,
            planarity_tests: s.planarity_tests,
            memo_hits: s.memo_hits,
            wall_ms,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Solved,
    ExceedsBudget,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrReport {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<u32>,
    pub lower: u32,
    pub upper: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget: Option<u32>,
    pub stats: StatsDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateDoc>,
}

impl CrReport {
    pub fn new(out: &Outcome, budget: Option<u32>, wall_ms: u64) -> Self {
        let (lower, upper) = out.bounds();
        let status = match out {
            Outcome::Solved(_) => Status::Solved,
            Outcome::ExceedsBudget { .. } => Status::ExceedsBudget,
            Outcome::Unknown { .. } => Status::Unknown,
        };
        CrReport {
            status,
            value: out.value(),
            lower,
            upper,
            budget,
            stats: StatsDoc::new(out.stats(), wall_ms),
            certificate: match out {
                Outcome::Solved(r) => Some((&r.certificate).into()),
                _ => None,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDoc {
    /// Canonical key in hex, absent above the canonicalization cap.
    pub graph_key: Option<String>,
    pub vertices: usize,
    pub edges: usize,
    /// Cut edge ids; empty at a leaf.
    pub cut_edges: Vec<u32>,
    pub exact: bool,
    /// Proven lower bound; equal to the crossing number when `exact`.
    pub value: u32,
    pub upper: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub children: Option<Vec<TreeDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leaf_certificate: Option<CertificateDoc>,
}

impl From<&DecompositionTree> for TreeDoc {
    fn from(t: &DecompositionTree) -> Self {
        let g = t.graph();
        let v = t.value();
        let graph_key = canonical_key(g).ok().map(|k| k.to_hex());
        match t {
            DecompositionTree::Leaf { outcome, .. } => TreeDoc {
                graph_key,
                vertices: g.vertex_count(),
                edges: g.edge_count(),
                cut_edges: Vec::new(),
                exact: v.exact,
                value: v.lower,
                upper: v.upper,
                children: None,
                leaf_certificate: match outcome {
                    Outcome::Solved(r) => Some((&r.certificate).into()),
                    _ => None,
                },
            },
            DecompositionTree::Split { cut, children, .. } => TreeDoc {
                graph_key,
                vertices: g.vertex_count(),
                edges: g.edge_count(),
                cut_edges: cut.edges.iter().map(|e| e.0).collect(),
                exact: v.exact,
                value: v.lower,
                upper: v.upper,
                children: Some(children.iter().map(TreeDoc::from).collect()),
                leaf_certificate: None,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeReport {
    pub value: u32,
    pub exact: bool,
    /// Some split used a size-4 cut, so `value` is only a lower bound.
    pub lower_bound_only: bool,
    pub upper: Option<u32>,
    pub splits: usize,
    pub wall_ms: u64,
    pub tree: TreeDoc,
}

#[cfg(test)]
mod tests {
    use super::*;
    use zipcross_core::{families, Solver};

    #[test]
    fn certificate_round_trip() {
        let out = Solver::default().crossing_number(&families::complete(6), None);
        let Outcome::Solved(r) = out else { panic!() };
        let doc = CertificateDoc::from(&r.certificate);
        let text = serde_json::to_string(&doc).unwrap();
        let back: CertificateDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_certificate().unwrap(), r.certificate);
    }

    #[test]
    fn edge_refs_serialize_as_index_or_pair() {
        assert_eq!(serde_json::to_string(&EdgeRefDoc::Index(3)).unwrap(), "3");
        assert_eq!(serde_json::to_string(&EdgeRefDoc::Created([1, 2])).unwrap(), "[1,2]");
    }
}
