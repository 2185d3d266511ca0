//! Graph file formats: the edge-list text format and graph6.
//!
//! Edge lists: lines starting with `#` and blank lines are ignored; the
//! first remaining line is `n m`; then exactly `m` lines `u v` with 0-based
//! vertex indices. Repeated lines are parallel edges.

use std::fmt::Write;

use thiserror::Error;
use zipcross_core::{GraphError, MultiGraph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("{0}")]
    Graph(#[from] GraphError),
    #[error("graph6: {0}")]
    Graph6(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize), FormatError> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize, FormatError> {
        let tok = it.next().ok_or_else(|| FormatError::Syntax {
            line: lineno,
            msg: format!("expected {what}"),
        })?;
        tok.parse().map_err(|_| FormatError::Syntax {
            line: lineno,
            msg: format!("`{tok}` is not a nonnegative integer"),
        })
    };
    let a = next("two integers")?;
    let b = next("two integers")?;
    if it.next().is_some() {
        return Err(FormatError::Syntax {
            line: lineno,
            msg: "trailing tokens".into(),
        });
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<MultiGraph, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let pair = parse_pair(line, i + 1)?;
        if header.is_none() {
            header = Some(pair);
        } else {
            pairs.push(pair);
        }
    }
    let (n, m) = header.ok_or(FormatError::MissingHeader)?;
    if pairs.len() != m {
        return Err(FormatError::EdgeCount {
            expected: m,
            found: pairs.len(),
        });
    }
    Ok(MultiGraph::from_edges(n, &pairs)?)
}

/// Edge list of `g` over vertex positions, edges in id order.
pub fn emit_edge_list(g: &MultiGraph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} {}", g.vertex_count(), g.edge_count());
    for (a, b) in g.index_pairs() {
        let _ = writeln!(s, "{a} {b}");
    }
    s
}

pub fn parse_graph6(text: &str) -> Result<MultiGraph, FormatError> {
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| FormatError::Graph6("empty input".into()))?;
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes: Vec<u8> = line.bytes().collect();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(FormatError::Graph6(format!("byte {b} outside 63..=126")));
    }
    let (n, rest) = match bytes.as_slice() {
        [126, 126, r @ ..] if r.len() >= 6 => (
            r[..6].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize),
            &r[6..],
        ),
        [126, r @ ..] if r.len() >= 3 => (
            r[..3].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize),
            &r[3..],
        ),
        [b, r @ ..] if *b < 126 => ((*b - 63) as usize, r),
        _ => return Err(FormatError::Graph6("truncated size field".into())),
    };
    let bits_needed = n * n.saturating_sub(1) / 2;
    if rest.len() != bits_needed.div_ceil(6) {
        return Err(FormatError::Graph6(format!(
            "expected {} data bytes for {n} vertices, found {}",
            bits_needed.div_ceil(6),
            rest.len()
        )));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    Ok(MultiGraph::from_edges(n, &pairs)?)
}

/// Graph6 when the first meaningful line is a single token that is not a
/// number, edge list otherwise.
pub fn sniff(text: &str) -> Format {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with(">>graph6<<") => Format::Graph6,
        Some(l) if l.split_whitespace().count() == 1 && l.parse::<usize>().is_err() => Format::Graph6,
        _ => Format::EdgeList,
    }
}

pub fn parse(text: &str, format: Option<Format>) -> Result<MultiGraph, FormatError> {
    match format.unwrap_or_else(|| sniff(text)) {
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => parse_graph6(text),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use zipcross_core::families;

    #[test]
    fn edge_list_round_trip() {
        for g in [
            families::complete(5),
            families::doubled(&families::cycle(3)),
            MultiGraph::from_edges(3, &[]).unwrap(),
        ] {
            assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
        }
    }

    #[test]
    fn comments_and_parallel_edges() {
        let g = parse_edge_list("# digon\n\n2 2\n0 1\n# again\n0 1\n").unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.multiplicity(g.vertices()[0], g.vertices()[1]), 2);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(parse_edge_list("# nothing\n"), Err(FormatError::MissingHeader));
        assert_eq!(
            parse_edge_list("3 2\n0 1\n"),
            Err(FormatError::EdgeCount { expected: 2, found: 1 })
        );
        assert!(matches!(
            parse_edge_list("3 1\n0 x\n"),
            Err(FormatError::Syntax { line: 2, .. })
        ));
        assert!(matches!(parse_edge_list("3 1\n1 1\n"), Err(FormatError::Graph(_))));
        assert!(matches!(parse_edge_list("3 1\n0 3\n"), Err(FormatError::Graph(_))));
    }

    #[test]
    fn graph6_known_strings() {
        // K4 and the Petersen graph in graph6
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4, families::complete(4));
        let p = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (10, 15));
        assert!(p.degrees().values().all(|&d| d == 3));
        assert_eq!(sniff("C~\n"), Format::Graph6);
        assert_eq!(sniff("4 6\n"), Format::EdgeList);
        assert!(parse_graph6("C").is_err());
    }
}
