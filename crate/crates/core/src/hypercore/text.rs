//! Plain-text hypergraph format.
//!
//! ```text
//! n r
//! v1 v2 ... vr
//! ...
//! ```
//!
//! The header holds the vertex count and the uniformity. Each following line
//! is one edge: `r` strictly increasing 0-based indices separated by single
//! spaces. Lines starting with `#` and blank lines are skipped on input and
//! never written.

use std::fmt::Write as _;

use super::{Hypergraph, HypergraphError, VertexSet};

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, HypergraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'));

    let (line_no, header) = lines.next().ok_or(HypergraphError::MissingHeader)?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    let malformed = || HypergraphError::MalformedHeader { line: line_no, text: header.to_string() };
    if nums.len() != 2 {
        return Err(malformed());
    }
    let n: usize = nums[0].parse().map_err(|_| malformed())?;
    let r: usize = nums[1].parse().map_err(|_| malformed())?;

    let mut edges = Vec::new();
    for (line_no, line) in lines {
        let mut edge = VertexSet::EMPTY;
        let mut prev: Option<usize> = None;
        let mut arity = 0;
        for tok in line.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| HypergraphError::MalformedEdge {
                line: line_no,
                text: line.to_string(),
            })?;
            if v >= n {
                return Err(HypergraphError::VertexOutOfRange { vertex: v, n });
            }
            match prev {
                Some(p) if p == v => return Err(HypergraphError::RepeatedVertex(v)),
                Some(p) if p > v => {
                    return Err(HypergraphError::MalformedEdge { line: line_no, text: line.to_string() })
                }
                _ => {}
            }
            prev = Some(v);
            edge = edge.with(v);
            arity += 1;
        }
        if arity != r {
            return Err(HypergraphError::EdgeArity { line: line_no, arity, r });
        }
        edges.push(edge);
    }
    Hypergraph::new(n, r, edges)
}

pub fn serialize_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", h.n(), h.r()).unwrap();
    for e in h.edges() {
        writeln!(out, "{e}").unwrap();
    }
    out
}

impl std::str::FromStr for Hypergraph {
    type Err = HypergraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_hypergraph(s)
    }
}

impl std::fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&serialize_hypergraph(self))
    }
}
