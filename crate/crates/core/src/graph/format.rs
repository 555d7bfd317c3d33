//! Line-oriented instance files:
//!
//! ```text
//! # comment
//! p <n> <m>
//! e <u> <v>     (m lines, 1-based)
//! s <u> <v>     source matching edges
//! t <u> <v>     target matching edges
//! ```

use super::{Graph, GraphError, Matching};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("line {line}: {u}-{v} is not an edge")]
    NotAnEdge { line: usize, u: usize, v: usize },
    #[error("{which} matching is not vertex-disjoint: {source}")]
    NotAMatching { which: &'static str, source: GraphError },
    #[error("matchings have different sizes ({source_len} and {target_len})")]
    UnequalSizes { source_len: usize, target_len: usize },
    #[error("missing problem line")]
    MissingHeader,
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCount { declared: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub source: Matching,
    pub target: Matching,
}

fn numbers<const K: usize>(line: usize, fields: &[&str]) -> Result<[usize; K], ParseError> {
    if fields.len() != K {
        return Err(ParseError::Malformed { line, msg: format!("expected {K} numbers") });
    }
    let mut out = [0; K];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f
            .parse()
            .map_err(|_| ParseError::Malformed { line, msg: format!("bad number {f:?}") })?;
    }
    Ok(out)
}

fn vertex(line: usize, v: usize, n: usize) -> Result<usize, ParseError> {
    if v == 0 || v > n {
        return Err(ParseError::Graph { line, source: GraphError::VertexOutOfRange { vertex: v, n } });
    }
    Ok(v - 1)
}

/// Parses an instance. Files without `s`/`t` lines give two empty matchings.
pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut graph: Option<(Graph, usize)> = None;
    let mut source = Vec::new();
    let mut target = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let (tag, rest) = (fields[0], &fields[1..]);
        match (tag, graph.as_mut()) {
            ("p", None) => {
                let [n, m] = numbers::<2>(line, rest)?;
                graph = Some((Graph::empty(n), m));
            }
            ("p", Some(_)) => {
                return Err(ParseError::Malformed { line, msg: "second problem line".into() })
            }
            (_, None) => return Err(ParseError::MissingHeader),
            ("e", Some((g, _))) => {
                let [u, v] = numbers::<2>(line, rest)?;
                let (u, v) = (vertex(line, u, g.n())?, vertex(line, v, g.n())?);
                g.push_edge(u, v).map_err(|source| ParseError::Graph { line, source })?;
            }
            ("s" | "t", Some((g, _))) => {
                let [u, v] = numbers::<2>(line, rest)?;
                let (a, b) = (vertex(line, u, g.n())?, vertex(line, v, g.n())?);
                let e = g.edge_between(a, b).ok_or(ParseError::NotAnEdge { line, u, v })?;
                if tag == "s" {
                    source.push(e);
                } else {
                    target.push(e);
                }
            }
            (other, _) => {
                return Err(ParseError::Malformed { line, msg: format!("unknown line type {other:?}") })
            }
        }
    }
    let (graph, declared) = graph.ok_or(ParseError::MissingHeader)?;
    if declared != graph.m() {
        return Err(ParseError::EdgeCount { declared, found: graph.m() });
    }
    let source = Matching::new(&graph, source)
        .map_err(|source| ParseError::NotAMatching { which: "source", source })?;
    let target = Matching::new(&graph, target)
        .map_err(|source| ParseError::NotAMatching { which: "target", source })?;
    if source.len() != target.len() {
        return Err(ParseError::UnequalSizes { source_len: source.len(), target_len: target.len() });
    }
    Ok(Instance { graph, source, target })
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn write_instance(g: &Graph, source: &Matching, target: &Matching) -> String {
    let mut out = write_graph(g);
    for (tag, m) in [("s", source), ("t", target)] {
        for (u, v) in m.pairs(g) {
            writeln!(out, "{tag} {u} {v}").unwrap();
        }
    }
    out
}
