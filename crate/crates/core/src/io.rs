//! Text and JSON edge-list formats.
//!
//! `.3g`: first line `n m`, then `m` lines `a b c` with `0 <= a < b < c < n`.
//! `.g`: the same with pairs `a b`, `a < b`. JSON: `{"n": .., "edges": [[..], ..]}`.
//! Every reader rejects repeated edges.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, ThreeGraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses the `n m` header followed by `m` rows of `arity` strictly increasing
/// vertex indices.
fn parse_rows(text: &str, arity: usize) -> Result<(usize, Vec<Vec<usize>>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let head: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| parse_err(hl, format!("bad integer {t:?}"))))
        .collect::<Result<_>>()?;
    let [n, m] = head[..] else {
        return Err(parse_err(hl, "header must be `n m`"));
    };
    let mut rows = Vec::with_capacity(m);
    for (ln, line) in lines {
        let row: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| parse_err(ln, format!("bad integer {t:?}"))))
            .collect::<Result<_>>()?;
        if row.len() != arity {
            return Err(parse_err(ln, format!("expected {arity} vertices")));
        }
        if row.windows(2).any(|w| w[0] >= w[1]) {
            return Err(parse_err(ln, "vertices must be strictly increasing"));
        }
        if row[arity - 1] >= n {
            return Err(parse_err(ln, format!("vertex {} >= n = {n}", row[arity - 1])));
        }
        rows.push(row);
    }
    if rows.len() != m {
        return Err(parse_err(hl, format!("header announces {m} edges, found {}", rows.len())));
    }
    Ok((n, rows))
}

pub fn parse_three_graph(text: &str) -> Result<ThreeGraph> {
    let (n, rows) = parse_rows(text, 3)?;
    ThreeGraph::new_strict(n, rows.into_iter().map(|r| [r[0], r[1], r[2]]))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let (n, rows) = parse_rows(text, 2)?;
    Graph::new_strict(n, rows.into_iter().map(|r| [r[0], r[1]]))
}

pub fn write_three_graph(h: &ThreeGraph) -> String {
    let mut out = format!("{} {}\n", h.n(), h.edge_count());
    for [a, b, c] in h.edges() {
        out.push_str(&format!("{a} {b} {c}\n"));
    }
    out
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for [a, b] in g.edges() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

impl From<&ThreeGraph> for EdgeList {
    fn from(h: &ThreeGraph) -> Self {
        EdgeList {
            n: h.n(),
            edges: h.edges().iter().map(|e| e.to_vec()).collect(),
        }
    }
}

impl From<&Graph> for EdgeList {
    fn from(g: &Graph) -> Self {
        EdgeList {
            n: g.n(),
            edges: g.edges().iter().map(|e| e.to_vec()).collect(),
        }
    }
}

impl EdgeList {
    pub fn to_three_graph(&self) -> Result<ThreeGraph> {
        let mut triples = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let [a, b, c] = e[..] else {
                return Err(Error::DegenerateEdge { edge: e.clone() });
            };
            triples.push([a, b, c]);
        }
        ThreeGraph::new_strict(self.n, triples)
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let mut pairs = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let [a, b] = e[..] else {
                return Err(Error::DegenerateEdge { edge: e.clone() });
            };
            pairs.push([a, b]);
        }
        Graph::new_strict(self.n, pairs)
    }
}

pub fn three_graph_from_json(text: &str) -> Result<ThreeGraph> {
    let list: EdgeList =
        serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    list.to_three_graph()
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    let list: EdgeList =
        serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    list.to_graph()
}

pub fn three_graph_to_json(h: &ThreeGraph) -> String {
    serde_json::to_string(&EdgeList::from(h)).expect("edge list serializes")
}

/// Reads either the JSON or the `.3g` text form, chosen by the first
/// non-blank character.
pub fn read_three_graph(text: &str) -> Result<ThreeGraph> {
    if text.trim_start().starts_with('{') {
        three_graph_from_json(text)
    } else {
        parse_three_graph(text)
    }
}

pub fn read_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        graph_from_json(text)
    } else {
        parse_graph(text)
    }
}
