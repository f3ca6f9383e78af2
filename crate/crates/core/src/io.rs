//! Line-oriented ASCII graph and tree files.
//!
//! Graph file:
//! ```text
//! # comment
//! p <n> <m>
//! e <u> <v> <w>     (m lines, edge_id order; w in {-1, 1}, optional, default +1)
//! ```
//!
//! Tree / subgraph file:
//! ```text
//! t <k>
//! i <edge_id>       (k lines)
//! ```
//!
//! Blank lines and `#`-prefixed comment lines are ignored everywhere.
//! Parse errors carry 1-based line numbers.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, SignedWeights};
use crate::oracle::SpanningTree;

/// A graph file's contents. `explicit_weights` records whether any edge
/// line carried a weight column; absent weights default to +1.
#[derive(Clone, Debug)]
pub struct GraphFile {
    pub graph: Multigraph,
    pub weights: SignedWeights,
    pub explicit_weights: bool,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(token: &str, line: usize, what: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_err(line, format!("{what} {token:?} is not a non-negative integer")))
}

/// Parses a graph file, including the optional weight column.
pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut lines = significant_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty file: expected header `p <n> <m>`"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 || fields[0] != "p" {
        return Err(parse_err(header_line, "expected header `p <n> <m>`"));
    }
    let n = parse_usize(fields[1], header_line, "vertex count")?;
    let m = parse_usize(fields[2], header_line, "edge count")?;

    let mut edges = Vec::with_capacity(m);
    let mut weights = Vec::with_capacity(m);
    let mut explicit_weights = false;
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields[0] != "e" {
            return Err(parse_err(
                line,
                format!("expected edge line `e <u> <v> [<w>]`, got {content:?}"),
            ));
        }
        if fields.len() != 3 && fields.len() != 4 {
            return Err(parse_err(line, "edge line takes 2 or 3 arguments"));
        }
        if edges.len() == m {
            return Err(parse_err(line, format!("more than {m} edge lines")));
        }
        let u = parse_usize(fields[1], line, "endpoint")?;
        let v = parse_usize(fields[2], line, "endpoint")?;
        if u >= n || v >= n {
            return Err(parse_err(
                line,
                format!("endpoint out of range: vertices are 0..{n}"),
            ));
        }
        if u == v {
            return Err(parse_err(line, format!("self-loop at vertex {u}")));
        }
        let w = match fields.get(3) {
            Some(&"1") | Some(&"+1") => {
                explicit_weights = true;
                1
            }
            Some(&"-1") => {
                explicit_weights = true;
                -1
            }
            Some(other) => {
                return Err(parse_err(line, format!("weight {other:?} must be -1 or 1")));
            }
            None => 1,
        };
        edges.push((u, v));
        weights.push(w);
    }
    if edges.len() != m {
        return Err(parse_err(
            text.lines().count(),
            format!("header promised {m} edges, file has {}", edges.len()),
        ));
    }
    Ok(GraphFile {
        graph: Multigraph::new(n, edges)?,
        weights: SignedWeights::new(weights)?,
        explicit_weights,
    })
}

/// Serialises a graph; the weight column is emitted iff `weights` is given.
pub fn write_graph(graph: &Multigraph, weights: Option<&SignedWeights>) -> String {
    let mut out = String::new();
    out.push_str(&format!("p {} {}\n", graph.vertex_count(), graph.edge_count()));
    for (id, u, v) in graph.edges() {
        match weights {
            Some(w) => out.push_str(&format!("e {u} {v} {}\n", w.get(id))),
            None => out.push_str(&format!("e {u} {v}\n")),
        }
    }
    out
}

/// Parses a tree/subgraph file into raw edge ids; validation against the
/// host graph happens in [`SpanningTree::new`].
pub fn parse_tree(text: &str) -> Result<Vec<EdgeId>> {
    let mut lines = significant_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty file: expected header `t <k>`"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 || fields[0] != "t" {
        return Err(parse_err(header_line, "expected header `t <k>`"));
    }
    let k = parse_usize(fields[1], header_line, "edge count")?;
    let mut ids = Vec::with_capacity(k);
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 2 || fields[0] != "i" {
            return Err(parse_err(line, format!("expected `i <edge_id>`, got {content:?}")));
        }
        if ids.len() == k {
            return Err(parse_err(line, format!("more than {k} edge lines")));
        }
        ids.push(parse_usize(fields[1], line, "edge id")?);
    }
    if ids.len() != k {
        return Err(parse_err(
            text.lines().count(),
            format!("header promised {k} edges, file has {}", ids.len()),
        ));
    }
    Ok(ids)
}

pub fn write_tree(tree: &SpanningTree) -> String {
    let mut out = String::new();
    out.push_str(&format!("t {}\n", tree.len()));
    for e in tree.edge_ids() {
        out.push_str(&format!("i {e}\n"));
    }
    out
}
