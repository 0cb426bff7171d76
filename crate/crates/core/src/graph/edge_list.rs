//! Plain-text edge-list format.
//!
//! ```text
//! # comment
//! vertices: a b c lonely
//! a b
//! b c   # trailing comments are allowed
//! ```
//!
//! Every non-comment line is either the `vertices:` header or exactly two
//! vertex labels. Vertex ids are assigned in order of first appearance, so a
//! serialized graph (which always starts with the header) parses back to the
//! identical graph.

use std::fmt::Write as _;

use super::{Edge, Graph, GraphBuilder};
use crate::error::{Error, Result};

const HEADER: &str = "vertices:";

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut b = GraphBuilder::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let tokens: Vec<&str> = strip_comment(raw).split_whitespace().collect();
        match tokens.as_slice() {
            [] => continue,
            [HEADER, rest @ ..] => {
                for t in rest {
                    b.vertex_for_label(t)
                        .map_err(|e| Error::format(line_no, e.to_string()))?;
                }
            }
            [t] => {
                return Err(Error::format(
                    line_no,
                    format!("expected two vertex labels, found only `{t}`"),
                ))
            }
            [a, c] => {
                if a == c {
                    return Err(Error::format(line_no, format!("self-loop at `{a}`")));
                }
                let u = b
                    .vertex_for_label(a)
                    .map_err(|e| Error::format(line_no, e.to_string()))?;
                let v = b
                    .vertex_for_label(c)
                    .map_err(|e| Error::format(line_no, e.to_string()))?;
                b.add_edge(u, v)?;
            }
            _ => {
                return Err(Error::format(
                    line_no,
                    format!("expected two vertex labels, found {}", tokens.len()),
                ))
            }
        }
    }
    Ok(b.build())
}

/// Canonical text form: the `vertices:` header followed by sorted edges.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = String::from(HEADER);
    for v in g.vertices() {
        out.push(' ');
        out.push_str(&g.label(v));
    }
    out.push('\n');
    for e in g.edges() {
        let _ = writeln!(out, "{}", g.edge_label(&e));
    }
    out
}

/// Parse an edge list whose labels refer to vertices of `g` (e.g. a matching
/// file). Every edge must exist in `g`; duplicates collapse.
pub fn parse_edge_set(g: &Graph, text: &str) -> Result<Vec<Edge>> {
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let tokens: Vec<&str> = strip_comment(raw).split_whitespace().collect();
        match tokens.as_slice() {
            [] => continue,
            [a, c] => {
                let lookup = |t: &str| {
                    g.vertex_by_label(t)
                        .ok_or_else(|| Error::format(line_no, format!("unknown vertex `{t}`")))
                };
                let (u, v) = (lookup(a)?, lookup(c)?);
                let e = Edge::try_new(u, v)
                    .ok_or_else(|| Error::format(line_no, format!("self-loop at `{a}`")))?;
                if !g.contains_edge(&e) {
                    return Err(Error::format(
                        line_no,
                        format!("edge `{a} {c}` is not in the graph"),
                    ));
                }
                edges.push(e);
            }
            _ => {
                return Err(Error::format(
                    line_no,
                    format!("expected two vertex labels, found {}", tokens.len()),
                ))
            }
        }
    }
    edges.sort();
    edges.dedup();
    Ok(edges)
}
