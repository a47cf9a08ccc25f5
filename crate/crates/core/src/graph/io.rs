//! Text format for graphs.
//!
//! ```text
//! # comment
//! v 1 2 3
//! a 1 2
//! a 2 3
//! ```
//!
//! `v` lines declare vertices and may repeat; `a` lines declare arcs. Line
//! order does not matter.

use std::fmt::Write as _;

use super::{Arc, GraphError, OrientedGraph, VertexId};

#[derive(Clone, Copy, Debug, Default)]
pub struct ParseOptions {
    /// Let arcs introduce vertices that no `v` line declared.
    pub implicit_vertices: bool,
}

pub fn parse_graph(text: &str) -> Result<OrientedGraph, GraphError> {
    parse_graph_with(text, ParseOptions::default())
}

pub fn parse_graph_with(text: &str, opts: ParseOptions) -> Result<OrientedGraph, GraphError> {
    let mut vertices = Vec::new();
    let mut arcs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let mut words = body.split_whitespace();
        let kind = words.next().unwrap();
        let ids = words
            .map(|w| parse_id(w, line))
            .collect::<Result<Vec<_>, _>>()?;
        match kind {
            "v" => vertices.extend(ids),
            "a" => {
                if ids.len() != 2 {
                    return Err(GraphError::Syntax {
                        line,
                        message: format!("arc needs exactly two ids, got {}", ids.len()),
                    });
                }
                arcs.push(Arc::new(ids[0], ids[1]));
            }
            other => {
                return Err(GraphError::Syntax {
                    line,
                    message: format!("unknown record '{other}'"),
                })
            }
        }
    }
    if opts.implicit_vertices {
        vertices.extend(arcs.iter().flat_map(|a| [a.tail, a.head]));
    }
    OrientedGraph::new(vertices, arcs)
}

fn parse_id(word: &str, line: usize) -> Result<VertexId, GraphError> {
    if !word.bytes().all(|b| b.is_ascii_digit()) {
        return Err(GraphError::Syntax {
            line,
            message: format!("bad vertex id '{word}'"),
        });
    }
    word.parse().map_err(|_| GraphError::Syntax {
        line,
        message: format!("vertex id out of range '{word}'"),
    })
}

/// Inverse of [`parse_graph`]. Output is canonical: one `v` line, arcs sorted.
pub fn write_graph(g: &OrientedGraph) -> String {
    let mut out = String::from("v");
    for v in g.vertices() {
        write!(out, " {v}").unwrap();
    }
    out.push('\n');
    for a in g.arcs() {
        writeln!(out, "a {} {}", a.tail, a.head).unwrap();
    }
    out
}
