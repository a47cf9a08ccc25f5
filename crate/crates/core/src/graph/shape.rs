use std::fmt;

use super::{GraphError, OrientedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    Dipath,
    OrientedPath,
    Dicycle,
    OrientedCycle,
    OrientedTree,
    Other,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Shape::Dipath => "dipath",
            Shape::OrientedPath => "oriented-path",
            Shape::Dicycle => "dicycle",
            Shape::OrientedCycle => "oriented-cycle",
            Shape::OrientedTree => "oriented-tree",
            Shape::Other => "other",
        };
        f.write_str(s)
    }
}

/// Most specific shape of a connected graph. A single vertex is a (trivial)
/// dipath.
pub fn classify_shape(g: &OrientedGraph) -> Result<Shape, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    if g.vertex_count() == 0 {
        return Ok(Shape::Other);
    }
    let max_degree = g.vertices().iter().map(|&v| g.degree(v)).max().unwrap_or(0);
    let balanced = g
        .vertices()
        .iter()
        .all(|&v| g.in_degree(v) <= 1 && g.out_degree(v) <= 1);

    let shape = if g.is_tree() {
        match (max_degree <= 2, balanced) {
            (true, true) => Shape::Dipath,
            (true, false) => Shape::OrientedPath,
            _ => Shape::OrientedTree,
        }
    } else if g.arc_count() == g.vertex_count() && max_degree == 2 {
        if balanced {
            Shape::Dicycle
        } else {
            Shape::OrientedCycle
        }
    } else {
        Shape::Other
    };
    Ok(shape)
}
