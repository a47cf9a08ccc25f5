//! Small named graphs on vertices `1..=n`.

use super::{Arc, OrientedGraph, VertexId};

/// Arcs `(i, i+1)` and `(n, 1)`. Panics below 3.
pub fn dicycle(n: VertexId) -> OrientedGraph {
    assert!(n >= 3, "a dicycle needs at least 3 vertices");
    OrientedGraph::from_arcs((1..=n).map(|i| Arc::new(i, i % n + 1))).unwrap()
}

/// Arcs `(i, i+1)`. Panics on 0.
pub fn dipath(n: VertexId) -> OrientedGraph {
    assert!(n >= 1);
    OrientedGraph::new(1..=n, (1..n).map(|i| Arc::new(i, i + 1))).unwrap()
}

/// Source 2 with arcs to 1 and 3.
pub fn s_plus() -> OrientedGraph {
    OrientedGraph::from_arcs([(2, 1), (2, 3)]).unwrap()
}

/// Sink 2 with arcs from 1 and 3.
pub fn s_minus() -> OrientedGraph {
    OrientedGraph::from_arcs([(1, 2), (3, 2)]).unwrap()
}
