//! Oriented graphs: orientations of finite simple graphs.

mod enumerate;
mod io;
mod iso;
mod shape;

pub mod named;

pub use enumerate::{enumerate_connected, enumerate_connected_unchecked, ENUMERATION_MAX_N};
pub use io::{parse_graph, parse_graph_with, write_graph, ParseOptions};
pub use iso::{canonical_form, is_isomorphic, isomorphism, CanonicalForm};
pub use shape::{classify_shape, Shape};

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

pub type VertexId = u32;

/// An arc `(tail, head)`: the tail is directed to the head.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub tail: VertexId,
    pub head: VertexId,
}

impl Arc {
    pub const fn new(tail: VertexId, head: VertexId) -> Self {
        Arc { tail, head }
    }

    pub const fn reversed(self) -> Self {
        Arc {
            tail: self.head,
            head: self.tail,
        }
    }

    pub fn touches(self, v: VertexId) -> bool {
        self.tail == v || self.head == v
    }

    /// The endpoint that is not `v`.
    pub fn other(self, v: VertexId) -> VertexId {
        if self.tail == v {
            self.head
        } else {
            self.tail
        }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.tail, self.head)
    }
}

impl From<(VertexId, VertexId)> for Arc {
    fn from((tail, head): (VertexId, VertexId)) -> Self {
        Arc::new(tail, head)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("not an orientation of a simple graph: {0}")]
    NotSimple(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown arc {0}")]
    UnknownArc(Arc),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("size guard: {what} is {actual}, limit {limit}")]
    SizeGuard {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
}

/// An oriented graph. Values are immutable; every operation returns a new graph.
///
/// No loops, no repeated arcs and no anti-parallel pairs: between any two
/// vertices there is at most one arc.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct OrientedGraph {
    vertices: BTreeSet<VertexId>,
    arcs: BTreeSet<Arc>,
}

impl OrientedGraph {
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        arcs: impl IntoIterator<Item = Arc>,
    ) -> Result<Self, GraphError> {
        let vertices: BTreeSet<VertexId> = vertices.into_iter().collect();
        let mut set = BTreeSet::new();
        for a in arcs {
            if a.tail == a.head {
                return Err(GraphError::NotSimple(format!("loop at {}", a.tail)));
            }
            for v in [a.tail, a.head] {
                if !vertices.contains(&v) {
                    return Err(GraphError::UnknownVertex(v));
                }
            }
            if set.contains(&a) {
                return Err(GraphError::NotSimple(format!("duplicate arc {a}")));
            }
            if set.contains(&a.reversed()) {
                return Err(GraphError::NotSimple(format!(
                    "anti-parallel pair {a} and {}",
                    a.reversed()
                )));
            }
            set.insert(a);
        }
        Ok(OrientedGraph {
            vertices,
            arcs: set,
        })
    }

    /// Builds a graph whose vertex set is exactly the arc endpoints.
    pub fn from_arcs<A: Into<Arc>>(arcs: impl IntoIterator<Item = A>) -> Result<Self, GraphError> {
        let arcs: Vec<Arc> = arcs.into_iter().map(Into::into).collect();
        let vertices = arcs.iter().flat_map(|a| [a.tail, a.head]);
        OrientedGraph::new(vertices.collect::<Vec<_>>(), arcs)
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn arcs(&self) -> &BTreeSet<Arc> {
        &self.arcs
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn has_arc(&self, a: Arc) -> bool {
        self.arcs.contains(&a)
    }

    /// The arc joining `u` and `v` in either direction, if any.
    pub fn arc_between(&self, u: VertexId, v: VertexId) -> Option<Arc> {
        let a = Arc::new(u, v);
        if self.arcs.contains(&a) {
            Some(a)
        } else if self.arcs.contains(&a.reversed()) {
            Some(a.reversed())
        } else {
            None
        }
    }

    /// `(N⁻(v), N⁺(v))`.
    pub fn neighborhoods(
        &self,
        v: VertexId,
    ) -> Result<(BTreeSet<VertexId>, BTreeSet<VertexId>), GraphError> {
        if !self.has_vertex(v) {
            return Err(GraphError::UnknownVertex(v));
        }
        let mut ins = BTreeSet::new();
        let mut outs = BTreeSet::new();
        for a in &self.arcs {
            if a.head == v {
                ins.insert(a.tail);
            } else if a.tail == v {
                outs.insert(a.head);
            }
        }
        Ok((ins, outs))
    }

    pub fn in_neighbors(&self, v: VertexId) -> BTreeSet<VertexId> {
        self.arcs.iter().filter(|a| a.head == v).map(|a| a.tail).collect()
    }

    pub fn out_neighbors(&self, v: VertexId) -> BTreeSet<VertexId> {
        self.arcs.iter().filter(|a| a.tail == v).map(|a| a.head).collect()
    }

    /// Underlying (undirected) neighbors.
    pub fn neighbors(&self, v: VertexId) -> BTreeSet<VertexId> {
        self.arcs
            .iter()
            .filter(|a| a.touches(v))
            .map(|a| a.other(v))
            .collect()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.arcs.iter().filter(|a| a.touches(v)).count()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.arcs.iter().filter(|a| a.head == v).count()
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.arcs.iter().filter(|a| a.tail == v).count()
    }

    /// Every neighbor is an in-neighbor, and there is at least one.
    pub fn is_sink(&self, v: VertexId) -> bool {
        self.out_degree(v) == 0 && self.in_degree(v) > 0
    }

    pub fn is_source(&self, v: VertexId) -> bool {
        self.in_degree(v) == 0 && self.out_degree(v) > 0
    }

    pub fn delete_arc(&self, a: Arc) -> Result<OrientedGraph, GraphError> {
        if !self.arcs.contains(&a) {
            return Err(GraphError::UnknownArc(a));
        }
        let mut g = self.clone();
        g.arcs.remove(&a);
        Ok(g)
    }

    pub fn delete_vertex(&self, v: VertexId) -> Result<OrientedGraph, GraphError> {
        if !self.vertices.contains(&v) {
            return Err(GraphError::UnknownVertex(v));
        }
        let mut g = self.clone();
        g.vertices.remove(&v);
        g.arcs.retain(|a| !a.touches(v));
        Ok(g)
    }

    /// Every arc switched.
    pub fn converse(&self) -> OrientedGraph {
        OrientedGraph {
            vertices: self.vertices.clone(),
            arcs: self.arcs.iter().map(|a| a.reversed()).collect(),
        }
    }

    /// The oriented subgraph induced by `keep`.
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> OrientedGraph {
        OrientedGraph {
            vertices: self.vertices.intersection(keep).copied().collect(),
            arcs: self
                .arcs
                .iter()
                .filter(|a| keep.contains(&a.tail) && keep.contains(&a.head))
                .copied()
                .collect(),
        }
    }

    /// Oriented subgraph with the given arcs and their endpoints.
    pub fn arc_subgraph(&self, arcs: impl IntoIterator<Item = Arc>) -> Result<OrientedGraph, GraphError> {
        let arcs: Vec<Arc> = arcs.into_iter().collect();
        for a in &arcs {
            if !self.arcs.contains(a) {
                return Err(GraphError::UnknownArc(*a));
            }
        }
        OrientedGraph::from_arcs(arcs)
    }

    /// Renames vertices; `map` must be injective on the vertex set.
    pub fn relabel(&self, map: &BTreeMap<VertexId, VertexId>) -> OrientedGraph {
        let f = |v: VertexId| map.get(&v).copied().unwrap_or(v);
        OrientedGraph {
            vertices: self.vertices.iter().map(|&v| f(v)).collect(),
            arcs: self
                .arcs
                .iter()
                .map(|a| Arc::new(f(a.tail), f(a.head)))
                .collect(),
        }
    }

    /// Vertex sets of the connected components of the underlying graph,
    /// ordered by smallest member.
    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        let adj = self.adjacency();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &self.vertices {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for &w in &adj[&v] {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Underlying adjacency lists.
    pub fn adjacency(&self) -> BTreeMap<VertexId, Vec<VertexId>> {
        let mut adj: BTreeMap<VertexId, Vec<VertexId>> =
            self.vertices.iter().map(|&v| (v, Vec::new())).collect();
        for a in &self.arcs {
            adj.get_mut(&a.tail).unwrap().push(a.head);
            adj.get_mut(&a.head).unwrap().push(a.tail);
        }
        adj
    }

    /// True when the underlying graph has no cycle.
    pub fn is_forest(&self) -> bool {
        self.arc_count() + self.components().len() == self.vertex_count()
    }

    pub fn is_tree(&self) -> bool {
        !self.vertices.is_empty() && self.is_connected() && self.arc_count() + 1 == self.vertex_count()
    }

    /// Dense view with vertices renumbered `0..n` in ascending id order.
    pub fn dense(&self) -> DenseGraph {
        DenseGraph::from_graph(self)
    }
}

impl fmt::Display for OrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_graph(self))
    }
}

/// Index-based copy of a graph for the inner loops of the exhaustive
/// algorithms. `ids[i]` is the original id of dense vertex `i`.
#[derive(Clone, Debug)]
pub struct DenseGraph {
    pub ids: Vec<VertexId>,
    pub arcs: Vec<(usize, usize)>,
}

impl DenseGraph {
    pub fn from_graph(g: &OrientedGraph) -> Self {
        let ids: Vec<VertexId> = g.vertices().iter().copied().collect();
        let index: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let arcs = g.arcs().iter().map(|a| (index[&a.tail], index[&a.head])).collect();
        DenseGraph { ids, arcs }
    }

    pub fn n(&self) -> usize {
        self.ids.len()
    }

    /// Row bitmasks: bit `j` of `rows[i]` is set iff `i -> j` is an arc.
    pub fn out_rows(&self) -> Vec<u64> {
        let mut rows = vec![0u64; self.n()];
        for &(t, h) in &self.arcs {
            rows[t] |= 1 << h;
        }
        rows
    }

    pub fn arc(&self, i: usize) -> Arc {
        let (t, h) = self.arcs[i];
        Arc::new(self.ids[t], self.ids[h])
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn rejects_non_simple() {
        assert!(matches!(
            OrientedGraph::from_arcs([(1, 2), (2, 1)]),
            Err(GraphError::NotSimple(_))
        ));
        assert!(matches!(
            OrientedGraph::from_arcs([(1, 1)]),
            Err(GraphError::NotSimple(_))
        ));
        assert!(matches!(
            OrientedGraph::new([1, 2], [Arc::new(1, 2), Arc::new(1, 2)]),
            Err(GraphError::NotSimple(_))
        ));
        assert_eq!(
            OrientedGraph::new([1], [Arc::new(1, 2)]),
            Err(GraphError::UnknownVertex(2))
        );
    }

    #[test]
    fn neighborhoods_of_dicycle_and_sink() {
        let d3 = dicycle(3);
        let (ins, outs) = d3.neighborhoods(2).unwrap();
        assert_eq!(ins, BTreeSet::from([1]));
        assert_eq!(outs, BTreeSet::from([3]));

        let sm = s_minus();
        let (ins, outs) = sm.neighborhoods(2).unwrap();
        assert_eq!(ins, BTreeSet::from([1, 3]));
        assert!(outs.is_empty());
        assert!(sm.is_sink(2));
        assert!(s_plus().is_source(2));

        let iso = OrientedGraph::new([7], []).unwrap();
        let (ins, outs) = iso.neighborhoods(7).unwrap();
        assert!(ins.is_empty() && outs.is_empty());
        assert!(!iso.is_sink(7) && !iso.is_source(7));
        assert_eq!(iso.neighborhoods(8), Err(GraphError::UnknownVertex(8)));
    }

    #[test]
    fn deletion_and_converse() {
        let d3 = dicycle(3);
        let p = d3.delete_arc(Arc::new(3, 1)).unwrap();
        assert_eq!(p, dipath(3));
        assert_eq!(p.vertices(), d3.vertices());
        assert_eq!(
            d3.delete_arc(Arc::new(1, 3)),
            Err(GraphError::UnknownArc(Arc::new(1, 3)))
        );

        let q = d3.delete_vertex(2).unwrap();
        assert_eq!(q.vertex_count(), 2);
        assert_eq!(q.arcs().iter().copied().collect::<Vec<_>>(), vec![Arc::new(3, 1)]);
        assert_eq!(d3.delete_vertex(9), Err(GraphError::UnknownVertex(9)));

        assert_eq!(s_plus().converse(), s_minus());
        assert_eq!(d3.converse().converse(), d3);
    }

    #[test]
    fn components_and_trees() {
        let g = OrientedGraph::new([1, 2, 3, 4, 5], [Arc::new(1, 2), Arc::new(4, 3)]).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0], BTreeSet::from([1, 2]));
        assert_eq!(comps[2], BTreeSet::from([5]));
        assert!(g.is_forest());
        assert!(!g.is_tree());
        assert!(s_plus().is_tree());
        assert!(!dicycle(4).is_forest());
    }
}
