//! Direct 1-page embedders: oriented cycles, oriented trees, sink and source
//! embeddings, fountain trees and strictly uni-dicyclic graphs.

mod auto;
mod fountain;
mod unidicyclic;

pub use auto::{embed_auto, AutoEmbedding, AutoError, Method};
pub use fountain::{
    build_fountain_tree, embed_fountain, fountain_nesting_holds, fountain_spine_order, recognize_sink_fountain,
    recognize_source_fountain, FountainKind, FountainRecognition, FountainSpec,
};
pub use unidicyclic::{embed_unidicyclic, embed_unidicyclic_one_heavy, UnidicyclicOutcome};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{classify_shape, Arc, OrientedGraph, Shape, VertexId};
use crate::layout::{BookEmbedding, Placement};
use crate::recognize::RecognizeError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("graph is not an oriented cycle")]
    NotACycle,
    #[error("graph is not an oriented tree")]
    NotATree,
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(VertexId),
    #[error("vertex {0} is not a sink")]
    NotASink(VertexId),
    #[error("vertex {0} is not a source")]
    NotASource(VertexId),
    #[error("bad fountain: {0}")]
    BadSpec(String),
    #[error("wrong shape: {0}")]
    WrongShape(String),
    #[error("not strictly uni-dicyclic: {0}")]
    NotUnidicyclic(#[from] RecognizeError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    SinkOrder,
    SourceOrder,
    SinkFountainOrder,
    SourceFountainOrder,
    OtsoOrder,
}

/// A named spine order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpineOrderLabel {
    pub kind: OrderKind,
    pub root: VertexId,
    /// Top to bottom, so sink and sink-fountain orders start at the root.
    /// Embedding spines list the same vertices bottom to top.
    pub order: Vec<VertexId>,
}

impl SpineOrderLabel {
    fn of(kind: OrderKind, root: VertexId, emb: &BookEmbedding) -> Self {
        SpineOrderLabel {
            kind,
            root,
            order: emb.spine.iter().rev().copied().collect(),
        }
    }
}

fn one_page(spine: Vec<VertexId>, placement: BTreeMap<Arc, Placement>) -> BookEmbedding {
    let pages = usize::from(placement.values().any(|p| matches!(p, Placement::Page(_))));
    BookEmbedding::new(spine, placement, pages)
}

fn check_tree(t: &OrientedGraph, root: VertexId) -> Result<(), ConstructError> {
    if !t.has_vertex(root) {
        return Err(ConstructError::UnknownVertex(root));
    }
    if !t.is_tree() {
        return Err(ConstructError::NotATree);
    }
    Ok(())
}

/// Spine for a 1-page oriented cycle: the natural ordering from the smallest
/// vertex towards its smaller neighbour, bottom to top. The arc joining the
/// ends and every arc pointing its way go into the page; the rest are tight.
pub fn embed_oriented_cycle(g: &OrientedGraph) -> Result<BookEmbedding, ConstructError> {
    if !matches!(classify_shape(g), Ok(Shape::Dicycle | Shape::OrientedCycle)) {
        return Err(ConstructError::NotACycle);
    }
    let adj = g.adjacency();
    let start = *g.vertices().first().unwrap();
    let mut spine = vec![start, *adj[&start].iter().min().unwrap()];
    while spine.len() < g.vertex_count() {
        let (prev, at) = (spine[spine.len() - 2], spine[spine.len() - 1]);
        spine.push(*adj[&at].iter().find(|&&w| w != prev).unwrap());
    }
    let pos: BTreeMap<VertexId, usize> = spine.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let closing = g.arc_between(spine[0], *spine.last().unwrap()).unwrap();
    let up = |a: &Arc| pos[&a.tail] < pos[&a.head];
    let placement = g
        .arcs()
        .iter()
        .map(|a| (*a, if up(a) == up(&closing) { Placement::Page(0) } else { Placement::Spine }))
        .collect();
    Ok(BookEmbedding::new(spine, placement, 1))
}

/// Bottom to top: in-neighbour subtrees, the vertex, out-neighbour subtrees,
/// siblings by ascending id. Every arc points up and nothing passes over a
/// subtree's root.
fn otso_into(t: &OrientedGraph, v: VertexId, parent: Option<VertexId>, out: &mut Vec<VertexId>) {
    for u in t.in_neighbors(v) {
        if Some(u) != parent {
            otso_into(t, u, Some(v), out);
        }
    }
    out.push(v);
    for w in t.out_neighbors(v) {
        if Some(w) != parent {
            otso_into(t, w, Some(v), out);
        }
    }
}

pub fn otso_spine_order(t: &OrientedGraph, root: VertexId) -> Result<SpineOrderLabel, ConstructError> {
    let emb = embed_tree_loose(t, root)?;
    Ok(SpineOrderLabel::of(OrderKind::OtsoOrder, root, &emb))
}

/// 1-page embedding of an oriented tree with every arc in an upward page, no
/// tight arcs, and no arc passing over `root`.
pub fn embed_tree_loose(t: &OrientedGraph, root: VertexId) -> Result<BookEmbedding, ConstructError> {
    check_tree(t, root)?;
    let mut spine = Vec::with_capacity(t.vertex_count());
    otso_into(t, root, None, &mut spine);
    let placement = t.arcs().iter().map(|&a| (a, Placement::Page(0))).collect();
    Ok(one_page(spine, placement))
}

/// Tree with sink `x` embedded with `x` on top, all arcs upward in one page.
pub fn embed_tree_sink(t: &OrientedGraph, x: VertexId) -> Result<BookEmbedding, ConstructError> {
    check_tree(t, x)?;
    if t.out_degree(x) > 0 {
        return Err(ConstructError::NotASink(x));
    }
    embed_tree_loose(t, x)
}

/// Tree with source `x` embedded with `x` at the bottom, all arcs upward.
pub fn embed_tree_source(t: &OrientedGraph, x: VertexId) -> Result<BookEmbedding, ConstructError> {
    check_tree(t, x)?;
    if t.in_degree(x) > 0 {
        return Err(ConstructError::NotASource(x));
    }
    Ok(embed_tree_sink(&t.converse(), x)?.converse())
}

pub fn sink_spine_order(t: &OrientedGraph, x: VertexId) -> Result<SpineOrderLabel, ConstructError> {
    Ok(SpineOrderLabel::of(OrderKind::SinkOrder, x, &embed_tree_sink(t, x)?))
}

pub fn source_spine_order(t: &OrientedGraph, x: VertexId) -> Result<SpineOrderLabel, ConstructError> {
    Ok(SpineOrderLabel::of(OrderKind::SourceOrder, x, &embed_tree_source(t, x)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::graph::named;
    use crate::layout::{verify, Direction};

    fn one_page_valid(g: &OrientedGraph, e: &BookEmbedding) {
        let r = verify(g, e);
        assert!(r.is_valid(), "{r}");
        assert_eq!(e.pages, 1);
    }

    #[test]
    fn dicycle_gets_the_natural_shape() {
        let e = embed_oriented_cycle(&named::dicycle(4)).unwrap();
        assert_eq!(e.spine, vec![1, 2, 3, 4]);
        assert_eq!(e.tight_arcs(), vec![Arc::new(1, 2), Arc::new(2, 3), Arc::new(3, 4)]);
        assert_eq!(e.page_arcs(0), vec![Arc::new(4, 1)]);
        assert_eq!(e.direction(Arc::new(4, 1)).unwrap(), Direction::Down);
        one_page_valid(&named::dicycle(4), &e);
    }

    #[test]
    fn alternating_cycle_tights_the_opposite_arcs() {
        let c = g(&[(1, 2), (3, 2), (3, 4), (1, 4)]);
        let e = embed_oriented_cycle(&c).unwrap();
        one_page_valid(&c, &e);
        let closing = e.direction(Arc::new(1, 4)).unwrap();
        for a in c.arcs() {
            let tight = e.tight_arcs().contains(a);
            assert_eq!(tight, e.direction(*a).unwrap() != closing, "{a}");
        }
    }

    #[test]
    fn small_mixed_triangle() {
        let c = g(&[(1, 2), (3, 2), (3, 1)]);
        one_page_valid(&c, &embed_oriented_cycle(&c).unwrap());
        assert_eq!(embed_oriented_cycle(&dipath(3)), Err(ConstructError::NotACycle));
    }

    #[test]
    fn otso_examples() {
        let e = embed_tree_loose(&g(&[(1, 2)]), 2).unwrap();
        assert_eq!(e.spine, vec![1, 2]);
        one_page_valid(&g(&[(1, 2)]), &e);
        let e = embed_tree_loose(&s_minus(), 2).unwrap();
        assert_eq!(e.spine, vec![1, 3, 2]);
        assert!(!e.is_covered(2));
        assert!(e.tight_arcs().is_empty());
        let label = otso_spine_order(&s_minus(), 2).unwrap();
        assert_eq!(label.order, vec![2, 3, 1]);
        assert_eq!(embed_tree_loose(&named::dicycle(3), 1), Err(ConstructError::NotATree));
        assert_eq!(embed_tree_loose(&s_minus(), 7), Err(ConstructError::UnknownVertex(7)));
    }

    #[test]
    fn otso_on_a_mixed_tree_every_root() {
        let t = g(&[(1, 2), (3, 2), (2, 4), (4, 5), (6, 4), (5, 7)]);
        for &r in t.vertices() {
            let e = embed_tree_loose(&t, r).unwrap();
            one_page_valid(&t, &e);
            assert!(!e.is_covered(r));
            assert!(e.tight_arcs().is_empty());
            assert!(t.arcs().iter().all(|a| e.direction(*a).unwrap() == Direction::Up));
        }
    }

    #[test]
    fn sink_and_source() {
        let e = embed_tree_sink(&s_minus(), 2).unwrap();
        assert_eq!(e.top(), Some(2));
        one_page_valid(&s_minus(), &e);
        let star = g(&[(1, 9), (2, 9), (3, 9), (4, 9)]);
        let e = embed_tree_sink(&star, 9).unwrap();
        assert_eq!(e.top(), Some(9));
        assert_eq!(e.page_arcs(0).len(), 4);
        one_page_valid(&star, &e);
        let lone = OrientedGraph::new([5], []).unwrap();
        let e = embed_tree_sink(&lone, 5).unwrap();
        assert_eq!((e.spine.clone(), e.pages), (vec![5], 0));
        assert_eq!(embed_tree_sink(&s_plus(), 2), Err(ConstructError::NotASink(2)));
        let e = embed_tree_source(&s_plus(), 2).unwrap();
        assert_eq!(e.bottom(), Some(2));
        one_page_valid(&s_plus(), &e);
        assert_eq!(sink_spine_order(&s_minus(), 2).unwrap().order[0], 2);
        assert_eq!(source_spine_order(&s_plus(), 2).unwrap().order.last(), Some(&2));
    }
}
