//! Fountain trees: a dipath `x1 -> … -> xn` with a tree hung at each `xi` in
//! which `xi` is a sink (sink fountain), or the converse (source fountain).

use std::collections::{BTreeMap, BTreeSet};

use super::{check_tree, embed_tree_sink, one_page, ConstructError, OrderKind, SpineOrderLabel};
use crate::graph::{Arc, OrientedGraph, VertexId};
use crate::layout::{BookEmbedding, Placement};
use crate::recognize::{find_antler, AntlerWitness, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FountainKind {
    /// Path arcs `(xi, xi+1)`; `xi` is a sink of its tree.
    Sink,
    /// Path arcs `(xi+1, xi)`; `xi` is a source of its tree.
    Source,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FountainSpec {
    pub kind: FountainKind,
    pub spine_path: Vec<VertexId>,
    /// One tree per path vertex, containing it; a lone vertex when trivial.
    pub attached: BTreeMap<VertexId, OrientedGraph>,
}

impl FountainSpec {
    pub fn path_arcs(&self) -> Vec<Arc> {
        self.spine_path
            .windows(2)
            .map(|w| match self.kind {
                FountainKind::Sink => Arc::new(w[0], w[1]),
                FountainKind::Source => Arc::new(w[1], w[0]),
            })
            .collect()
    }

    pub fn converse(&self) -> FountainSpec {
        FountainSpec {
            kind: match self.kind {
                FountainKind::Sink => FountainKind::Source,
                FountainKind::Source => FountainKind::Sink,
            },
            spine_path: self.spine_path.clone(),
            attached: self.attached.iter().map(|(&v, t)| (v, t.converse())).collect(),
        }
    }

    fn validate(&self) -> Result<(), ConstructError> {
        let bad = |m: String| Err(ConstructError::BadSpec(m));
        if self.spine_path.is_empty() {
            return bad("empty spine path".into());
        }
        let path: BTreeSet<VertexId> = self.spine_path.iter().copied().collect();
        if path.len() != self.spine_path.len() {
            return bad("spine path repeats a vertex".into());
        }
        if self.attached.keys().copied().collect::<BTreeSet<_>>() != path {
            return bad("attached trees must be keyed by exactly the path vertices".into());
        }
        let mut seen = path.clone();
        for (&x, t) in &self.attached {
            check_tree(t, x).map_err(|e| ConstructError::BadSpec(format!("tree at {x}: {e}")))?;
            let wrong = match self.kind {
                FountainKind::Sink => t.out_degree(x) > 0,
                FountainKind::Source => t.in_degree(x) > 0,
            };
            if wrong {
                return bad(format!("tree at {x} has the wrong orientation at its root"));
            }
            for &v in t.vertices() {
                if v != x && !seen.insert(v) {
                    return bad(format!("vertex {v} is shared"));
                }
            }
        }
        Ok(())
    }
}

pub fn build_fountain_tree(spec: &FountainSpec) -> Result<OrientedGraph, ConstructError> {
    spec.validate()?;
    let vertices: Vec<VertexId> = spec.attached.values().flat_map(|t| t.vertices().iter().copied()).collect();
    let arcs = spec
        .attached
        .values()
        .flat_map(|t| t.arcs().iter().copied())
        .chain(spec.path_arcs());
    OrientedGraph::new(vertices, arcs).map_err(|e| ConstructError::BadSpec(e.to_string()))
}

/// Top to bottom: `x1 … xn`, then the sink embeddings of the trees below
/// their roots in reverse path order. Path arcs are tight and point down,
/// tree arcs go up in page 0. Source fountains get the converse layout.
pub fn embed_fountain(spec: &FountainSpec) -> Result<BookEmbedding, ConstructError> {
    spec.validate()?;
    if spec.kind == FountainKind::Source {
        return Ok(embed_fountain(&spec.converse())?.converse());
    }
    let mut top_down: Vec<VertexId> = spec.spine_path.clone();
    let mut placement: BTreeMap<Arc, Placement> = BTreeMap::new();
    for &x in spec.spine_path.iter().rev() {
        let e = embed_tree_sink(&spec.attached[&x], x)?;
        top_down.extend(e.spine.iter().rev().skip(1));
        placement.extend(e.placement);
    }
    for a in spec.path_arcs() {
        placement.insert(a, Placement::Spine);
    }
    top_down.reverse();
    Ok(one_page(top_down, placement))
}

pub fn fountain_spine_order(spec: &FountainSpec) -> Result<SpineOrderLabel, ConstructError> {
    let kind = match spec.kind {
        FountainKind::Sink => OrderKind::SinkFountainOrder,
        FountainKind::Source => OrderKind::SourceFountainOrder,
    };
    Ok(SpineOrderLabel::of(kind, spec.spine_path[0], &embed_fountain(spec)?))
}

/// For `i < j`, every page arc ending at `xj` (starting at `xj` for source
/// fountains) lies inside every page arc ending at `xi`.
pub fn fountain_nesting_holds(spec: &FountainSpec, emb: &BookEmbedding) -> bool {
    let pos = emb.positions();
    let span = |a: &Arc| {
        let (t, h) = (pos[&a.tail], pos[&a.head]);
        (t.min(h), t.max(h))
    };
    let at = |x: VertexId| -> Vec<(usize, usize)> {
        emb.loose_arcs()
            .iter()
            .filter(|a| match spec.kind {
                FountainKind::Sink => a.head == x,
                FountainKind::Source => a.tail == x,
            })
            .map(span)
            .collect()
    };
    let groups: Vec<Vec<(usize, usize)>> = spec.spine_path.iter().map(|&x| at(x)).collect();
    groups.iter().enumerate().all(|(i, outer)| {
        groups[i + 1..].iter().flatten().all(|&(l, r)| outer.iter().all(|&(ol, or)| ol <= l && r <= or))
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FountainRecognition {
    Fountain(FountainSpec),
    Antler(AntlerWitness),
}

/// Walks the unique out-arcs from `x`. A vertex with two or more out-arcs on
/// the walk is a positive antler rooted at `x`; otherwise the walk is the
/// spine path of a sink fountain.
pub fn recognize_sink_fountain(t: &OrientedGraph, x: VertexId) -> Result<FountainRecognition, ConstructError> {
    recognize(t, x, FountainKind::Sink)
}

/// Dual of [`recognize_sink_fountain`], following in-arcs.
pub fn recognize_source_fountain(t: &OrientedGraph, x: VertexId) -> Result<FountainRecognition, ConstructError> {
    recognize(t, x, FountainKind::Source)
}

fn recognize(t: &OrientedGraph, x: VertexId, kind: FountainKind) -> Result<FountainRecognition, ConstructError> {
    check_tree(t, x)?;
    let (sign, step): (Sign, fn(&OrientedGraph, VertexId) -> BTreeSet<VertexId>) = match kind {
        FountainKind::Sink => (Sign::Positive, OrientedGraph::out_neighbors),
        FountainKind::Source => (Sign::Negative, OrientedGraph::in_neighbors),
    };
    if let Some(w) = find_antler(t, x, sign) {
        return Ok(FountainRecognition::Antler(w));
    }
    let mut spine_path = vec![x];
    while let Some(&next) = step(t, *spine_path.last().unwrap()).first() {
        spine_path.push(next);
    }
    let mut spec = FountainSpec {
        kind,
        spine_path,
        attached: BTreeMap::new(),
    };
    let path_arcs = spec.path_arcs();
    let forest = OrientedGraph::new(
        t.vertices().iter().copied(),
        t.arcs().iter().copied().filter(|a| !path_arcs.contains(a)),
    )
    .expect("subgraph of a tree");
    for comp in forest.components() {
        let root = *spec.spine_path.iter().find(|v| comp.contains(v)).expect("each piece meets the path");
        spec.attached.insert(root, forest.induced(&comp));
    }
    Ok(FountainRecognition::Fountain(spec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::layout::verify;
    use crate::recognize::families::antler;

    fn tree(arcs: &[(VertexId, VertexId)], root: VertexId) -> OrientedGraph {
        if arcs.is_empty() {
            OrientedGraph::new([root], []).unwrap()
        } else {
            g(arcs)
        }
    }

    /// Two S- shaped attachments on a 2-path.
    fn two_step() -> FountainSpec {
        FountainSpec {
            kind: FountainKind::Sink,
            spine_path: vec![1, 2],
            attached: BTreeMap::from([
                (1, tree(&[(3, 1), (4, 1)], 1)),
                (2, tree(&[(5, 2), (6, 2)], 2)),
            ]),
        }
    }

    #[test]
    fn two_step_fountain() {
        let spec = two_step();
        let g = build_fountain_tree(&spec).unwrap();
        assert_eq!(g.arc_count(), 5);
        let e = embed_fountain(&spec).unwrap();
        assert!(verify(&g, &e).is_valid(), "{}", verify(&g, &e));
        assert_eq!(e.pages, 1);
        assert_eq!(e.top(), Some(1));
        assert_eq!(e.tight_arcs(), vec![Arc::new(1, 2)]);
        assert!(fountain_nesting_holds(&spec, &e));
        let label = fountain_spine_order(&spec).unwrap();
        assert_eq!(label.order[..2], [1, 2]);
    }

    #[test]
    fn single_vertex_path_is_a_sink_embedding() {
        let spec = FountainSpec {
            kind: FountainKind::Sink,
            spine_path: vec![1],
            attached: BTreeMap::from([(1, tree(&[(2, 1), (3, 2)], 1))]),
        };
        let t = build_fountain_tree(&spec).unwrap();
        assert_eq!(embed_fountain(&spec).unwrap(), embed_tree_sink(&t, 1).unwrap());
    }

    #[test]
    fn mixed_sizes_three_steps() {
        let spec = FountainSpec {
            kind: FountainKind::Sink,
            spine_path: vec![1, 2, 3],
            attached: BTreeMap::from([
                (1, tree(&[(4, 1), (5, 4), (4, 6)], 1)),
                (2, tree(&[], 2)),
                (3, tree(&[(7, 3)], 3)),
            ]),
        };
        let g = build_fountain_tree(&spec).unwrap();
        let e = embed_fountain(&spec).unwrap();
        assert!(verify(&g, &e).is_valid());
        assert!(fountain_nesting_holds(&spec, &e));
        let source = spec.converse();
        let e = embed_fountain(&source).unwrap();
        assert!(verify(&build_fountain_tree(&source).unwrap(), &e).is_valid());
        assert!(fountain_nesting_holds(&source, &e));
    }

    #[test]
    fn bad_specs() {
        let mut s = two_step();
        s.attached.insert(1, tree(&[(1, 3), (4, 1)], 1));
        assert!(matches!(build_fountain_tree(&s), Err(ConstructError::BadSpec(_))));
        let mut s = two_step();
        s.attached.insert(2, tree(&[(3, 2)], 2));
        assert!(matches!(embed_fountain(&s), Err(ConstructError::BadSpec(_))));
        let mut s = two_step();
        s.spine_path = vec![];
        assert!(matches!(build_fountain_tree(&s), Err(ConstructError::BadSpec(_))));
    }

    #[test]
    fn recognition() {
        match recognize_sink_fountain(&s_plus(), 2).unwrap() {
            FountainRecognition::Antler(w) => assert_eq!((w.j, w.branch_vertex), (1, 2)),
            other => panic!("{other:?}"),
        }
        match recognize_sink_fountain(&antler(Sign::Positive, 3), 1).unwrap() {
            FountainRecognition::Antler(w) => assert_eq!(w.j, 3),
            other => panic!("{other:?}"),
        }
        match recognize_sink_fountain(&s_minus(), 2).unwrap() {
            FountainRecognition::Fountain(spec) => {
                assert_eq!(spec.spine_path, vec![2]);
                assert_eq!(spec.attached[&2], s_minus());
            }
            other => panic!("{other:?}"),
        }
        let spec = two_step();
        let t = build_fountain_tree(&spec).unwrap();
        assert_eq!(recognize_sink_fountain(&t, 1).unwrap(), FountainRecognition::Fountain(spec.clone()));
        let conv = spec.converse();
        let t = build_fountain_tree(&conv).unwrap();
        assert_eq!(recognize_source_fountain(&t, 1).unwrap(), FountainRecognition::Fountain(conv));
    }
}
