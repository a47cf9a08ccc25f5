//! Strictly uni-dicyclic graphs: 1-page embeddings when no forbidden
//! subgraph is present.

use std::collections::BTreeMap;

use super::{
    embed_fountain, embed_oriented_cycle, embed_tree_loose, one_page, recognize_sink_fountain, ConstructError,
    FountainRecognition,
};
use crate::graph::{Arc, OrientedGraph, VertexId};
use crate::layout::{BookEmbedding, Placement};
use crate::recognize::{
    decompose_unidicyclic, detect_forbidden, find_antler, heavy_vertices, DicycleDecomposition, ForbiddenWitness,
    Sign,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnidicyclicOutcome {
    Embedded(BookEmbedding),
    Forbidden(ForbiddenWitness),
}

/// The dicycle listed from heavy `φ(1)` goes directly below it, top down, so
/// its arcs are tight and downward; the arc back to `φ(1)` goes up in the
/// page. The tree at `φ(1)` keeps its loose layout around the block. Other
/// trees are ignored.
fn cycle_below_root_layout(d: &DicycleDecomposition) -> (Vec<VertexId>, BTreeMap<Arc, Placement>) {
    let root = d.phi(1);
    let tree = d.tree(root);
    let loose = embed_tree_loose(tree, root).expect("attached trees are trees");
    let at = loose.spine_position(root).unwrap();
    let mut spine = loose.spine[..at].to_vec();
    spine.extend((2..=d.len()).rev().map(|i| d.phi(i)));
    spine.extend_from_slice(&loose.spine[at..]);
    let mut placement = loose.placement;
    for (i, a) in d.cycle_arcs().into_iter().enumerate() {
        let last = i + 1 == d.len();
        placement.insert(a, if last { Placement::Page(0) } else { Placement::Spine });
    }
    (spine, placement)
}

/// At most one heavy vertex: a bare dicycle or the layout above.
pub fn embed_unidicyclic_one_heavy(g: &OrientedGraph, d: &DicycleDecomposition) -> Result<BookEmbedding, ConstructError> {
    if d.graph() != *g {
        return Err(ConstructError::WrongShape("decomposition does not match the graph".into()));
    }
    let heavy = heavy_vertices(d);
    match heavy.as_slice() {
        [] => embed_oriented_cycle(g),
        [h] => {
            let start = d.dicycle.iter().position(|v| v == h).unwrap() + 1;
            let (spine, placement) = cycle_below_root_layout(&d.rotated(start));
            Ok(one_page(spine, placement))
        }
        _ => Err(ConstructError::WrongShape(format!("{} heavy vertices", heavy.len()))),
    }
}

/// Heavy `x`, `y` with arc `(x, y)` and no positive antler rooted at `x`:
/// lay out the dicycle with the tree at `y`, which leaves `x` at the bottom
/// of the dicycle block, then hang the sink fountain of the tree at `x`
/// directly below it.
fn two_heavy(d: &DicycleDecomposition, x: VertexId, y: VertexId) -> BookEmbedding {
    let start = d.dicycle.iter().position(|&v| v == y).unwrap() + 1;
    let d = d.rotated(start);
    debug_assert_eq!(d.phi(d.len()), x);
    let (mut spine, mut placement) = cycle_below_root_layout(&d);
    let FountainRecognition::Fountain(spec) = recognize_sink_fountain(d.tree(x), x).expect("tree") else {
        unreachable!("caller checked for a positive antler");
    };
    let hang = embed_fountain(&spec).expect("recognized fountains embed");
    let at = spine.iter().position(|&v| v == x).unwrap();
    let below: Vec<VertexId> = hang.spine[..hang.spine.len() - 1].to_vec();
    spine.splice(at..at, below);
    placement.extend(hang.placement);
    one_page(spine, placement)
}

/// A 1-page embedding, or a forbidden subgraph showing there is none.
pub fn embed_unidicyclic(g: &OrientedGraph) -> Result<UnidicyclicOutcome, ConstructError> {
    let d = decompose_unidicyclic(g)?;
    if let Some(w) = detect_forbidden(&d) {
        return Ok(UnidicyclicOutcome::Forbidden(w));
    }
    let heavy = heavy_vertices(&d);
    let emb = match heavy.as_slice() {
        [] | [_] => embed_unidicyclic_one_heavy(g, &d)?,
        &[a, b] => {
            let (x, y) = if g.has_arc(Arc::new(a, b)) { (a, b) } else { (b, a) };
            if !g.has_arc(Arc::new(x, y)) {
                return Err(ConstructError::WrongShape("heavy vertices are not adjacent".into()));
            }
            if find_antler(d.tree(x), x, Sign::Positive).is_none() {
                two_heavy(&d, x, y)
            } else {
                let conv = decompose_unidicyclic(&g.converse())?;
                two_heavy(&conv, y, x).converse()
            }
        }
        _ => return Err(ConstructError::WrongShape(format!("{} heavy vertices", heavy.len()))),
    };
    Ok(UnidicyclicOutcome::Embedded(emb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::layout::{verify, Direction};
    use crate::recognize::families::{member_r, members_t};
    use crate::recognize::Family;

    fn embeds(arcs: &[(VertexId, VertexId)]) -> BookEmbedding {
        let h = g(arcs);
        match embed_unidicyclic(&h).unwrap() {
            UnidicyclicOutcome::Embedded(e) => {
                let r = verify(&h, &e);
                assert!(r.is_valid(), "{r}\n{e:?}");
                assert_eq!(e.pages, 1);
                e
            }
            UnidicyclicOutcome::Forbidden(w) => panic!("{}", w.report()),
        }
    }

    #[test]
    fn one_heavy_examples() {
        let e = embeds(&[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (6, 1)]);
        // closing arc endpoints are half-loose
        assert_eq!(e.tight_degree(5), 1);
        assert_eq!(e.tight_degree(1), 1);
        assert_eq!(e.direction(Arc::new(5, 1)).unwrap(), Direction::Up);
        embeds(&[(1, 2), (2, 3), (3, 1), (1, 4), (5, 4)]);
        embeds(&[(1, 2), (2, 3), (3, 1), (4, 1), (1, 5), (5, 6)]);
        let e = embeds(&[(1, 2), (2, 3), (3, 1)]);
        assert_eq!(e.spine, vec![1, 2, 3]);
    }

    #[test]
    fn one_heavy_rejects_more() {
        let h = g(&[(1, 2), (2, 3), (3, 1), (1, 4), (2, 5)]);
        let d = decompose_unidicyclic(&h).unwrap();
        assert!(matches!(embed_unidicyclic_one_heavy(&h, &d), Err(ConstructError::WrongShape(_))));
    }

    #[test]
    fn adjacent_stars() {
        // sink star at 1, source star at 2
        embeds(&[(1, 2), (2, 3), (3, 4), (4, 1), (5, 1), (6, 1), (2, 7), (2, 8)]);
        // source star at 1 blocks the tail side; source star at 2 leaves the head side
        embeds(&[(1, 2), (2, 3), (3, 1), (1, 4), (1, 5), (2, 6), (2, 7)]);
        // fountain at the tail
        embeds(&[(1, 2), (2, 3), (3, 1), (1, 4), (5, 4), (6, 1), (2, 7), (8, 2)]);
    }

    #[test]
    fn forbidden_members() {
        for t in members_t() {
            match embed_unidicyclic(&t).unwrap() {
                UnidicyclicOutcome::Forbidden(w) => assert_eq!(w.family, Family::ClassT),
                other => panic!("{other:?}"),
            }
        }
        match embed_unidicyclic(&member_r(3, 2, 2)).unwrap() {
            UnidicyclicOutcome::Forbidden(w) => assert_eq!(w.family, Family::ClassR { n: 3, j: 2, k: 2 }),
            other => panic!("{other:?}"),
        }
        assert!(matches!(embed_unidicyclic(&dipath(3)), Err(ConstructError::NotUnidicyclic(_))));
    }
}
