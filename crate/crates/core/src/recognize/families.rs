//! Standard labelled members of the forbidden families.
//!
//! Dicycle vertices are `1..=n` with arcs `(i, i+1)` and `(n, 1)`; extra
//! vertices are numbered from `n + 1` in the order they are introduced.

use crate::graph::named::dicycle;
use crate::graph::{Arc, OrientedGraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// Pendant arc direction relative to the dicycle vertex it hangs from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pendant {
    Out,
    In,
}

fn pendant(root: VertexId, leaf: VertexId, dir: Pendant) -> Arc {
    match dir {
        Pendant::Out => Arc::new(root, leaf),
        Pendant::In => Arc::new(leaf, root),
    }
}

fn with_arcs(base: OrientedGraph, extra: Vec<Arc>) -> OrientedGraph {
    let vertices = base
        .vertices()
        .iter()
        .copied()
        .chain(extra.iter().flat_map(|a| [a.tail, a.head]))
        .collect::<Vec<_>>();
    let arcs = base.arcs().iter().copied().chain(extra);
    OrientedGraph::new(vertices, arcs).expect("family members are simple")
}

/// Antler on vertices `1..=j+2`: the dipath `1..=j` (forward when positive,
/// backward when negative) with tips `j+1`, `j+2` at the branch vertex `j`.
/// Vertex 1 is the root.
pub fn antler(sign: Sign, j: usize) -> OrientedGraph {
    assert!(j >= 1);
    let j = j as VertexId;
    let mut arcs: Vec<Arc> = (1..j).map(|i| Arc::new(i, i + 1)).collect();
    arcs.push(Arc::new(j, j + 1));
    arcs.push(Arc::new(j, j + 2));
    let g = OrientedGraph::from_arcs(arcs).unwrap();
    match sign {
        Sign::Positive => g,
        Sign::Negative => g.converse(),
    }
}

/// n-dicycle with pendant vertices `n+1` at `i` and `n+2` at `j` (1-based,
/// non-adjacent around the cycle).
pub fn member_i(n: usize, i: usize, j: usize, dirs: [Pendant; 2]) -> OrientedGraph {
    assert!(n >= 4 && i != j && i.max(j) <= n && i.min(j) >= 1);
    let gap = i.abs_diff(j);
    assert!(gap > 1 && gap < n - 1, "pendant vertices must be non-adjacent");
    let n = n as VertexId;
    with_arcs(
        dicycle(n),
        vec![pendant(i as VertexId, n + 1, dirs[0]), pendant(j as VertexId, n + 2, dirs[1])],
    )
}

/// The three members on a 4-dicycle: pendants at 1 and 3, both out, mixed,
/// both in.
pub fn members_i_on_four() -> Vec<OrientedGraph> {
    use Pendant::*;
    [[Out, Out], [Out, In], [In, In]]
        .into_iter()
        .map(|d| member_i(4, 1, 3, d))
        .collect()
}

/// 3-dicycle with pendant vertex `3+i` at dicycle vertex `i`.
pub fn member_t(dirs: [Pendant; 3]) -> OrientedGraph {
    with_arcs(dicycle(3), (1..=3).map(|i| pendant(i, 3 + i, dirs[i as usize - 1])).collect())
}

/// All four members, one per pendant pattern up to rotation.
pub fn members_t() -> Vec<OrientedGraph> {
    use Pendant::*;
    [[Out, Out, Out], [Out, Out, In], [Out, In, In], [In, In, In]]
        .into_iter()
        .map(member_t)
        .collect()
}

/// n-dicycle with a positive j-antler rooted at 1 and a negative k-antler
/// rooted at 2. Extra vertices: the antler at 1 (path then tips), then the
/// antler at 2.
pub fn member_r(n: usize, j: usize, k: usize) -> OrientedGraph {
    assert!(n >= 3 && j >= 1 && k >= 1);
    let mut next = n as VertexId + 1;
    let mut fresh = || {
        next += 1;
        next - 1
    };
    let mut arcs = Vec::new();
    let mut at = 1;
    for _ in 1..j {
        let v = fresh();
        arcs.push(Arc::new(at, v));
        at = v;
    }
    let (t1, t2) = (fresh(), fresh());
    arcs.push(Arc::new(at, t1));
    arcs.push(Arc::new(at, t2));
    let mut at = 2;
    for _ in 1..k {
        let v = fresh();
        arcs.push(Arc::new(v, at));
        at = v;
    }
    let (t1, t2) = (fresh(), fresh());
    arcs.push(Arc::new(t1, at));
    arcs.push(Arc::new(t2, at));
    with_arcs(dicycle(n as VertexId), arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_isomorphic, named};

    #[test]
    fn antler_shapes() {
        assert!(is_isomorphic(&antler(Sign::Positive, 1), &named::s_plus()));
        assert!(is_isomorphic(&antler(Sign::Negative, 1), &named::s_minus()));
        let a3 = antler(Sign::Positive, 3);
        assert_eq!((a3.vertex_count(), a3.arc_count()), (5, 4));
        assert_eq!(a3.out_neighbors(3).len(), 2);
        assert!(is_isomorphic(&antler(Sign::Negative, 4), &antler(Sign::Positive, 4).converse()));
    }

    #[test]
    fn family_sizes() {
        let i = members_i_on_four();
        assert_eq!(i.len(), 3);
        let t = members_t();
        assert_eq!(t.len(), 4);
        for (a, x) in t.iter().enumerate() {
            for y in &t[a + 1..] {
                assert!(!is_isomorphic(x, y));
            }
        }
        assert!(!is_isomorphic(&i[0], &i[1]) && !is_isomorphic(&i[1], &i[2]) && !is_isomorphic(&i[0], &i[2]));
        for (j, k, n) in [(1, 1, 7), (2, 1, 8), (2, 2, 9)] {
            assert_eq!(member_r(3, j, k).vertex_count(), n);
        }
    }

    #[test]
    fn r_antlers_are_rooted_on_the_cycle_arc() {
        let r = member_r(3, 2, 2);
        // 1 -> 4 -> {5, 6}; 2 <- 7 <- {8, 9}
        assert!(r.has_arc(Arc::new(1, 4)) && r.has_arc(Arc::new(4, 5)) && r.has_arc(Arc::new(4, 6)));
        assert!(r.has_arc(Arc::new(7, 2)) && r.has_arc(Arc::new(8, 7)) && r.has_arc(Arc::new(9, 7)));
    }
}
