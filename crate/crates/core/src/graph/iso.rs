//! Canonical forms and isomorphism for small oriented graphs.
//!
//! The canonical code is the lexicographically least adjacency encoding over
//! all vertex orders that respect an isomorphism-invariant colour refinement
//! (in/out degrees, then neighbour colours). The search is branch and bound:
//! the code is laid out so that a prefix of the order fixes a prefix of the
//! code, and any branch whose partial code exceeds the best one is cut.

use std::collections::BTreeMap;

use super::{OrientedGraph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    /// Isomorphism-invariant code: equal codes iff isomorphic graphs.
    pub code: Vec<u8>,
    /// `labeling[k]` is the vertex placed at canonical position `k`.
    pub labeling: Vec<VertexId>,
}

impl CanonicalForm {
    /// The representative graph on vertices `0..n`.
    pub fn graph(&self, g: &OrientedGraph) -> OrientedGraph {
        let map: BTreeMap<VertexId, VertexId> = self
            .labeling
            .iter()
            .enumerate()
            .map(|(k, &v)| (v, k as VertexId))
            .collect();
        g.relabel(&map)
    }
}

/// Panics if `g` has more than 64 vertices.
pub fn canonical_form(g: &OrientedGraph) -> CanonicalForm {
    let d = g.dense();
    let (code, order) = canonical_rows(&d.out_rows());
    CanonicalForm {
        code,
        labeling: order.into_iter().map(|i| d.ids[i]).collect(),
    }
}

pub fn is_isomorphic(g1: &OrientedGraph, g2: &OrientedGraph) -> bool {
    isomorphism(g1, g2).is_some()
}

/// An arc-preserving bijection `V(g1) -> V(g2)`, if one exists.
pub fn isomorphism(g1: &OrientedGraph, g2: &OrientedGraph) -> Option<BTreeMap<VertexId, VertexId>> {
    if g1.vertex_count() != g2.vertex_count() || g1.arc_count() != g2.arc_count() {
        return None;
    }
    let c1 = canonical_form(g1);
    let c2 = canonical_form(g2);
    (c1.code == c2.code).then(|| c1.labeling.into_iter().zip(c2.labeling).collect())
}

/// Canonical code and order for a digraph given as out-neighbour bitmasks.
/// Symmetric rows give the canonical form of an undirected graph.
pub(crate) fn canonical_rows(rows: &[u64]) -> (Vec<u8>, Vec<usize>) {
    let n = rows.len();
    assert!(n <= 64, "canonical form limited to 64 vertices");
    let in_rows = transpose(rows);
    let colour = refine(rows, &in_rows);

    let mut cells: Vec<usize> = (0..n).collect();
    cells.sort_by_key(|&v| colour[v]);
    let slot_colour: Vec<usize> = cells.iter().map(|&v| colour[v]).collect();

    let mut search = Search {
        rows,
        colour: &colour,
        slot_colour: &slot_colour,
        order: Vec::with_capacity(n),
        code: Vec::with_capacity(n * n),
        best: None,
    };
    search.run(0);
    let (code, order) = search.best.unwrap_or_default();
    (code, order)
}

fn transpose(rows: &[u64]) -> Vec<u64> {
    let mut t = vec![0u64; rows.len()];
    for (i, &r) in rows.iter().enumerate() {
        for (j, tj) in t.iter_mut().enumerate() {
            if r >> j & 1 == 1 {
                *tj |= 1 << i;
            }
        }
    }
    t
}

fn members(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&j| mask >> j & 1 == 1)
}

/// Colour refinement. Colours are ranks of signatures, so they depend only on
/// the isomorphism type of each vertex's neighbourhood, never on its index.
fn refine(out_rows: &[u64], in_rows: &[u64]) -> Vec<usize> {
    let n = out_rows.len();
    let mut colour: Vec<usize> = {
        let sig: Vec<(u32, u32)> = (0..n)
            .map(|v| (out_rows[v].count_ones(), in_rows[v].count_ones()))
            .collect();
        rank(&sig)
    };
    let mut classes = count_classes(&colour);
    loop {
        let sig: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut outs: Vec<usize> = members(out_rows[v]).map(|w| colour[w]).collect();
                let mut ins: Vec<usize> = members(in_rows[v]).map(|w| colour[w]).collect();
                outs.sort_unstable();
                ins.sort_unstable();
                (colour[v], outs, ins)
            })
            .collect();
        let next = rank(&sig);
        let next_classes = count_classes(&next);
        colour = next;
        if next_classes == classes {
            return colour;
        }
        classes = next_classes;
    }
}

fn rank<T: Ord + Clone>(sig: &[T]) -> Vec<usize> {
    let mut sorted: Vec<T> = sig.to_vec();
    sorted.sort();
    sorted.dedup();
    sig.iter()
        .map(|s| sorted.binary_search(s).unwrap())
        .collect()
}

fn count_classes(colour: &[usize]) -> usize {
    let mut c = colour.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct Search<'a> {
    rows: &'a [u64],
    colour: &'a [usize],
    slot_colour: &'a [usize],
    order: Vec<usize>,
    code: Vec<u8>,
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, k: usize) {
        let n = self.rows.len();
        if k == n {
            let better = match &self.best {
                None => true,
                Some((best, _)) => self.code < *best,
            };
            if better {
                self.best = Some((self.code.clone(), self.order.clone()));
            }
            return;
        }
        for v in 0..n {
            if self.colour[v] != self.slot_colour[k] || self.order.contains(&v) {
                continue;
            }
            let mark = self.code.len();
            for &u in &self.order {
                self.code.push((self.rows[u] >> v & 1) as u8);
                self.code.push((self.rows[v] >> u & 1) as u8);
            }
            let pruned = match &self.best {
                Some((best, _)) => self.code[..] > best[..self.code.len()],
                None => false,
            };
            if !pruned {
                self.order.push(v);
                self.run(k + 1);
                self.order.pop();
            }
            self.code.truncate(mark);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::graph::Arc;
    use itertools::Itertools;

    #[test]
    fn dicycle_is_isomorphic_to_its_converse() {
        let d3 = dicycle(3);
        let map = isomorphism(&d3, &d3.converse()).unwrap();
        for a in d3.arcs() {
            assert!(d3.converse().has_arc(Arc::new(map[&a.tail], map[&a.head])));
        }
    }

    #[test]
    fn s_plus_and_s_minus_differ() {
        assert!(!is_isomorphic(&s_plus(), &s_minus()));
    }

    #[test]
    fn switched_arc_breaks_isomorphism() {
        let switched = g(&[(1, 2), (3, 2), (3, 4)]);
        assert!(!is_isomorphic(&dipath(4), &switched));
        assert!(is_isomorphic(&dipath(4), &g(&[(9, 7), (7, 5), (5, 1)])));
    }

    /// Against the definition: some permutation maps the arc set onto the other.
    fn brute_isomorphic(a: &OrientedGraph, b: &OrientedGraph) -> bool {
        let av: Vec<_> = a.vertices().iter().copied().collect();
        let bv: Vec<_> = b.vertices().iter().copied().collect();
        if av.len() != bv.len() || a.arc_count() != b.arc_count() {
            return false;
        }
        bv.iter().copied().permutations(bv.len()).any(|p| {
            let m: BTreeMap<_, _> = av.iter().copied().zip(p).collect();
            a.arcs()
                .iter()
                .all(|x| b.has_arc(Arc::new(m[&x.tail], m[&x.head])))
        })
    }

    #[test]
    fn agrees_with_brute_force_on_all_4_vertex_orientations() {
        // every oriented graph on {0,1,2,3}: each of 6 pairs is absent/forward/backward
        let pairs: Vec<(u32, u32)> = (0..4).tuple_combinations().collect();
        let mut graphs = Vec::new();
        for mut m in 0..3usize.pow(6) {
            let mut arcs = Vec::new();
            for &(u, v) in &pairs {
                match m % 3 {
                    1 => arcs.push(Arc::new(u, v)),
                    2 => arcs.push(Arc::new(v, u)),
                    _ => {}
                }
                m /= 3;
            }
            graphs.push(OrientedGraph::new(0..4, arcs).unwrap());
        }
        // sample pairs deterministically to keep the quadratic check cheap
        for (i, a) in graphs.iter().enumerate().step_by(7) {
            for b in graphs.iter().skip(i % 5).step_by(13) {
                assert_eq!(is_isomorphic(a, b), brute_isomorphic(a, b), "{a}\nvs\n{b}");
            }
        }
    }

    #[test]
    fn relabelled_graph_has_same_code() {
        let d = g(&[(1, 2), (2, 3), (3, 1), (3, 4), (5, 1)]);
        let map: BTreeMap<_, _> = [(1, 40), (2, 10), (3, 30), (4, 20), (5, 50)].into();
        let e = d.relabel(&map);
        assert_eq!(canonical_form(&d).code, canonical_form(&e).code);
        let rep = canonical_form(&d).graph(&d);
        assert!(brute_isomorphic(&rep, &d));
    }
}
