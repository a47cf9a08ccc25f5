//! Seeded random instances and the exhaustive strictly uni-dicyclic set.
//!
//! The generator is SplitMix64 (state advanced by `0x9e3779b97f4a7c15`, then
//! the two multiply-xorshift rounds with `0xbf58476d1ce4e5b9` and
//! `0x94d049bb133111eb`). Only `u32` ranges and Bernoulli draws are sampled,
//! so a seed gives the same graph on every platform.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
pub use rand_xoshiro::SplitMix64;
use thiserror::Error;

use crate::constructive::{FountainKind, FountainSpec};
use crate::graph::{canonical_form, Arc, OrientedGraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenShape {
    Tree,
    Cycle,
    Dicycle,
    Unidicyclic,
    Fountain,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("a {shape} needs at least {min} vertices, got {n}")]
pub struct GenerateError {
    pub shape: &'static str,
    pub min: usize,
    pub n: usize,
}

pub fn rng(seed: u64) -> SplitMix64 {
    SplitMix64::seed_from_u64(seed)
}

/// One random instance with `n` vertices labelled `1..=n`.
pub fn generate(shape: GenShape, n: usize, seed: u64) -> Result<OrientedGraph, GenerateError> {
    let (name, min) = match shape {
        GenShape::Tree => ("tree", 1),
        GenShape::Cycle => ("cycle", 3),
        GenShape::Dicycle => ("dicycle", 3),
        GenShape::Unidicyclic => ("unidicyclic graph", 3),
        GenShape::Fountain => ("fountain tree", 1),
    };
    if n < min {
        return Err(GenerateError { shape: name, min, n });
    }
    let mut r = rng(seed);
    Ok(match shape {
        GenShape::Tree => random_tree(n, &mut r),
        GenShape::Cycle => random_cycle(n, &mut r),
        GenShape::Dicycle => random_dicycle(n, &mut r),
        GenShape::Unidicyclic => random_unidicyclic(n, &mut r),
        GenShape::Fountain => {
            let path = r.gen_range(1..=n.min(4) as u32) as usize;
            let mut sizes = vec![1usize; path];
            for _ in path..n {
                sizes[r.gen_range(0..path as u32) as usize] += 1;
            }
            let spec = random_fountain_spec(&sizes, &mut r);
            crate::constructive::build_fountain_tree(&spec).expect("generated specs are valid")
        }
    })
}

fn coin(r: &mut SplitMix64) -> bool {
    r.gen_bool(0.5)
}

fn oriented(r: &mut SplitMix64, u: VertexId, v: VertexId) -> Arc {
    if coin(r) {
        Arc::new(u, v)
    } else {
        Arc::new(v, u)
    }
}

/// Uniform random relabelling of `1..=n`.
fn shuffle_labels(g: OrientedGraph, r: &mut SplitMix64) -> OrientedGraph {
    let mut labels: Vec<VertexId> = g.vertices().iter().copied().collect();
    for i in (1..labels.len()).rev() {
        let j = r.gen_range(0..=i as u32) as usize;
        labels.swap(i, j);
    }
    let map: BTreeMap<VertexId, VertexId> = g.vertices().iter().copied().zip(labels).collect();
    g.relabel(&map)
}

/// Each new vertex joins a uniformly chosen earlier one, either direction.
pub fn random_tree(n: usize, r: &mut SplitMix64) -> OrientedGraph {
    let n = n as VertexId;
    let arcs: Vec<Arc> = (2..=n)
        .map(|v| {
            let p = r.gen_range(1..v);
            oriented(r, p, v)
        })
        .collect();
    shuffle_labels(OrientedGraph::new(1..=n, arcs).unwrap(), r)
}

pub fn random_cycle(n: usize, r: &mut SplitMix64) -> OrientedGraph {
    let n = n as VertexId;
    let arcs: Vec<Arc> = (1..=n).map(|i| oriented(r, i, i % n + 1)).collect();
    shuffle_labels(OrientedGraph::new(1..=n, arcs).unwrap(), r)
}

pub fn random_dicycle(n: usize, r: &mut SplitMix64) -> OrientedGraph {
    shuffle_labels(crate::graph::named::dicycle(n as VertexId), r)
}

/// A dicycle of random length in `3..=n` with the remaining vertices hung on
/// as a random forest.
pub fn random_unidicyclic(n: usize, r: &mut SplitMix64) -> OrientedGraph {
    let len = r.gen_range(3..=n as u32);
    let mut arcs: Vec<Arc> = (1..=len).map(|i| Arc::new(i, i % len + 1)).collect();
    for v in len + 1..=n as VertexId {
        let p = r.gen_range(1..v);
        arcs.push(oriented(r, p, v));
    }
    shuffle_labels(OrientedGraph::new(1..=n as VertexId, arcs).unwrap(), r)
}

/// Tree on `labels` in which `labels[0]` is a sink.
fn random_sink_tree(labels: &[VertexId], r: &mut SplitMix64) -> OrientedGraph {
    let root = labels[0];
    let mut arcs = Vec::new();
    for (i, &v) in labels.iter().enumerate().skip(1) {
        let p = labels[r.gen_range(0..i as u32) as usize];
        arcs.push(if p == root { Arc::new(v, p) } else { oriented(r, p, v) });
    }
    OrientedGraph::new(labels.iter().copied(), arcs).unwrap()
}

/// Sink fountain with one tree per entry of `tree_sizes`; path vertices are
/// `1..=len`, tree vertices follow.
pub fn random_fountain_spec(tree_sizes: &[usize], r: &mut SplitMix64) -> FountainSpec {
    assert!(!tree_sizes.is_empty() && tree_sizes.iter().all(|&s| s >= 1));
    let len = tree_sizes.len() as VertexId;
    let mut next = len + 1;
    let mut attached = BTreeMap::new();
    for (i, &size) in tree_sizes.iter().enumerate() {
        let x = i as VertexId + 1;
        let mut labels = vec![x];
        labels.extend(next..next + size as VertexId - 1);
        next += size as VertexId - 1;
        attached.insert(x, random_sink_tree(&labels, r));
    }
    FountainSpec {
        kind: FountainKind::Sink,
        spine_path: (1..=len).collect(),
        attached,
    }
}

/// Every strictly uni-dicyclic graph on at most `max_n` vertices whose
/// dicycle length lies in `cycle_lengths`, one per isomorphism class.
pub fn all_unidicyclic(max_n: usize, cycle_lengths: std::ops::RangeInclusive<usize>) -> Vec<OrientedGraph> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for len in cycle_lengths {
        for n in len..=max_n {
            let base: Vec<Arc> = (1..=len as VertexId).map(|i| Arc::new(i, i % len as VertexId + 1)).collect();
            // choice for vertex v: parent index and direction, 2(v-1) options
            let extra: Vec<VertexId> = (len as VertexId + 1..=n as VertexId).collect();
            let mut choice = vec![0u32; extra.len()];
            loop {
                let mut arcs = base.clone();
                for (&v, &c) in extra.iter().zip(&choice) {
                    let p = c / 2 + 1;
                    arcs.push(if c % 2 == 0 { Arc::new(p, v) } else { Arc::new(v, p) });
                }
                let g = OrientedGraph::new(1..=n as VertexId, arcs).unwrap();
                if seen.insert(canonical_form(&g).code) {
                    out.push(g);
                }
                // odometer
                let mut i = 0;
                while i < choice.len() {
                    choice[i] += 1;
                    if choice[i] < 2 * (extra[i] - 1) {
                        break;
                    }
                    choice[i] = 0;
                    i += 1;
                }
                if i == choice.len() {
                    break;
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructive::build_fountain_tree;
    use crate::graph::{classify_shape, Shape};
    use crate::recognize::decompose_unidicyclic;

    #[test]
    fn splitmix_reference_values() {
        // first outputs for seed 0 of the reference implementation
        let mut r = rng(0);
        assert_eq!(r.gen::<u64>(), 0xe220a8397b1dcdaf);
        assert_eq!(r.gen::<u64>(), 0x6e789e6aa1b965f4);
    }

    #[test]
    fn deterministic_per_seed() {
        for shape in [GenShape::Tree, GenShape::Cycle, GenShape::Dicycle, GenShape::Unidicyclic, GenShape::Fountain] {
            assert_eq!(generate(shape, 7, 42).unwrap(), generate(shape, 7, 42).unwrap());
        }
        assert_ne!(generate(GenShape::Tree, 9, 1).unwrap(), generate(GenShape::Tree, 9, 2).unwrap());
    }

    #[test]
    fn shapes_are_right() {
        for seed in 0..50 {
            let t = generate(GenShape::Tree, 8, seed).unwrap();
            assert!(t.is_tree() && t.vertex_count() == 8);
            let c = generate(GenShape::Cycle, 6, seed).unwrap();
            assert!(matches!(classify_shape(&c).unwrap(), Shape::Dicycle | Shape::OrientedCycle));
            assert_eq!(classify_shape(&generate(GenShape::Dicycle, 5, seed).unwrap()).unwrap(), Shape::Dicycle);
            let u = generate(GenShape::Unidicyclic, 8, seed).unwrap();
            assert_eq!(u.vertex_count(), 8);
            assert!(decompose_unidicyclic(&u).is_ok());
            let f = generate(GenShape::Fountain, 7, seed).unwrap();
            assert!(f.is_tree() && f.vertex_count() == 7);
        }
        assert!(generate(GenShape::Cycle, 2, 0).is_err());
    }

    #[test]
    fn fountain_specs_are_valid() {
        let mut r = rng(3);
        for _ in 0..50 {
            let spec = random_fountain_spec(&[3, 1, 5, 2], &mut r);
            assert_eq!(build_fountain_tree(&spec).unwrap().vertex_count(), 11);
        }
    }

    #[test]
    fn small_unidicyclic_counts() {
        // bare 3-dicycle; then one pendant arc either way
        assert_eq!(all_unidicyclic(3, 3..=3).len(), 1);
        assert_eq!(all_unidicyclic(4, 3..=3).len(), 3);
        let all = all_unidicyclic(5, 3..=5);
        assert!(all.iter().all(|g| decompose_unidicyclic(g).is_ok()));
    }
}
