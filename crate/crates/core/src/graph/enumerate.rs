//! Connected oriented graphs up to isomorphism.
//!
//! Underlying connected simple graphs are grown one vertex at a time (every
//! connected graph has a vertex whose removal keeps it connected), then each
//! is oriented in all `2^|E|` ways and the orientations are deduplicated by
//! canonical code. Orientations of non-isomorphic underlying graphs are never
//! isomorphic, so deduplication runs per underlying graph.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::iso::canonical_rows;
use super::{Arc, GraphError, OrientedGraph, VertexId};

/// Largest `n` accepted by [`enumerate_connected`] without the override.
pub const ENUMERATION_MAX_N: usize = 7;

pub fn enumerate_connected(n: usize) -> Result<Vec<OrientedGraph>, GraphError> {
    if n > ENUMERATION_MAX_N {
        return Err(GraphError::SizeGuard {
            what: "vertex count",
            actual: n,
            limit: ENUMERATION_MAX_N,
        });
    }
    Ok(enumerate_connected_unchecked(n))
}

/// [`enumerate_connected`] without the size guard. The output grows roughly
/// like `3^(n²/2) / n!`.
pub fn enumerate_connected_unchecked(n: usize) -> Vec<OrientedGraph> {
    if n == 0 {
        return Vec::new();
    }
    underlying_graphs(n)
        .par_iter()
        .flat_map_iter(|edges| orientations(n, edges))
        .collect()
}

fn orientations(n: usize, edges: &[(usize, usize)]) -> Vec<OrientedGraph> {
    let mut codes: BTreeSet<Vec<u8>> = BTreeSet::new();
    for mask in 0u64..(1u64 << edges.len()) {
        let mut rows = vec![0u64; n];
        for (k, &(u, v)) in edges.iter().enumerate() {
            if mask >> k & 1 == 0 {
                rows[u] |= 1 << v;
            } else {
                rows[v] |= 1 << u;
            }
        }
        codes.insert(canonical_rows(&rows).0);
    }
    codes.iter().map(|code| graph_from_code(n, code)).collect()
}

/// Rebuilds the canonical representative from its code (vertices `0..n`).
fn graph_from_code(n: usize, code: &[u8]) -> OrientedGraph {
    let mut arcs = Vec::new();
    let mut bits = code.iter();
    for k in 0..n {
        for m in 0..k {
            let fwd = *bits.next().unwrap(); // m -> k
            let back = *bits.next().unwrap(); // k -> m
            if fwd == 1 {
                arcs.push(Arc::new(m as VertexId, k as VertexId));
            }
            if back == 1 {
                arcs.push(Arc::new(k as VertexId, m as VertexId));
            }
        }
    }
    OrientedGraph::new(0..n as VertexId, arcs).expect("canonical code encodes an oriented graph")
}

/// Edge lists of connected simple graphs on `n` vertices, one per
/// isomorphism class, in a deterministic order.
fn underlying_graphs(n: usize) -> Vec<Vec<(usize, usize)>> {
    let mut level: BTreeMap<Vec<u8>, Vec<u64>> = BTreeMap::new();
    level.insert(Vec::new(), vec![0]);
    for size in 2..=n {
        let mut next: BTreeMap<Vec<u8>, Vec<u64>> = BTreeMap::new();
        for rows in level.values() {
            for subset in 1u64..(1u64 << (size - 1)) {
                let mut grown = rows.clone();
                grown.push(subset);
                for (u, row) in grown.iter_mut().enumerate().take(size - 1) {
                    if subset >> u & 1 == 1 {
                        *row |= 1 << (size - 1);
                    }
                }
                let (code, order) = canonical_rows(&grown);
                next.entry(code).or_insert_with(|| permute_rows(&grown, &order));
            }
        }
        level = next;
    }
    level
        .into_values()
        .map(|rows| {
            let mut edges = Vec::new();
            for (u, &r) in rows.iter().enumerate() {
                for v in u + 1..n {
                    if r >> v & 1 == 1 {
                        edges.push((u, v));
                    }
                }
            }
            edges
        })
        .collect()
}

fn permute_rows(rows: &[u64], order: &[usize]) -> Vec<u64> {
    let mut pos = vec![0usize; rows.len()];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k;
    }
    let mut out = vec![0u64; rows.len()];
    for (u, &r) in rows.iter().enumerate() {
        for (v, &pv) in pos.iter().enumerate() {
            if r >> v & 1 == 1 {
                out[pos[u]] |= 1 << pv;
            }
        }
    }
    out
}
