//! Exact oriented book thickness by exhaustive search over spine orders.
//!
//! For a fixed spine order and a fixed direction for the tight arcs, the best
//! embedding puts every arc that *can* be tight on the spine (consecutive
//! endpoints, chosen direction) and colours the conflict graph of the rest.
//! Dropping a node never raises a chromatic number, so the maximal tight set
//! is optimal. Reversing the spine swaps the two tight directions, so only
//! orders whose first vertex index is below the last one are visited.
//!
//! The order space is split into chunks by first vertex. Chunks share nothing
//! and are merged by a rule that reproduces the sequential scan exactly, so
//! the witness does not depend on the number of workers.

mod coloring;
mod mine;

pub use coloring::{chromatic_number, Coloring, ConflictGraph, MAX_CONFLICT_NODES};
pub use mine::{mine_critical, mine_critical_with, MINE_MAX_N_MULTI, MINE_MAX_N_SINGLE};

use std::collections::BTreeMap;

use itertools::Itertools;
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{Arc, DenseGraph, OrientedGraph, VertexId};
use crate::layout::{BookEmbedding, Direction, Placement};
use coloring::{color_below, spans_conflict};

/// Default vertex limit for [`obt`].
pub const OBT_MAX_N: usize = 9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("size guard: {what} is {actual}, limit {limit}")]
    SizeGuard {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("spine order is not a permutation of the vertices")]
    BadOrder,
    #[error("worker pool: {0}")]
    Pool(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleOptions {
    /// Vertex limit; searches are `n!/2` spine orders.
    pub max_n: usize,
    /// Worker threads for the order sweep. 1 runs on the calling thread.
    pub jobs: usize,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            max_n: OBT_MAX_N,
            jobs: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObtResult {
    pub thickness: usize,
    /// Valid embedding with exactly `thickness` pages.
    pub witness: BookEmbedding,
}

pub fn obt(g: &OrientedGraph) -> Result<ObtResult, OracleError> {
    obt_with(g, &OracleOptions::default())
}

pub fn obt_with(g: &OrientedGraph, opts: &OracleOptions) -> Result<ObtResult, OracleError> {
    guard(g, opts)?;
    let found = sweep(g, lower_bound(g), opts.jobs)?;
    Ok(ObtResult {
        thickness: found.pages,
        witness: found.embedding(&g.dense()),
    })
}

/// An embedding with at most `k` pages, if one exists.
pub fn fits_in_pages(g: &OrientedGraph, k: usize, opts: &OracleOptions) -> Result<Option<BookEmbedding>, OracleError> {
    guard(g, opts)?;
    let found = sweep(g, k.max(lower_bound(g)), opts.jobs)?;
    Ok((found.pages <= k).then(|| found.embedding(&g.dense())))
}

/// `obt(g) = k` and deleting any one arc leaves `k - 1`.
pub fn is_k_page_critical(g: &OrientedGraph, k: usize) -> Result<bool, OracleError> {
    is_k_page_critical_with(g, k, &OracleOptions::default())
}

pub fn is_k_page_critical_with(g: &OrientedGraph, k: usize, opts: &OracleOptions) -> Result<bool, OracleError> {
    guard(g, opts)?;
    if k == 0 {
        return Ok(g.arc_count() == 0);
    }
    // obt(g - a) >= obt(g) - 1, so fitting in k - 1 after each deletion is exact.
    if fits_in_pages(g, k - 1, opts)?.is_some() || fits_in_pages(g, k, opts)?.is_none() {
        return Ok(false);
    }
    for &a in g.arcs() {
        let h = g.delete_arc(a).expect("arc of g");
        if fits_in_pages(&h, k - 1, opts)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Fewest pages for a given spine order (bottom to top), with the embedding.
pub fn min_pages_for_spine(g: &OrientedGraph, order: &[VertexId]) -> Result<(usize, BookEmbedding), OracleError> {
    let dense = g.dense();
    let index: BTreeMap<VertexId, usize> = dense.ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut idx: Vec<usize> = Vec::with_capacity(order.len());
    for v in order {
        idx.push(*index.get(v).ok_or(OracleError::BadOrder)?);
    }
    if idx.len() != dense.n() || idx.iter().sorted().dedup().count() != dense.n() {
        return Err(OracleError::BadOrder);
    }
    if dense.arcs.len() > MAX_CONFLICT_NODES {
        return Err(OracleError::SizeGuard {
            what: "arc count",
            actual: dense.arcs.len(),
            limit: MAX_CONFLICT_NODES,
        });
    }
    let found = best_for_order(&dense, &idx, usize::MAX).expect("some page count always works");
    Ok((found.pages, found.embedding(&dense)))
}

fn guard(g: &OrientedGraph, opts: &OracleOptions) -> Result<(), OracleError> {
    if g.vertex_count() > opts.max_n {
        return Err(OracleError::SizeGuard {
            what: "vertex count",
            actual: g.vertex_count(),
            limit: opts.max_n,
        });
    }
    if g.arc_count() > MAX_CONFLICT_NODES {
        return Err(OracleError::SizeGuard {
            what: "arc count",
            actual: g.arc_count(),
            limit: MAX_CONFLICT_NODES,
        });
    }
    Ok(())
}

/// 0 pages needs every arc tight, so the underlying graph must be a union of
/// paths; anything else needs at least one page.
fn lower_bound(g: &OrientedGraph) -> usize {
    let linear_forest = g.is_forest() && g.vertices().iter().all(|&v| g.degree(v) <= 2);
    usize::from(!linear_forest)
}

#[derive(Clone, Debug)]
struct Found {
    pages: usize,
    order: Vec<usize>,
    /// Per dense arc: `None` tight, `Some(p)` in page `p`.
    placement: Vec<Option<usize>>,
}

impl Found {
    fn embedding(&self, dense: &DenseGraph) -> BookEmbedding {
        let placement = self
            .placement
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let where_ = match p {
                    None => Placement::Spine,
                    Some(page) => Placement::Page(*page),
                };
                (dense.arc(i), where_)
            })
            .collect::<BTreeMap<Arc, Placement>>();
        BookEmbedding::new(self.order.iter().map(|&i| dense.ids[i]).collect(), placement, self.pages)
    }
}

/// Best embedding for this order using fewer than `cap` pages. Up is tried
/// before down and wins ties.
fn best_for_order(dense: &DenseGraph, order: &[usize], cap: usize) -> Option<Found> {
    let mut pos = vec![0usize; dense.n()];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    let mut best: Option<Found> = None;
    let mut cap = cap;
    for dir in [Direction::Up, Direction::Down] {
        let mut loose = Vec::with_capacity(dense.arcs.len());
        let mut spans = Vec::with_capacity(dense.arcs.len());
        for (i, &(t, h)) in dense.arcs.iter().enumerate() {
            let (pt, ph) = (pos[t], pos[h]);
            let d = if pt < ph { Direction::Up } else { Direction::Down };
            if pt.abs_diff(ph) == 1 && d == dir {
                continue;
            }
            loose.push(i);
            spans.push((pt, ph));
        }
        let mut adj = vec![0u64; loose.len()];
        for i in 0..loose.len() {
            for j in i + 1..loose.len() {
                if spans_conflict(spans[i], spans[j]) {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        if let Some(c) = color_below(&adj, cap) {
            let mut placement = vec![None; dense.arcs.len()];
            for (k, &i) in loose.iter().enumerate() {
                placement[i] = Some(c.assignment[k]);
            }
            cap = c.colors;
            best = Some(Found {
                pages: c.colors,
                order: order.to_vec(),
                placement,
            });
        }
    }
    best
}

/// Orders starting with `first`, lexicographic, first index below last.
/// Returns the first order reaching `stop_at` pages or less, else the first
/// order achieving the chunk minimum, considering only results below `cap`.
fn sweep_chunk(dense: &DenseGraph, first: usize, cap: usize, stop_at: usize) -> Option<Found> {
    let n = dense.n();
    let rest: Vec<usize> = (0..n).filter(|&v| v != first).collect();
    let mut cap = cap;
    let mut best = None;
    let mut order = Vec::with_capacity(n);
    for tail in rest.iter().copied().permutations(rest.len()) {
        if n > 1 && tail[tail.len() - 1] < first {
            continue;
        }
        order.clear();
        order.push(first);
        order.extend_from_slice(&tail);
        if let Some(f) = best_for_order(dense, &order, cap) {
            cap = f.pages;
            best = Some(f);
            if cap <= stop_at {
                break;
            }
        }
    }
    best
}

fn sweep(g: &OrientedGraph, stop_at: usize, jobs: usize) -> Result<Found, OracleError> {
    let dense = g.dense();
    let n = dense.n();
    if n == 0 {
        return Ok(Found {
            pages: 0,
            order: Vec::new(),
            placement: Vec::new(),
        });
    }
    let firsts: Vec<usize> = if n == 1 { vec![0] } else { (0..n - 1).collect() };

    if jobs <= 1 {
        let mut best: Option<Found> = None;
        for &first in &firsts {
            let cap = best.as_ref().map_or(usize::MAX, |b| b.pages);
            if let Some(f) = sweep_chunk(&dense, first, cap, stop_at) {
                let done = f.pages <= stop_at;
                best = Some(f);
                if done {
                    break;
                }
            }
        }
        return Ok(best.expect("at least one order"));
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| OracleError::Pool(e.to_string()))?;
    let chunks: Vec<Found> = pool.install(|| {
        firsts
            .par_iter()
            .map(|&first| sweep_chunk(&dense, first, usize::MAX, stop_at).expect("uncapped chunk"))
            .collect()
    });
    // Same answer as the sequential scan: the earliest chunk that reached the
    // stop level, otherwise the earliest chunk with the overall minimum.
    let pick = chunks
        .iter()
        .position(|f| f.pages <= stop_at)
        .unwrap_or_else(|| {
            let min = chunks.iter().map(|f| f.pages).min().unwrap();
            chunks.iter().position(|f| f.pages == min).unwrap()
        });
    Ok(chunks[pick].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::layout::verify;

    #[test]
    fn dicycle_on_natural_order_has_one_page() {
        let d3 = dicycle(3);
        let (pages, emb) = min_pages_for_spine(&d3, &[1, 2, 3]).unwrap();
        assert_eq!(pages, 1);
        assert_eq!(emb.placement[&Arc::new(1, 2)], Placement::Spine);
        assert_eq!(emb.placement[&Arc::new(2, 3)], Placement::Spine);
        assert_eq!(emb.placement[&Arc::new(3, 1)], Placement::Page(0));
        assert!(verify(&d3, &emb).is_valid());
    }

    /// Fewest pages over every placement of every arc, judged by the verifier.
    fn brute_pages(g: &OrientedGraph, order: &[VertexId]) -> usize {
        let arcs: Vec<Arc> = g.arcs().iter().copied().collect();
        (0..=arcs.len())
            .find(|&k| {
                let choices = (k + 1) as u64;
                (0..choices.pow(arcs.len() as u32)).any(|mut code| {
                    let mut placement = BTreeMap::new();
                    for &a in &arcs {
                        let c = (code % choices) as usize;
                        code /= choices;
                        placement.insert(a, if c == k { Placement::Spine } else { Placement::Page(c) });
                    }
                    verify(g, &BookEmbedding::new(order.to_vec(), placement, k)).is_valid()
                })
            })
            .unwrap()
    }

    #[test]
    fn crossed_order_of_4_dicycle() {
        // two crossing upward arcs plus a long downward one
        let d4 = dicycle(4);
        let order = [1, 3, 2, 4];
        let (pages, emb) = min_pages_for_spine(&d4, &order).unwrap();
        assert_eq!(pages, brute_pages(&d4, &order));
        assert_eq!(pages, 3);
        assert!(verify(&d4, &emb).is_valid());
    }

    #[test]
    fn spine_minimum_matches_brute_force() {
        let graphs = [
            dicycle(4),
            s_plus(),
            g(&[(1, 2), (3, 2), (3, 4), (4, 1), (1, 5)]),
            g(&[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 3)]),
        ];
        for h in &graphs {
            let ids: Vec<VertexId> = h.vertices().iter().copied().collect();
            for order in ids.iter().copied().permutations(ids.len()).step_by(3) {
                let (pages, emb) = min_pages_for_spine(h, &order).unwrap();
                assert_eq!(pages, brute_pages(h, &order), "{order:?}");
                assert!(verify(h, &emb).is_valid());
                assert_eq!(emb.pages, pages);
            }
        }
    }

    #[test]
    fn dipath_needs_no_page() {
        let (pages, emb) = min_pages_for_spine(&dipath(4), &[1, 2, 3, 4]).unwrap();
        assert_eq!(pages, 0);
        assert_eq!(emb.tight_arcs().len(), 3);
    }

    #[test]
    fn bad_orders() {
        assert_eq!(min_pages_for_spine(&dipath(3), &[1, 2]), Err(OracleError::BadOrder));
        assert_eq!(min_pages_for_spine(&dipath(3), &[1, 2, 2]), Err(OracleError::BadOrder));
        assert_eq!(min_pages_for_spine(&dipath(3), &[1, 2, 9]), Err(OracleError::BadOrder));
    }

    #[test]
    fn small_thicknesses() {
        assert_eq!(obt(&dipath(5)).unwrap().thickness, 0);
        assert_eq!(obt(&dicycle(5)).unwrap().thickness, 1);
        assert_eq!(obt(&s_plus()).unwrap().thickness, 1);
        let empty = OrientedGraph::default();
        assert_eq!(obt(&empty).unwrap().thickness, 0);
        let lone = OrientedGraph::new([4], []).unwrap();
        assert_eq!(obt(&lone).unwrap().thickness, 0);
    }

    #[test]
    fn guard_and_override() {
        let big = dipath(10);
        assert!(matches!(obt(&big), Err(OracleError::SizeGuard { actual: 10, .. })));
        let opts = OracleOptions { max_n: 10, jobs: 1 };
        assert_eq!(obt_with(&big, &opts).unwrap().thickness, 0);
    }

    #[test]
    fn criticality() {
        assert!(is_k_page_critical(&dicycle(4), 1).unwrap());
        assert!(!is_k_page_critical(&dipath(4), 1).unwrap());
        assert!(is_k_page_critical(&s_minus(), 1).unwrap());
        // S+ with a pendant is not minimal
        assert!(!is_k_page_critical(&g(&[(2, 1), (2, 3), (3, 4)]), 1).unwrap());
    }

    #[test]
    fn worker_count_does_not_change_witness() {
        let h = g(&[(1, 2), (2, 3), (3, 1), (1, 4), (1, 5), (3, 6), (7, 3)]);
        let one = obt_with(&h, &OracleOptions { max_n: 9, jobs: 1 }).unwrap();
        for jobs in [2, 3, 8] {
            assert_eq!(obt_with(&h, &OracleOptions { max_n: 9, jobs }).unwrap(), one);
        }
        assert!(verify(&h, &one.witness).is_valid());
    }

    #[test]
    fn fits() {
        let opts = OracleOptions::default();
        assert!(fits_in_pages(&dicycle(4), 0, &opts).unwrap().is_none());
        let e = fits_in_pages(&dicycle(4), 3, &opts).unwrap().unwrap();
        assert!(e.pages <= 3);
        assert!(verify(&dicycle(4), &e).is_valid());
    }
}
