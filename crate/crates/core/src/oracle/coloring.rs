//! Page assignment as graph colouring: loose arcs that cross, or point in
//! opposite directions along the spine, cannot share a page.

use super::OracleError;
use crate::graph::Arc;
use crate::layout::intervals_cross;

/// Largest conflict graph [`chromatic_number`] accepts.
pub const MAX_CONFLICT_NODES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictGraph {
    pub nodes: Vec<Arc>,
    adj: Vec<u64>,
}

impl ConflictGraph {
    /// No edges yet. Panics beyond 64 nodes; use [`chromatic_number`] for the
    /// guarded entry point.
    pub fn new(nodes: Vec<Arc>) -> Self {
        assert!(nodes.len() <= MAX_CONFLICT_NODES);
        let adj = vec![0; nodes.len()];
        ConflictGraph { nodes, adj }
    }

    /// Conflict graph of `arcs` for a spine given as position lookup.
    pub fn for_spine(arcs: Vec<Arc>, pos: impl Fn(u32) -> usize) -> Self {
        let spans: Vec<(usize, usize)> = arcs.iter().map(|a| (pos(a.tail), pos(a.head))).collect();
        let mut cg = ConflictGraph::new(arcs);
        for i in 0..spans.len() {
            for j in i + 1..spans.len() {
                if spans_conflict(spans[i], spans[j]) {
                    cg.add_edge(i, j);
                }
            }
        }
        cg
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert_ne!(i, j);
        self.adj[i] |= 1 << j;
        self.adj[j] |= 1 << i;
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }
}

/// `(tail position, head position)` pairs.
pub(crate) fn spans_conflict((t1, h1): (usize, usize), (t2, h2): (usize, usize)) -> bool {
    (t1 < h1) != (t2 < h2) || intervals_cross((t1.min(h1), t1.max(h1)), (t2.min(h2), t2.max(h2)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub colors: usize,
    /// Colour of each node, in `0..colors`.
    pub assignment: Vec<usize>,
}

/// Exact chromatic number with a witness colouring.
pub fn chromatic_number(cg: &ConflictGraph) -> Result<Coloring, OracleError> {
    if cg.len() > MAX_CONFLICT_NODES {
        return Err(OracleError::SizeGuard {
            what: "conflict graph nodes",
            actual: cg.len(),
            limit: MAX_CONFLICT_NODES,
        });
    }
    Ok(color_below(&cg.adj, usize::MAX).expect("unbounded cap always colours"))
}

/// Minimum colouring if it uses fewer than `cap` colours.
pub(crate) fn color_below(adj: &[u64], cap: usize) -> Option<Coloring> {
    let n = adj.len();
    if n == 0 {
        return (cap > 0).then(|| Coloring {
            colors: 0,
            assignment: Vec::new(),
        });
    }
    let lower = greedy_clique(adj);
    for k in lower..cap.min(n + 1) {
        if let Some(assignment) = k_color(adj, k) {
            return Some(Coloring { colors: k, assignment });
        }
    }
    None
}

/// Size of a clique found greedily by degree; a lower bound.
fn greedy_clique(adj: &[u64]) -> usize {
    let mut order: Vec<usize> = (0..adj.len()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].count_ones()));
    let mut best = 1;
    for &start in &order {
        let mut clique = 1u64 << start;
        let mut candidates = adj[start];
        for &v in &order {
            if candidates >> v & 1 == 1 {
                clique |= 1 << v;
                candidates &= adj[v];
            }
        }
        best = best.max(clique.count_ones() as usize);
    }
    best
}

fn k_color(adj: &[u64], k: usize) -> Option<Vec<usize>> {
    let n = adj.len();
    if k == 0 {
        return (n == 0).then(Vec::new);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].count_ones()));
    let mut colour = vec![usize::MAX; n];
    fn go(adj: &[u64], order: &[usize], colour: &mut [usize], i: usize, used: usize, k: usize) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        // new colours are interchangeable: only try the first unused one
        for c in 0..(used + 1).min(k) {
            let clash = (0..adj.len()).any(|w| adj[v] >> w & 1 == 1 && colour[w] == c);
            if clash {
                continue;
            }
            colour[v] = c;
            if go(adj, order, colour, i + 1, used.max(c + 1), k) {
                return true;
            }
            colour[v] = usize::MAX;
        }
        false
    }
    go(adj, &order, &mut colour, 0, 0, k).then_some(colour)
}
