//! Oriented book embeddings: vertices on a spine, each arc either tight
//! (drawn along the spine between consecutive vertices) or loose in one page.
//!
//! The spine is listed bottom to top. An arc is *upward* when its tail sits
//! lower on the spine than its head.

mod io;
mod svg;
mod verify;

pub use io::{parse_embedding, write_embedding};
pub use svg::render_svg;
pub use verify::{verify, Rule, ValidityReport, Violation};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::graph::{Arc, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LayoutError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("vertex {0} is not on the spine")]
    UnknownVertex(VertexId),
    #[error("embedding is invalid: {0}")]
    InvalidEmbedding(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Placement {
    Spine,
    Page(usize),
}

impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Placement::Spine => f.write_str("spine"),
            Placement::Page(p) => write!(f, "page {p}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Up,
    Down,
}

impl Direction {
    pub fn flipped(self) -> Self {
        match self {
            Direction::Up => Direction::Down,
            Direction::Down => Direction::Up,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Up => "up",
            Direction::Down => "down",
        })
    }
}

/// Spine order plus a placement for every arc. Construction does not
/// validate; run [`verify`] against the graph.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BookEmbedding {
    /// Bottom to top.
    pub spine: Vec<VertexId>,
    pub placement: BTreeMap<Arc, Placement>,
    /// Declared page count; pages may be empty.
    pub pages: usize,
}

impl BookEmbedding {
    pub fn new(spine: Vec<VertexId>, placement: BTreeMap<Arc, Placement>, pages: usize) -> Self {
        BookEmbedding {
            spine,
            placement,
            pages,
        }
    }

    /// 0-based index from the bottom.
    pub fn spine_position(&self, v: VertexId) -> Result<usize, LayoutError> {
        self.spine
            .iter()
            .position(|&w| w == v)
            .ok_or(LayoutError::UnknownVertex(v))
    }

    pub fn positions(&self) -> BTreeMap<VertexId, usize> {
        self.spine.iter().enumerate().map(|(i, &v)| (v, i)).collect()
    }

    pub fn top(&self) -> Option<VertexId> {
        self.spine.last().copied()
    }

    pub fn bottom(&self) -> Option<VertexId> {
        self.spine.first().copied()
    }

    pub fn direction(&self, a: Arc) -> Result<Direction, LayoutError> {
        let t = self.spine_position(a.tail)?;
        let h = self.spine_position(a.head)?;
        Ok(if t < h { Direction::Up } else { Direction::Down })
    }

    pub fn tight_arcs(&self) -> Vec<Arc> {
        self.arcs_on(Placement::Spine)
    }

    pub fn page_arcs(&self, page: usize) -> Vec<Arc> {
        self.arcs_on(Placement::Page(page))
    }

    pub fn loose_arcs(&self) -> Vec<Arc> {
        self.placement
            .iter()
            .filter(|(_, p)| matches!(p, Placement::Page(_)))
            .map(|(a, _)| *a)
            .collect()
    }

    fn arcs_on(&self, where_: Placement) -> Vec<Arc> {
        self.placement
            .iter()
            .filter(|(_, &p)| p == where_)
            .map(|(a, _)| *a)
            .collect()
    }

    /// Does a loose arc pass over `v`?
    pub fn is_covered(&self, v: VertexId) -> bool {
        let pos = self.positions();
        let Some(&x) = pos.get(&v) else { return false };
        self.loose_arcs().into_iter().any(|a| {
            let (Some(&t), Some(&h)) = (pos.get(&a.tail), pos.get(&a.head)) else {
                return false;
            };
            t.min(h) < x && x < t.max(h)
        })
    }

    /// Number of tight arcs at `v`: 2 tight, 1 half-loose, 0 loose.
    pub fn tight_degree(&self, v: VertexId) -> usize {
        self.tight_arcs().iter().filter(|a| a.touches(v)).count()
    }

    pub fn without_arc(&self, a: Arc) -> BookEmbedding {
        let mut e = self.clone();
        e.placement.remove(&a);
        e
    }

    /// Spine reversed and every arc switched: an embedding of the converse
    /// graph with the same page structure.
    pub fn converse(&self) -> BookEmbedding {
        BookEmbedding {
            spine: self.spine.iter().rev().copied().collect(),
            placement: self
                .placement
                .iter()
                .map(|(a, &p)| (a.reversed(), p))
                .collect(),
            pages: self.pages,
        }
    }

    /// Stacks `other` above `self`, keeping page numbers.
    pub fn stacked(&self, other: &BookEmbedding) -> BookEmbedding {
        let mut e = self.clone();
        e.spine.extend(other.spine.iter().copied());
        e.placement.extend(other.placement.iter().map(|(&a, &p)| (a, p)));
        e.pages = e.pages.max(other.pages);
        e
    }

    pub fn relabel(&self, map: &BTreeMap<VertexId, VertexId>) -> BookEmbedding {
        let f = |v: VertexId| map.get(&v).copied().unwrap_or(v);
        BookEmbedding {
            spine: self.spine.iter().map(|&v| f(v)).collect(),
            placement: self
                .placement
                .iter()
                .map(|(a, &p)| (Arc::new(f(a.tail), f(a.head)), p))
                .collect(),
            pages: self.pages,
        }
    }
}

/// True iff both arcs lie on the spine and their position intervals strictly
/// interleave. Arcs sharing an endpoint never cross.
pub fn arcs_cross(a1: Arc, a2: Arc, emb: &BookEmbedding) -> bool {
    let pos = |v| emb.spine_position(v).ok();
    let (Some(p), Some(q), Some(r), Some(s)) = (pos(a1.tail), pos(a1.head), pos(a2.tail), pos(a2.head))
    else {
        return false;
    };
    intervals_cross((p.min(q), p.max(q)), (r.min(s), r.max(s)))
}

pub(crate) fn intervals_cross((l1, r1): (usize, usize), (l2, r2): (usize, usize)) -> bool {
    (l1 < l2 && l2 < r1 && r1 < r2) || (l2 < l1 && l1 < r2 && r2 < r1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn emb(spine: &[VertexId]) -> BookEmbedding {
        BookEmbedding::new(spine.to_vec(), BTreeMap::new(), 0)
    }

    #[test]
    fn spine_positions() {
        let e = emb(&[1, 2, 3]);
        assert_eq!(e.spine_position(1), Ok(0));
        assert_eq!(e.spine_position(3), Ok(2));
        assert_eq!(emb(&[4, 1]).spine_position(7), Err(LayoutError::UnknownVertex(7)));
    }

    #[test]
    fn crossing_rule() {
        assert!(arcs_cross(Arc::new(1, 2), Arc::new(3, 4), &emb(&[1, 3, 2, 4])));
        // shared endpoint, nested
        assert!(!arcs_cross(Arc::new(1, 3), Arc::new(2, 3), &emb(&[1, 2, 3])));
        assert!(!arcs_cross(Arc::new(1, 2), Arc::new(3, 4), &emb(&[1, 2, 3, 4])));
        // strictly nested
        assert!(!arcs_cross(Arc::new(1, 4), Arc::new(2, 3), &emb(&[1, 2, 3, 4])));
        // direction does not matter
        assert!(arcs_cross(Arc::new(2, 1), Arc::new(4, 3), &emb(&[1, 3, 2, 4])));
    }

    #[test]
    fn coverage_and_tightness() {
        let placement = BTreeMap::from([
            (Arc::new(1, 2), Placement::Spine),
            (Arc::new(2, 3), Placement::Spine),
            (Arc::new(3, 1), Placement::Page(0)),
        ]);
        let e = BookEmbedding::new(vec![1, 2, 3], placement, 1);
        assert!(e.is_covered(2));
        assert!(!e.is_covered(1));
        assert_eq!(e.tight_degree(2), 2);
        assert_eq!(e.tight_degree(3), 1);
        assert_eq!(e.direction(Arc::new(3, 1)), Ok(Direction::Down));
        let c = e.converse();
        assert_eq!(c.spine, vec![3, 2, 1]);
        assert_eq!(c.direction(Arc::new(1, 3)), Ok(Direction::Down));
    }
}
