//! Structure detection for strictly uni-dicyclic graphs (one underlying
//! cycle, and it is directed) and the forbidden subgraphs behind 1-page
//! embeddability.

pub mod families;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::graph::{classify_shape, named, Arc, OrientedGraph, Shape, VertexId};
pub use families::{Pendant, Sign};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecognizeError {
    #[error("graph is empty or disconnected")]
    Disconnected,
    #[error("graph has no cycle")]
    NoCycle,
    #[error("graph has more than one cycle")]
    MultipleCycles,
    #[error("the cycle is not directed")]
    CycleNotDirected,
}

/// A dicycle `φ(1) → … → φ(n) → φ(1)` with an oriented tree hung at each
/// dicycle vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DicycleDecomposition {
    /// Starts at the smallest dicycle vertex, then follows the arcs.
    pub dicycle: Vec<VertexId>,
    /// Tree at each dicycle vertex, containing it; a lone vertex when trivial.
    pub attached: BTreeMap<VertexId, OrientedGraph>,
}

impl DicycleDecomposition {
    pub fn len(&self) -> usize {
        self.dicycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dicycle.is_empty()
    }

    /// `φ(i)` for any integer `i`, 1-based and cyclic.
    pub fn phi(&self, i: usize) -> VertexId {
        self.dicycle[(i + self.len() - 1) % self.len()]
    }

    pub fn tree(&self, v: VertexId) -> &OrientedGraph {
        &self.attached[&v]
    }

    pub fn cycle_arcs(&self) -> Vec<Arc> {
        (1..=self.len()).map(|i| Arc::new(self.phi(i), self.phi(i + 1))).collect()
    }

    /// Same graph with the dicycle listed from `φ(start)`.
    pub fn rotated(&self, start: usize) -> DicycleDecomposition {
        DicycleDecomposition {
            dicycle: (0..self.len()).map(|i| self.phi(start + i)).collect(),
            attached: self.attached.clone(),
        }
    }

    pub fn graph(&self) -> OrientedGraph {
        let vertices: Vec<VertexId> = self.attached.values().flat_map(|t| t.vertices().iter().copied()).collect();
        let arcs = self
            .attached
            .values()
            .flat_map(|t| t.arcs().iter().copied())
            .chain(self.cycle_arcs());
        OrientedGraph::new(vertices, arcs).expect("decomposition of a simple graph")
    }
}

pub fn decompose_unidicyclic(g: &OrientedGraph) -> Result<DicycleDecomposition, RecognizeError> {
    if g.vertex_count() == 0 || !g.is_connected() {
        return Err(RecognizeError::Disconnected);
    }
    match g.arc_count().cmp(&g.vertex_count()) {
        std::cmp::Ordering::Less => return Err(RecognizeError::NoCycle),
        std::cmp::Ordering::Greater => return Err(RecognizeError::MultipleCycles),
        std::cmp::Ordering::Equal => {}
    }
    // strip leaves until only the cycle is left
    let adj = g.adjacency();
    let mut degree: BTreeMap<VertexId, usize> = adj.iter().map(|(&v, n)| (v, n.len())).collect();
    let mut queue: VecDeque<VertexId> = degree.iter().filter(|&(_, &d)| d == 1).map(|(&v, _)| v).collect();
    let mut on_cycle: BTreeSet<VertexId> = g.vertices().clone();
    while let Some(v) = queue.pop_front() {
        on_cycle.remove(&v);
        for w in &adj[&v] {
            let d = degree.get_mut(w).unwrap();
            *d -= 1;
            if *d == 1 && on_cycle.contains(w) {
                queue.push_back(*w);
            }
        }
    }
    let cycle_arcs: Vec<Arc> = g
        .arcs()
        .iter()
        .filter(|a| on_cycle.contains(&a.tail) && on_cycle.contains(&a.head))
        .copied()
        .collect();
    let mut next = BTreeMap::new();
    for a in &cycle_arcs {
        if next.insert(a.tail, a.head).is_some() {
            return Err(RecognizeError::CycleNotDirected);
        }
    }
    if next.len() != on_cycle.len() {
        return Err(RecognizeError::CycleNotDirected);
    }
    let start = *on_cycle.first().unwrap();
    let mut dicycle = vec![start];
    while next[dicycle.last().unwrap()] != start {
        dicycle.push(next[dicycle.last().unwrap()]);
    }

    let forest = g
        .arc_subgraph(g.arcs().iter().copied().filter(|a| !cycle_arcs.contains(a)))
        .expect("arcs of g");
    let mut attached: BTreeMap<VertexId, OrientedGraph> = dicycle
        .iter()
        .map(|&v| (v, OrientedGraph::new([v], []).unwrap()))
        .collect();
    for comp in forest.components() {
        let root = *comp.iter().find(|v| on_cycle.contains(v)).expect("every tree meets the cycle");
        attached.insert(root, forest.induced(&comp));
    }
    Ok(DicycleDecomposition { dicycle, attached })
}

/// Dicycle vertices whose tree is non-trivial, in dicycle order.
pub fn heavy_vertices(d: &DicycleDecomposition) -> Vec<VertexId> {
    d.dicycle
        .iter()
        .copied()
        .filter(|v| d.tree(*v).vertex_count() > 1)
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OnePageCritical {
    SPlus,
    SMinus,
    Dicycle(usize),
}

/// The 1-page critical graphs: S+, S- and the dicycles.
pub fn classify_m1(g: &OrientedGraph) -> Option<OnePageCritical> {
    let shape = classify_shape(g).ok()?;
    match shape {
        Shape::Dicycle => Some(OnePageCritical::Dicycle(g.vertex_count())),
        Shape::OrientedPath if g.vertex_count() == 3 => {
            let mid = *g.vertices().iter().find(|&&v| g.degree(v) == 2)?;
            if g.is_source(mid) {
                Some(OnePageCritical::SPlus)
            } else if g.is_sink(mid) {
                Some(OnePageCritical::SMinus)
            } else {
                None
            }
        }
        _ => None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    SPlus,
    SMinus,
    Dicycle { n: usize },
    ClassI { n: usize },
    ClassT,
    ClassR { n: usize, j: usize, k: usize },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::SPlus => write!(f, "SPlus"),
            Family::SMinus => write!(f, "SMinus"),
            Family::Dicycle { n } => write!(f, "Dicycle n={n}"),
            Family::ClassI { n } => write!(f, "ClassI n={n}"),
            Family::ClassT => write!(f, "ClassT"),
            Family::ClassR { n, j, k } => write!(f, "ClassR n={n} j={j} k={k}"),
        }
    }
}

/// A copy of a family member inside a host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenWitness {
    pub family: Family,
    /// The member with its standard labels.
    pub pattern: OrientedGraph,
    /// Pattern vertex to host vertex; injective.
    pub vertex_map: BTreeMap<VertexId, VertexId>,
    /// Host arcs, the image of the pattern arcs.
    pub arcs: Vec<Arc>,
}

impl ForbiddenWitness {
    fn new(family: Family, pattern: OrientedGraph, vertex_map: BTreeMap<VertexId, VertexId>) -> Self {
        let mut arcs: Vec<Arc> = pattern
            .arcs()
            .iter()
            .map(|a| Arc::new(vertex_map[&a.tail], vertex_map[&a.head]))
            .collect();
        arcs.sort();
        ForbiddenWitness {
            family,
            pattern,
            vertex_map,
            arcs,
        }
    }

    /// The host arcs as a graph on their endpoints.
    pub fn subgraph(&self) -> OrientedGraph {
        OrientedGraph::from_arcs(self.arcs.iter().copied()).expect("image of a simple graph")
    }

    pub fn report(&self) -> String {
        let mut s = format!("family {}\n", self.family);
        for (p, v) in &self.vertex_map {
            writeln!(s, "pattern {p} -> host {v}").unwrap();
        }
        s.push_str("arcs");
        for a in &self.arcs {
            write!(s, " {a}").unwrap();
        }
        s.push('\n');
        s
    }
}

/// A dipath from the root to a branch vertex with two extra arcs: out-arcs
/// for a positive antler, in-arcs for a negative one, the dipath following
/// the same orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntlerWitness {
    pub sign: Sign,
    pub j: usize,
    /// Root first, branch vertex last; `j` vertices.
    pub dipath: Vec<VertexId>,
    pub branch_vertex: VertexId,
    pub tips: [VertexId; 2],
}

/// Antler rooted at `root` in tree `t`: walk the unique out-arcs (in-arcs
/// when negative) until a vertex with two or more, if any.
pub fn find_antler(t: &OrientedGraph, root: VertexId, sign: Sign) -> Option<AntlerWitness> {
    let step = |v| match sign {
        Sign::Positive => t.out_neighbors(v),
        Sign::Negative => t.in_neighbors(v),
    };
    let mut dipath = vec![root];
    loop {
        let at = *dipath.last().unwrap();
        let next = step(at);
        match next.len() {
            0 => return None,
            1 => dipath.push(*next.first().unwrap()),
            _ => {
                let mut it = next.into_iter();
                let tips = [it.next().unwrap(), it.next().unwrap()];
                return Some(AntlerWitness {
                    sign,
                    j: dipath.len(),
                    dipath,
                    branch_vertex: at,
                    tips,
                });
            }
        }
    }
}

/// S+, S- or a dicycle inside `g`; there is one exactly when `g` needs a page.
pub fn find_page_obstruction(g: &OrientedGraph) -> Option<ForbiddenWitness> {
    for &v in g.vertices() {
        let out = g.out_neighbors(v);
        if out.len() >= 2 {
            let mut it = out.into_iter();
            let map = BTreeMap::from([(1, it.next().unwrap()), (2, v), (3, it.next().unwrap())]);
            return Some(ForbiddenWitness::new(Family::SPlus, named::s_plus(), map));
        }
    }
    for &v in g.vertices() {
        let inn = g.in_neighbors(v);
        if inn.len() >= 2 {
            let mut it = inn.into_iter();
            let map = BTreeMap::from([(1, it.next().unwrap()), (2, v), (3, it.next().unwrap())]);
            return Some(ForbiddenWitness::new(Family::SMinus, named::s_minus(), map));
        }
    }
    // every vertex now has in- and out-degree at most one
    for comp in g.components() {
        let h = g.induced(&comp);
        if h.arc_count() == h.vertex_count() && h.arc_count() > 0 {
            let start = *comp.first().unwrap();
            let mut cycle = vec![start];
            loop {
                let next = *h.out_neighbors(*cycle.last().unwrap()).first().unwrap();
                if next == start {
                    break;
                }
                cycle.push(next);
            }
            let n = cycle.len();
            let map = cycle.iter().enumerate().map(|(i, &v)| (i as VertexId + 1, v)).collect();
            return Some(ForbiddenWitness::new(Family::Dicycle { n }, named::dicycle(n as VertexId), map));
        }
    }
    None
}

/// The first arc into the tree at `root`: towards its smallest neighbour.
fn pendant_arc(t: &OrientedGraph, root: VertexId) -> (VertexId, Pendant) {
    let leaf = *t.neighbors(root).first().expect("heavy vertex");
    let dir = if t.has_arc(Arc::new(root, leaf)) { Pendant::Out } else { Pendant::In };
    (leaf, dir)
}

/// Two heavy vertices not adjacent around a dicycle of length at least 4.
pub fn detect_i(d: &DicycleDecomposition) -> Option<ForbiddenWitness> {
    let n = d.len();
    if n < 4 {
        return None;
    }
    let heavy: Vec<usize> = (1..=n).filter(|&i| d.tree(d.phi(i)).vertex_count() > 1).collect();
    for (a, &i) in heavy.iter().enumerate() {
        for &j in &heavy[a + 1..] {
            if j - i < 2 || (i == 1 && j == n) {
                continue;
            }
            let (li, di) = pendant_arc(d.tree(d.phi(i)), d.phi(i));
            let (lj, dj) = pendant_arc(d.tree(d.phi(j)), d.phi(j));
            let pattern = families::member_i(n, i, j, [di, dj]);
            let mut map: BTreeMap<VertexId, VertexId> = (1..=n).map(|m| (m as VertexId, d.phi(m))).collect();
            map.insert(n as VertexId + 1, li);
            map.insert(n as VertexId + 2, lj);
            return Some(ForbiddenWitness::new(Family::ClassI { n }, pattern, map));
        }
    }
    None
}

/// A 3-dicycle with all three vertices heavy.
pub fn detect_t(d: &DicycleDecomposition) -> Option<ForbiddenWitness> {
    if d.len() != 3 || heavy_vertices(d).len() != 3 {
        return None;
    }
    let mut map: BTreeMap<VertexId, VertexId> = (1..=3).map(|m| (m, d.phi(m as usize))).collect();
    let mut dirs = [Pendant::Out; 3];
    for i in 1..=3 {
        let (leaf, dir) = pendant_arc(d.tree(d.phi(i)), d.phi(i));
        map.insert(3 + i as VertexId, leaf);
        dirs[i - 1] = dir;
    }
    Some(ForbiddenWitness::new(Family::ClassT, families::member_t(dirs), map))
}

/// A dicycle arc `(x, y)` with a positive antler rooted at `x` in its tree
/// and a negative antler rooted at `y` in its tree.
pub fn detect_r(d: &DicycleDecomposition) -> Option<ForbiddenWitness> {
    let n = d.len();
    for i in 1..=n {
        let (x, y) = (d.phi(i), d.phi(i + 1));
        let Some(pos) = find_antler(d.tree(x), x, Sign::Positive) else { continue };
        let Some(neg) = find_antler(d.tree(y), y, Sign::Negative) else { continue };
        let pattern = families::member_r(n, pos.j, neg.j);
        let mut map: BTreeMap<VertexId, VertexId> = (1..=n).map(|m| (m as VertexId, d.phi(i + m - 1))).collect();
        // same numbering as member_r: path after the root, then tips, per antler
        let mut label = n as VertexId;
        for antler in [&pos, &neg] {
            for &v in antler.dipath[1..].iter().chain(&antler.tips) {
                label += 1;
                map.insert(label, v);
            }
        }
        return Some(ForbiddenWitness::new(
            Family::ClassR { n, j: pos.j, k: neg.j },
            pattern,
            map,
        ));
    }
    None
}

/// The first of the I, T, R detectors to fire.
pub fn detect_forbidden(d: &DicycleDecomposition) -> Option<ForbiddenWitness> {
    detect_i(d).or_else(|| detect_t(d)).or_else(|| detect_r(d))
}
