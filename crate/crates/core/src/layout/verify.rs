use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::{intervals_cross, BookEmbedding, Direction, Placement};
use crate::graph::{Arc, OrientedGraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    BadSpine,
    UnplacedArc,
    TightNonConsecutive,
    SpineDirectionClash,
    PageDirectionClash,
    PlanarityViolation,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: Rule,
    pub arcs: Vec<Arc>,
    /// Vertices at fault, for spine problems.
    pub vertices: Vec<VertexId>,
    /// Page the violation lives in, for page rules.
    pub page: Option<usize>,
}

impl Violation {
    fn arcs(rule: Rule, arcs: Vec<Arc>, page: Option<usize>) -> Self {
        Violation {
            rule,
            arcs,
            vertices: Vec::new(),
            page,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rule)?;
        if let Some(p) = self.page {
            write!(f, " in page {p}")?;
        }
        if !self.vertices.is_empty() {
            write!(f, " vertices")?;
            for v in &self.vertices {
                write!(f, " {v}")?;
            }
        }
        if !self.arcs.is_empty() {
            write!(f, " arcs")?;
            for a in &self.arcs {
                write!(f, " {a}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ValidityReport {
    pub violations: Vec<Violation>,
    /// Pages declared by the embedding.
    pub pages: usize,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn rules(&self) -> BTreeSet<Rule> {
        self.violations.iter().map(|v| v.rule).collect()
    }
}

impl fmt::Display for ValidityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            let noun = if self.pages == 1 { "page" } else { "pages" };
            return write!(f, "valid, {} {noun}", self.pages);
        }
        write!(f, "invalid, {} violation(s)", self.violations.len())?;
        for v in &self.violations {
            write!(f, "\n  {v}")?;
        }
        Ok(())
    }
}

/// Checks an embedding against a graph. Every violated rule is reported, in
/// this order: spine is a permutation of the vertices; every arc placed in a
/// declared page or on the spine; tight arcs join consecutive spine vertices;
/// tight arcs share one direction; each page's arcs share one direction; no
/// two arcs in a page cross.
pub fn verify(g: &OrientedGraph, emb: &BookEmbedding) -> ValidityReport {
    let mut violations = Vec::new();

    // (1) spine
    let mut seen = BTreeSet::new();
    let mut bad: BTreeSet<VertexId> = emb
        .spine
        .iter()
        .filter(|&&v| !seen.insert(v) || !g.has_vertex(v))
        .copied()
        .collect();
    bad.extend(g.vertices().difference(&seen));
    if !bad.is_empty() {
        violations.push(Violation {
            rule: Rule::BadSpine,
            arcs: g
                .arcs()
                .iter()
                .filter(|a| bad.contains(&a.tail) || bad.contains(&a.head))
                .copied()
                .collect(),
            vertices: bad.into_iter().collect(),
            page: None,
        });
    }

    // (2) placement
    let unplaced: Vec<Arc> = g
        .arcs()
        .iter()
        .filter(|a| match emb.placement.get(a) {
            None => true,
            Some(Placement::Page(p)) => *p >= emb.pages,
            Some(Placement::Spine) => false,
        })
        .chain(emb.placement.keys().filter(|a| !g.has_arc(**a)))
        .copied()
        .collect();
    if !unplaced.is_empty() {
        violations.push(Violation::arcs(Rule::UnplacedArc, unplaced, None));
    }

    // Later rules only look at placed graph arcs with both ends on the spine.
    let pos: BTreeMap<VertexId, usize> = emb.positions();
    let span = |a: &Arc| Some((*pos.get(&a.tail)?, *pos.get(&a.head)?));
    let mut tight = Vec::new();
    let mut pages: BTreeMap<usize, Vec<(Arc, usize, usize)>> = BTreeMap::new();
    for a in g.arcs() {
        let Some((t, h)) = span(a) else { continue };
        match emb.placement.get(a) {
            Some(Placement::Spine) => tight.push((*a, t, h)),
            Some(&Placement::Page(p)) if p < emb.pages => pages.entry(p).or_default().push((*a, t, h)),
            _ => {}
        }
    }

    // (3) tight arcs are consecutive
    let stretched: Vec<Arc> = tight
        .iter()
        .filter(|(_, t, h)| t.abs_diff(*h) != 1)
        .map(|(a, _, _)| *a)
        .collect();
    if !stretched.is_empty() {
        violations.push(Violation::arcs(Rule::TightNonConsecutive, stretched, None));
    }

    // (4) tight arcs agree
    if let Some(clash) = minority_direction(&tight) {
        violations.push(Violation::arcs(Rule::SpineDirectionClash, clash, None));
    }

    // (5) each page agrees
    for (&p, arcs) in &pages {
        if let Some(clash) = minority_direction(arcs) {
            violations.push(Violation::arcs(Rule::PageDirectionClash, clash, Some(p)));
        }
    }

    // (6) planarity within each page
    for (&p, arcs) in &pages {
        for (i, &(a1, t1, h1)) in arcs.iter().enumerate() {
            for &(a2, t2, h2) in &arcs[i + 1..] {
                if intervals_cross((t1.min(h1), t1.max(h1)), (t2.min(h2), t2.max(h2))) {
                    violations.push(Violation::arcs(Rule::PlanarityViolation, vec![a1, a2], Some(p)));
                }
            }
        }
    }

    ValidityReport {
        violations,
        pages: emb.pages,
    }
}

/// Arcs going against the majority direction; on a tie the downward ones.
fn minority_direction(arcs: &[(Arc, usize, usize)]) -> Option<Vec<Arc>> {
    let dir = |&(_, t, h): &(Arc, usize, usize)| if t < h { Direction::Up } else { Direction::Down };
    let up = arcs.iter().filter(|x| dir(x) == Direction::Up).count();
    let down = arcs.len() - up;
    if up == 0 || down == 0 {
        return None;
    }
    let odd = if up >= down { Direction::Down } else { Direction::Up };
    Some(arcs.iter().filter(|x| dir(x) == odd).map(|x| x.0).collect())
}
