//! SVG drawing of an embedding: a vertical spine with the first vertex at the
//! bottom, tight arcs as arrows along it, and each page's arcs as half-ellipses
//! on the right (even pages) or left (odd pages). An arc's horizontal radius
//! grows with the number of arc levels nested inside it, so nested arcs stay
//! visibly inside their hosts.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::{verify, BookEmbedding, LayoutError, Placement};
use crate::graph::{Arc, OrientedGraph};

const STEP: f64 = 48.0;
const MARGIN: f64 = 40.0;
const LEVEL: f64 = 22.0;
const DOT: f64 = 4.5;
const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

pub fn render_svg(g: &OrientedGraph, emb: &BookEmbedding) -> Result<String, LayoutError> {
    let report = verify(g, emb);
    if !report.is_valid() {
        return Err(LayoutError::InvalidEmbedding(report.to_string()));
    }
    let pos = emb.positions();
    let n = emb.spine.len();
    let y = |v| MARGIN + (n.saturating_sub(1) - pos[&v]) as f64 * STEP;

    let levels = nesting_levels(emb, &pos);
    let reach = levels.values().copied().max().unwrap_or(0) as f64 * LEVEL;
    let half = MARGIN + reach.max(LEVEL);
    let width = 2.0 * half;
    let height = 2.0 * MARGIN + n.saturating_sub(1) as f64 * STEP;
    let x = half;

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.1} {height:.1}">"#
    )
    .unwrap();
    s.push_str("<defs>\n");
    marker(&mut s, "arrow-spine", "#000000");
    for p in 0..emb.pages {
        marker(&mut s, &format!("arrow-p{p}"), colour(p));
    }
    s.push_str("</defs>\n");

    if n > 1 {
        writeln!(
            s,
            r##"<line class="spine" x1="{x:.1}" y1="{:.1}" x2="{x:.1}" y2="{:.1}" stroke="#999999" stroke-width="1"/>"##,
            MARGIN - STEP / 2.0,
            height - MARGIN + STEP / 2.0
        )
        .unwrap();
    }

    for (a, place) in &emb.placement {
        let (y1, y2) = (y(a.tail), y(a.head));
        match place {
            Placement::Spine => {
                let dir = (y2 - y1).signum();
                writeln!(
                    s,
                    r##"<line class="tight" x1="{x:.1}" y1="{:.1}" x2="{x:.1}" y2="{:.1}" stroke="#000000" stroke-width="2" marker-end="url(#arrow-spine)"/>"##,
                    y1 + dir * DOT,
                    y2 - dir * (DOT + 2.0)
                )
                .unwrap();
            }
            Placement::Page(p) => {
                let rx = levels[a] as f64 * LEVEL;
                let ry = (y2 - y1).abs() / 2.0;
                let right = p % 2 == 0;
                let downward_on_screen = y1 < y2;
                let sweep = u8::from(right == downward_on_screen);
                writeln!(
                    s,
                    r#"<path class="page-{p}" d="M {x:.1} {y1:.1} A {rx:.1} {ry:.1} 0 0 {sweep} {x:.1} {y2:.1}" fill="none" stroke="{}" stroke-width="1.5" marker-end="url(#arrow-p{p})"/>"#,
                    colour(*p)
                )
                .unwrap();
            }
        }
    }

    for &v in &emb.spine {
        let cy = y(v);
        writeln!(s, r##"<circle cx="{x:.1}" cy="{cy:.1}" r="{DOT:.1}" fill="#000000"/>"##).unwrap();
        writeln!(
            s,
            r#"<text x="{:.1}" y="{:.1}" font-family="monospace" font-size="12">{v}</text>"#,
            x + 7.0,
            cy - 6.0
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    Ok(s)
}

fn colour(page: usize) -> &'static str {
    PALETTE[page % PALETTE.len()]
}

fn marker(s: &mut String, id: &str, fill: &str) {
    writeln!(
        s,
        r#"<marker id="{id}" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="7" markerHeight="7" orient="auto"><path d="M 0 0 L 10 5 L 0 10 z" fill="{fill}"/></marker>"#
    )
    .unwrap();
}

/// 1 + the deepest level nested inside, per loose arc and within its page.
fn nesting_levels(emb: &BookEmbedding, pos: &BTreeMap<u32, usize>) -> BTreeMap<Arc, usize> {
    let span = |a: &Arc| {
        let (t, h) = (pos[&a.tail], pos[&a.head]);
        (t.min(h), t.max(h))
    };
    let mut loose: Vec<(Arc, usize, (usize, usize))> = emb
        .placement
        .iter()
        .filter_map(|(a, p)| match p {
            Placement::Page(i) => Some((*a, *i, span(a))),
            Placement::Spine => None,
        })
        .collect();
    // inner arcs first
    loose.sort_by_key(|&(a, _, (l, r))| (r - l, a));
    let mut level: BTreeMap<Arc, usize> = BTreeMap::new();
    for (i, &(a, page, (l, r))) in loose.iter().enumerate() {
        let inner = loose[..i]
            .iter()
            .filter(|&&(_, q, (l2, r2))| q == page && l <= l2 && r2 <= r && (l2, r2) != (l, r))
            .map(|(b, _, _)| level[b])
            .max()
            .unwrap_or(0);
        level.insert(a, inner + 1);
    }
    level
}
