//! Text format for embeddings.
//!
//! ```text
//! spine 1 2 3
//! pages 1
//! place 1 2 spine
//! place 2 3 spine
//! place 3 1 page 0
//! ```
//!
//! The parser accepts anything well formed; whether the embedding is valid
//! for a graph is the verifier's call. Without a `pages` line the count is one
//! more than the highest page used.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::{BookEmbedding, LayoutError, Placement};
use crate::graph::{Arc, VertexId};

pub fn parse_embedding(text: &str) -> Result<BookEmbedding, LayoutError> {
    let mut spine: Option<Vec<VertexId>> = None;
    let mut pages: Option<usize> = None;
    let mut placement = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |message: String| LayoutError::Syntax { line, message };
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let words: Vec<&str> = body.split_whitespace().collect();
        let num = |w: &str| -> Result<u32, LayoutError> {
            if !w.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err(format!("expected a number, got '{w}'")));
            }
            w.parse().map_err(|_| err(format!("number out of range '{w}'")))
        };
        match words[0] {
            "spine" => {
                if spine.is_some() {
                    return Err(err("repeated spine line".into()));
                }
                spine = Some(words[1..].iter().map(|w| num(w)).collect::<Result<_, _>>()?);
            }
            "pages" => {
                if words.len() != 2 || pages.is_some() {
                    return Err(err("expected a single 'pages <k>' line".into()));
                }
                pages = Some(num(words[1])? as usize);
            }
            "place" => {
                let arc = match words.get(1..3) {
                    Some([t, h]) => Arc::new(num(t)?, num(h)?),
                    _ => return Err(err("expected 'place <tail> <head> ...'".into())),
                };
                let where_ = match &words[3..] {
                    ["spine"] => Placement::Spine,
                    ["page", p] => Placement::Page(num(p)? as usize),
                    _ => return Err(err("expected 'spine' or 'page <i>'".into())),
                };
                if placement.insert(arc, where_).is_some() {
                    return Err(err(format!("arc {arc} placed twice")));
                }
            }
            other => return Err(err(format!("unknown record '{other}'"))),
        }
    }
    let spine = spine.ok_or(LayoutError::Syntax {
        line: 0,
        message: "missing spine line".into(),
    })?;
    let pages = pages.unwrap_or_else(|| {
        placement
            .values()
            .filter_map(|p| match p {
                Placement::Page(i) => Some(i + 1),
                Placement::Spine => None,
            })
            .max()
            .unwrap_or(0)
    });
    Ok(BookEmbedding::new(spine, placement, pages))
}

pub fn write_embedding(emb: &BookEmbedding) -> String {
    let mut out = String::from("spine");
    for v in &emb.spine {
        write!(out, " {v}").unwrap();
    }
    writeln!(out, "\npages {}", emb.pages).unwrap();
    for (a, p) in &emb.placement {
        writeln!(out, "place {} {} {p}", a.tail, a.head).unwrap();
    }
    out
}
