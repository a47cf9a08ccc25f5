//! Shape-based dispatch: direct constructions where they apply, the exact
//! oracle otherwise.

use std::fmt;

use thiserror::Error;

use super::{embed_oriented_cycle, embed_tree_loose, embed_unidicyclic, ConstructError, UnidicyclicOutcome};
use crate::graph::{classify_shape, OrientedGraph, Shape};
use crate::layout::BookEmbedding;
use crate::oracle::{obt_with, OracleError, OracleOptions};
use crate::recognize::{decompose_unidicyclic, ForbiddenWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Cycle,
    Tree,
    Unidicyclic,
    Exact,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Cycle => "cycle",
            Method::Tree => "tree",
            Method::Unidicyclic => "unidicyclic",
            Method::Exact => "exact",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutoEmbedding {
    Embedded { method: Method, embedding: BookEmbedding },
    /// Strictly uni-dicyclic with a forbidden subgraph: no 1-page embedding.
    Forbidden { witness: ForbiddenWitness },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AutoError {
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

pub fn embed_auto(g: &OrientedGraph, opts: &OracleOptions) -> Result<AutoEmbedding, AutoError> {
    let done = |method, embedding| Ok(AutoEmbedding::Embedded { method, embedding });
    match classify_shape(g) {
        Ok(Shape::Dicycle | Shape::OrientedCycle) => return done(Method::Cycle, embed_oriented_cycle(g)?),
        Ok(_) if g.is_tree() => {
            let root = *g.vertices().first().unwrap();
            return done(Method::Tree, embed_tree_loose(g, root)?);
        }
        _ => {}
    }
    if decompose_unidicyclic(g).is_ok() {
        return match embed_unidicyclic(g)? {
            UnidicyclicOutcome::Embedded(e) => done(Method::Unidicyclic, e),
            UnidicyclicOutcome::Forbidden(witness) => Ok(AutoEmbedding::Forbidden { witness }),
        };
    }
    done(Method::Exact, obt_with(g, opts)?.witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::graph::named;
    use crate::layout::verify;
    use crate::recognize::families::members_t;

    fn method(h: &OrientedGraph) -> Method {
        match embed_auto(h, &OracleOptions::default()).unwrap() {
            AutoEmbedding::Embedded { method, embedding } => {
                assert!(verify(h, &embedding).is_valid());
                method
            }
            AutoEmbedding::Forbidden { witness } => panic!("{}", witness.report()),
        }
    }

    #[test]
    fn dispatch() {
        assert_eq!(method(&named::dicycle(5)), Method::Cycle);
        assert_eq!(method(&g(&[(1, 2), (3, 2), (1, 4)])), Method::Tree);
        assert_eq!(method(&g(&[(1, 2), (2, 3), (3, 1), (3, 4)])), Method::Unidicyclic);
        assert_eq!(method(&g(&[(1, 2), (2, 3), (1, 3), (3, 4), (4, 1)])), Method::Exact);
        assert_eq!(method(&g(&[(1, 2), (3, 4)])), Method::Exact);
        assert!(matches!(
            embed_auto(&members_t()[1], &OracleOptions::default()).unwrap(),
            AutoEmbedding::Forbidden { .. }
        ));
    }
}
