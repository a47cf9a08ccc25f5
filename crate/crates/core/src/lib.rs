//! Oriented book embeddings of oriented graphs.
//!
//! * [`graph`]: oriented graphs, isomorphism, enumeration.
//! * [`layout`]: embeddings, the verifier, text and SVG output.
//! * [`oracle`]: exact thickness by exhaustive search.
//! * [`recognize`]: dicycle decompositions and forbidden subgraphs.
//! * [`constructive`]: direct 1-page embedders.
//! * [`generate`]: seeded random instances.

pub mod graph;
pub mod layout;
pub mod oracle;
pub mod recognize;
pub mod constructive;
pub mod generate;
