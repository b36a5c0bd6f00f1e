//! Word-representability of small graphs.
//!
//! A graph is word-representable when some word over its vertex set has
//! exactly its edges as alternating letter pairs; equivalently, when the
//! graph admits a semi-transitive orientation. This crate holds the pure
//! algorithmic side of that equivalence:
//!
//! - [`graph`]: labelled simple graphs on `1..=n` as neighbour bitmasks,
//!   4-cycle and clique queries, colourings.
//! - [`canon`]: canonical forms by exhaustive permutation minimisation and
//!   per-isomorphism-class enumeration of small graphs.
//! - [`word`]: words, alternation, and the graph a word represents.
//! - [`orientation`]: acyclicity, shortcuts, semi-transitivity, the
//!   4-cycle forcing rule and the backtracking orientation search.
//! - [`decision`]: the top-level representability verdict with certificates.
//! - [`wordsearch`]: bounded search for k-uniform representing words.
//! - [`census`]: labelled and unlabelled counts of representable graphs.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, timing,
//! parallel drivers and the command line live in the `wordrep` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod canon;
pub mod census;
pub mod decision;
pub mod graph;
pub mod orientation;
pub mod word;
pub mod wordsearch;

pub use canon::{canonical_form, enumerate_graphs, CanonicalForm, GraphClass};
pub use census::{census, entropy_table, SpeedRow};
pub use decision::{decide, verify_certificate, Decision, Verdict};
pub use graph::{Graph, GraphError, VertexColoring};
pub use orientation::{
    count_semi_transitive, find_semi_transitive, lemma1_propagate, orient_by_coloring, Conflict, ConflictKind, Dir,
    Orientation, OrientationError, SearchStats,
};
pub use word::{Word, WordError};
pub use wordsearch::{find_k_uniform_word, find_word, WordSearchResult};
