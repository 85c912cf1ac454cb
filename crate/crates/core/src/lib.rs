//! Parikh graphs of words over ordered alphabets.
//!
//! The Parikh graph `G(w)` of a word `w` over `a1 < a2 < ... < as` has one
//! vertex per letter of `w` and an edge for every occurrence of a subword
//! `a_k a_{k+1}`. Up to isomorphism these graphs are exactly the bipartite
//! permutation graphs. The crate builds `G(w)`, recognizes and synthesizes
//! representing words for bipartite graphs, and checks diameter and
//! Hamiltonicity criteria, with brute-force oracles for all of it in
//! [`oracle`].

pub mod analysis;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod ordering;
pub mod parikh;
pub mod recognition;
pub mod words;

pub use error::{Error, Result};
pub use graph::{BipartiteGraph, Limits, Part, VertexId};
pub use ordering::StrongOrdering;
pub use parikh::{parikh_graph, ParikhGraph, ParikhVertex};
pub use words::{Letter, Word};
