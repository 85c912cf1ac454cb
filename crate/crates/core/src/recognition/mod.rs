//! From graphs to words: strong orderings, interval decompositions, word
//! synthesis and small-alphabet recognition.

mod arity;
mod compose;
mod decomposition;
mod strong;
mod synthesis;

pub use arity::{check_binary_via_chordality, recognize_binary, recognize_ternary, TernaryWitness};
pub use compose::{compose_components, synthesize_any};
pub use decomposition::{interval_decomposition, IntervalDecomposition};
pub use strong::{find_strong_ordering, find_strong_ordering_any};
pub use synthesis::{synthesize_word, StepCase, Synthesis, SynthesisStep, SynthesisTrace};
