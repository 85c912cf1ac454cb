//! Diameter bounds, longest paths, slender words and Hamiltonicity.

mod diameter;
mod hamiltonian;
mod slender;

pub use diameter::{check_triple_subwords, diameter_report, longest_path_word, BoundSource, DiameterReport};
pub use hamiltonian::{binary_hamiltonian, hamiltonian_via_strong_ordering, ternary_hamiltonian};
pub use slender::{count_slender_classes, slender_word_for_partition};
