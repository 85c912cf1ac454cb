//! Brute-force enumeration and the exhaustive cross-checking suites.
//!
//! Every suite is registered once in [`SUITES`]; the command line and the
//! test harness both run suites through [`run_suite`].

mod enumerate;
mod suites;

use std::collections::HashMap;

pub use enumerate::{
    canonical_form, enumerate_bipartite_graphs, enumerate_graphs_where, enumerate_words, partitions, CanonicalForm,
    EnumerationSpec, MAX_GRAPH_VERTICES, MAX_WORDS,
};
pub use suites::{
    check_round_trip_with, find_suite, run_suite, CounterexampleReport, InputKind, Suite, SuiteOutcome, SUITES,
};

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Label};
use crate::parikh::parikh_graph;
use crate::words::Word;

/// Canonical forms of the connected Parikh graphs of a set of words, each
/// mapped to the first word producing it.
#[derive(Clone, Debug, Default)]
pub struct WordGraphIndex {
    forms: HashMap<CanonicalForm, Word>,
}

impl WordGraphIndex {
    /// Indexes every word of the spec whose Parikh graph is connected and
    /// small enough for a canonical form.
    pub fn build(spec: &EnumerationSpec) -> Result<Self> {
        let mut forms = HashMap::new();
        for word in enumerate_words(spec)? {
            if word.is_empty() || word.len() > MAX_GRAPH_VERTICES {
                continue;
            }
            match canonical_form(parikh_graph(&word)?.graph()) {
                Ok(form) => {
                    forms.entry(form).or_insert(word);
                }
                Err(Error::Disconnected) => {}
                Err(e) => return Err(e),
            }
        }
        Ok(WordGraphIndex { forms })
    }

    /// An indexed word whose Parikh graph is isomorphic to the connected
    /// graph `g`.
    pub fn representing_word<L: Label>(&self, g: &BipartiteGraph<L>) -> Result<Option<&Word>> {
        Ok(self.forms.get(&canonical_form(g)?))
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn binary_index_knows_paths_up_to_four_vertices() {
        let index = WordGraphIndex::build(&EnumerationSpec::words(2..=2, 1..=6).with_full_support(true)).unwrap();
        for n in 2..=4 {
            assert!(index.representing_word(&named::path(n)).unwrap().is_some(), "P{n}");
        }
        assert!(index.representing_word(&named::path(5)).unwrap().is_none());
        assert_eq!(
            index.representing_word(&named::complete(2, 3)).unwrap().unwrap().len(),
            5
        );
    }
}
