//! Disjoint unions: composing component words into one word.

use super::synthesis::synthesize_word;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Label, Limits};
use crate::words::Word;

/// Concatenates the blocks after moving each into its own letter range,
/// later blocks onto smaller letters. A letter of an earlier block is larger
/// than, and precedes, every letter of a later block, so no edge joins two
/// blocks.
///
/// Each block keeps the span between its smallest and largest letter; gaps
/// inside a block are preserved, since closing them could create edges.
pub fn compose_components(words: &[Word]) -> Result<Word> {
    if words.is_empty() || words.iter().any(Word::is_empty) {
        return Err(Error::EmptyWord);
    }
    let spans: Vec<(usize, usize)> = words
        .iter()
        .map(|w| {
            let support = w.support();
            (*support.first().expect("nonempty"), *support.last().expect("nonempty"))
        })
        .collect();
    let alphabet: usize = spans.iter().map(|(lo, hi)| hi - lo + 1).sum();
    let mut letters = Vec::new();
    let mut top = alphabet;
    for (w, &(lo, hi)) in words.iter().zip(&spans) {
        let base = top - (hi - lo + 1);
        letters.extend(w.letters().iter().map(|&l| l - lo + 1 + base));
        top = base;
    }
    Word::new(alphabet, letters)
}

/// A word representing any bipartite graph whose components are all
/// bipartite permutation graphs; `None` if some component is not.
pub fn synthesize_any<L: Label>(g: &BipartiteGraph<L>, limits: &Limits) -> Result<Option<Word>> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let mut words = Vec::new();
    for component in g.connected_components() {
        match synthesize_word(&component, limits) {
            Ok(s) => words.push(s.word),
            Err(Error::NotRepresentable) => return Ok(None),
            Err(e) => return Err(e),
        }
    }
    compose_components(&words).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;
    use crate::graph::named::*;
    use crate::parikh::parikh_graph;

    fn w(text: &str) -> Word {
        Word::parse(text, None).unwrap()
    }

    #[test]
    fn composition_examples() {
        assert_eq!(compose_components(&[w("abab")]).unwrap(), w("abab"));
        assert_eq!(compose_components(&[w("cd")]).unwrap().to_string(), "ab");
        let two_edges = compose_components(&[w("ab"), w("ab")]).unwrap();
        assert_eq!(two_edges.to_string(), "cdab");
        assert_eq!(two_edges.alphabet_size(), 4);
        let g = parikh_graph(&two_edges).unwrap();
        assert_eq!(g.graph().edge_count(), 2);
        assert_eq!(g.graph().component_ids().len(), 2);
    }

    #[test]
    fn abb_and_a_give_a_star_and_an_isolated_vertex() {
        let composed = compose_components(&[w("abb"), w("a")]).unwrap();
        assert_eq!(composed.to_string(), "bcca");
        let g = parikh_graph(&composed).unwrap();
        let sizes: Vec<usize> = g.graph().component_ids().iter().map(Vec::len).collect();
        assert_eq!(sizes.len(), 2);
        assert!(sizes.contains(&3) && sizes.contains(&1));
    }

    #[test]
    fn gaps_inside_a_block_are_kept() {
        // "ac" has no edge; closing the gap would create one
        let composed = compose_components(&[w("ac")]).unwrap();
        assert_eq!(parikh_graph(&composed).unwrap().graph().edge_count(), 0);
        assert!(compose_components(&[]).is_err());
    }

    #[test]
    fn synthesize_any_examples() {
        let two_edges = BipartiteGraph::from_strs(&["a", "b"], &["c", "d"], &[("a", "c"), ("b", "d")]).unwrap();
        assert_eq!(
            synthesize_any(&two_edges, &Limits::default())
                .unwrap()
                .unwrap()
                .to_string(),
            "cdab"
        );
        let c6_k22 = BipartiteGraph::from_index_edges(
            (0..5).map(|i| format!("x{i}")).collect(),
            (0..5).map(|i| format!("y{i}")).collect(),
            [
                (0, 0),
                (1, 0),
                (1, 1),
                (2, 1),
                (2, 2),
                (0, 2),
                (3, 3),
                (3, 4),
                (4, 3),
                (4, 4),
            ],
        )
        .unwrap();
        assert!(synthesize_any(&c6_k22, &Limits::default()).unwrap().is_none());
        let mixed = BipartiteGraph::from_index_edges(
            (0..3).map(|i| format!("x{i}")).collect(),
            (0..3).map(|i| format!("y{i}")).collect(),
            [(0, 0), (0, 1), (1, 1)],
        )
        .unwrap();
        let word = synthesize_any(&mixed, &Limits::default()).unwrap().unwrap();
        assert!(are_isomorphic(parikh_graph(&word).unwrap().graph(), &mixed, &Limits::default()).unwrap());
        assert_eq!(
            synthesize_any(&edgeless(3), &Limits::default()).unwrap().unwrap().len(),
            3
        );
    }
}
