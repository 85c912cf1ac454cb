use std::collections::HashMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, BipartiteGraph, Limits};
use crate::parikh::{parikh_graph, ParikhVertex};
use crate::recognition::compose_components;
use crate::words::Word;

/// The slender word whose Parikh graph is the disjoint union of paths with
/// the given vertex counts: one increasing run per part, arranged so later
/// parts use smaller letters.
pub fn slender_word_for_partition(parts: &[usize]) -> Result<Word> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::InvalidPartition(parts.to_vec()));
    }
    let blocks = parts.iter().map(|&k| Word::run(k, 1, k)).collect::<Result<Vec<_>>>()?;
    compose_components(&blocks)
}

/// Number of isomorphism classes among the Parikh graphs of all `s!`
/// slender words over `Σ_s`.
pub fn count_slender_classes(s: usize, limits: &Limits) -> Result<usize> {
    if s == 0 {
        return Err(Error::EmptyAlphabet);
    }
    Limits::check(limits.slender, "slender word enumeration", s)?;
    // buckets keyed by a cheap invariant; isomorphism decides within one
    type Key = (Vec<usize>, Vec<usize>);
    let mut buckets: HashMap<Key, Vec<BipartiteGraph<ParikhVertex>>> = HashMap::new();
    let mut classes = 0;
    for perm in (1..=s).permutations(s) {
        let g = parikh_graph(&Word::new(s, perm)?)?.into_graph();
        let mut sizes: Vec<usize> = g.component_ids().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        let bucket = buckets.entry((g.degree_sequence(), sizes)).or_default();
        let mut known = false;
        for other in bucket.iter() {
            if are_isomorphic(other, &g, limits)? {
                known = true;
                break;
            }
        }
        if !known {
            bucket.push(g);
            classes += 1;
        }
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_words() {
        assert_eq!(slender_word_for_partition(&[4]).unwrap().to_string(), "abcd");
        assert_eq!(slender_word_for_partition(&[1, 1, 1, 1]).unwrap().to_string(), "dcba");
        assert_eq!(slender_word_for_partition(&[2, 2]).unwrap().to_string(), "cdab");
        assert_eq!(slender_word_for_partition(&[3, 1]).unwrap().to_string(), "bcda");
        assert!(matches!(
            slender_word_for_partition(&[]),
            Err(Error::InvalidPartition(_))
        ));
        assert!(matches!(
            slender_word_for_partition(&[2, 0]),
            Err(Error::InvalidPartition(_))
        ));
    }

    #[test]
    fn partition_words_are_unions_of_paths() {
        let parts = [3, 1, 2];
        let g = parikh_graph(&slender_word_for_partition(&parts).unwrap())
            .unwrap()
            .into_graph();
        let mut sizes: Vec<usize> = g.component_ids().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, [1, 2, 3]);
        assert!(g.connected_components().iter().all(BipartiteGraph::is_path));
    }

    #[test]
    fn small_counts() {
        let limits = Limits::default();
        assert_eq!(count_slender_classes(2, &limits).unwrap(), 2);
        assert_eq!(count_slender_classes(4, &limits).unwrap(), 5);
        assert_eq!(count_slender_classes(6, &limits).unwrap(), 11);
        assert!(matches!(count_slender_classes(9, &limits), Err(Error::Capacity { .. })));
    }
}
