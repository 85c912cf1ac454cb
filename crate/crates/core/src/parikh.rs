//! The Parikh graph of a word.
//!
//! Every letter of `w` is a vertex `(a_i, l)`: the `l`-th occurrence of
//! `a_i`. Two vertices are adjacent iff their letters are consecutive in the
//! alphabet, `a_k` and `a_{k+1}`, and the `a_k` comes first in `w`. Odd
//! letters form part X and even letters part Y.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, VertexId};
use crate::ordering::StrongOrdering;
use crate::words::{letter_name, Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ParikhVertex {
    pub letter: Letter,
    pub occurrence: usize,
}

impl ParikhVertex {
    pub fn new(letter: Letter, occurrence: usize) -> Self {
        ParikhVertex { letter, occurrence }
    }

    /// `"c:2"` style label, letters rendered as in the word's text format.
    pub fn render(&self, alphabet: usize) -> String {
        format!("{}:{}", letter_name(self.letter, alphabet), self.occurrence)
    }
}

impl fmt::Display for ParikhVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(crate::words::MAX_CHAR_ALPHABET))
    }
}

#[derive(Clone, Debug)]
pub struct ParikhGraph {
    word: Word,
    graph: BipartiteGraph<ParikhVertex>,
    /// 1-based word position of each vertex id.
    positions: Vec<usize>,
    /// Vertex id at each word position (index = position - 1).
    at_position: Vec<VertexId>,
}

/// Builds `G(w)` for a nonempty word.
pub fn parikh_graph(word: &Word) -> Result<ParikhGraph> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    let letters = word.letters();
    let mut seen = vec![0usize; word.alphabet_size() + 1];
    let mut vertex_of_position = Vec::with_capacity(letters.len());
    for &l in letters {
        seen[l] += 1;
        vertex_of_position.push(ParikhVertex::new(l, seen[l]));
    }
    let mut x: Vec<(ParikhVertex, usize)> = Vec::new();
    let mut y: Vec<(ParikhVertex, usize)> = Vec::new();
    for (p, &v) in vertex_of_position.iter().enumerate() {
        if v.letter % 2 == 1 { &mut x } else { &mut y }.push((v, p + 1));
    }
    x.sort();
    y.sort();
    // For each edge a_k .. a_{k+1} (k odd puts a_k in X, k even puts it in Y).
    let x_index = |v: &ParikhVertex| x.binary_search_by(|(u, _)| u.cmp(v)).expect("vertex listed");
    let y_index = |v: &ParikhVertex| y.binary_search_by(|(u, _)| u.cmp(v)).expect("vertex listed");
    let mut edges = Vec::new();
    for (i, &u) in vertex_of_position.iter().enumerate() {
        for &v in &vertex_of_position[i + 1..] {
            if v.letter == u.letter + 1 {
                if u.letter % 2 == 1 {
                    edges.push((x_index(&u), y_index(&v)));
                } else {
                    edges.push((x_index(&v), y_index(&u)));
                }
            }
        }
    }
    let mut positions: Vec<usize> = x.iter().chain(&y).map(|&(_, p)| p).collect();
    positions.shrink_to_fit();
    let graph = BipartiteGraph::from_index_edges(
        x.into_iter().map(|(v, _)| v).collect(),
        y.into_iter().map(|(v, _)| v).collect(),
        edges,
    )?;
    let mut at_position = vec![0; positions.len()];
    for (id, &p) in positions.iter().enumerate() {
        at_position[p - 1] = id;
    }
    Ok(ParikhGraph {
        word: word.clone(),
        graph,
        positions,
        at_position,
    })
}

impl ParikhGraph {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn graph(&self) -> &BipartiteGraph<ParikhVertex> {
        &self.graph
    }

    pub fn into_graph(self) -> BipartiteGraph<ParikhVertex> {
        self.graph
    }

    /// 1-based word position of a vertex.
    pub fn position(&self, v: VertexId) -> usize {
        self.positions[v]
    }

    /// Vertex id of the letter at a 1-based word position.
    pub fn vertex_at(&self, position: usize) -> VertexId {
        self.at_position[position - 1]
    }

    pub fn vertex_id(&self, v: ParikhVertex) -> Option<VertexId> {
        self.graph.id(&v)
    }

    /// The same graph labeled by word positions.
    pub fn position_graph(&self) -> BipartiteGraph<usize> {
        self.graph
            .map_labels(|v| self.positions[self.graph.id(v).expect("own label")])
            .expect("relabeling is injective")
    }

    /// String-labeled copy with `"c:2"` labels.
    pub fn labeled(&self) -> BipartiteGraph {
        let s = self.word.alphabet_size();
        self.graph
            .map_labels(|v| v.render(s))
            .expect("rendered labels are unique")
    }

    /// The ordering listing part X by descending odd letter and part Y by
    /// descending even letter, occurrences ascending within each letter.
    /// It is a strong ordering of `G(w)` for every word.
    pub fn canonical_strong_ordering(&self) -> StrongOrdering {
        let sorted = |ids: std::ops::Range<VertexId>| {
            let mut ids: Vec<VertexId> = ids.collect();
            ids.sort_by_key(|&v| {
                let p = self.graph.label(v);
                (std::cmp::Reverse(p.letter), p.occurrence)
            });
            ids
        };
        StrongOrdering {
            x: sorted(self.graph.x_ids()),
            y: sorted(self.graph.y_ids()),
        }
    }
}

/// The permutation realizing `G(w)` for a binary word: the `i`-th `b` maps
/// to `i`, the `j`-th `a` to `j + |w|_b`. Positions `x < y` are adjacent iff
/// `tau[x] > tau[y]` (1-based images, indexed by position - 1).
pub fn binary_permutation(word: &Word) -> Result<Vec<usize>> {
    if word.alphabet_size() != 2 {
        return Err(Error::WrongArity {
            expected: 2,
            found: word.alphabet_size(),
        });
    }
    let bs = word.count(2);
    let (mut a_seen, mut b_seen) = (0, 0);
    Ok(word
        .letters()
        .iter()
        .map(|&l| {
            if l == 2 {
                b_seen += 1;
                b_seen
            } else {
                a_seen += 1;
                a_seen + bs
            }
        })
        .collect())
}
