//! Recognition over two and three letters, with witness words.

use serde::Serialize;

use super::synthesis::verify_embedding;
use crate::error::{Error, Result};
use crate::graph::{is_62_chordal, BipartiteGraph, Label, Limits, Part, VertexId};
use crate::parikh::ParikhVertex;
use crate::words::Word;

fn require_connected<L: Label>(g: &BipartiteGraph<L>) -> Result<()> {
    if g.is_empty() {
        Err(Error::EmptyGraph)
    } else if !g.is_connected() {
        Err(Error::Disconnected)
    } else {
        Ok(())
    }
}

/// A word over `{a < b}` representing the connected graph `g`, if the
/// neighbourhoods of one part form a chain under inclusion. Part X is tried
/// as the `a` part first.
pub fn recognize_binary<L: Label>(g: &BipartiteGraph<L>) -> Result<Option<Word>> {
    Ok(binary_recognition(g)?.map(|(word, _)| word))
}

/// The binary word and the part mapped to `a`.
fn binary_recognition<L: Label>(g: &BipartiteGraph<L>) -> Result<Option<(Word, Part)>> {
    require_connected(g)?;
    if g.len() == 1 {
        return Ok(Some((Word::new(2, vec![1])?, g.part_of(0))));
    }
    for part in [Part::X, Part::Y] {
        if let Some((word, embedding)) = binary_witness(g, part) {
            verify_embedding(g, &word, &embedding)?;
            return Ok(Some((word, part)));
        }
    }
    Ok(None)
}

/// `a b^{|N(x_1) \ N(x_2)|} a ... a b^{|N(x_k)|}` with neighbourhoods of the
/// `a` part sorted by decreasing size, when they are nested.
fn binary_witness<L: Label>(g: &BipartiteGraph<L>, a_part: Part) -> Option<(Word, Vec<ParikhVertex>)> {
    let mut xs: Vec<VertexId> = g.part_ids(a_part).collect();
    xs.sort_by_key(|&x| std::cmp::Reverse(g.degree(x)));
    let nested = xs
        .windows(2)
        .all(|pair| g.neighbor_ids(pair[1]).iter().all(|&y| g.has_edge(pair[0], y)));
    if !nested {
        return None;
    }
    let mut letters = Vec::with_capacity(g.len());
    let mut embedding = vec![ParikhVertex::new(0, 0); g.len()];
    let mut b_seen = 0;
    for (i, &x) in xs.iter().enumerate() {
        letters.push(1);
        embedding[x] = ParikhVertex::new(1, i + 1);
        let leaving = g
            .neighbor_ids(x)
            .iter()
            .filter(|&&y| xs.get(i + 1).is_none_or(|&next| !g.has_edge(next, y)));
        for &y in leaving {
            letters.push(2);
            b_seen += 1;
            embedding[y] = ParikhVertex::new(2, b_seen);
        }
    }
    Some((Word::new(2, letters).ok()?, embedding))
}

/// The chordality form of binary recognition: every cycle of length at
/// least six has two chords and some edge `xy` has `deg x + deg y = |V|`.
pub fn check_binary_via_chordality<L: Label>(g: &BipartiteGraph<L>, limits: &Limits) -> Result<bool> {
    require_connected(g)?;
    if !is_62_chordal(g, limits)? {
        return Ok(false);
    }
    Ok(g.edges().any(|(x, y)| g.degree(x) + g.degree(y) == g.len()))
}

/// A representing word over `{a < b < c}` and its two projections.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TernaryWitness {
    pub word: Word,
    /// `π_{b,c}(word)`.
    pub v: Word,
    /// `π_{a,b}(word)`.
    pub v_prime: Word,
    /// The graph part mapped to the letter `b`.
    pub b_part: Part,
}

/// A word over three letters representing the connected graph `g`, if some
/// order of one part makes every neighbourhood of the other part an initial
/// or an end segment. Binary-representable graphs get their binary word.
pub fn recognize_ternary<L: Label>(g: &BipartiteGraph<L>, limits: &Limits) -> Result<Option<TernaryWitness>> {
    require_connected(g)?;
    Limits::check(
        limits.ordering.min(u128::BITS as usize),
        "ternary segment search",
        g.len(),
    )?;
    let witness = |word: Word, b_part: Part| TernaryWitness {
        v: word.project(&[2, 3]),
        v_prime: word.project(&[1, 2]),
        word,
        b_part,
    };
    if let Some((word, a_part)) = binary_recognition(g)? {
        return Ok(Some(witness(word.with_alphabet(3)?, a_part.other())));
    }
    for b_part in [Part::Y, Part::X] {
        if let Some(types) = SegmentSearch::new(g, b_part).run() {
            let (word, embedding) = segment_word(g, b_part, &types);
            verify_embedding(g, &word, &embedding)?;
            return Ok(Some(witness(word, b_part)));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Segment {
    Initial,
    End,
}

/// Depth-first assignment of segment types to the non-`b` vertices.
struct SegmentSearch {
    /// Neighbourhoods of the non-`b` vertices as bit sets over the `b` part.
    sets: Vec<u128>,
    types: Vec<Segment>,
}

impl SegmentSearch {
    fn new<L: Label>(g: &BipartiteGraph<L>, b_part: Part) -> Self {
        let base = g.part_ids(b_part).start;
        let sets = g
            .part_ids(b_part.other())
            .map(|x| g.neighbor_ids(x).iter().fold(0u128, |acc, &y| acc | 1 << (y - base)))
            .collect();
        SegmentSearch {
            sets,
            types: Vec::new(),
        }
    }

    fn run(mut self) -> Option<Vec<Segment>> {
        self.extend().then_some(self.types)
    }

    fn extend(&mut self) -> bool {
        let k = self.types.len();
        if k == self.sets.len() {
            return true;
        }
        for t in [Segment::Initial, Segment::End] {
            let nested =
                self.types.iter().zip(&self.sets).all(|(&other, &set)| {
                    other != t || set & self.sets[k] == set || set & self.sets[k] == self.sets[k]
                });
            if !nested {
                continue;
            }
            self.types.push(t);
            if layered_order(&self.sets, &self.types, self.width()).is_some() && self.extend() {
                return true;
            }
            self.types.pop();
        }
        false
    }

    fn width(&self) -> usize {
        self.sets.iter().fold(0u128, |a, &s| a | s).count_ones() as usize
    }
}

/// Orders `0..width` so that every typed set is an initial or end segment,
/// assuming each type's sets are nested. Vertices are layered by the
/// smallest initial set containing them and, in reverse, the smallest end
/// set; such an order exists iff sorting by the first layer leaves the
/// second one nonincreasing.
fn layered_order(sets: &[u128], types: &[Segment], width: usize) -> Option<Vec<usize>> {
    let layer = |y: usize, kind: Segment| {
        types
            .iter()
            .zip(sets)
            .filter(|&(&t, &set)| t == kind && set >> y & 1 == 1)
            .map(|(_, set)| set.count_ones())
            .min()
            .unwrap_or(u32::MAX)
    };
    let mut order: Vec<usize> = (0..width).collect();
    order.sort_by_key(|&y| (layer(y, Segment::Initial), std::cmp::Reverse(layer(y, Segment::End)), y));
    let ends: Vec<u32> = order.iter().map(|&y| layer(y, Segment::End)).collect();
    ends.windows(2).all(|pair| pair[0] >= pair[1]).then_some(order)
}

/// Emits `b`'s in segment order; between the `g`-th and `(g+1)`-th `b` go the
/// `c`'s whose initial segment has length `g`, then the `a`'s whose end
/// segment has length `|Y| - g`.
fn segment_word<L: Label>(g: &BipartiteGraph<L>, b_part: Part, types: &[Segment]) -> (Word, Vec<ParikhVertex>) {
    let ys: Vec<VertexId> = g.part_ids(b_part).collect();
    let xs: Vec<VertexId> = g.part_ids(b_part.other()).collect();
    let search = SegmentSearch::new(g, b_part);
    let order = layered_order(&search.sets, types, ys.len()).expect("search accepted the types");
    let m = ys.len();
    let mut embedding = vec![ParikhVertex::new(0, 0); g.len()];
    let mut letters = Vec::with_capacity(g.len());
    let (mut a_seen, mut c_seen) = (0, 0);
    for gap in 0..=m {
        for (i, &x) in xs.iter().enumerate() {
            if types[i] == Segment::Initial && g.degree(x) == gap {
                c_seen += 1;
                letters.push(3);
                embedding[x] = ParikhVertex::new(3, c_seen);
            }
        }
        for (i, &x) in xs.iter().enumerate() {
            if types[i] == Segment::End && m - g.degree(x) == gap {
                a_seen += 1;
                letters.push(1);
                embedding[x] = ParikhVertex::new(1, a_seen);
            }
        }
        if gap < m {
            letters.push(2);
            embedding[ys[order[gap]]] = ParikhVertex::new(2, gap + 1);
        }
    }
    (Word::new(3, letters).expect("letters are 1..=3"), embedding)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::parikh::parikh_graph;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn binary_examples() {
        assert_eq!(recognize_binary(&complete(1, 3)).unwrap().unwrap().to_string(), "abbb");
        assert_eq!(recognize_binary(&complete(3, 1)).unwrap().unwrap().to_string(), "aaab");
        assert!(recognize_binary(&cycle(3)).unwrap().is_none());
        assert!(recognize_binary(&path(5)).unwrap().is_none());
        assert_eq!(recognize_binary(&path(4)).unwrap().unwrap().len(), 4);
        assert!(matches!(recognize_binary(&edgeless(2)), Err(Error::Disconnected)));
    }

    #[test]
    fn chordality_examples() {
        assert!(check_binary_via_chordality(&complete(2, 2), &limits()).unwrap());
        assert!(!check_binary_via_chordality(&cycle(3), &limits()).unwrap());
        assert!(!check_binary_via_chordality(&path(5), &limits()).unwrap());
        assert!(check_binary_via_chordality(&path(4), &limits()).unwrap());
    }

    #[test]
    fn p5_gives_babcb() {
        // y1 - x1 - y2 - x2 - y3
        let g = BipartiteGraph::from_strs(
            &["x1", "x2"],
            &["y1", "y2", "y3"],
            &[("x1", "y1"), ("x1", "y2"), ("x2", "y2"), ("x2", "y3")],
        )
        .unwrap();
        let w = recognize_ternary(&g, &limits()).unwrap().unwrap();
        assert_eq!(w.word.to_string(), "babcb");
        assert_eq!(w.v.to_string(), "bbcb");
        assert_eq!(w.v_prime.to_string(), "babb");
        assert_eq!(w.b_part, Part::Y);
    }

    #[test]
    fn ternary_returns_binary_words_when_possible() {
        let w = recognize_ternary(&complete(2, 2), &limits()).unwrap().unwrap();
        assert_eq!(w.word.to_string(), "aabb");
        assert_eq!(w.word.alphabet_size(), 3);
    }

    #[test]
    fn ternary_rejects_c6_and_long_paths() {
        assert!(recognize_ternary(&cycle(3), &limits()).unwrap().is_none());
        // the path on 8 vertices needs four letters
        assert!(recognize_ternary(&path(7), &limits()).unwrap().is_some());
        assert!(recognize_ternary(&path(8), &limits()).unwrap().is_none());
    }

    #[test]
    fn ternary_witnesses_represent_the_graph() {
        for text in ["bcabcab", "cbacb", "abcb", "babcb", "bbcbaab"] {
            let g = parikh_graph(&Word::parse(text, Some(3)).unwrap()).unwrap().labeled();
            if !g.is_connected() {
                continue;
            }
            let w = recognize_ternary(&g, &limits()).unwrap().unwrap();
            let h = parikh_graph(&w.word).unwrap();
            assert!(
                crate::graph::are_isomorphic(h.graph(), &g, &limits()).unwrap(),
                "{text}"
            );
            assert_eq!(w.word.project(&[2, 3]), w.v);
            assert_eq!(w.word.project(&[1, 2]), w.v_prime);
        }
    }
}
