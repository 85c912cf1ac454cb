//! Word synthesis for connected bipartite permutation graphs.
//!
//! The word grows one decomposition step at a time. After each step the
//! current block of one part (the "A" role) is the first `|A_l|` occurrences
//! of `a_{s-1}`, and the block of the other part (the "B" role) is the first
//! occurrences of `a_s`, followed by first occurrences of `a_{s-2}` when the
//! block no longer fits in the `a_s` run.

use serde::Serialize;

use super::decomposition::{interval_decomposition, IntervalDecomposition};
use super::strong::find_strong_ordering;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Label, Limits, Part, VertexId};
use crate::parikh::{parikh_graph, ParikhVertex};
use crate::words::{Letter, Word};

/// Which insertion rule produced a step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepCase {
    /// `a_1^{|X_1|} a_2^{|Y_1|}`.
    Base,
    /// Blocks were binary: new `a_s` and `a_{s+1}` letters.
    Binary,
    /// Blocks were ternary but the kept B vertices are all `a_s`, so the
    /// binary rule applies.
    TernaryAsBinary,
    /// Blocks were ternary: new `a_s` and `a_{s-1}` letters.
    Ternary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SynthesisStep {
    pub word: Word,
    /// Alphabet size; `supp(word) = Σ_s`.
    pub s: usize,
    pub case: StepCase,
    /// Image of every vertex of `G_l`, indexed by vertex id.
    pub embedding: Vec<Option<ParikhVertex>>,
    /// Distinct letters used by the images of the current blocks.
    pub block_letters: Vec<Letter>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SynthesisTrace {
    pub decomposition: IntervalDecomposition,
    pub steps: Vec<SynthesisStep>,
    /// The graph part mapped to odd letters.
    pub odd_part: Part,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Synthesis {
    pub word: Word,
    /// `G(word)` vertex of every graph vertex, indexed by vertex id.
    pub embedding: Vec<ParikhVertex>,
    /// Absent for single-vertex graphs, which need no decomposition.
    pub trace: Option<SynthesisTrace>,
}

/// A word `w` with `G(w)` isomorphic to the connected graph `g`, together
/// with the isomorphism and the construction trace.
pub fn synthesize_word<L: Label>(g: &BipartiteGraph<L>, limits: &Limits) -> Result<Synthesis> {
    let so = find_strong_ordering(g, limits)?.ok_or(Error::NotRepresentable)?;
    if g.len() == 1 {
        let word = Word::new(1, vec![1])?;
        return Ok(Synthesis {
            word,
            embedding: vec![ParikhVertex::new(1, 1)],
            trace: None,
        });
    }
    let decomposition = interval_decomposition(g, &so)?;
    let trace = Builder::new(g.len(), &decomposition).run()?;
    let last = trace.steps.last().expect("at least the base step");
    let embedding = last
        .embedding
        .iter()
        .map(|v| v.ok_or_else(|| Error::Internal("vertex left unmapped".into())))
        .collect::<Result<Vec<_>>>()?;
    let word = last.word.clone();
    verify_embedding(g, &word, &embedding)?;
    Ok(Synthesis {
        word,
        embedding,
        trace: Some(trace),
    })
}

/// Checks that `embedding` is an isomorphism from `g` onto `G(word)`.
pub(crate) fn verify_embedding<L: Label>(g: &BipartiteGraph<L>, word: &Word, embedding: &[ParikhVertex]) -> Result<()> {
    let pg = parikh_graph(word)?;
    let h = pg.graph();
    if h.len() != g.len() || embedding.len() != g.len() {
        return Err(Error::Internal(format!(
            "word {word} has {} letters for {} vertices",
            h.len(),
            g.len()
        )));
    }
    let ids = embedding
        .iter()
        .map(|&v| {
            h.id(&v)
                .ok_or_else(|| Error::Internal(format!("{v} is not a vertex of G({word})")))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut seen = vec![false; h.len()];
    for &id in &ids {
        if std::mem::replace(&mut seen[id], true) {
            return Err(Error::Internal("embedding is not injective".into()));
        }
    }
    for u in 0..g.len() {
        for v in u + 1..g.len() {
            if g.has_edge(u, v) != h.has_edge(ids[u], ids[v]) {
                return Err(Error::Internal(format!("embedding into G({word}) breaks adjacency")));
            }
        }
    }
    Ok(())
}

struct Builder<'a> {
    d: &'a IntervalDecomposition,
    letters: Vec<Letter>,
    s: usize,
    embedding: Vec<Option<ParikhVertex>>,
    a_part: Part,
}

impl<'a> Builder<'a> {
    fn new(vertices: usize, d: &'a IntervalDecomposition) -> Self {
        Builder {
            d,
            letters: Vec::new(),
            s: 2,
            embedding: vec![None; vertices],
            a_part: Part::X,
        }
    }

    fn block(&self, part: Part, p: usize) -> &'a [VertexId] {
        match part {
            Part::X => self.d.x_block(p),
            Part::Y => self.d.y_block(p),
        }
    }

    fn ranks(&self, part: Part, p: usize) -> std::ops::Range<usize> {
        match part {
            Part::X => self.d.blocks_x[p].clone(),
            Part::Y => self.d.blocks_y[p].clone(),
        }
    }

    fn run(mut self) -> Result<SynthesisTrace> {
        let (x1, y1) = (self.d.x_block(0), self.d.y_block(0));
        self.letters = std::iter::repeat_n(1, x1.len())
            .chain(std::iter::repeat_n(2, y1.len()))
            .collect();
        for (i, &v) in x1.iter().enumerate() {
            self.embedding[v] = Some(ParikhVertex::new(1, i + 1));
        }
        for (i, &v) in y1.iter().enumerate() {
            self.embedding[v] = Some(ParikhVertex::new(2, i + 1));
        }
        let mut steps = vec![self.snapshot(StepCase::Base, 0)?];
        for l in 0..self.d.len() - 1 {
            let case = self.step(l)?;
            steps.push(self.snapshot(case, l + 1)?);
        }
        Ok(SynthesisTrace {
            decomposition: self.d.clone(),
            steps,
            odd_part: Part::X,
        })
    }

    fn snapshot(&self, case: StepCase, p: usize) -> Result<SynthesisStep> {
        let mut block_letters: Vec<Letter> = self
            .d
            .x_block(p)
            .iter()
            .chain(self.d.y_block(p))
            .filter_map(|&v| self.embedding[v].map(|pv| pv.letter))
            .collect();
        block_letters.sort_unstable();
        block_letters.dedup();
        Ok(SynthesisStep {
            word: Word::new(self.s, self.letters.clone())?,
            s: self.s,
            case,
            embedding: self.embedding.clone(),
            block_letters,
        })
    }

    /// Advances from `G_l` to `G_{l+1}` (0-based `l`).
    fn step(&mut self, l: usize) -> Result<StepCase> {
        let a = self.a_part;
        let b = a.other();
        let overlap = |r1: std::ops::Range<usize>, r2: std::ops::Range<usize>| r2.filter(|r| r1.contains(r)).count();
        let a_keep = overlap(self.ranks(a, l), self.ranks(a, l + 1));
        let b_keep = overlap(self.ranks(b, l), self.ranks(b, l + 1));
        let fresh = |this: &Self, part: Part| -> Vec<VertexId> {
            let old = this.ranks(part, l);
            let next = this.ranks(part, l + 1);
            next.clone()
                .filter(|r| !old.contains(r))
                .map(|r| this.block(part, l + 1)[r - next.start])
                .collect()
        };
        let a_new = fresh(self, a);
        let b_new = fresh(self, b);
        let s = self.s;
        let count_s = self.letters.iter().filter(|&&x| x == s).count();
        let ternary = self.block(b, l).len() > count_s;
        let a_gap = self.gap_after(s - 1, a_keep)?;
        if b_keep <= count_s {
            let b_gap = self.gap_after(s, b_keep)?;
            self.insert(&[(a_gap, s, b_new.len()), (b_gap, s + 1, a_new.len())]);
            self.shift(s, b_new.len());
            self.place(&b_new, s);
            self.place(&a_new, s + 1);
            if !a_new.is_empty() {
                self.s += 1;
                self.a_part = b;
            }
            Ok(if ternary {
                StepCase::TernaryAsBinary
            } else {
                StepCase::Binary
            })
        } else {
            if s < 3 {
                return Err(Error::Internal("ternary step without a third letter".into()));
            }
            let c_gap = self.gap_after(s - 2, b_keep - count_s)?;
            self.insert(&[(a_gap, s, b_new.len()), (c_gap, s - 1, a_new.len())]);
            self.shift(s, b_new.len());
            self.shift(s - 1, a_new.len());
            self.place(&b_new, s);
            self.place(&a_new, s - 1);
            Ok(StepCase::Ternary)
        }
    }

    /// Index just after the `k`-th occurrence of `letter`, or just before the
    /// first occurrence when `k = 0`.
    fn gap_after(&self, letter: Letter, k: usize) -> Result<usize> {
        let mut positions = self
            .letters
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x == letter)
            .map(|(i, _)| i);
        let found = if k == 0 {
            positions.next()
        } else {
            positions.nth(k - 1).map(|i| i + 1)
        };
        found.ok_or_else(|| Error::Internal(format!("no occurrence {k} of letter {letter}")))
    }

    /// Inserts runs `(gap, letter, count)` at gaps of the current word; runs
    /// sharing a gap go in increasing letter order.
    fn insert(&mut self, runs: &[(usize, Letter, usize)]) {
        let mut runs = runs.to_vec();
        runs.sort_by_key(|&(gap, letter, _)| (gap, letter));
        let mut out = Vec::with_capacity(self.letters.len() + runs.iter().map(|r| r.2).sum::<usize>());
        let mut pending = runs.iter().peekable();
        for i in 0..=self.letters.len() {
            while let Some(&&(gap, letter, count)) = pending.peek() {
                if gap != i {
                    break;
                }
                out.extend(std::iter::repeat_n(letter, count));
                pending.next();
            }
            if let Some(&x) = self.letters.get(i) {
                out.push(x);
            }
        }
        self.letters = out;
    }

    fn shift(&mut self, letter: Letter, by: usize) {
        for pv in self.embedding.iter_mut().flatten() {
            if pv.letter == letter {
                pv.occurrence += by;
            }
        }
    }

    fn place(&mut self, vertices: &[VertexId], letter: Letter) {
        for (t, &v) in vertices.iter().enumerate() {
            self.embedding[v] = Some(ParikhVertex::new(letter, t + 1));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;
    use crate::graph::named::*;

    fn synth(g: &BipartiteGraph) -> Synthesis {
        synthesize_word(g, &Limits::default()).unwrap()
    }

    #[test]
    fn complete_graphs_need_only_the_base_step() {
        for (m, n) in [(1, 1), (2, 3), (4, 1)] {
            let s = synth(&complete(m, n));
            let expected: String = "a".repeat(m) + &"b".repeat(n);
            assert_eq!(s.word.to_string(), expected);
            assert_eq!(s.trace.unwrap().steps.len(), 1);
        }
    }

    #[test]
    fn p4_gives_abab() {
        let g = BipartiteGraph::from_strs(
            &["x1", "x2"],
            &["y1", "y2"],
            &[("x1", "y1"), ("x1", "y2"), ("x2", "y2")],
        )
        .unwrap();
        let s = synth(&g);
        assert_eq!(s.word.to_string(), "abab");
        let trace = s.trace.unwrap();
        assert_eq!(trace.steps[0].word.to_string(), "aab");
        assert_eq!(trace.steps[1].case, StepCase::Binary);
    }

    #[test]
    fn paths_and_the_figure_graph() {
        for n in 2..=12 {
            let g = path(n);
            let s = synthesize_word(&g, &Limits::uniform(12)).unwrap();
            assert!(parikh_graph(&s.word).unwrap().graph().is_path(), "P{n} -> {}", s.word);
            assert_eq!(s.word.len(), n);
        }
        let figure = parikh_graph(&Word::parse("bbccabdc", None).unwrap()).unwrap().labeled();
        let s = synth(&figure);
        let back = parikh_graph(&s.word).unwrap();
        assert!(are_isomorphic(back.graph(), &figure, &Limits::default()).unwrap());
    }

    #[test]
    fn trace_invariants_on_a_long_path() {
        let s = synthesize_word(&path(10), &Limits::uniform(10)).unwrap();
        let trace = s.trace.unwrap();
        for pair in trace.steps.windows(2) {
            assert!(pair[0].word.len() < pair[1].word.len());
            assert!(pair[0].word.is_subword_of(&pair[1].word));
        }
        for step in &trace.steps {
            assert!(step.word.has_full_support());
            assert!(step.block_letters.len() <= 3);
        }
        assert!(trace
            .steps
            .iter()
            .any(|st| st.case == StepCase::Ternary || st.case == StepCase::TernaryAsBinary));
    }

    #[test]
    fn single_vertex_and_failures() {
        let s = synth(&edgeless(1));
        assert_eq!(s.word.to_string(), "a");
        assert!(matches!(
            synthesize_word(&cycle(3), &Limits::default()),
            Err(Error::NotRepresentable)
        ));
        assert!(matches!(
            synthesize_word(&edgeless(2), &Limits::default()),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn verify_embedding_rejects_wrong_maps() {
        let g = complete(1, 1);
        let w = Word::parse("ab", None).unwrap();
        assert!(verify_embedding(&g, &w, &[ParikhVertex::new(1, 1), ParikhVertex::new(2, 1)]).is_ok());
        let w = Word::parse("ba", None).unwrap();
        assert!(verify_embedding(&g, &w, &[ParikhVertex::new(1, 1), ParikhVertex::new(2, 1)]).is_err());
    }
}
