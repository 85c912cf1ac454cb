use serde::Serialize;

use crate::error::{Error, Result};
use crate::parikh::parikh_graph;
use crate::words::Word;

/// Which diameter bound applies to a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundSource {
    /// `core_{a_1...a_s}(w) = w`: at most `s + 1`.
    CoreWord,
    /// Nonempty `a_1...a_s` core: at most `s + 3`, or 3 when `s = 2`.
    CoreNonempty,
    /// Any connected Parikh graph: at most `3s - 3`.
    General,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiameterReport {
    pub s: usize,
    pub word: Word,
    pub connected: bool,
    /// `None` when the graph is disconnected.
    pub diameter: Option<usize>,
    /// `|w|_{a_1 a_2 ... a_s} > 0`.
    pub core_nonempty: bool,
    pub core_is_word: bool,
    pub applicable_bound: usize,
    pub bound_source: BoundSource,
    /// Whether the diameter respects the bound; `None` when disconnected.
    pub within_bound: Option<bool>,
}

/// Diameter of `G(w)` against the tightest bound that applies to `w`.
pub fn diameter_report(word: &Word) -> Result<DiameterReport> {
    let pg = parikh_graph(word)?;
    let s = word.alphabet_size();
    let full_run = Word::run(s, 1, s)?;
    let core = word.core(&full_run)?;
    let core_nonempty = !core.is_empty();
    let core_is_word = core == *word;
    let (applicable_bound, bound_source) = if s < 2 {
        (0, BoundSource::General)
    } else if core_is_word {
        (s + 1, BoundSource::CoreWord)
    } else if core_nonempty {
        (if s == 2 { 3 } else { s + 3 }, BoundSource::CoreNonempty)
    } else {
        (3 * s - 3, BoundSource::General)
    };
    let diameter = match pg.graph().diameter() {
        Ok(d) => Some(d),
        Err(Error::Disconnected) => None,
        Err(e) => return Err(e),
    };
    Ok(DiameterReport {
        s,
        word: word.clone(),
        connected: diameter.is_some(),
        diameter,
        core_nonempty,
        core_is_word,
        applicable_bound,
        bound_source,
        within_bound: diameter.map(|d| d <= applicable_bound),
    })
}

/// True iff `|w|_{a_i a_{i+1} a_{i+2}} > 0` for every `i`. Requires full
/// support, a connected graph and at least three letters, under which it
/// always holds.
pub fn check_triple_subwords(word: &Word) -> Result<bool> {
    let s = word.alphabet_size();
    if s < 3 {
        return Err(Error::Precondition(format!("needs at least three letters, got {s}")));
    }
    if !word.has_full_support() {
        return Err(Error::Precondition("word must use every letter".into()));
    }
    if !parikh_graph(word)?.graph().is_connected() {
        return Err(Error::Precondition("the Parikh graph must be connected".into()));
    }
    for i in 1..=s - 2 {
        let triple = Word::run(s, i, i + 2)?;
        if word.subword_count(&triple) == 0u32.into() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A word over `Σ_s` whose Parikh graph is a path of length `3s - 3`, built
/// from `abab` by repeatedly prefixing `a_s a_{s+1}` and inserting `a_{s+1}`
/// right after the first `a_s` of the previous word.
pub fn longest_path_word(s: usize) -> Result<Word> {
    if s < 2 {
        return Err(Error::Precondition(format!("longest path words need s >= 2, got {s}")));
    }
    let mut letters = vec![1, 2, 1, 2];
    for t in 2..s {
        let first = letters.iter().position(|&l| l == t).expect("a_t occurs");
        letters.insert(first + 1, t + 1);
        letters.splice(0..0, [t, t + 1]);
    }
    Word::new(s, letters)
}
