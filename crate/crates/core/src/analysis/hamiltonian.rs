use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Label};
use crate::ordering::{is_strong_ordering, StrongOrdering};
use crate::parikh::parikh_graph;
use crate::words::Word;

fn require_arity(word: &Word, s: usize) -> Result<()> {
    if word.alphabet_size() == s {
        Ok(())
    } else {
        Err(Error::WrongArity {
            expected: s,
            found: word.alphabet_size(),
        })
    }
}

/// Hamiltonicity of `G(w)` for `w` over `{a < b}`: balanced, at least four
/// letters, and every proper nonempty prefix has more `a`'s than `b`'s.
pub fn binary_hamiltonian(word: &Word) -> Result<bool> {
    require_arity(word, 2)?;
    let n = word.len();
    if n < 4 || word.count(1) != word.count(2) {
        return Ok(false);
    }
    let mut balance: isize = 0;
    for &l in &word.letters()[..n - 1] {
        balance += if l == 1 { 1 } else { -1 };
        if balance <= 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Hamiltonicity of a connected `G(w)` for `w` over `{a < b < c}` with
/// `|w|_a + |w|_c = |w|_b = k`: the `i`-th `c` follows the `(i+1)`-th `b`,
/// and the `i`-th `a` from the end precedes the `(i+1)`-th `b` from the end.
/// Conditions naming a `b` beyond the word are vacuous.
pub fn ternary_hamiltonian(word: &Word) -> Result<bool> {
    require_arity(word, 3)?;
    let (na, nb, nc) = (word.count(1), word.count(2), word.count(3));
    if na + nc != nb {
        return Err(Error::Precondition(format!(
            "needs |w|_a + |w|_c = |w|_b, got {na} + {nc} vs {nb}"
        )));
    }
    if word.is_empty() || !parikh_graph(word)?.graph().is_connected() {
        return Err(Error::Precondition("the Parikh graph must be connected".into()));
    }
    if nb < 2 {
        return Ok(false);
    }
    for i in 1..=nc {
        if i < nb && word.position_of(3, i)? < word.position_of(2, i + 1)? {
            return Ok(false);
        }
    }
    for i in 1..=na {
        if i < nb && word.position_of(1, na - i + 1)? > word.position_of(2, nb - i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For a strong ordering with `|X| = |Y| = k >= 2` of a connected graph:
/// true iff `x_i y_i x_{i+1} y_{i+1}` is a 4-cycle for every `i < k`.
pub fn hamiltonian_via_strong_ordering<L: Label>(g: &BipartiteGraph<L>, so: &StrongOrdering) -> Result<bool> {
    if !is_strong_ordering(g, so)? {
        return Err(Error::NotStrongOrdering);
    }
    let k = g.x_len();
    if k != g.y_len() || k < 2 || !g.is_connected() {
        return Ok(false);
    }
    Ok((0..k - 1).all(|i| {
        let (x1, x2, y1, y2) = (so.x[i], so.x[i + 1], so.y[i], so.y[i + 1]);
        g.has_edge(x1, y1) && g.has_edge(y1, x2) && g.has_edge(x2, y2) && g.has_edge(y2, x1)
    }))
}
