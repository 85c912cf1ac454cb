//! The suite registry and its runner.

use std::fmt::{Debug, Display};

use num_bigint::BigUint;
use serde::Serialize;

use super::enumerate::{
    canonical_form, enumerate_bipartite_graphs, enumerate_graphs_where, enumerate_words, partitions, EnumerationSpec,
    MAX_GRAPH_VERTICES,
};
use super::WordGraphIndex;
use crate::analysis::{
    binary_hamiltonian, check_triple_subwords, count_slender_classes, diameter_report, hamiltonian_via_strong_ordering,
    longest_path_word, slender_word_for_partition, ternary_hamiltonian,
};
use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, has_hamiltonian_cycle, isomorphism, named, BipartiteGraph, Label, Limits};
use crate::ordering::{is_permutation_realization, is_strong_ordering};
use crate::parikh::{binary_permutation, parikh_graph};
use crate::recognition::{
    check_binary_via_chordality, find_strong_ordering, find_strong_ordering_any, interval_decomposition,
    recognize_binary, recognize_ternary, synthesize_any, synthesize_word,
};
use crate::words::Word;

/// What a suite iterates over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InputKind {
    /// Words in the spec's alphabet and length ranges.
    Words,
    /// Connected bipartite graphs up to `max_vertices`.
    Graphs,
    /// Alphabet sizes in the spec's alphabet range.
    Sizes,
}

pub struct Suite {
    pub name: &'static str,
    pub description: &'static str,
    pub kind: InputKind,
    defaults: fn() -> EnumerationSpec,
    plan: fn(&EnumerationSpec) -> Result<Plan>,
}

impl Suite {
    /// The bounds the suite runs with when none are given.
    pub fn default_spec(&self) -> EnumerationSpec {
        (self.defaults)()
    }
}

impl Debug for Suite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Suite")
            .field("name", &self.name)
            .field("kind", &self.kind)
            .finish()
    }
}

/// One failed check, with the command line that replays it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub suite: String,
    /// Word text or graph JSON.
    pub input: String,
    pub expected: String,
    pub actual: String,
    pub repro: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub checked: usize,
    /// Sorted by input order.
    pub counterexamples: Vec<CounterexampleReport>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

enum Input {
    Word(Word),
    Graph(BipartiteGraph),
    Size(usize),
}

struct Mismatch {
    expected: String,
    actual: String,
}

type Check = Result<Option<Mismatch>>;
type Checker = Box<dyn Fn(usize, &Input) -> Check + Send + Sync>;

struct Plan {
    inputs: Vec<Input>,
    check: Checker,
}

fn mismatch(expected: impl Display, actual: impl Display) -> Check {
    Ok(Some(Mismatch {
        expected: expected.to_string(),
        actual: actual.to_string(),
    }))
}

fn agree<T: PartialEq + Debug>(expected: T, actual: T) -> Check {
    if expected == actual {
        Ok(None)
    } else {
        mismatch(format!("{expected:?}"), format!("{actual:?}"))
    }
}

fn wrong_input() -> Check {
    Err(Error::Internal("suite received an input of the wrong kind".into()))
}

fn on_words(f: impl Fn(&Word) -> Check + Send + Sync + 'static) -> Checker {
    Box::new(move |_, input| match input {
        Input::Word(w) => f(w),
        _ => wrong_input(),
    })
}

fn on_graphs(f: impl Fn(&BipartiteGraph) -> Check + Send + Sync + 'static) -> Checker {
    Box::new(move |_, input| match input {
        Input::Graph(g) => f(g),
        _ => wrong_input(),
    })
}

fn on_sizes(f: impl Fn(usize) -> Check + Send + Sync + 'static) -> Checker {
    Box::new(move |_, input| match input {
        Input::Size(s) => f(*s),
        _ => wrong_input(),
    })
}

fn word_inputs(spec: &EnumerationSpec) -> Result<Vec<Input>> {
    Ok(enumerate_words(spec)?.map(Input::Word).collect())
}

fn graph_inputs(spec: &EnumerationSpec) -> Result<Vec<Input>> {
    Ok(enumerate_bipartite_graphs(spec.max_vertices)?
        .into_iter()
        .map(Input::Graph)
        .collect())
}

fn size_inputs(spec: &EnumerationSpec) -> Vec<Input> {
    (spec.min_alphabet..=spec.max_alphabet).map(Input::Size).collect()
}

fn same_graph<L: Label, M: Label>(g: &BipartiteGraph<L>, h: &BipartiteGraph<M>) -> Result<bool> {
    Ok(canonical_form(g).ok() == Some(canonical_form(h)?))
}

/// Words of full support over `Σ_lo..=Σ_hi` with `2..=max_vertices`
/// letters.
fn index_for(alphabets: std::ops::RangeInclusive<usize>, max_vertices: usize) -> Result<WordGraphIndex> {
    if max_vertices < 2 {
        return Ok(WordGraphIndex::default());
    }
    let hi = (*alphabets.end()).min(max_vertices);
    WordGraphIndex::build(&EnumerationSpec::words(*alphabets.start()..=hi, 2..=max_vertices).with_full_support(true))
}

fn brute_edge_count(w: &Word) -> usize {
    let l = w.letters();
    (0..l.len())
        .flat_map(|i| (i + 1..l.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| l[j] == l[i] + 1)
        .count()
}

fn edge_count(spec: &EnumerationSpec) -> Result<Plan> {
    Ok(Plan {
        inputs: word_inputs(spec)?,
        check: on_words(|w| {
            if w.is_empty() {
                return agree(true, parikh_graph(w).is_err());
            }
            let pg = parikh_graph(w)?;
            let g = pg.graph();
            let s = w.alphabet_size();
            let mut by_subwords = BigUint::from(0u32);
            for k in 1..s {
                by_subwords += w.subword_count(&Word::run(s, k, k + 1)?);
            }
            let parity = g.x_ids().all(|v| g.label(v).letter % 2 == 1) && g.y_ids().all(|v| g.label(v).letter % 2 == 0);
            agree(
                (by_subwords, brute_edge_count(w), w.len(), true),
                (BigUint::from(g.edge_count()), g.edge_count(), g.len(), parity),
            )
        }),
    })
}

fn canonical_ordering(spec: &EnumerationSpec) -> Result<Plan> {
    Ok(Plan {
        inputs: word_inputs(spec)?,
        check: on_words(|w| {
            if w.is_empty() || !w.has_full_support() {
                return Ok(None);
            }
            let pg = parikh_graph(w)?;
            agree(true, is_strong_ordering(pg.graph(), &pg.canonical_strong_ordering())?)
        }),
    })
}

fn binary_permutation_suite(spec: &EnumerationSpec) -> Result<Plan> {
    Ok(Plan {
        inputs: word_inputs(spec)?,
        check: on_words(|w| {
            if w.is_empty() || w.alphabet_size() != 2 {
                return Ok(None);
            }
            let pg = parikh_graph(w)?;
            let tau = binary_permutation(w)?;
            let order: Vec<usize> = (1..=w.len()).map(|p| pg.vertex_at(p)).collect();
            let l = w.letters();
            let by_letters = (0..l.len())
                .flat_map(|i| (i + 1..l.len()).map(move |j| (i, j)))
                .all(|(i, j)| (l[i] == 1 && l[j] == 2) == (tau[i] > tau[j]));
            agree(
                (true, true),
                (by_letters, is_permutation_realization(pg.graph(), &order, &tau)?),
            )
        }),
    })
}

fn induced_subgraph(spec: &EnumerationSpec) -> Result<Plan> {
    if spec.max_len > 12 {
        return Err(Error::InvalidSpec(
            "induced-subgraph visits every position subset; keep lengths at most 12".into(),
        ));
    }
    Ok(Plan {
        inputs: word_inputs(spec)?,
        check: on_words(|w| {
            if w.is_empty() {
                return Ok(None);
            }
            let pg = parikh_graph(w)?;
            let n = w.len();
            for mask in 1u32..1 << n {
                let positions: Vec<usize> = (1..=n).filter(|p| mask >> (p - 1) & 1 == 1).collect();
                let sub = parikh_graph(&w.subword_at(&positions))?;
                for (r, &p) in positions.iter().enumerate() {
                    for (t, &q) in positions.iter().enumerate().skip(r + 1) {
                        let whole = pg.graph().has_edge(pg.vertex_at(p), pg.vertex_at(q));
                        let part = sub.graph().has_edge(sub.vertex_at(r + 1), sub.vertex_at(t + 1));
                        if whole != part {
                            return mismatch(
                                format!("positions {p} and {q} adjacent: {whole}"),
                                format!("in the subword at {positions:?}: {part}"),
                            );
                        }
                    }
                }
            }
            Ok(None)
        }),
    })
}

/// Diameter by Floyd-Warshall; `None` when disconnected.
fn floyd_diameter<L: Label>(g: &BipartiteGraph<L>) -> Option<usize> {
    let n = g.len();
    let inf = usize::MAX / 2;
    let mut d = vec![vec![inf; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
        for &v in g.neighbor_ids(u) {
            row[v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    let worst = d.iter().flatten().copied().max().unwrap_or(0);
    (worst < inf).then_some(worst)
}

fn diameter(spec: &EnumerationSpec) -> Result<Plan> {
    Ok(Plan {
        inputs: word_inputs(spec)?,
        check: on_words(|w| {
            if w.is_empty() {
                return Ok(None);
            }
            let report = diameter_report(w)?;
            let truth = floyd_diameter(parikh_graph(w)?.graph());
            agree((truth, truth.map(|_| true)), (report.diameter, report.within_bound))
        }),
    })
}

fn triple_subwords(spec: &EnumerationSpec) -> Result<Plan> {
    Ok(Plan {
        inputs: word_inputs(spec)?,
        check: on_words(|w| {
            if w.alphabet_size() < 3 || !w.has_full_support() || !parikh_graph(w)?.graph().is_connected() {
                return Ok(None);
            }
            agree(true, check_triple_subwords(w)?)
        }),
    })
}

fn word_graphs_are_bpg(spec: &EnumerationSpec) -> Result<Plan> {
    Ok(Plan {
        inputs: word_inputs(spec)?,
        check: on_words(|w| {
            if w.is_empty() {
                return Ok(None);
            }
            let g = parikh_graph(w)?.into_graph();
            let limits = Limits::default();
            let ordered = find_strong_ordering_any(&g, &limits)?.is_some();
            let back = synthesize_any(&g, &limits)?;
            let same = match &back {
                Some(word) => component_forms(parikh_graph(word)?.graph())? == component_forms(&g)?,
                None => false,
            };
            agree((true, true), (ordered, same))
        }),
    })
}

/// Sorted canonical forms of the components: equal exactly for
/// isomorphic graphs.
fn component_forms<L: Label>(g: &BipartiteGraph<L>) -> Result<Vec<super::CanonicalForm>> {
    let mut forms = g
        .connected_components()
        .iter()
        .map(canonical_form)
        .collect::<Result<Vec<_>>>()?;
    forms.sort();
    Ok(forms)
}

fn core_union(spec: &EnumerationSpec) -> Result<Plan> {
    Ok(Plan {
        inputs: word_inputs(spec)?,
        check: on_words(|w| {
            if w.is_empty() {
                return Ok(None);
            }
            let s = w.alphabet_size();
            let mut union = std::collections::BTreeSet::new();
            for k in 1..s {
                union.extend(w.core_positions(&Word::run(s, k, k + 1)?)?);
            }
            let pg = parikh_graph(w)?;
            let busy: std::collections::BTreeSet<usize> = (0..pg.graph().len())
                .filter(|&v| pg.graph().degree(v) > 0)
                .map(|v| pg.position(v))
                .collect();
            agree(union, busy)
        }),
    })
}

/// Synthesis must round-trip exactly the graphs with a strong ordering.
fn round_trip_check(g: &BipartiteGraph, synth: &dyn Fn(&BipartiteGraph) -> Result<Word>, deep: bool) -> Check {
    let limits = Limits::default();
    let Some(ordering) = find_strong_ordering(g, &limits)? else {
        return match synth(g) {
            Err(Error::NotRepresentable) => Ok(None),
            Ok(w) => mismatch("not representable", format!("word {w}")),
            Err(e) => mismatch("not representable", format!("error: {e}")),
        };
    };
    let word = match synth(g) {
        Ok(w) => w,
        Err(e) => return mismatch("a representing word", format!("error: {e}")),
    };
    if word.is_empty() || word.len() != g.len() || !same_graph(parikh_graph(&word)?.graph(), g)? {
        return mismatch(
            format!(
                "a word of length {} whose Parikh graph is isomorphic to the input",
                g.len()
            ),
            format!("word {word}"),
        );
    }
    if !deep {
        return Ok(None);
    }
    if let Err(clause) = interval_decomposition(g, &ordering)?.check_clauses(g) {
        return mismatch("interval decomposition clauses hold", clause);
    }
    let synthesis = synthesize_word(g, &limits)?;
    let target = parikh_graph(&synthesis.word)?;
    let image: Vec<usize> = synthesis
        .embedding
        .iter()
        .map(|&v| {
            target
                .vertex_id(v)
                .ok_or_else(|| Error::Internal(format!("{v} is not a vertex")))
        })
        .collect::<Result<_>>()?;
    let exact = g.x_ids().all(|u| {
        g.y_ids()
            .all(|v| g.has_edge(u, v) == target.graph().has_edge(image[u], image[v]))
    });
    if !exact {
        return mismatch("the embedding is an isomorphism", "an edge is not preserved");
    }
    let Some(trace) = &synthesis.trace else {
        return agree(1, g.len());
    };
    if let Err(clause) = trace.decomposition.check_clauses(g) {
        return mismatch("trace decomposition clauses hold", clause);
    }
    for step in &trace.steps {
        if !step.word.has_full_support() || step.word.alphabet_size() != step.s || step.block_letters.len() > 3 {
            return mismatch(
                "each step has full support and at most three block letters",
                format!("{}", step.word),
            );
        }
    }
    for pair in trace.steps.windows(2) {
        let (a, b) = (&pair[0].word, &pair[1].word);
        if a.len() >= b.len() || !a.is_subword_of(b) {
            return mismatch(
                "each step word is a proper subword of the next",
                format!("{a} then {b}"),
            );
        }
    }
    agree(
        Some(synthesis.word.to_string()),
        trace.steps.last().map(|s| s.word.to_string()),
    )
}

fn round_trip(spec: &EnumerationSpec) -> Result<Plan> {
    let synth = |g: &BipartiteGraph| synthesize_word(g, &Limits::default()).map(|s| s.word);
    Ok(Plan {
        inputs: graph_inputs(spec)?,
        check: on_graphs(move |g| round_trip_check(g, &synth, true)),
    })
}

fn completeness(spec: &EnumerationSpec) -> Result<Plan> {
    let index = index_for(1..=MAX_GRAPH_VERTICES, spec.max_vertices)?;
    Ok(Plan {
        inputs: graph_inputs(spec)?,
        check: on_graphs(move |g| {
            let ordered = find_strong_ordering(g, &Limits::default())?.is_some();
            let witness = index.representing_word(g)?.map(ToString::to_string);
            agree(witness.is_some(), ordered).map(|m| {
                m.map(|m| Mismatch {
                    expected: format!("strong ordering exists: {} (word {witness:?})", m.expected),
                    actual: format!("strong ordering found: {}", m.actual),
                })
            })
        }),
    })
}

fn binary_recognition(spec: &EnumerationSpec) -> Result<Plan> {
    let index = index_for(2..=2, spec.max_vertices)?;
    Ok(Plan {
        inputs: graph_inputs(spec)?,
        check: on_graphs(move |g| {
            let truth = index.representing_word(g)?.is_some();
            let word = recognize_binary(g)?;
            let sound = match &word {
                Some(w) => w.alphabet_size() == 2 && same_graph(parikh_graph(w)?.graph(), g)?,
                None => true,
            };
            let chordal = check_binary_via_chordality(g, &Limits::default())?;
            agree((truth, truth, true), (word.is_some(), chordal, sound))
        }),
    })
}

fn ternary_recognition(spec: &EnumerationSpec) -> Result<Plan> {
    let index = index_for(2..=3, spec.max_vertices)?;
    Ok(Plan {
        inputs: graph_inputs(spec)?,
        check: on_graphs(move |g| {
            let truth = index.representing_word(g)?.is_some();
            let witness = recognize_ternary(g, &Limits::default())?;
            let sound = match &witness {
                Some(t) => {
                    t.word.alphabet_size() == 3
                        && t.v == t.word.project(&[2, 3])
                        && t.v_prime == t.word.project(&[1, 2])
                        && same_graph(parikh_graph(&t.word)?.graph(), g)?
                }
                None => true,
            };
            agree((truth, true), (witness.is_some(), sound))
        }),
    })
}

fn hamiltonian_oracle(w: &Word) -> Result<bool> {
    has_hamiltonian_cycle(parikh_graph(w)?.graph(), &Limits::default())
}

fn hamiltonian_binary(spec: &EnumerationSpec) -> Result<Plan> {
    Ok(Plan {
        inputs: word_inputs(spec)?,
        check: on_words(|w| {
            if w.is_empty() || w.alphabet_size() != 2 || w.count(1) != w.count(2) {
                return Ok(None);
            }
            agree(hamiltonian_oracle(w)?, binary_hamiltonian(w)?)
        }),
    })
}

fn hamiltonian_ternary(spec: &EnumerationSpec) -> Result<Plan> {
    Ok(Plan {
        inputs: word_inputs(spec)?,
        check: on_words(|w| {
            if w.is_empty() || w.alphabet_size() != 3 || w.count(1) + w.count(3) != w.count(2) {
                return Ok(None);
            }
            if !parikh_graph(w)?.graph().is_connected() {
                return Ok(None);
            }
            agree(hamiltonian_oracle(w)?, ternary_hamiltonian(w)?)
        }),
    })
}

fn hamiltonian_strong_ordering(spec: &EnumerationSpec) -> Result<Plan> {
    let graphs = enumerate_graphs_where(spec.max_vertices, |x, y| x == y)?;
    Ok(Plan {
        inputs: graphs.into_iter().map(Input::Graph).collect(),
        check: on_graphs(|g| {
            let limits = Limits::default();
            match find_strong_ordering(g, &limits)? {
                Some(ordering) => agree(
                    has_hamiltonian_cycle(g, &limits)?,
                    hamiltonian_via_strong_ordering(g, &ordering)?,
                ),
                None => Ok(None),
            }
        }),
    })
}

fn hamiltonian_balance(spec: &EnumerationSpec) -> Result<Plan> {
    Ok(Plan {
        inputs: graph_inputs(spec)?,
        check: on_graphs(|g| {
            if has_hamiltonian_cycle(g, &Limits::default())? {
                agree(g.x_len(), g.y_len())
            } else {
                Ok(None)
            }
        }),
    })
}

fn slender(spec: &EnumerationSpec) -> Result<Plan> {
    Ok(Plan {
        inputs: size_inputs(spec),
        check: on_sizes(|s| {
            let count = count_slender_classes(s, &Limits::default())?;
            let all = partitions(s);
            let mut shapes_ok = true;
            for parts in &all {
                let g = parikh_graph(&slender_word_for_partition(parts)?)?.into_graph();
                let mut sizes: Vec<usize> = g.component_ids().iter().map(Vec::len).collect();
                sizes.sort_unstable_by(|a, b| b.cmp(a));
                shapes_ok &= sizes == *parts && g.connected_components().iter().all(BipartiteGraph::is_path);
            }
            agree((all.len(), true), (count, shapes_ok))
        }),
    })
}

fn hierarchy(spec: &EnumerationSpec) -> Result<Plan> {
    Ok(Plan {
        inputs: size_inputs(spec),
        check: on_sizes(|s| {
            let n = 3 * s + 1;
            let target = named::path(n);
            let witness = longest_path_word(s + 1)?;
            let witness_ok = same_graph(parikh_graph(&witness)?.graph(), &target)?;
            let form = canonical_form(&target)?;
            let mut found = None;
            for w in enumerate_words(&EnumerationSpec::words(s..=s, n..=n))? {
                if canonical_form(parikh_graph(&w)?.graph()).ok().as_ref() == Some(&form) {
                    found = Some(w.to_string());
                    break;
                }
            }
            agree((true, None), (witness_ok, found))
        }),
    })
}

fn longest_path(spec: &EnumerationSpec) -> Result<Plan> {
    Ok(Plan {
        inputs: size_inputs(spec),
        check: on_sizes(|s| {
            if s < 2 {
                return Ok(None);
            }
            let g = parikh_graph(&longest_path_word(s)?)?.into_graph();
            agree(
                (true, 3 * s - 2, Some(3 * s - 3)),
                (g.is_path(), g.len(), g.diameter().ok()),
            )
        }),
    })
}

fn enumeration(spec: &EnumerationSpec) -> Result<Plan> {
    let graphs = enumerate_bipartite_graphs(spec.max_vertices)?;
    let keys: Vec<(usize, Vec<usize>)> = graphs.iter().map(|g| (g.len(), g.degree_sequence())).collect();
    let earlier = graphs.clone();
    Ok(Plan {
        inputs: graphs.into_iter().map(Input::Graph).collect(),
        check: Box::new(move |i, input| {
            let Input::Graph(g) = input else {
                return wrong_input();
            };
            if !g.is_connected() {
                return mismatch("a connected graph", "a disconnected graph");
            }
            // a witness against a relabeled, part-swapped copy must be exact
            let n = g.len();
            let relabeled = g.map_labels(|l| format!("{l}'"))?.swap_parts();
            let Some(map) = isomorphism(g, &relabeled, &Limits::default())? else {
                return mismatch("an isomorphism onto a relabeled copy", "none found");
            };
            let exact = (0..n).all(|u| (0..n).all(|v| g.has_edge(u, v) == relabeled.has_edge(map[u], map[v])));
            if !exact {
                return mismatch(
                    "the returned bijection preserves edges and non-edges",
                    format!("{map:?}"),
                );
            }
            for j in 0..i {
                if keys[j] == keys[i] && are_isomorphic(&earlier[j], g, &Limits::default())? {
                    return mismatch(
                        "no earlier isomorphic graph",
                        format!("isomorphic to graph {}", earlier[j].to_json()),
                    );
                }
            }
            Ok(None)
        }),
    })
}

fn words_spec(alphabets: std::ops::RangeInclusive<usize>, lens: std::ops::RangeInclusive<usize>) -> EnumerationSpec {
    EnumerationSpec::words(alphabets, lens)
}

/// Every suite, by name.
pub static SUITES: &[Suite] = &[
    Suite {
        name: "edge-count",
        description:
            "edge count equals the number of consecutive-letter subwords; one vertex per letter; parts by letter parity",
        kind: InputKind::Words,
        defaults: || words_spec(1..=4, 1..=8),
        plan: edge_count,
    },
    Suite {
        name: "canonical-ordering",
        description: "the canonical ordering of a full-support word's graph is strong",
        kind: InputKind::Words,
        defaults: || words_spec(1..=4, 1..=9),
        plan: canonical_ordering,
    },
    Suite {
        name: "binary-permutation",
        description: "for binary words, adjacency of positions equals inversion of the realizing permutation",
        kind: InputKind::Words,
        defaults: || words_spec(2..=2, 1..=10),
        plan: binary_permutation_suite,
    },
    Suite {
        name: "induced-subgraph",
        description: "the subgraph induced by a set of positions is the graph of the subword at those positions",
        kind: InputKind::Words,
        defaults: || words_spec(1..=3, 1..=8),
        plan: induced_subgraph,
    },
    Suite {
        name: "core-union",
        description: "the non-isolated vertices are the positions in some consecutive-letter core",
        kind: InputKind::Words,
        defaults: || words_spec(1..=4, 1..=8),
        plan: core_union,
    },
    Suite {
        name: "diameter",
        description: "diameters match an all-pairs computation and respect the applicable bound",
        kind: InputKind::Words,
        defaults: || words_spec(1..=4, 1..=8),
        plan: diameter,
    },
    Suite {
        name: "triple-subwords",
        description: "connected full-support words contain every run of three consecutive letters",
        kind: InputKind::Words,
        defaults: || words_spec(3..=4, 1..=8),
        plan: triple_subwords,
    },
    Suite {
        name: "word-graphs-are-bpg",
        description: "every component of a Parikh graph has a strong ordering and the graph synthesizes back",
        kind: InputKind::Words,
        defaults: || words_spec(1..=4, 1..=8),
        plan: word_graphs_are_bpg,
    },
    Suite {
        name: "round-trip",
        description: "graphs with a strong ordering synthesize to a word of the same graph; the rest are rejected",
        kind: InputKind::Graphs,
        defaults: || EnumerationSpec::graphs(8),
        plan: round_trip,
    },
    Suite {
        name: "completeness",
        description: "a strong ordering exists exactly when some word of length |V| represents the graph",
        kind: InputKind::Graphs,
        defaults: || EnumerationSpec::graphs(6),
        plan: completeness,
    },
    Suite {
        name: "binary-recognition",
        description: "the chain test, the chordality test and a binary word search agree",
        kind: InputKind::Graphs,
        defaults: || EnumerationSpec::graphs(8),
        plan: binary_recognition,
    },
    Suite {
        name: "ternary-recognition",
        description: "the segment search agrees with a ternary word search and its witnesses are sound",
        kind: InputKind::Graphs,
        defaults: || EnumerationSpec::graphs(8),
        plan: ternary_recognition,
    },
    Suite {
        name: "hamiltonian-binary",
        description: "the binary prefix criterion agrees with a Hamiltonian cycle search on balanced words",
        kind: InputKind::Words,
        defaults: || words_spec(2..=2, 1..=10),
        plan: hamiltonian_binary,
    },
    Suite {
        name: "hamiltonian-ternary",
        description: "the ternary position criterion agrees with a Hamiltonian cycle search",
        kind: InputKind::Words,
        defaults: || words_spec(3..=3, 1..=9),
        plan: hamiltonian_ternary,
    },
    Suite {
        name: "hamiltonian-strong-ordering",
        description: "the consecutive 4-cycle criterion agrees with a Hamiltonian cycle search on balanced graphs",
        kind: InputKind::Graphs,
        defaults: || EnumerationSpec::graphs(10),
        plan: hamiltonian_strong_ordering,
    },
    Suite {
        name: "hamiltonian-balance",
        description: "graphs with a Hamiltonian cycle have parts of equal size",
        kind: InputKind::Graphs,
        defaults: || EnumerationSpec::graphs(10),
        plan: hamiltonian_balance,
    },
    Suite {
        name: "slender",
        description: "slender isomorphism classes are counted by integer partitions",
        kind: InputKind::Sizes,
        defaults: || words_spec(2..=8, 1..=1),
        plan: slender,
    },
    Suite {
        name: "hierarchy",
        description: "the path on 3s+1 vertices needs more than s letters and has an (s+1)-letter word",
        kind: InputKind::Sizes,
        defaults: || words_spec(2..=3, 1..=1),
        plan: hierarchy,
    },
    Suite {
        name: "longest-path",
        description: "the longest path words give paths with 3s-3 edges",
        kind: InputKind::Sizes,
        defaults: || words_spec(2..=6, 1..=1),
        plan: longest_path,
    },
    Suite {
        name: "enumeration",
        description: "enumerated graphs are connected and pairwise non-isomorphic",
        kind: InputKind::Graphs,
        defaults: || EnumerationSpec::graphs(7),
        plan: enumeration,
    },
];

pub fn find_suite(name: &str) -> Result<&'static Suite> {
    SUITES
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownSuite(name.to_string()))
}

/// Runs a registered suite. Capacity and spec errors abort the run; any
/// other failure of a check is reported as a counterexample.
pub fn run_suite(name: &str, spec: &EnumerationSpec) -> Result<SuiteOutcome> {
    let suite = find_suite(name)?;
    spec.validate()?;
    let plan = (suite.plan)(spec)?;
    execute(suite.name, spec, plan)
}

/// The round-trip check with a substitute synthesizer, for exercising the
/// reporting path.
pub fn check_round_trip_with(
    spec: &EnumerationSpec,
    synth: impl Fn(&BipartiteGraph) -> Result<Word> + Send + Sync + 'static,
) -> Result<SuiteOutcome> {
    spec.validate()?;
    let plan = Plan {
        inputs: graph_inputs(spec)?,
        check: on_graphs(move |g| round_trip_check(g, &synth, false)),
    };
    execute("round-trip", spec, plan)
}

fn evaluate(plan: &Plan, jobs: usize) -> Result<Vec<Check>> {
    let sequential = || {
        plan.inputs
            .iter()
            .enumerate()
            .map(|(i, x)| (plan.check)(i, x))
            .collect()
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let parallel = || {
            plan.inputs
                .par_iter()
                .enumerate()
                .map(|(i, x)| (plan.check)(i, x))
                .collect()
        };
        match jobs {
            0 => Ok(parallel()),
            1 => Ok(sequential()),
            k => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(k)
                    .build()
                    .map_err(|e| Error::InvalidSpec(format!("cannot start {k} workers: {e}")))?;
                Ok(pool.install(parallel))
            }
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = jobs;
        Ok(sequential())
    }
}

fn execute(name: &str, spec: &EnumerationSpec, plan: Plan) -> Result<SuiteOutcome> {
    let results = evaluate(&plan, spec.jobs)?;
    let mut counterexamples = Vec::new();
    for (input, result) in plan.inputs.iter().zip(results) {
        let found = match result {
            Ok(None) => continue,
            Ok(Some(m)) => m,
            Err(e) if e.is_capacity() => return Err(e),
            Err(e) => Mismatch {
                expected: "no error".into(),
                actual: format!("error: {e}"),
            },
        };
        counterexamples.push(CounterexampleReport {
            suite: name.to_string(),
            input: render(input),
            expected: found.expected,
            actual: found.actual,
            repro: repro(name, spec, input),
        });
    }
    Ok(SuiteOutcome {
        suite: name.to_string(),
        checked: plan.inputs.len(),
        counterexamples,
    })
}

fn render(input: &Input) -> String {
    match input {
        Input::Word(w) => w.to_string(),
        Input::Graph(g) => g.to_json(),
        Input::Size(s) => s.to_string(),
    }
}

/// A `verify` invocation narrowed to the offending input's slice of the
/// enumeration.
fn repro(name: &str, spec: &EnumerationSpec, input: &Input) -> String {
    let base = format!("parikh verify --suite {name}");
    match input {
        Input::Word(w) => {
            let (s, n) = (w.alphabet_size(), w.len());
            let support = if spec.full_support { " --full-support" } else { "" };
            format!("{base} --min-alphabet-size {s} --alphabet-size {s} --min-len {n} --max-len {n}{support}")
        }
        Input::Graph(g) => format!("{base} --max-vertices {}", g.len()),
        Input::Size(s) => format!("{base} --min-alphabet-size {s} --alphabet-size {s}"),
    }
}
