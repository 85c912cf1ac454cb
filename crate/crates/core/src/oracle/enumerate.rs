//! Exhaustive word and graph enumeration.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::words::Word;

/// Largest graph the enumerators and canonical forms accept.
pub const MAX_GRAPH_VERTICES: usize = 10;

/// Most words a single enumeration may produce.
pub const MAX_WORDS: u128 = 20_000_000;

/// Bounds of an exhaustive run. Word suites read the alphabet and length
/// ranges, graph suites read `max_vertices`, size suites read the alphabet
/// range alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub min_alphabet: usize,
    pub max_alphabet: usize,
    pub min_len: usize,
    pub max_len: usize,
    pub max_vertices: usize,
    /// Keep only words using every letter of their alphabet.
    pub full_support: bool,
    /// Worker threads; 0 picks the default.
    pub jobs: usize,
}

impl Default for EnumerationSpec {
    fn default() -> Self {
        EnumerationSpec {
            min_alphabet: 1,
            max_alphabet: 3,
            min_len: 1,
            max_len: 6,
            max_vertices: 6,
            full_support: false,
            jobs: 0,
        }
    }
}

impl EnumerationSpec {
    /// Words over `Σ_min..=Σ_max` with lengths in `min_len..=max_len`.
    pub fn words(alphabets: std::ops::RangeInclusive<usize>, lens: std::ops::RangeInclusive<usize>) -> Self {
        EnumerationSpec {
            min_alphabet: *alphabets.start(),
            max_alphabet: *alphabets.end(),
            min_len: *lens.start(),
            max_len: *lens.end(),
            ..Self::default()
        }
    }

    pub fn graphs(max_vertices: usize) -> Self {
        EnumerationSpec {
            max_vertices,
            ..Self::default()
        }
    }

    pub fn with_full_support(mut self, on: bool) -> Self {
        self.full_support = on;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSpec(msg));
        if self.min_alphabet == 0 {
            return bad("alphabet sizes start at 1".into());
        }
        if self.min_alphabet > self.max_alphabet {
            return bad(format!(
                "alphabet range {}..={} is empty",
                self.min_alphabet, self.max_alphabet
            ));
        }
        if self.min_len > self.max_len {
            return bad(format!("length range {}..={} is empty", self.min_len, self.max_len));
        }
        if self.max_vertices > MAX_GRAPH_VERTICES {
            return bad(format!(
                "graph enumeration is capped at {MAX_GRAPH_VERTICES} vertices, got {}",
                self.max_vertices
            ));
        }
        let count = self.word_count();
        if count > MAX_WORDS {
            return bad(format!("{count} words exceeds the budget of {MAX_WORDS}"));
        }
        Ok(())
    }

    /// Number of words in the alphabet and length ranges, before any
    /// support filter; saturates instead of overflowing.
    pub fn word_count(&self) -> u128 {
        let mut total: u128 = 0;
        for s in self.min_alphabet..=self.max_alphabet {
            for len in self.min_len..=self.max_len {
                let n = (s as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
                total = total.saturating_add(n);
            }
        }
        total
    }
}

/// All words of the spec in shortlex order per alphabet: alphabets
/// ascending, then lengths ascending, then lexicographically.
pub fn enumerate_words(spec: &EnumerationSpec) -> Result<impl Iterator<Item = Word>> {
    spec.validate()?;
    let full_support = spec.full_support;
    let lens = spec.min_len..=spec.max_len;
    Ok((spec.min_alphabet..=spec.max_alphabet)
        .flat_map(move |s| lens.clone().map(move |len| (s, len)))
        .flat_map(|(s, len)| {
            let all: Box<dyn Iterator<Item = Vec<usize>>> = if len == 0 {
                Box::new(std::iter::once(Vec::new()))
            } else {
                Box::new((0..len).map(|_| 1..=s).multi_cartesian_product())
            };
            all.map(move |letters| Word::new(s, letters).expect("letters are in range"))
        })
        .filter(move |w| !full_support || w.has_full_support()))
}

/// Integer partitions of `n` as nonincreasing part lists, in reverse
/// lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn extend(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            extend(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, n, &mut Vec::new(), &mut out);
    out
}

/// Isomorphism-invariant code of a connected bipartite graph: the part
/// sizes and the sorted neighbourhood masks of the larger part over the
/// smaller one, minimized over orderings of the smaller part (and over
/// the transpose when the parts have equal size).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    rows: usize,
    columns: Vec<u16>,
}

impl CanonicalForm {
    pub fn len(&self) -> usize {
        self.rows + self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn to_graph(&self) -> BipartiteGraph {
        graph_from_columns(self.rows, &self.columns)
    }
}

/// Canonical form of a connected graph on at most [`MAX_GRAPH_VERTICES`]
/// vertices.
pub fn canonical_form<L: crate::graph::Label>(g: &BipartiteGraph<L>) -> Result<CanonicalForm> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if g.len() > MAX_GRAPH_VERTICES {
        return Err(Error::Capacity {
            search: "canonical form",
            vertices: g.len(),
            cap: MAX_GRAPH_VERTICES,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let masks = |rows: std::ops::Range<usize>, cols: std::ops::Range<usize>| -> Vec<u16> {
        let start = rows.start;
        cols.map(|c| {
            g.neighbor_ids(c)
                .iter()
                .filter(|v| rows.contains(v))
                .fold(0u16, |m, &v| m | 1 << (v - start))
        })
        .collect()
    };
    let (x, y) = (g.x_ids(), g.y_ids());
    let form = if x.len() <= y.len() {
        minimize(x.len(), &masks(x.clone(), y.clone()))
    } else {
        minimize(y.len(), &masks(y.clone(), x.clone()))
    };
    Ok(if x.len() == y.len() {
        form.min(minimize(y.len(), &masks(y, x)))
    } else {
        form
    })
}

fn permute_mask(mask: u16, perm: &[usize]) -> u16 {
    perm.iter()
        .enumerate()
        .fold(0, |m, (from, &to)| m | ((mask >> from) & 1) << to)
}

/// Least sorted column list over all row orderings.
fn minimize(rows: usize, columns: &[u16]) -> CanonicalForm {
    let mut best: Option<Vec<u16>> = None;
    for perm in (0..rows).permutations(rows) {
        let mut mapped: Vec<u16> = columns.iter().map(|&c| permute_mask(c, &perm)).collect();
        mapped.sort_unstable();
        if best.as_ref().is_none_or(|b| mapped < *b) {
            best = Some(mapped);
        }
    }
    CanonicalForm {
        rows,
        columns: best.unwrap_or_default(),
    }
}

/// Whether no row ordering (or transpose) yields a smaller sorted column
/// list than `columns`, which must already be sorted.
fn is_minimal(rows: usize, columns: &[u16], perms: &[Vec<usize>]) -> bool {
    let smaller = |cols: &[u16]| {
        perms.iter().any(|perm| {
            let mut mapped: Vec<u16> = cols.iter().map(|&c| permute_mask(c, perm)).collect();
            mapped.sort_unstable();
            mapped.as_slice() < columns
        })
    };
    if smaller(columns) {
        return false;
    }
    rows != columns.len() || !smaller(&transpose(rows, columns))
}

fn transpose(rows: usize, columns: &[u16]) -> Vec<u16> {
    (0..rows)
        .map(|r| {
            columns
                .iter()
                .enumerate()
                .fold(0u16, |m, (c, &col)| m | ((col >> r) & 1) << c)
        })
        .collect()
}

fn is_connected_columns(rows: usize, columns: &[u16]) -> bool {
    let full = (1u16 << rows) - 1;
    let mut reached = columns[0];
    let mut used = vec![false; columns.len()];
    used[0] = true;
    loop {
        let mut grew = false;
        for (i, &c) in columns.iter().enumerate() {
            if !used[i] && c & reached != 0 {
                used[i] = true;
                reached |= c;
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    reached == full && used.iter().all(|&u| u)
}

/// Part X holds the `rows` vertices `x1..`, part Y one vertex `y1..` per
/// column.
fn graph_from_columns(rows: usize, columns: &[u16]) -> BipartiteGraph {
    let x = (1..=rows).map(|i| format!("x{i}")).collect();
    let y = (1..=columns.len()).map(|j| format!("y{j}")).collect();
    let edges = columns
        .iter()
        .enumerate()
        .flat_map(|(j, &c)| (0..rows).filter(move |r| c >> r & 1 == 1).map(move |r| (r, j)));
    BipartiteGraph::from_index_edges(x, y, edges).expect("generated edges are valid")
}

/// Connected graphs with parts of sizes `rows <= cols`, one per
/// isomorphism class.
fn graphs_with_parts(rows: usize, cols: usize) -> Vec<BipartiteGraph> {
    let perms: Vec<Vec<usize>> = (0..rows).permutations(rows).collect();
    (1..1u16 << rows)
        .combinations_with_replacement(cols)
        .filter(|c| is_connected_columns(rows, c) && is_minimal(rows, c, &perms))
        .map(|c| graph_from_columns(rows, &c))
        .collect()
}

/// Every connected bipartite graph with 2 to `max_vertices` vertices, one
/// per isomorphism class, in order of vertex count, then smaller part size.
/// The smaller part is X.
pub fn enumerate_bipartite_graphs(max_vertices: usize) -> Result<Vec<BipartiteGraph>> {
    enumerate_graphs_where(max_vertices, |_, _| true)
}

/// Like [`enumerate_bipartite_graphs`], restricted to part sizes accepted
/// by `keep(|X|, |Y|)`.
pub fn enumerate_graphs_where(max_vertices: usize, keep: impl Fn(usize, usize) -> bool) -> Result<Vec<BipartiteGraph>> {
    if max_vertices > MAX_GRAPH_VERTICES {
        return Err(Error::Capacity {
            search: "graph enumeration",
            vertices: max_vertices,
            cap: MAX_GRAPH_VERTICES,
        });
    }
    let mut out = Vec::new();
    for n in 2..=max_vertices {
        for rows in 1..=n / 2 {
            if keep(rows, n - rows) {
                out.extend(graphs_with_parts(rows, n - rows));
            }
        }
    }
    Ok(out)
}
