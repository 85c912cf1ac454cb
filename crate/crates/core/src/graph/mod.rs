//! Labeled bipartite graphs with an explicit bipartition.
//!
//! Vertices are addressed by dense ids: `0..|X|` are the vertices of part X
//! in their listed order, `|X|..|X|+|Y|` those of part Y.

mod format;
mod search;

use std::collections::{HashMap, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;
use std::ops::Range;

pub use format::GraphJson;
pub use search::{are_isomorphic, hamiltonian_cycle, has_hamiltonian_cycle, is_62_chordal, isomorphism};

use crate::error::{Error, Result};

/// Anything usable as a vertex label.
pub trait Label: Clone + Eq + Hash + Debug {}

impl<T: Clone + Eq + Hash + Debug> Label for T {}

/// Vertex id within a [`BipartiteGraph`].
pub type VertexId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Part {
    X,
    Y,
}

impl Part {
    pub fn other(self) -> Part {
        match self {
            Part::X => Part::Y,
            Part::Y => Part::X,
        }
    }
}

/// Caps for the exponential searches. They are configuration, not limits of
/// the algorithms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub isomorphism: usize,
    pub cycles: usize,
    pub hamiltonian: usize,
    pub ordering: usize,
    /// Largest alphabet whose slender words are enumerated.
    pub slender: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            isomorphism: 16,
            cycles: 14,
            hamiltonian: 20,
            ordering: 14,
            slender: 8,
        }
    }
}

impl Limits {
    /// Every cap set to `vertices`.
    pub fn uniform(vertices: usize) -> Self {
        Limits {
            isomorphism: vertices,
            cycles: vertices,
            hamiltonian: vertices,
            ordering: vertices,
            slender: vertices,
        }
    }

    pub(crate) fn check(cap: usize, search: &'static str, vertices: usize) -> Result<()> {
        if vertices > cap {
            Err(Error::Capacity { search, vertices, cap })
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Debug)]
pub struct BipartiteGraph<L: Label = String> {
    labels: Vec<L>,
    x_len: usize,
    adjacency: Vec<Vec<VertexId>>,
    matrix: Vec<bool>,
    index: HashMap<L, VertexId>,
}

impl<L: Label> BipartiteGraph<L> {
    /// Builds a graph from labeled parts and `(x, y)` edges. Labels must be
    /// unique across both parts and every edge must join X to Y.
    pub fn new(x: Vec<L>, y: Vec<L>, edges: impl IntoIterator<Item = (L, L)>) -> Result<Self> {
        let x_len = x.len();
        let labels: Vec<L> = x.into_iter().chain(y).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (id, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), id).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex {label:?}")));
            }
        }
        let mut pairs = Vec::new();
        for (a, b) in edges {
            let (Some(&u), Some(&v)) = (index.get(&a), index.get(&b)) else {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a:?}, {b:?}) uses an unknown vertex"
                )));
            };
            if u >= x_len || v < x_len {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a:?}, {b:?}) must join part x to part y"
                )));
            }
            pairs.push((u, v - x_len));
        }
        let n = labels.len();
        let mut graph = BipartiteGraph {
            labels,
            x_len,
            adjacency: vec![Vec::new(); n],
            matrix: vec![false; n * n],
            index,
        };
        for (u, v) in pairs {
            if !graph.insert_edge(u, x_len + v) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge ({:?}, {:?})",
                    graph.labels[u],
                    graph.labels[x_len + v]
                )));
            }
        }
        graph.sort_adjacency();
        Ok(graph)
    }

    /// Builds a graph from edges given as `(x index, y index)` into the parts.
    /// Duplicate edges are ignored.
    pub fn from_index_edges(x: Vec<L>, y: Vec<L>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut graph = Self::new(x, y, std::iter::empty())?;
        let (nx, ny) = (graph.x_len, graph.y_len());
        for (i, j) in edges {
            if i >= nx || j >= ny {
                return Err(Error::InvalidGraph(format!("edge ({i}, {j}) out of range")));
            }
            graph.insert_edge(i, nx + j);
        }
        graph.sort_adjacency();
        Ok(graph)
    }

    fn insert_edge(&mut self, u: VertexId, v: VertexId) -> bool {
        let n = self.labels.len();
        if self.matrix[u * n + v] {
            return false;
        }
        self.matrix[u * n + v] = true;
        self.matrix[v * n + u] = true;
        self.adjacency[u].push(v);
        self.adjacency[v].push(u);
        true
    }

    fn sort_adjacency(&mut self) {
        for list in &mut self.adjacency {
            list.sort_unstable();
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn x_len(&self) -> usize {
        self.x_len
    }

    pub fn y_len(&self) -> usize {
        self.labels.len() - self.x_len
    }

    pub fn x_ids(&self) -> Range<VertexId> {
        0..self.x_len
    }

    pub fn y_ids(&self) -> Range<VertexId> {
        self.x_len..self.labels.len()
    }

    pub fn part_ids(&self, part: Part) -> Range<VertexId> {
        match part {
            Part::X => self.x_ids(),
            Part::Y => self.y_ids(),
        }
    }

    pub fn part_of(&self, v: VertexId) -> Part {
        if v < self.x_len {
            Part::X
        } else {
            Part::Y
        }
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &L {
        &self.labels[v]
    }

    pub fn id(&self, label: &L) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    fn require(&self, label: &L) -> Result<VertexId> {
        self.id(label).ok_or_else(|| Error::UnknownVertex(format!("{label:?}")))
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency[..self.x_len].iter().map(Vec::len).sum()
    }

    /// Edges as `(x id, y id)` pairs, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.x_ids()
            .flat_map(move |u| self.adjacency[u].iter().map(move |&v| (u, v)))
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.matrix[u * self.labels.len() + v]
    }

    pub fn neighbor_ids(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    /// `N(v)` by label.
    pub fn neighbors(&self, label: &L) -> Result<Vec<&L>> {
        let v = self.require(label)?;
        Ok(self.adjacency[v].iter().map(|&u| &self.labels[u]).collect())
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let next = dist[u].map(|d| d + 1);
            for &v in &self.adjacency[u] {
                if dist[v].is_none() {
                    dist[v] = next;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// `d(u, v)`, or `None` when the vertices lie in different components.
    pub fn distance(&self, u: &L, v: &L) -> Result<Option<usize>> {
        let (u, v) = (self.require(u)?, self.require(v)?);
        Ok(self.distances_from(u)[v])
    }

    pub fn is_connected(&self) -> bool {
        !self.is_empty() && self.distances_from(0).iter().all(Option::is_some)
    }

    /// Largest pairwise distance of a connected, nonempty graph.
    pub fn diameter(&self) -> Result<usize> {
        if self.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut best = 0;
        for source in 0..self.len() {
            for d in self.distances_from(source) {
                best = best.max(d.ok_or(Error::Disconnected)?);
            }
        }
        Ok(best)
    }

    /// Vertex ids of each connected component, components ordered by their
    /// smallest id and ids ascending within a component.
    pub fn component_ids(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.len()];
        let mut components = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut members = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < members.len() {
                let u = members[head];
                head += 1;
                for &v in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        members.push(v);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        components
    }

    /// Maximal connected induced subgraphs; parts are inherited.
    pub fn connected_components(&self) -> Vec<Self> {
        self.component_ids()
            .iter()
            .map(|ids| self.induced_by_ids(ids))
            .collect()
    }

    /// Subgraph induced by the given ids. Each part keeps its relative order.
    pub fn induced_by_ids(&self, ids: &[VertexId]) -> Self {
        let mut keep: Vec<VertexId> = ids.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let x: Vec<VertexId> = keep.iter().copied().filter(|&v| v < self.x_len).collect();
        let y: Vec<VertexId> = keep.iter().copied().filter(|&v| v >= self.x_len).collect();
        let edges = x.iter().enumerate().flat_map(|(i, &u)| {
            y.iter()
                .enumerate()
                .filter(move |&(_, &v)| self.has_edge(u, v))
                .map(move |(j, _)| (i, j))
        });
        let edges: Vec<_> = edges.collect();
        BipartiteGraph::from_index_edges(
            x.iter().map(|&v| self.labels[v].clone()).collect(),
            y.iter().map(|&v| self.labels[v].clone()).collect(),
            edges,
        )
        .expect("induced subgraph of a valid graph is valid")
    }

    /// Subgraph induced by a set of labels.
    pub fn induced_subgraph(&self, vertices: &[L]) -> Result<Self> {
        let ids = vertices.iter().map(|l| self.require(l)).collect::<Result<Vec<_>>>()?;
        Ok(self.induced_by_ids(&ids))
    }

    pub fn map_labels<M: Label>(&self, mut f: impl FnMut(&L) -> M) -> Result<BipartiteGraph<M>> {
        let x = self.labels[..self.x_len].iter().map(&mut f).collect();
        let y = self.labels[self.x_len..].iter().map(&mut f).collect();
        let edges: Vec<_> = self.edges().map(|(u, v)| (u, v - self.x_len)).collect();
        BipartiteGraph::from_index_edges(x, y, edges)
    }

    /// The same graph with the roles of X and Y exchanged.
    pub fn swap_parts(&self) -> Self {
        let x = self.labels[self.x_len..].to_vec();
        let y = self.labels[..self.x_len].to_vec();
        let edges: Vec<_> = self.edges().map(|(u, v)| (v - self.x_len, u)).collect();
        BipartiteGraph::from_index_edges(x, y, edges).expect("swapping parts keeps validity")
    }

    /// Sorted degree sequence, a cheap isomorphism invariant.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = (0..self.len()).map(|v| self.degree(v)).collect();
        degrees.sort_unstable();
        degrees
    }

    /// True for a path graph: connected, acyclic, every degree at most two.
    pub fn is_path(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.len() && (0..self.len()).all(|v| self.degree(v) <= 2)
    }
}

impl BipartiteGraph<String> {
    /// Convenience constructor for string-labeled graphs.
    pub fn from_strs(x: &[&str], y: &[&str], edges: &[(&str, &str)]) -> Result<Self> {
        BipartiteGraph::new(
            x.iter().map(|s| s.to_string()).collect(),
            y.iter().map(|s| s.to_string()).collect(),
            edges.iter().map(|(a, b)| (a.to_string(), b.to_string())),
        )
    }
}

/// Small named graphs used throughout the tests and docs.
pub mod named {
    use super::BipartiteGraph;

    fn labels(prefix: &str, n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("{prefix}{i}")).collect()
    }

    /// `K_{m,n}`.
    pub fn complete(m: usize, n: usize) -> BipartiteGraph {
        let edges: Vec<_> = (0..m).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
        BipartiteGraph::from_index_edges(labels("x", m), labels("y", n), edges).unwrap()
    }

    /// Path on `n >= 1` vertices, starting in part X.
    pub fn path(n: usize) -> BipartiteGraph {
        let xs = n.div_ceil(2);
        let ys = n / 2;
        // vertex k of the path: x_{k/2} for even k, y_{k/2} for odd k
        let edges: Vec<_> = (0..n.saturating_sub(1))
            .map(|k| {
                if k % 2 == 0 {
                    (k / 2, k / 2)
                } else {
                    (k.div_ceil(2), k / 2)
                }
            })
            .collect();
        BipartiteGraph::from_index_edges(labels("x", xs), labels("y", ys), edges).unwrap()
    }

    /// Even cycle on `2k` vertices, `k >= 2`.
    pub fn cycle(k: usize) -> BipartiteGraph {
        let edges: Vec<_> = (0..k).flat_map(|i| [(i, i), ((i + 1) % k, i)]).collect();
        BipartiteGraph::from_index_edges(labels("x", k), labels("y", k), edges).unwrap()
    }

    /// `n` isolated vertices in part X, no edges.
    pub fn edgeless(n: usize) -> BipartiteGraph {
        BipartiteGraph::from_index_edges(labels("x", n), Vec::new(), std::iter::empty()).unwrap()
    }
}
