//! Exact search for strong orderings.
//!
//! The orders of the smaller part are enumerated depth first. Once the order
//! of that part is fixed, each pair of vertices in the other part either may
//! appear in both relative orders, is forced into one, or is impossible, so
//! the other order is a topological sort of the forced pairs. Bans only grow
//! along a branch, which makes the partial checks valid pruning.

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Label, Limits, Part, VertexId};
use crate::ordering::StrongOrdering;

/// A strong ordering of a connected graph, or `None` when the graph is not a
/// bipartite permutation graph.
pub fn find_strong_ordering<L: Label>(g: &BipartiteGraph<L>, limits: &Limits) -> Result<Option<StrongOrdering>> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Limits::check(limits.ordering, "strong ordering search", g.len())?;
    Ok(Search::new(g).run())
}

/// Like [`find_strong_ordering`] but accepts disconnected graphs: component
/// orderings are concatenated, which never creates a crossing pair.
pub fn find_strong_ordering_any<L: Label>(g: &BipartiteGraph<L>, limits: &Limits) -> Result<Option<StrongOrdering>> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let mut total = StrongOrdering {
        x: Vec::new(),
        y: Vec::new(),
    };
    for ids in g.component_ids() {
        let component = g.induced_by_ids(&ids);
        let Some(so) = find_strong_ordering(&component, limits)? else {
            return Ok(None);
        };
        // component ids are listed X first, each part in ascending order
        let (xs, ys): (Vec<VertexId>, Vec<VertexId>) = ids.iter().partition(|&&v| g.part_of(v) == Part::X);
        let back = |v: VertexId| {
            if v < component.x_len() {
                xs[v]
            } else {
                ys[v - component.x_len()]
            }
        };
        total.x.extend(so.x.iter().map(|&v| back(v)));
        total.y.extend(so.y.iter().map(|&v| back(v)));
    }
    Ok(Some(total))
}

struct Search<'a, L: Label> {
    g: &'a BipartiteGraph<L>,
    /// The enumerated part.
    p: Vec<VertexId>,
    /// The derived part.
    q: Vec<VertexId>,
    p_is_x: bool,
    /// `bans[i * q.len() + j] > 0` forbids `q[i]` before `q[j]`.
    bans: Vec<u32>,
    placed: Vec<VertexId>,
    used: Vec<bool>,
}

impl<'a, L: Label> Search<'a, L> {
    fn new(g: &'a BipartiteGraph<L>) -> Self {
        let p_is_x = g.x_len() <= g.y_len();
        let (p, q): (Vec<_>, Vec<_>) = if p_is_x {
            (g.x_ids().collect(), g.y_ids().collect())
        } else {
            (g.y_ids().collect(), g.x_ids().collect())
        };
        let nq = q.len();
        let np = p.len();
        Search {
            g,
            p,
            q,
            p_is_x,
            bans: vec![0; nq * nq],
            placed: Vec::with_capacity(np),
            used: vec![false; np],
        }
    }

    fn run(mut self) -> Option<StrongOrdering> {
        let q_order = self.extend()?;
        let p_order: Vec<VertexId> = self.placed.iter().map(|&i| self.p[i]).collect();
        let q_order: Vec<VertexId> = q_order.into_iter().map(|j| self.q[j]).collect();
        Some(if self.p_is_x {
            StrongOrdering { x: p_order, y: q_order }
        } else {
            StrongOrdering { x: q_order, y: p_order }
        })
    }

    fn extend(&mut self) -> Option<Vec<usize>> {
        if self.placed.len() == self.p.len() {
            return self.q_order();
        }
        for next in 0..self.p.len() {
            if self.used[next] {
                continue;
            }
            let added = self.ban_pairs(next);
            self.used[next] = true;
            self.placed.push(next);
            if self.consistent() {
                if let Some(order) = self.extend() {
                    return Some(order);
                }
            }
            self.placed.pop();
            self.used[next] = false;
            for k in added {
                self.bans[k] -= 1;
            }
        }
        None
    }

    /// Records the bans implied by placing `later` after every placed vertex.
    fn ban_pairs(&mut self, later: usize) -> Vec<usize> {
        let g = self.g;
        let nq = self.q.len();
        let mut added = Vec::new();
        let p2 = self.p[later];
        for &earlier in &self.placed {
            let p1 = self.p[earlier];
            for (i, &q1) in self.q.iter().enumerate() {
                if !g.has_edge(p1, q1) {
                    continue;
                }
                for (j, &q2) in self.q.iter().enumerate() {
                    // p1 < p2 with p1-q1 and p2-q2: q2 before q1 needs both
                    // straight edges
                    if i != j && g.has_edge(p2, q2) && !(g.has_edge(p1, q2) && g.has_edge(p2, q1)) {
                        let k = j * nq + i;
                        self.bans[k] += 1;
                        added.push(k);
                    }
                }
            }
        }
        added
    }

    fn consistent(&self) -> bool {
        self.q_order().is_some()
    }

    /// Topological order of the derived part under the forced pairs, or
    /// `None` when some pair is banned both ways or the forced pairs cycle.
    fn q_order(&self) -> Option<Vec<usize>> {
        let nq = self.q.len();
        let mut indegree = vec![0usize; nq];
        #[allow(clippy::needless_range_loop)]
        for i in 0..nq {
            for j in 0..nq {
                if i == j {
                    continue;
                }
                let i_first = self.bans[i * nq + j] == 0;
                let j_first = self.bans[j * nq + i] == 0;
                match (i_first, j_first) {
                    (false, false) => return None,
                    // j must precede i
                    (false, true) => indegree[i] += 1,
                    _ => {}
                }
            }
        }
        let mut done = vec![false; nq];
        let mut order = Vec::with_capacity(nq);
        while order.len() < nq {
            let next = (0..nq).find(|&i| !done[i] && indegree[i] == 0)?;
            done[next] = true;
            order.push(next);
            for (i, deg) in indegree.iter_mut().enumerate() {
                if !done[i] && i != next && self.bans[i * nq + next] > 0 && self.bans[next * nq + i] == 0 {
                    *deg -= 1;
                }
            }
        }
        Some(order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::ordering::is_strong_ordering;

    fn found(g: &BipartiteGraph) -> Option<StrongOrdering> {
        find_strong_ordering(g, &Limits::default()).unwrap()
    }

    #[test]
    fn complete_graphs_and_paths() {
        for (m, n) in [(1, 1), (1, 3), (2, 2), (3, 4)] {
            let g = complete(m, n);
            let so = found(&g).unwrap();
            assert!(is_strong_ordering(&g, &so).unwrap());
        }
        for n in 1..=9 {
            let g = path(n);
            let so = found(&g).unwrap();
            assert!(is_strong_ordering(&g, &so).unwrap(), "P{n}");
        }
    }

    #[test]
    fn p4_puts_the_degree_two_x_vertex_first() {
        // y1 - x1 - y2 - x2
        let g = BipartiteGraph::from_strs(
            &["x1", "x2"],
            &["y1", "y2"],
            &[("x1", "y1"), ("x1", "y2"), ("x2", "y2")],
        )
        .unwrap();
        let so = found(&g).unwrap();
        assert!(is_strong_ordering(&g, &so).unwrap());
        let labeled = so.labeled(&g);
        assert_eq!(labeled.x, ["x1", "x2"]);
        assert_eq!(labeled.y, ["y1", "y2"]);
    }

    #[test]
    fn even_cycles_beyond_four_have_none() {
        assert!(found(&cycle(2)).is_some());
        for k in 3..=6 {
            assert!(found(&cycle(k)).is_none(), "C{}", 2 * k);
        }
    }

    #[test]
    fn errors() {
        let two_edges = BipartiteGraph::from_strs(&["a", "b"], &["c", "d"], &[("a", "c"), ("b", "d")]).unwrap();
        assert!(matches!(
            find_strong_ordering(&two_edges, &Limits::default()),
            Err(Error::Disconnected)
        ));
        assert!(matches!(
            find_strong_ordering(&path(15), &Limits::default()),
            Err(Error::Capacity { .. })
        ));
        assert!(find_strong_ordering(&path(15), &Limits::uniform(15)).unwrap().is_some());
    }

    #[test]
    fn disconnected_orderings_concatenate() {
        let g = BipartiteGraph::from_strs(
            &["a", "b", "e"],
            &["c", "d", "f"],
            &[("a", "c"), ("b", "d"), ("b", "f"), ("e", "f")],
        )
        .unwrap();
        let so = find_strong_ordering_any(&g, &Limits::default()).unwrap().unwrap();
        assert!(is_strong_ordering(&g, &so).unwrap());
        let with_c6 = BipartiteGraph::from_index_edges(
            (0..4).map(|i| format!("x{i}")).collect(),
            (0..4).map(|i| format!("y{i}")).collect(),
            [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (0, 2), (3, 3)],
        )
        .unwrap();
        assert!(find_strong_ordering_any(&with_c6, &Limits::default())
            .unwrap()
            .is_none());
    }
}
