//! Strong orderings and permutation realizations.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Label, VertexId};

/// A pair of linear orders `(<_X, <_Y)` on the two parts, as vertex ids
/// listed from first to last.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct StrongOrdering {
    pub x: Vec<VertexId>,
    pub y: Vec<VertexId>,
}

/// Label form of a [`StrongOrdering`], for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledOrdering {
    pub x: Vec<String>,
    pub y: Vec<String>,
}

impl StrongOrdering {
    /// Rank of every vertex within its own part's order.
    pub(crate) fn ranks(&self, n: usize) -> Vec<usize> {
        let mut rank = vec![usize::MAX; n];
        for list in [&self.x, &self.y] {
            for (i, &v) in list.iter().enumerate() {
                rank[v] = i;
            }
        }
        rank
    }

    pub fn labeled<L: Label + std::fmt::Display>(&self, g: &BipartiteGraph<L>) -> LabeledOrdering {
        let names = |ids: &[VertexId]| ids.iter().map(|&v| g.label(v).to_string()).collect();
        LabeledOrdering {
            x: names(&self.x),
            y: names(&self.y),
        }
    }

    fn covers<L: Label>(&self, g: &BipartiteGraph<L>) -> bool {
        let is_perm = |list: &[VertexId], range: std::ops::Range<VertexId>| {
            let mut sorted = list.to_vec();
            sorted.sort_unstable();
            sorted.into_iter().eq(range)
        };
        is_perm(&self.x, g.x_ids()) && is_perm(&self.y, g.y_ids())
    }
}

/// Checks that whenever `(x, y)` and `(x', y')` are edges with `x <_X x'`
/// and `y' <_Y y`, the edges `(x, y')` and `(x', y)` exist too.
pub fn is_strong_ordering<L: Label>(g: &BipartiteGraph<L>, ordering: &StrongOrdering) -> Result<bool> {
    if !ordering.covers(g) {
        return Err(Error::OrderingMismatch);
    }
    let rank = ordering.ranks(g.len());
    let edges: Vec<(VertexId, VertexId)> = g.edges().collect();
    for &(x, y) in &edges {
        for &(x2, y2) in &edges {
            if rank[x] < rank[x2] && rank[y2] < rank[y] && !(g.has_edge(x, y2) && g.has_edge(x2, y)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True iff, listing the vertices as `order`, vertices `i < j` are adjacent
/// exactly when `tau(i) > tau(j)`. `tau` holds 1-based images.
pub fn is_permutation_realization<L: Label>(g: &BipartiteGraph<L>, order: &[VertexId], tau: &[usize]) -> Result<bool> {
    let n = g.len();
    let mut seen = vec![false; n];
    let order_ok = order.len() == n && order.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true));
    let mut hit = vec![false; n + 1];
    let tau_ok = tau.len() == n
        && tau
            .iter()
            .all(|&t| (1..=n).contains(&t) && !std::mem::replace(&mut hit[t], true));
    if !order_ok || !tau_ok {
        return Err(Error::Precondition(format!(
            "vertex order and permutation must both have length {n} and be bijective"
        )));
    }
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(order[i], order[j]) != (tau[i] > tau[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn all_orders(items: &[VertexId]) -> Vec<Vec<VertexId>> {
        if items.len() <= 1 {
            return vec![items.to_vec()];
        }
        let mut out = Vec::new();
        for i in 0..items.len() {
            let mut rest = items.to_vec();
            let head = rest.remove(i);
            for mut tail in all_orders(&rest) {
                tail.insert(0, head);
                out.push(tail);
            }
        }
        out
    }

    #[test]
    fn c6_has_no_strong_ordering() {
        let c6 = cycle(3);
        let xs: Vec<_> = c6.x_ids().collect();
        let ys: Vec<_> = c6.y_ids().collect();
        for x in all_orders(&xs) {
            for y in all_orders(&ys) {
                let so = StrongOrdering { x: x.clone(), y };
                assert!(!is_strong_ordering(&c6, &so).unwrap());
            }
        }
    }

    #[test]
    fn single_edge_and_complete_graphs() {
        let edge = complete(1, 1);
        let so = StrongOrdering { x: vec![0], y: vec![1] };
        assert!(is_strong_ordering(&edge, &so).unwrap());
        let k23 = complete(2, 3);
        let so = StrongOrdering {
            x: vec![1, 0],
            y: vec![4, 2, 3],
        };
        assert!(is_strong_ordering(&k23, &so).unwrap());
    }

    #[test]
    fn coverage_is_checked() {
        let edge = complete(1, 1);
        let bad = StrongOrdering {
            x: vec![0, 0],
            y: vec![1],
        };
        assert!(matches!(is_strong_ordering(&edge, &bad), Err(Error::OrderingMismatch)));
        let swapped = StrongOrdering { x: vec![1], y: vec![0] };
        assert!(is_strong_ordering(&edge, &swapped).is_err());
    }

    #[test]
    fn permutation_realizations() {
        let edgeless_graph = edgeless(3);
        assert!(is_permutation_realization(&edgeless_graph, &[0, 1, 2], &[1, 2, 3]).unwrap());
        assert!(!is_permutation_realization(&edgeless_graph, &[0, 1, 2], &[2, 1, 3]).unwrap());
        assert!(is_permutation_realization(&edgeless_graph, &[0, 1], &[1, 2]).is_err());
        assert!(is_permutation_realization(&edgeless_graph, &[0, 1, 2], &[1, 1, 3]).is_err());
    }
}
