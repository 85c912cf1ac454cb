//! Interval decomposition of a connected bipartite permutation graph along a
//! strong ordering.

use std::collections::BTreeSet;
use std::ops::Range;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Label, VertexId};
use crate::ordering::{is_strong_ordering, StrongOrdering};

/// Blocks `X_1..X_n`, `Y_1..Y_n` as rank ranges into the ordering's lists.
///
/// The union of the first `p` blocks of each part is an end segment whose
/// initial segment is block `p`, and the edges of the graph induced by the
/// first `p` blocks are exactly the union of the block products.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalDecomposition {
    pub ordering: StrongOrdering,
    pub blocks_x: Vec<Range<usize>>,
    pub blocks_y: Vec<Range<usize>>,
}

impl IntervalDecomposition {
    pub fn len(&self) -> usize {
        self.blocks_x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks_x.is_empty()
    }

    /// Vertex ids of `X_p` (0-based `p`), in ordering order.
    pub fn x_block(&self, p: usize) -> &[VertexId] {
        &self.ordering.x[self.blocks_x[p].clone()]
    }

    pub fn y_block(&self, p: usize) -> &[VertexId] {
        &self.ordering.y[self.blocks_y[p].clone()]
    }

    /// Checks the five defining clauses, naming the first one that fails.
    pub fn check_clauses<L: Label>(&self, g: &BipartiteGraph<L>) -> std::result::Result<(), String> {
        let n = self.len();
        if n == 0 || self.blocks_y.len() != n {
            return Err("block sequences must be nonempty and of equal length".into());
        }
        for (name, blocks, total) in [
            ("X", &self.blocks_x, self.ordering.x.len()),
            ("Y", &self.blocks_y, self.ordering.y.len()),
        ] {
            let mut union = BTreeSet::new();
            for (p, block) in blocks.iter().enumerate() {
                if block.is_empty() || block.end > total {
                    return Err(format!("{name}_{} is not a nonempty interval", p + 1));
                }
                union.extend(block.clone());
                let first = *union.first().expect("nonempty");
                if union.len() != total - first || *union.last().expect("nonempty") != total - 1 {
                    return Err(format!(
                        "clause 1/2: union up to {name}_{} is not an end segment",
                        p + 1
                    ));
                }
                if block.start != first {
                    return Err(format!("clause 1/2: {name}_{} does not start its union", p + 1));
                }
                if p + 1 < n {
                    let next = &blocks[p + 1];
                    if next.start <= block.start && block.end <= next.end {
                        return Err(format!("clause 3: {name}_{} is inside {name}_{}", p + 1, p + 2));
                    }
                }
            }
            if union.len() != total {
                return Err(format!("the {name} blocks do not cover the part"));
            }
        }
        for p in 0..n.saturating_sub(1) {
            let grows = |a: &Range<usize>, b: &Range<usize>| b.clone().any(|r| !a.contains(&r));
            if !grows(&self.blocks_x[p], &self.blocks_x[p + 1]) && !grows(&self.blocks_y[p], &self.blocks_y[p + 1]) {
                return Err(format!("clause 4: step {} adds no vertex", p + 1));
            }
        }
        let mut accumulated: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
        let mut xs: BTreeSet<VertexId> = BTreeSet::new();
        let mut ys: BTreeSet<VertexId> = BTreeSet::new();
        for p in 0..n {
            xs.extend(self.x_block(p));
            ys.extend(self.y_block(p));
            for &x in self.x_block(p) {
                for &y in self.y_block(p) {
                    accumulated.insert((x, y));
                }
            }
            let induced: BTreeSet<(VertexId, VertexId)> = xs
                .iter()
                .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
                .filter(|&(x, y)| g.has_edge(x, y))
                .collect();
            if induced != accumulated {
                return Err(format!("clause 5: edges of G_{} differ from the block products", p + 1));
            }
        }
        Ok(())
    }
}

/// Builds the decomposition greedily: each new pair of blocks is anchored at
/// the last vertices `x*`, `y*` still incident to an uncovered edge, taking
/// the neighbours of `y*` up to `x*` and of `x*` up to `y*`.
pub fn interval_decomposition<L: Label>(g: &BipartiteGraph<L>, so: &StrongOrdering) -> Result<IntervalDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !is_strong_ordering(g, so)? {
        return Err(Error::NotStrongOrdering);
    }
    if g.edge_count() == 0 {
        return Err(Error::Precondition("decomposition needs at least one edge".into()));
    }
    let n = g.len();
    let mut covered = vec![false; n * n];
    let mut remaining = g.edge_count();
    let uncovered = |covered: &[bool], v: VertexId| g.neighbor_ids(v).iter().any(|&u| !covered[v * n + u]);
    let mut blocks_x = Vec::new();
    let mut blocks_y = Vec::new();
    while remaining > 0 {
        let last_x =
            so.x.iter()
                .rposition(|&x| uncovered(&covered, x))
                .ok_or(Error::NotStrongOrdering)?;
        let last_y =
            so.y.iter()
                .rposition(|&y| uncovered(&covered, y))
                .ok_or(Error::NotStrongOrdering)?;
        let bx = interval(&so.x[..=last_x], |x| g.has_edge(x, so.y[last_y]))?;
        let by = interval(&so.y[..=last_y], |y| g.has_edge(so.x[last_x], y))?;
        for &x in &so.x[bx.clone()] {
            for &y in &so.y[by.clone()] {
                if !g.has_edge(x, y) {
                    return Err(Error::NotStrongOrdering);
                }
                if !covered[x * n + y] {
                    covered[x * n + y] = true;
                    covered[y * n + x] = true;
                    remaining -= 1;
                }
            }
        }
        blocks_x.push(bx);
        blocks_y.push(by);
    }
    let decomposition = IntervalDecomposition {
        ordering: so.clone(),
        blocks_x,
        blocks_y,
    };
    decomposition.check_clauses(g).map_err(Error::Internal)?;
    Ok(decomposition)
}

/// Ranks of the members of `prefix` satisfying `keep`; they must form an
/// interval ending at the last rank.
fn interval(prefix: &[VertexId], keep: impl Fn(VertexId) -> bool) -> Result<Range<usize>> {
    let end = prefix.len();
    let start = prefix.iter().rposition(|&v| !keep(v)).map_or(0, |r| r + 1);
    if start == end || prefix[..start].iter().any(|&v| keep(v)) {
        return Err(Error::NotStrongOrdering);
    }
    Ok(start..end)
}
