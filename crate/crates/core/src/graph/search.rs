//! Exact backtracking searches for small graphs.

use super::{BipartiteGraph, Label, Limits, VertexId};
use crate::error::Result;

/// Finds an adjacency preserving bijection from `g1` onto `g2`, returned as
/// `map[v1] = v2`. Parts are ignored, so part-respecting and part-swapping
/// bijections (per component) are both found.
pub fn isomorphism<L: Label, M: Label>(
    g1: &BipartiteGraph<L>,
    g2: &BipartiteGraph<M>,
    limits: &Limits,
) -> Result<Option<Vec<VertexId>>> {
    Limits::check(limits.isomorphism, "isomorphism search", g1.len().max(g2.len()))?;
    if g1.len() != g2.len() || g1.edge_count() != g2.edge_count() || g1.degree_sequence() != g2.degree_sequence() {
        return Ok(None);
    }
    let n = g1.len();
    // Visit g1 in BFS order from high-degree roots so each new vertex has
    // already-mapped neighbours to constrain it.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut roots: Vec<VertexId> = (0..n).collect();
    roots.sort_by_key(|&v| std::cmp::Reverse(g1.degree(v)));
    for root in roots {
        if placed[root] {
            continue;
        }
        placed[root] = true;
        let start = order.len();
        order.push(root);
        let mut head = start;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &v in g1.neighbor_ids(u) {
                if !placed[v] {
                    placed[v] = true;
                    order.push(v);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(g1, g2, &order, 0, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

fn extend<L: Label, M: Label>(
    g1: &BipartiteGraph<L>,
    g2: &BipartiteGraph<M>,
    order: &[VertexId],
    depth: usize,
    map: &mut [VertexId],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..g2.len() {
        if used[w] || g2.degree(w) != g1.degree(v) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g1.has_edge(u, v) == g2.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(g1, g2, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    map[v] = usize::MAX;
    false
}

pub fn are_isomorphic<L: Label, M: Label>(
    g1: &BipartiteGraph<L>,
    g2: &BipartiteGraph<M>,
    limits: &Limits,
) -> Result<bool> {
    Ok(isomorphism(g1, g2, limits)?.is_some())
}

/// A Hamiltonian cycle as a vertex sequence (first vertex not repeated).
pub fn hamiltonian_cycle<L: Label>(g: &BipartiteGraph<L>, limits: &Limits) -> Result<Option<Vec<VertexId>>> {
    Limits::check(limits.hamiltonian, "hamiltonian cycle search", g.len())?;
    let n = g.len();
    if n < 4 || g.x_len() != g.y_len() || (0..n).any(|v| g.degree(v) < 2) || !g.is_connected() {
        return Ok(None);
    }
    let mut path = vec![0];
    let mut visited = vec![false; n];
    visited[0] = true;
    if grow_cycle(g, &mut path, &mut visited) {
        Ok(Some(path))
    } else {
        Ok(None)
    }
}

fn grow_cycle<L: Label>(g: &BipartiteGraph<L>, path: &mut Vec<VertexId>, visited: &mut [bool]) -> bool {
    let last = *path.last().expect("path starts with the root");
    if path.len() == g.len() {
        return g.has_edge(last, path[0]);
    }
    for &next in g.neighbor_ids(last) {
        if visited[next] {
            continue;
        }
        visited[next] = true;
        path.push(next);
        if grow_cycle(g, path, visited) {
            return true;
        }
        path.pop();
        visited[next] = false;
    }
    false
}

pub fn has_hamiltonian_cycle<L: Label>(g: &BipartiteGraph<L>, limits: &Limits) -> Result<bool> {
    Ok(hamiltonian_cycle(g, limits)?.is_some())
}

/// True iff every cycle of length at least six has at least two chords.
///
/// Each simple cycle is visited once: it is rooted at its smallest vertex and
/// only one of its two traversal directions is accepted.
pub fn is_62_chordal<L: Label>(g: &BipartiteGraph<L>, limits: &Limits) -> Result<bool> {
    Limits::check(limits.cycles, "cycle enumeration", g.len())?;
    let n = g.len();
    let mut on_path = vec![false; n];
    for root in 0..n {
        let mut path = vec![root];
        on_path[root] = true;
        let ok = cycles_have_chords(g, root, &mut path, &mut on_path);
        on_path[root] = false;
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

fn cycles_have_chords<L: Label>(
    g: &BipartiteGraph<L>,
    root: VertexId,
    path: &mut Vec<VertexId>,
    on_path: &mut [bool],
) -> bool {
    let last = *path.last().expect("nonempty path");
    for &next in g.neighbor_ids(last) {
        if next == root && path.len() >= 6 && path[1] < last && chord_count(g, path) < 2 {
            return false;
        }
        if next <= root || on_path[next] {
            continue;
        }
        on_path[next] = true;
        path.push(next);
        let ok = cycles_have_chords(g, root, path, on_path);
        path.pop();
        on_path[next] = false;
        if !ok {
            return false;
        }
    }
    true
}

fn chord_count<L: Label>(g: &BipartiteGraph<L>, cycle: &[VertexId]) -> usize {
    let k = cycle.len();
    let mut chords = 0;
    for i in 0..k {
        for j in i + 2..k {
            if i == 0 && j == k - 1 {
                continue;
            }
            if g.has_edge(cycle[i], cycle[j]) {
                chords += 1;
            }
        }
    }
    chords
}
