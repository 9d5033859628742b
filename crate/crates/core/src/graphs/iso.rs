//! Backtracking isomorphism test with degree and neighborhood pruning.
//!
//! Not a canonical-form engine; intended for desk-scale fixtures and test
//! oracles.

use super::Graph;

/// Decides whether two graphs are isomorphic.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut deg_g: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    let mut deg_h: Vec<usize> = (0..n).map(|u| h.degree(u)).collect();
    {
        let mut a = deg_g.clone();
        let mut b = deg_h.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return false;
        }
    }
    deg_g.clear();
    deg_h.clear();

    // Assign G-vertices in descending degree order.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&u| (std::cmp::Reverse(g.degree(u)), u));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(g, h, &order, 0, &mut map, &mut used)
}

fn extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    'candidates: for w in 0..h.vertex_count() {
        if used[w] || g.degree(u) != h.degree(w) {
            continue;
        }
        for &prev in &order[..depth] {
            if g.has_edge(u, prev) != h.has_edge(w, map[prev]) {
                continue 'candidates;
            }
        }
        map[u] = w;
        used[w] = true;
        if extend(g, h, order, depth + 1, map, used) {
            return true;
        }
        map[u] = usize::MAX;
        used[w] = false;
    }
    false
}
