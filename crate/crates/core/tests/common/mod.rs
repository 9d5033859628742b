//! Brute-force oracles shared by the integration suites. Everything here is
//! deliberately naive: exhaustive subset scans, odometer enumeration, plain
//! row reduction. These paths stay independent of the library's search and
//! certificate code.

#![allow(dead_code)]

use num::traits::ToPrimitive;
use rand::Rng;

use srg_core::certs::ExactMatrix;
use srg_core::exactnum::QuadNum;
use srg_core::graphs::Graph;

/// Exhaustive maximum clique by scanning all vertex subsets (n <= 24).
pub fn brute_max_clique(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 24, "subset oracle limited to 24 vertices");
    let mut best = 0;
    for mask in 0u32..(1u32 << n) {
        if (mask.count_ones() as usize) <= best {
            continue;
        }
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if is_clique(g, &verts) {
            best = verts.len();
        }
    }
    best
}

pub fn brute_max_coclique(g: &Graph) -> usize {
    brute_max_clique(&g.complement())
}

pub fn is_clique(g: &Graph, verts: &[usize]) -> bool {
    verts
        .iter()
        .enumerate()
        .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

pub fn is_coclique(g: &Graph, verts: &[usize]) -> bool {
    verts
        .iter()
        .enumerate()
        .all(|(i, &u)| verts[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
}

/// All cocliques of exactly the given size, as sorted vertex lists.
pub fn all_cocliques_of_size(g: &Graph, size: usize) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    assert!(n <= 24);
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as usize != size {
            continue;
        }
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if is_coclique(g, &verts) {
            out.push(verts);
        }
    }
    out
}

/// Exhaustive chromatic number: smallest k admitting a proper coloring,
/// found by plain backtracking with first-use symmetry breaking.
pub fn brute_chromatic(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        if exists_coloring(g, k) {
            return k;
        }
    }
    unreachable!("n colors always suffice")
}

fn exists_coloring(g: &Graph, k: usize) -> bool {
    fn go(g: &Graph, k: usize, colors: &mut Vec<usize>, v: usize, max_used: usize) -> bool {
        if v == g.vertex_count() {
            return true;
        }
        for c in 0..k.min(max_used + 1) {
            let ok = g.neighbors(v).iter().all(|u| u >= v || colors[u] != c);
            if ok {
                colors[v] = c;
                if go(g, k, colors, v + 1, max_used.max(c + 1)) {
                    return true;
                }
            }
        }
        false
    }
    let mut colors = vec![usize::MAX; g.vertex_count()];
    go(g, k, &mut colors, 0, 0)
}

/// Counts labeled proper k-colorings by exhaustive backtracking (no
/// symmetry breaking: colorings differing by a color permutation count
/// separately).
pub fn count_labeled_colorings(g: &Graph, k: usize) -> u64 {
    fn go(g: &Graph, k: usize, colors: &mut Vec<usize>, v: usize) -> u64 {
        if v == g.vertex_count() {
            return 1;
        }
        let mut total = 0;
        for c in 0..k {
            let ok = g.neighbors(v).iter().all(|u| u >= v || colors[u] != c);
            if ok {
                colors[v] = c;
                total += go(g, k, colors, v + 1);
            }
        }
        total
    }
    let mut colors = vec![usize::MAX; g.vertex_count()];
    go(g, k, &mut colors, 0)
}

/// All proper k-colorings as canonical partitions (classes sorted by their
/// minimum vertex), deduplicated up to color relabeling.
pub fn all_coloring_partitions(g: &Graph, k: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(
        g: &Graph,
        k: usize,
        colors: &mut Vec<usize>,
        v: usize,
        max_used: usize,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if v == g.vertex_count() {
            let mut classes = vec![Vec::new(); max_used];
            for (vert, &c) in colors.iter().enumerate() {
                classes[c].push(vert);
            }
            out.push(classes);
            return;
        }
        // First-use order makes each partition appear exactly once.
        for c in 0..k.min(max_used + 1) {
            let ok = g.neighbors(v).iter().all(|u| u >= v || colors[u] != c);
            if ok {
                colors[v] = c;
                go(g, k, colors, v + 1, max_used.max(c + 1), out);
            }
        }
    }
    let mut colors = vec![usize::MAX; g.vertex_count()];
    let mut out = Vec::new();
    go(g, k, &mut colors, 0, 0, &mut out);
    out
}

/// Exact matrix rank by fraction-free row reduction over the quadratic
/// field.
#[allow(clippy::needless_range_loop)]
pub fn exact_rank(m: &ExactMatrix) -> usize {
    let n = m.size();
    let mut rows: Vec<Vec<QuadNum>> = (0..n)
        .map(|i| (0..n).map(|j| m.at(i, j).clone()).collect())
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot_row) = (rank..n).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][col].clone();
        for r in (rank + 1)..n {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &pivot;
            for c in col..n {
                let delta = &factor * &rows[rank][c];
                rows[r][c] = &rows[r][c] - &delta;
            }
        }
        rank += 1;
    }
    rank
}

/// Minimum eigenvalue by floating-point symmetric eigendecomposition; used
/// only to cross-check exact NotPSD verdicts.
pub fn float_min_eigenvalue(m: &ExactMatrix) -> f64 {
    let n = m.size();
    let data: Vec<f64> = (0..n)
        .flat_map(|i| (0..n).map(move |j| quad_to_f64(m.at(i, j))))
        .collect();
    let mat = nalgebra::DMatrix::from_row_slice(n, n, &data);
    let eigs = mat.symmetric_eigenvalues();
    eigs.iter().cloned().fold(f64::INFINITY, f64::min)
}

pub fn quad_to_f64(q: &QuadNum) -> f64 {
    let a = q.rational_part().to_f64().expect("small rational");
    let b = q.sqrt_coeff().to_f64().expect("small rational");
    a + b * (q.field() as f64).sqrt()
}

/// Erdos-Renyi graph from a seeded RNG.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}
