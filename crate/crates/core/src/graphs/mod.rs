//! Simple undirected graphs with bitset adjacency rows, plus combinatorial
//! verification of strong regularity and second-neighborhood structure.

mod graph6;
mod iso;

pub use graph6::{encode_graph6, parse_graph6, parse_graph6_lines, Graph6Error};
pub use iso::are_isomorphic;

use crate::bitset::BitSet;
use crate::params::SrgParams;

/// Hard cap on vertex count; certificate matrices and solvers target
/// desk-scale instances.
pub const MAX_VERTICES: usize = 10_000;

/// A simple undirected graph; row `u` of `adj` is the neighborhood of `u`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES, "graph too large: {n} vertices");
        Graph {
            n,
            adj: vec![BitSet::new(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u},{v})");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count()
    }

    pub fn neighbors(&self, u: usize) -> &BitSet {
        &self.adj[u]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        self.adj[u].intersection_count(&self.adj[v])
    }

    /// Edge `uv` present iff absent here (u != v).
    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Subgraph induced on `keep`, with vertices renumbered in ascending order.
    pub fn induced(&self, keep: &BitSet) -> Graph {
        let verts: Vec<usize> = keep.iter().collect();
        let mut g = Graph::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut reached = BitSet::new(self.n);
        let mut stack = vec![0];
        reached.insert(0);
        while let Some(u) = stack.pop() {
            for v in self.adj[u].iter() {
                if !reached.contains(v) {
                    reached.insert(v);
                    stack.push(v);
                }
            }
        }
        reached.count() == self.n
    }

    /// Connectivity of the subgraph induced on `subset` (empty sets count as
    /// connected).
    pub fn connected_on(&self, subset: &BitSet) -> bool {
        let Some(start) = subset.first() else {
            return true;
        };
        let mut reached = BitSet::new(self.n);
        let mut stack = vec![start];
        reached.insert(start);
        while let Some(u) = stack.pop() {
            let mut nbrs = self.adj[u].clone();
            nbrs.intersect_with(subset);
            for v in nbrs.iter() {
                if !reached.contains(v) {
                    reached.insert(v);
                    stack.push(v);
                }
            }
        }
        reached.count() == subset.count()
    }

    /// Vertices at distance exactly two from `v`.
    pub fn second_neighborhood(&self, v: usize) -> BitSet {
        assert!(v < self.n);
        let mut reach = BitSet::new(self.n);
        for u in self.adj[v].iter() {
            reach.union_with(&self.adj[u]);
        }
        reach.subtract(&self.adj[v]);
        reach.remove(v);
        reach
    }

    /// For each vertex, whether the subgraph induced by its second
    /// neighborhood is connected.
    pub fn check_n2_connected(&self) -> Vec<bool> {
        (0..self.n)
            .map(|v| self.connected_on(&self.second_neighborhood(v)))
            .collect()
    }

    /// Checks regularity and the common-neighbor counts defining strong
    /// regularity; failures carry a witness pair.
    pub fn verify_srg(&self) -> SrgCheckReport {
        let n = self.n;
        if n == 0 {
            return SrgCheckReport {
                params: None,
                primitive: false,
                failure: Some(SrgFailure::TooSmall),
            };
        }
        let k = self.degree(0);
        for u in 1..n {
            let d = self.degree(u);
            if d != k {
                return SrgCheckReport {
                    params: None,
                    primitive: false,
                    failure: Some(SrgFailure::NotRegular {
                        u: 0,
                        degree_u: k,
                        v: u,
                        degree_v: d,
                    }),
                };
            }
        }
        let mut lambda: Option<usize> = None;
        let mut mu: Option<usize> = None;
        for u in 0..n {
            for v in (u + 1)..n {
                let c = self.common_neighbor_count(u, v);
                let slot = if self.has_edge(u, v) {
                    &mut lambda
                } else {
                    &mut mu
                };
                match slot {
                    None => *slot = Some(c),
                    Some(expected) if *expected != c => {
                        return SrgCheckReport {
                            params: None,
                            primitive: false,
                            failure: Some(SrgFailure::CommonNeighborMismatch {
                                u,
                                v,
                                adjacent: self.has_edge(u, v),
                                expected: *expected,
                                observed: c,
                            }),
                        };
                    }
                    _ => {}
                }
            }
        }
        let params = SrgParams::new(
            n as u32,
            k as u32,
            lambda.unwrap_or(0) as u32,
            mu.unwrap_or(0) as u32,
        );
        let primitive =
            params.is_primitive() && self.is_connected() && self.complement().is_connected();
        SrgCheckReport {
            params: Some(params),
            primitive,
            failure: None,
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

/// Result of the strong-regularity check. `params` is present exactly when
/// the graph is strongly regular; otherwise `failure` holds a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SrgCheckReport {
    pub params: Option<SrgParams>,
    pub primitive: bool,
    pub failure: Option<SrgFailure>,
}

impl SrgCheckReport {
    pub fn is_srg(&self) -> bool {
        self.params.is_some()
    }

    pub fn primitive_params(&self) -> Option<SrgParams> {
        if self.primitive {
            self.params
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SrgFailure {
    TooSmall,
    NotRegular {
        u: usize,
        degree_u: usize,
        v: usize,
        degree_v: usize,
    },
    CommonNeighborMismatch {
        u: usize,
        v: usize,
        adjacent: bool,
        expected: usize,
        observed: usize,
    },
}

impl std::fmt::Display for SrgFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SrgFailure::TooSmall => write!(f, "graph has no vertices"),
            SrgFailure::NotRegular {
                u,
                degree_u,
                v,
                degree_v,
            } => write!(
                f,
                "not regular: deg({u}) = {degree_u} but deg({v}) = {degree_v}"
            ),
            SrgFailure::CommonNeighborMismatch {
                u,
                v,
                adjacent,
                expected,
                observed,
            } => write!(
                f,
                "{} pair ({u},{v}) has {observed} common neighbors, expected {expected}",
                if *adjacent {
                    "adjacent"
                } else {
                    "non-adjacent"
                }
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Brute-force common-neighbor count by scanning all vertices.
    fn naive_common(g: &Graph, u: usize, v: usize) -> usize {
        (0..g.vertex_count())
            .filter(|&w| g.has_edge(u, w) && g.has_edge(v, w))
            .count()
    }

    #[test]
    fn petersen_is_a_primitive_srg() {
        let g = fixtures::petersen();
        let report = g.verify_srg();
        assert!(report.is_srg());
        assert!(report.primitive);
        assert_eq!(report.params, Some(SrgParams::new(10, 3, 0, 1)));
        // Cross-check the counts the report is based on.
        for u in 0..10 {
            for v in (u + 1)..10 {
                let expected = if g.has_edge(u, v) { 0 } else { 1 };
                assert_eq!(naive_common(&g, u, v), expected);
            }
        }
    }

    #[test]
    fn complete_graph_is_imprimitive() {
        let report = complete(4).verify_srg();
        assert!(report.is_srg());
        assert!(!report.primitive);
    }

    #[test]
    fn hexagon_is_not_an_srg() {
        let report = cycle(6).verify_srg();
        assert!(!report.is_srg());
        match report.failure {
            Some(SrgFailure::CommonNeighborMismatch {
                adjacent: false, ..
            }) => {}
            other => panic!("expected a non-adjacent witness, got {other:?}"),
        }
    }

    #[test]
    fn disjoint_cliques_are_an_imprimitive_srg() {
        let mut g = Graph::new(8);
        for base in [0, 4] {
            for u in 0..4 {
                for v in (u + 1)..4 {
                    g.add_edge(base + u, base + v);
                }
            }
        }
        let report = g.verify_srg();
        assert!(report.is_srg());
        assert!(!report.primitive);
        assert_eq!(report.params, Some(SrgParams::new(8, 3, 2, 0)));
    }

    #[test]
    fn complement_is_an_involution() {
        let g = fixtures::petersen();
        assert_eq!(g.complement().complement(), g);
        assert_eq!(complete(4).complement().edge_count(), 0);
    }

    #[test]
    fn pentagon_is_self_complementary() {
        let c5 = cycle(5);
        assert!(are_isomorphic(&c5, &c5.complement()));
    }

    #[test]
    fn second_neighborhood_matches_bfs() {
        let bfs_n2 = |g: &Graph, v: usize| -> Vec<usize> {
            let n = g.vertex_count();
            let mut dist = vec![usize::MAX; n];
            dist[v] = 0;
            let mut queue = std::collections::VecDeque::from([v]);
            while let Some(u) = queue.pop_front() {
                for w in g.neighbors(u).iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            (0..n).filter(|&w| dist[w] == 2).collect()
        };
        let g = fixtures::petersen();
        for v in 0..10 {
            let n2: Vec<usize> = g.second_neighborhood(v).iter().collect();
            assert_eq!(n2, bfs_n2(&g, v));
            assert_eq!(n2.len(), 6);
        }
        let k4 = complete(4);
        assert!(k4.second_neighborhood(0).is_empty());
        let c5 = cycle(5);
        for v in 0..5 {
            assert_eq!(c5.second_neighborhood(v).count(), 2);
        }
    }

    #[test]
    fn petersen_second_neighborhoods_are_hexagons() {
        let g = fixtures::petersen();
        assert!(g.check_n2_connected().iter().all(|&ok| ok));
        for v in 0..10 {
            let sub = g.induced(&g.second_neighborhood(v));
            assert!(are_isomorphic(&sub, &cycle(6)));
        }
    }

    #[test]
    fn shrikhande_second_neighborhoods_connected() {
        let g = fixtures::shrikhande();
        assert!(g.check_n2_connected().iter().all(|&ok| ok));
    }

    #[test]
    fn star_leaves_have_disconnected_second_neighborhoods() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let flags = star.check_n2_connected();
        assert!(flags[0]); // center: empty N2
        assert!(!flags[1] && !flags[2] && !flags[3]);
    }

    #[test]
    fn complement_parameters_follow_the_formulas() {
        for g in [fixtures::petersen(), fixtures::rook4(), fixtures::clebsch()] {
            let p = g.verify_srg().params.unwrap();
            let comp_report = g.complement().verify_srg();
            let observed = comp_report.params.unwrap();
            let (n, k, l, m) = (p.n as i64, p.k as i64, p.lambda as i64, p.mu as i64);
            assert_eq!(observed.n, p.n);
            assert_eq!(observed.k as i64, n - k - 1);
            assert_eq!(observed.lambda as i64, n - 2 * k - 2 + m);
            assert_eq!(observed.mu as i64, n - 2 * k + l);
        }
    }
}
