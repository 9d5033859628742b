//! Exact maximum clique, maximum coclique, chromatic number, and
//! Hoffman-coloring recognition and enumeration.
//!
//! Branch and bound on bitset candidate sets with greedy-coloring upper
//! bounds; chromatic number by iterative-deepening k-colorability with
//! DSATUR-ordered backtracking and clique seeding. All tie-breaking is by
//! lowest index, so results are deterministic. Budgets are node counts, not
//! wall clock.

use num::traits::ToPrimitive;
use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::exactnum::QuadNum;
use crate::graphs::Graph;
use crate::params::{self, SrgParams};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolverError {
    #[error("node budget exhausted after {explored} nodes; bounds [{lower}, {upper}]")]
    Budget {
        explored: u64,
        lower: usize,
        upper: usize,
    },
    #[error("classes do not partition the vertex set: {reason}")]
    NotPartition { reason: String },
    #[error("Hoffman bound {bound} is not an integer; no Hoffman colorings exist")]
    NonIntegerBound { bound: String },
    #[error("graph is not a primitive strongly regular graph")]
    NotPrimitiveSrg,
}

/// An exact maximum clique (or coclique) with its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueResult {
    pub size: usize,
    pub witness: Vec<usize>,
    /// For strongly regular graphs: does the size meet the spectral bound
    /// exactly (Hoffman bound for cliques, ratio bound for cocliques)?
    pub is_delsarte: bool,
}

/// An exact chromatic number with a witnessing partition into color classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringResult {
    pub chromatic: usize,
    pub classes: Vec<Vec<usize>>,
    /// Does the class count meet the Hoffman bound exactly?
    pub is_hoffman: bool,
}

struct NodeBudget {
    used: u64,
    limit: u64,
}

impl NodeBudget {
    fn new(limit: u64) -> NodeBudget {
        NodeBudget { used: 0, limit }
    }

    #[inline]
    fn tick(&mut self) -> bool {
        self.used += 1;
        self.used <= self.limit
    }
}

/// Exact spectral context when the input is strongly regular.
fn srg_bound_context(g: &Graph) -> Option<(SrgParams, QuadNum)> {
    let report = g.verify_srg();
    let p = report.params?;
    let bound = params::hoffman_bound(&p).ok()?;
    Some((p, bound))
}

/// Exact maximum clique via branch and bound.
pub fn max_clique(g: &Graph, budget: u64) -> Result<CliqueResult, SolverError> {
    max_clique_with(g, budget, false)
}

/// Exact maximum clique; `parallel` fans the first branching level out
/// across the rayon pool (each branch gets the full node budget, and results
/// merge in branch order, so output does not depend on the thread count).
pub fn max_clique_with(
    g: &Graph,
    budget: u64,
    parallel: bool,
) -> Result<CliqueResult, SolverError> {
    let n = g.vertex_count();
    let srg = srg_bound_context(g);
    // For SRGs the search can stop as soon as the Hoffman bound is attained.
    let cutoff = srg
        .as_ref()
        .map(|(_, bound)| bound.floor().to_usize().unwrap_or(n));
    let outcome = if n == 0 {
        Ok((0, Vec::new()))
    } else if parallel {
        parallel_clique(g, budget, cutoff)
    } else {
        let mut search = CliqueSearch {
            g,
            best: 0,
            best_set: Vec::new(),
            budget: NodeBudget::new(budget),
            cutoff,
        };
        let all = BitSet::full(n);
        let mut current = Vec::new();
        match search.expand(&all, &mut current) {
            Ok(()) => Ok((search.best, search.best_set)),
            Err(()) => Err((search.budget.used, search.best, upper_estimate(g, &srg))),
        }
    };
    match outcome {
        Ok((size, mut witness)) => {
            witness.sort_unstable();
            debug_assert!(is_clique(g, &witness));
            let is_delsarte = srg
                .map(|(_, bound)| QuadNum::from_int(size as i64) == bound)
                .unwrap_or(false);
            Ok(CliqueResult {
                size,
                witness,
                is_delsarte,
            })
        }
        Err((explored, lower, upper)) => Err(SolverError::Budget {
            explored,
            lower,
            upper,
        }),
    }
}

fn is_clique(g: &Graph, verts: &[usize]) -> bool {
    verts
        .iter()
        .enumerate()
        .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Upper bound used in budget-exhaustion reports: greedy coloring of the
/// whole graph, sharpened by the Hoffman bound for SRGs.
fn upper_estimate(g: &Graph, srg: &Option<(SrgParams, QuadNum)>) -> usize {
    let greedy = greedy_color_count(g);
    match srg {
        Some((_, bound)) => greedy.min(bound.floor().to_usize().unwrap_or(greedy)),
        None => greedy,
    }
}

fn greedy_color_count(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut color = vec![usize::MAX; n];
    let mut max_used = 0;
    for v in 0..n {
        let mut taken = vec![false; max_used + 2];
        for u in g.neighbors(v).iter() {
            if color[u] != usize::MAX && color[u] < taken.len() {
                taken[color[u]] = true;
            }
        }
        let c = (0..)
            .find(|&c| !taken.get(c).copied().unwrap_or(false))
            .unwrap();
        color[v] = c;
        max_used = max_used.max(c + 1);
    }
    max_used
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    best: usize,
    best_set: Vec<usize>,
    budget: NodeBudget,
    cutoff: Option<usize>,
}

impl CliqueSearch<'_> {
    /// Tomita-style expansion: greedy-color the candidates, then branch in
    /// descending color order, pruning on `|Q| + color <= best`.
    fn expand(&mut self, cand: &BitSet, current: &mut Vec<usize>) -> Result<(), ()> {
        if !self.budget.tick() {
            return Err(());
        }
        if let Some(cut) = self.cutoff {
            if self.best >= cut {
                return Ok(());
            }
        }
        if cand.is_empty() {
            if current.len() > self.best {
                self.best = current.len();
                self.best_set = current.clone();
            }
            return Ok(());
        }
        // Greedy coloring of the candidate set in index order.
        let verts: Vec<usize> = cand.iter().collect();
        let mut classes: Vec<BitSet> = Vec::new();
        let mut color_of = vec![0usize; verts.len()];
        for (i, &v) in verts.iter().enumerate() {
            let slot = classes
                .iter()
                .position(|class| !class.intersects(self.g.neighbors(v)));
            match slot {
                Some(c) => {
                    classes[c].insert(v);
                    color_of[i] = c + 1;
                }
                None => {
                    let mut class = BitSet::new(self.g.vertex_count());
                    class.insert(v);
                    classes.push(class);
                    color_of[i] = classes.len();
                }
            }
        }
        let mut order: Vec<(usize, usize)> = verts
            .iter()
            .copied()
            .zip(color_of.iter().copied())
            .collect();
        order.sort_by_key(|&(v, c)| (c, v));
        let mut remaining = cand.clone();
        for &(v, color) in order.iter().rev() {
            if current.len() + color <= self.best {
                return Ok(()); // all remaining have smaller color bounds
            }
            let mut next = remaining.clone();
            next.intersect_with(self.g.neighbors(v));
            current.push(v);
            self.expand(&next, current)?;
            current.pop();
            remaining.remove(v);
            if let Some(cut) = self.cutoff {
                if self.best >= cut {
                    return Ok(());
                }
            }
        }
        Ok(())
    }
}

/// First-level parallel clique search: one task per root vertex `v`,
/// covering the cliques whose minimum vertex is `v`. Each branch runs with
/// its own node budget and the results merge in vertex order, so the output
/// does not depend on the rayon thread count.
#[allow(clippy::type_complexity)]
fn parallel_clique(
    g: &Graph,
    budget: u64,
    cutoff: Option<usize>,
) -> Result<(usize, Vec<usize>), (u64, usize, usize)> {
    let n = g.vertex_count();
    let branches: Vec<Result<(usize, Vec<usize>), u64>> = (0..n)
        .into_par_iter()
        .map(|v| {
            let mut cand = BitSet::new(n);
            for u in (v + 1)..n {
                cand.insert(u);
            }
            cand.intersect_with(g.neighbors(v));
            let mut search = CliqueSearch {
                g,
                best: 0,
                best_set: Vec::new(),
                budget: NodeBudget::new(budget),
                cutoff,
            };
            let mut current = vec![v];
            match search.expand(&cand, &mut current) {
                Ok(()) => Ok((search.best, search.best_set)),
                Err(()) => Err(search.budget.used),
            }
        })
        .collect();
    let mut best = 0usize;
    let mut best_set = Vec::new();
    let mut exhausted = 0u64;
    let mut any_exhausted = false;
    for branch in branches {
        match branch {
            Ok((size, set)) => {
                if size > best {
                    best = size;
                    best_set = set;
                }
            }
            Err(used) => {
                any_exhausted = true;
                exhausted += used;
            }
        }
    }
    if any_exhausted {
        Err((exhausted, best, n))
    } else {
        Ok((best, best_set))
    }
}

/// Exact maximum coclique: maximum clique of the complement. The Delsarte
/// flag compares against the ratio bound of the original graph.
pub fn max_coclique(g: &Graph, budget: u64) -> Result<CliqueResult, SolverError> {
    max_clique(&g.complement(), budget)
}

/// Exact chromatic number by iterative deepening on k-colorability.
pub fn chromatic_number(g: &Graph, budget: u64) -> Result<ColoringResult, SolverError> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(ColoringResult {
            chromatic: 0,
            classes: Vec::new(),
            is_hoffman: false,
        });
    }
    let srg = srg_bound_context(g);
    let mut budget = NodeBudget::new(budget);
    let clique = {
        let mut search = CliqueSearch {
            g,
            best: 0,
            best_set: Vec::new(),
            budget: NodeBudget::new(budget.limit / 2),
            cutoff: srg
                .as_ref()
                .map(|(_, bound)| bound.floor().to_usize().unwrap_or(n)),
        };
        let all = BitSet::full(n);
        let mut current = Vec::new();
        let r = search.expand(&all, &mut current);
        budget.used += search.budget.used;
        if r.is_err() {
            return Err(SolverError::Budget {
                explored: budget.used,
                lower: 1,
                upper: greedy_color_count(g),
            });
        }
        let mut w = search.best_set;
        w.sort_unstable();
        w
    };
    let mut lower = clique.len().max(1);
    if let Some((_, bound)) = &srg {
        lower = lower.max(bound.ceil().to_usize().unwrap_or(lower));
    }
    let upper = greedy_color_count(g).max(lower);
    for t in lower..=upper {
        match k_colorable(g, t, &clique, &mut budget) {
            Ok(Some(color)) => {
                let mut classes = vec![Vec::new(); t];
                for (v, &c) in color.iter().enumerate() {
                    classes[c].push(v);
                }
                classes.retain(|class| !class.is_empty());
                let is_hoffman = srg
                    .map(|(_, bound)| QuadNum::from_int(classes.len() as i64) == bound)
                    .unwrap_or(false);
                return Ok(ColoringResult {
                    chromatic: classes.len(),
                    classes,
                    is_hoffman,
                });
            }
            Ok(None) => {}
            Err(()) => {
                return Err(SolverError::Budget {
                    explored: budget.used,
                    lower: t,
                    upper,
                })
            }
        }
    }
    unreachable!("greedy coloring bounds the chromatic number from above")
}

/// DSATUR-ordered backtracking k-colorability with clique seeding.
/// `Ok(Some(colors))`, `Ok(None)` for a proof of non-colorability, `Err` on
/// budget exhaustion.
fn k_colorable(
    g: &Graph,
    t: usize,
    seed_clique: &[usize],
    budget: &mut NodeBudget,
) -> Result<Option<Vec<usize>>, ()> {
    let n = g.vertex_count();
    if seed_clique.len() > t {
        return Ok(None);
    }
    let mut color = vec![usize::MAX; n];
    // Any proper coloring assigns distinct colors to a clique, so fixing one
    // maximum clique loses no generality and breaks color symmetry.
    for (c, &v) in seed_clique.iter().enumerate() {
        color[v] = c;
    }
    let mut state = ColorState {
        g,
        t,
        color,
        max_used: seed_clique.len(),
    };
    match state.extend(budget) {
        Ok(true) => Ok(Some(state.color)),
        Ok(false) => Ok(None),
        Err(()) => Err(()),
    }
}

struct ColorState<'a> {
    g: &'a Graph,
    t: usize,
    color: Vec<usize>,
    max_used: usize,
}

impl ColorState<'_> {
    fn saturation(&self, v: usize) -> usize {
        let mut seen = vec![false; self.t];
        let mut count = 0;
        for u in self.g.neighbors(v).iter() {
            let c = self.color[u];
            if c != usize::MAX && !seen[c] {
                seen[c] = true;
                count += 1;
            }
        }
        count
    }

    #[allow(clippy::needless_range_loop)]
    fn extend(&mut self, budget: &mut NodeBudget) -> Result<bool, ()> {
        if !budget.tick() {
            return Err(());
        }
        // DSATUR choice: maximum saturation, lowest index on ties.
        let mut pick: Option<(usize, usize)> = None;
        for v in 0..self.g.vertex_count() {
            if self.color[v] != usize::MAX {
                continue;
            }
            let sat = self.saturation(v);
            if pick.map(|(s, _)| sat > s).unwrap_or(true) {
                pick = Some((sat, v));
            }
        }
        let Some((_, v)) = pick else {
            return Ok(true);
        };
        let mut forbidden = vec![false; self.t];
        for u in self.g.neighbors(v).iter() {
            if self.color[u] != usize::MAX {
                forbidden[self.color[u]] = true;
            }
        }
        let limit = self.t.min(self.max_used + 1);
        for c in 0..limit {
            if forbidden[c] {
                continue;
            }
            let prev_max = self.max_used;
            self.color[v] = c;
            self.max_used = self.max_used.max(c + 1);
            if self.extend(budget)? {
                return Ok(true);
            }
            self.color[v] = usize::MAX;
            self.max_used = prev_max;
        }
        Ok(false)
    }
}

/// Why a candidate partition fails to be a Hoffman coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HoffmanViolation {
    BoundNotInteger {
        bound: String,
    },
    WrongClassCount {
        expected: usize,
        got: usize,
    },
    ClassNotCoclique {
        class: usize,
        u: usize,
        v: usize,
    },
    ClassNotDelsarte {
        class: usize,
        size: usize,
        expected: usize,
    },
    NotEquitable {
        vertex: usize,
        class: usize,
        count: usize,
        expected: usize,
    },
}

/// Report of [`check_hoffman_coloring`]: valid, or the first violation found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoffmanReport {
    pub valid: bool,
    pub violation: Option<HoffmanViolation>,
}

impl HoffmanReport {
    fn fail(v: HoffmanViolation) -> HoffmanReport {
        HoffmanReport {
            valid: false,
            violation: Some(v),
        }
    }
}

/// Verifies that `classes` is a Hoffman coloring of a primitive strongly
/// regular graph: exactly `1 - k/tau` classes, every class a Delsarte
/// coclique, and the equitable condition that each vertex has exactly `-tau`
/// neighbors in every class other than its own.
#[allow(clippy::needless_range_loop)]
pub fn check_hoffman_coloring(
    g: &Graph,
    classes: &[Vec<usize>],
) -> Result<HoffmanReport, SolverError> {
    let report = g.verify_srg();
    let Some(p) = report.params.filter(|_| report.primitive) else {
        return Err(SolverError::NotPrimitiveSrg);
    };
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    for class in classes {
        for &v in class {
            if v >= n {
                return Err(SolverError::NotPartition {
                    reason: format!("vertex {v} out of range"),
                });
            }
            if seen[v] {
                return Err(SolverError::NotPartition {
                    reason: format!("vertex {v} appears twice"),
                });
            }
            seen[v] = true;
        }
    }
    if seen.iter().any(|&s| !s) {
        let missing = seen.iter().position(|&s| !s).unwrap();
        return Err(SolverError::NotPartition {
            reason: format!("vertex {missing} is uncovered"),
        });
    }

    let bound = params::hoffman_bound(&p).expect("verified SRG params are feasible");
    let Some(c) = bound.to_integer().and_then(|b| b.to_usize()) else {
        return Ok(HoffmanReport::fail(HoffmanViolation::BoundNotInteger {
            bound: bound.to_string(),
        }));
    };
    if classes.len() != c {
        return Ok(HoffmanReport::fail(HoffmanViolation::WrongClassCount {
            expected: c,
            got: classes.len(),
        }));
    }
    let spectrum = params::spectrum(&p).expect("feasible");
    let minus_tau = (-&spectrum.tau)
        .to_integer()
        .and_then(|t| t.to_usize())
        .expect("integer bound forces integral tau");
    let class_size = n / c;
    let mut membership = vec![usize::MAX; n];
    let mut class_sets: Vec<BitSet> = Vec::with_capacity(c);
    for (ci, class) in classes.iter().enumerate() {
        let mut set = BitSet::new(n);
        for &v in class {
            set.insert(v);
            membership[v] = ci;
        }
        class_sets.push(set);
    }
    for (ci, class) in classes.iter().enumerate() {
        for (i, &u) in class.iter().enumerate() {
            for &v in &class[i + 1..] {
                if g.has_edge(u, v) {
                    return Ok(HoffmanReport::fail(HoffmanViolation::ClassNotCoclique {
                        class: ci,
                        u,
                        v,
                    }));
                }
            }
        }
        if class.len() != class_size {
            return Ok(HoffmanReport::fail(HoffmanViolation::ClassNotDelsarte {
                class: ci,
                size: class.len(),
                expected: class_size,
            }));
        }
    }
    for v in 0..n {
        for (ci, set) in class_sets.iter().enumerate() {
            let count = g.neighbors(v).intersection_count(set);
            let expected = if membership[v] == ci { 0 } else { minus_tau };
            if count != expected {
                return Ok(HoffmanReport::fail(HoffmanViolation::NotEquitable {
                    vertex: v,
                    class: ci,
                    count,
                    expected,
                }));
            }
        }
    }
    Ok(HoffmanReport {
        valid: true,
        violation: None,
    })
}

/// Enumeration result: partitions in canonical (first-occurrence) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoffmanEnumeration {
    pub partitions: Vec<Vec<Vec<usize>>>,
    pub truncated: bool,
}

/// Enumerates every partition of the vertex set into `1 - k/tau` Delsarte
/// cocliques satisfying the equitable condition, up to class relabeling.
/// The backtracking enforces coclique-ness, class sizes, and the `-tau`
/// cross-degree cap during extension.
pub fn enumerate_hoffman_colorings(
    g: &Graph,
    limit: usize,
) -> Result<HoffmanEnumeration, SolverError> {
    let report = g.verify_srg();
    let Some(p) = report.params.filter(|_| report.primitive) else {
        return Err(SolverError::NotPrimitiveSrg);
    };
    let bound = params::hoffman_bound(&p).expect("verified SRG params are feasible");
    let Some(c) = bound.to_integer().and_then(|b| b.to_usize()) else {
        return Err(SolverError::NonIntegerBound {
            bound: bound.to_string(),
        });
    };
    let n = g.vertex_count();
    if c == 0 || !n.is_multiple_of(c) {
        return Err(SolverError::NonIntegerBound {
            bound: bound.to_string(),
        });
    }
    let spectrum = params::spectrum(&p).expect("feasible");
    let minus_tau = (-&spectrum.tau)
        .to_integer()
        .and_then(|t| t.to_usize())
        .expect("integer bound forces integral tau");
    let mut enumerator = HoffmanEnumerator {
        g,
        class_count: c,
        class_size: n / c,
        minus_tau,
        classes: Vec::new(),
        class_sets: Vec::new(),
        out: Vec::new(),
        limit,
        truncated: false,
    };
    enumerator.extend(0);
    // Each enumerated partition must pass the independent checker.
    for partition in &enumerator.out {
        let check = check_hoffman_coloring(g, partition)?;
        assert!(
            check.valid,
            "enumerated partition fails the Hoffman check: {:?}",
            check.violation
        );
    }
    Ok(HoffmanEnumeration {
        partitions: enumerator.out,
        truncated: enumerator.truncated,
    })
}

struct HoffmanEnumerator<'a> {
    g: &'a Graph,
    class_count: usize,
    class_size: usize,
    minus_tau: usize,
    classes: Vec<Vec<usize>>,
    class_sets: Vec<BitSet>,
    out: Vec<Vec<Vec<usize>>>,
    limit: usize,
    truncated: bool,
}

impl HoffmanEnumerator<'_> {
    fn extend(&mut self, v: usize) {
        if self.truncated {
            return;
        }
        let n = self.g.vertex_count();
        if v == n {
            if self.out.len() == self.limit {
                self.truncated = true;
                return;
            }
            self.out.push(self.classes.clone());
            return;
        }
        // Restricted growth: vertex v may join an existing class or open the
        // next one, which canonicalizes partitions up to relabeling.
        let open = self.classes.len();
        for ci in 0..open.min(self.class_count) {
            if self.admissible(v, ci) {
                self.classes[ci].push(v);
                self.class_sets[ci].insert(v);
                self.extend(v + 1);
                self.classes[ci].pop();
                self.class_sets[ci].remove(v);
            }
        }
        if open < self.class_count {
            self.classes.push(vec![v]);
            let mut set = BitSet::new(n);
            set.insert(v);
            self.class_sets.push(set);
            self.extend(v + 1);
            self.classes.pop();
            self.class_sets.pop();
        }
    }

    fn admissible(&self, v: usize, ci: usize) -> bool {
        if self.classes[ci].len() >= self.class_size {
            return false;
        }
        let nbrs = self.g.neighbors(v);
        if nbrs.intersects(&self.class_sets[ci]) {
            return false;
        }
        for (di, set) in self.class_sets.iter().enumerate() {
            if di == ci {
                continue;
            }
            let count = nbrs.intersection_count(set);
            let full = self.classes[di].len() == self.class_size;
            if count > self.minus_tau || (full && count != self.minus_tau) {
                return false;
            }
        }
        true
    }
}
