//! Homomorphism search and its consequences: classification of maps between
//! strongly regular graphs, machine verification that every homomorphism
//! between same-parameter primitive SRGs is an isomorphism or a coloring,
//! core testing, and hull computation.
//!
//! Two search modes exist for a reason: oracle mode makes no structural
//! assumptions (used when the classification theorem itself is under test),
//! while fast mode prunes using the fact that proper homomorphisms between
//! same-parameter SRGs are exactly the colorings.

use num::traits::ToPrimitive;

use crate::bitset::BitSet;
use crate::certs::{self, CertError};
use crate::exactnum::QuadNum;
use crate::graphs::Graph;
use crate::params;
use crate::solvers::{self, SolverError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomError {
    #[error("map is not a homomorphism: edge ({u},{v}) breaks under the map")]
    NotHomomorphism { u: usize, v: usize },
    #[error("node budget exhausted after {explored} nodes")]
    Budget { explored: u64 },
    #[error("counterexample to the classification theorem: {0:?}")]
    CounterexampleFound(Vec<usize>),
    #[error("fast and exhaustive core tests disagree")]
    PathsDisagree,
    #[error(transparent)]
    Cert(#[from] CertError),
    #[error(transparent)]
    Solver(#[from] SolverError),
}

/// Classification of a homomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HomKind {
    /// Injective and non-adjacency-preserving; between same-order graphs
    /// this is a full isomorphism.
    IsoOntoInducedSubgraph,
    /// The image is a clique.
    Coloring,
    Other,
}

/// A verified homomorphism with its classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hom {
    pub map: Vec<usize>,
    pub kind: HomKind,
}

impl Hom {
    /// Validates edge preservation and classifies the map.
    pub fn new(g: &Graph, h: &Graph, map: Vec<usize>) -> Result<Hom, HomError> {
        let kind = classify_hom(g, h, &map)?;
        Ok(Hom { map, kind })
    }

    /// The set of image vertices.
    pub fn image(&self, h: &Graph) -> BitSet {
        let mut img = BitSet::new(h.vertex_count());
        for &w in &self.map {
            img.insert(w);
        }
        img
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.map.iter().all(|&w| seen.insert(w))
    }
}

/// Classifies a vertex map `g -> h`, rejecting non-homomorphisms.
pub fn classify_hom(g: &Graph, h: &Graph, map: &[usize]) -> Result<HomKind, HomError> {
    assert_eq!(map.len(), g.vertex_count(), "map must be total on V(G)");
    for (u, v) in g.edges() {
        let (fu, fv) = (map[u], map[v]);
        if fu == fv || !h.has_edge(fu, fv) {
            return Err(HomError::NotHomomorphism { u, v });
        }
    }
    // Isomorphism onto an induced subgraph: injective and every distinct
    // non-adjacent pair stays non-adjacent.
    let n = g.vertex_count();
    let mut injective = true;
    let mut induced = true;
    'outer: for u in 0..n {
        for v in (u + 1)..n {
            if g.has_edge(u, v) {
                continue;
            }
            if map[u] == map[v] {
                injective = false;
                induced = false;
                break 'outer;
            }
            if h.has_edge(map[u], map[v]) {
                induced = false;
            }
        }
    }
    if injective && induced {
        return Ok(HomKind::IsoOntoInducedSubgraph);
    }
    // Coloring: image vertices pairwise adjacent.
    let image: Vec<usize> = {
        let mut img = BitSet::new(h.vertex_count());
        for &w in map {
            img.insert(w);
        }
        img.iter().collect()
    };
    let clique = image
        .iter()
        .enumerate()
        .all(|(i, &u)| image[i + 1..].iter().all(|&v| h.has_edge(u, v)));
    if clique {
        Ok(HomKind::Coloring)
    } else {
        Ok(HomKind::Other)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    First,
    Enumerate,
    Count,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// No structural assumptions; required by the theorem verifier.
    Oracle,
    /// Between primitive SRGs with equal parameters, restrict to
    /// isomorphisms plus clique-image maps.
    Fast,
}

/// Search outcome. `complete` is false when the node budget ran out, in
/// which case `homs`/`count` are partial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomSearchResult {
    pub homs: Vec<Hom>,
    pub count: u64,
    pub complete: bool,
    pub nodes: u64,
}

/// Backtracking homomorphism search with forward checking. Vertices are
/// assigned in max-degree-first order (index tiebreak); candidate sets are
/// pruned to common neighborhoods. Enumeration returns maps in
/// lexicographic order.
pub fn find_homs(
    g: &Graph,
    h: &Graph,
    mode: SearchMode,
    strategy: Strategy,
    budget: u64,
) -> Result<HomSearchResult, HomError> {
    match strategy {
        Strategy::Oracle => {
            let mut engine = SearchEngine::homs(g, h, budget);
            Ok(engine.run(g, h, mode))
        }
        Strategy::Fast => {
            let rg = g.verify_srg();
            let rh = h.verify_srg();
            let applies = match (rg.primitive_params(), rh.primitive_params()) {
                (Some(pg), Some(ph)) => pg == ph,
                _ => false,
            };
            if !applies {
                let mut engine = SearchEngine::homs(g, h, budget);
                return Ok(engine.run(g, h, mode));
            }
            // Isomorphisms first, then clique-image maps; results merge and
            // sort, so the split is invisible in the output.
            let mut iso_engine = SearchEngine::induced_embeddings(g, h, budget);
            let iso = iso_engine.run(g, h, mode);
            if mode == SearchMode::First && !iso.homs.is_empty() {
                return Ok(iso);
            }
            let remaining = budget.saturating_sub(iso.nodes);
            let mut col_engine = SearchEngine::clique_image(g, h, remaining);
            let col = col_engine.run(g, h, mode);
            let mut homs = iso.homs;
            homs.extend(col.homs);
            homs.sort_by(|a, b| a.map.cmp(&b.map));
            let complete = iso.complete && col.complete;
            Ok(HomSearchResult {
                count: iso.count + col.count,
                nodes: iso.nodes + col.nodes,
                homs,
                complete,
            })
        }
    }
}

/// Core backtracking engine. Modes differ only in the constraints imposed on
/// candidate sets during forward checking.
struct SearchEngine {
    order: Vec<usize>,
    /// Candidate images per source vertex.
    domains: Vec<BitSet>,
    /// Require every pair of images adjacent-or-equal (coloring search).
    clique_image: bool,
    /// Require injectivity and non-adjacency preservation (isomorphism onto
    /// an induced subgraph).
    induced: bool,
    /// Force map[a] = map[b].
    forced: Option<(usize, usize)>,
    budget: u64,
    nodes: u64,
}

impl SearchEngine {
    fn homs(g: &Graph, h: &Graph, budget: u64) -> SearchEngine {
        SearchEngine::new(g, h, budget, false, false, None)
    }

    fn clique_image(g: &Graph, h: &Graph, budget: u64) -> SearchEngine {
        SearchEngine::new(g, h, budget, true, false, None)
    }

    fn induced_embeddings(g: &Graph, h: &Graph, budget: u64) -> SearchEngine {
        SearchEngine::new(g, h, budget, false, true, None)
    }

    fn identifying(g: &Graph, h: &Graph, budget: u64, pair: (usize, usize)) -> SearchEngine {
        SearchEngine::new(g, h, budget, false, false, Some(pair))
    }

    fn new(
        g: &Graph,
        h: &Graph,
        budget: u64,
        clique_image: bool,
        induced: bool,
        forced: Option<(usize, usize)>,
    ) -> SearchEngine {
        let n = g.vertex_count();
        let hn = h.vertex_count();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&u| (std::cmp::Reverse(g.degree(u)), u));
        if let Some((a, b)) = forced {
            // Identified pair first so the equality constraint binds early.
            order.retain(|&u| u != a && u != b);
            order.insert(0, b);
            order.insert(0, a);
        }
        let same_size = n == hn;
        let domains = (0..n)
            .map(|u| {
                let mut dom = BitSet::new(hn);
                for w in 0..hn {
                    let ok = if induced {
                        if same_size {
                            h.degree(w) == g.degree(u)
                        } else {
                            h.degree(w) >= g.degree(u)
                        }
                    } else {
                        true
                    };
                    if ok {
                        dom.insert(w);
                    }
                }
                dom
            })
            .collect();
        SearchEngine {
            order,
            domains,
            clique_image,
            induced,
            forced,
            budget,
            nodes: 0,
        }
    }

    fn run(&mut self, g: &Graph, h: &Graph, mode: SearchMode) -> HomSearchResult {
        let mut state = SearchState {
            map: vec![usize::MAX; g.vertex_count()],
            domains: self.domains.clone(),
            homs: Vec::new(),
            count: 0,
            mode,
            complete: true,
        };
        if g.vertex_count() == 0 {
            // The empty map is the unique homomorphism.
            state.count = 1;
            if mode != SearchMode::Count {
                state.homs.push(Hom {
                    map: Vec::new(),
                    kind: HomKind::IsoOntoInducedSubgraph,
                });
            }
        } else {
            self.extend(g, h, 0, &mut state);
        }
        if mode == SearchMode::Enumerate {
            state.homs.sort_by(|a, b| a.map.cmp(&b.map));
        }
        HomSearchResult {
            homs: state.homs,
            count: state.count,
            complete: state.complete,
            nodes: self.nodes,
        }
    }

    /// Returns true to keep searching, false to stop (budget or first-found).
    fn extend(&mut self, g: &Graph, h: &Graph, depth: usize, state: &mut SearchState) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            state.complete = false;
            return false;
        }
        if depth == self.order.len() {
            state.count += 1;
            if state.mode != SearchMode::Count {
                let kind = classify_hom(g, h, &state.map).expect("search yields homomorphisms");
                state.homs.push(Hom {
                    map: state.map.clone(),
                    kind,
                });
            }
            return state.mode != SearchMode::First;
        }
        let u = self.order[depth];
        let mut cands = state.domains[u].clone();
        if let Some((a, b)) = self.forced {
            if u == b {
                // Identification constraint: map[b] must equal map[a].
                let target = state.map[a];
                let keep = cands.contains(target);
                cands.clear();
                if keep {
                    cands.insert(target);
                }
            }
        }
        for w in cands.iter() {
            state.map[u] = w;
            let saved = self.propagate(g, h, u, w, state, depth);
            if let Some(saved_domains) = saved {
                if !self.extend(g, h, depth + 1, state) {
                    state.map[u] = usize::MAX;
                    return false;
                }
                state.restore(saved_domains);
            }
            state.map[u] = usize::MAX;
        }
        true
    }

    /// Forward checking: narrows unassigned domains after `u -> w`; returns
    /// the saved domains for undo, or None when some domain empties.
    fn propagate(
        &self,
        g: &Graph,
        h: &Graph,
        u: usize,
        w: usize,
        state: &mut SearchState,
        depth: usize,
    ) -> Option<Vec<(usize, BitSet)>> {
        let mut saved = Vec::new();
        for &x in &self.order[depth + 1..] {
            let mut dom = state.domains[x].clone();
            let before = dom.count();
            if g.has_edge(x, u) {
                dom.intersect_with(h.neighbors(w));
            } else if self.induced && x != u {
                // Distinct non-adjacent pairs must stay distinct and
                // non-adjacent.
                dom.subtract(h.neighbors(w));
                dom.remove(w);
            }
            if self.clique_image {
                let mut closed = h.neighbors(w).clone();
                closed.insert(w);
                dom.intersect_with(&closed);
            }
            if let Some((a, b)) = self.forced {
                // Keep the forced target available for b.
                if x == b && state.map[a] != usize::MAX && !dom.contains(state.map[a]) {
                    state.restore(saved);
                    return None;
                }
            }
            let empty = dom.is_empty();
            if dom.count() != before {
                let old = std::mem::replace(&mut state.domains[x], dom);
                saved.push((x, old));
            }
            if empty {
                state.restore(saved);
                return None;
            }
        }
        Some(saved)
    }
}

struct SearchState {
    map: Vec<usize>,
    domains: Vec<BitSet>,
    homs: Vec<Hom>,
    count: u64,
    mode: SearchMode,
    complete: bool,
}

impl SearchState {
    fn restore(&mut self, saved: Vec<(usize, BitSet)>) {
        for (x, dom) in saved.into_iter().rev() {
            self.domains[x] = dom;
        }
    }
}

/// Which side of the `beta` vs `beta'` comparison a graph pair falls on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BetaCase {
    /// beta > beta': every homomorphism must be a coloring.
    SourceLarger,
    /// beta = beta': every homomorphism is a coloring or an isomorphism onto
    /// an induced subgraph.
    Equal,
    /// beta < beta': the classification gives no constraint.
    TargetLarger,
}

/// Outcome of exhaustive oracle-mode verification of the classification
/// theorem on a concrete pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub case: BetaCase,
    pub total: u64,
    pub isomorphisms: u64,
    pub colorings: u64,
    pub others: u64,
    /// Every enumerated homomorphism passed `(A - tau I) E_H^phi = 0` and
    /// `(A - tau I) X = 0`.
    pub product_lemma_checked: u64,
}

/// Enumerates all homomorphisms `g -> h` in oracle mode (no theorem
/// assumptions), classifies each, and checks each against the `beta` case
/// split and the product-lemma identities. A homomorphism of kind `Other`
/// in a constrained case is returned as a counterexample.
pub fn verify_main_theorem(g: &Graph, h: &Graph, budget: u64) -> Result<TheoremReport, HomError> {
    let ctx_g = certs::SrgContext::of(g)?;
    let ctx_h = certs::SrgContext::of(h)?;
    if ctx_g.cosines.alpha != ctx_h.cosines.alpha {
        return Err(CertError::CosineMismatch {
            left: ctx_g.cosines.alpha.to_string(),
            right: ctx_h.cosines.alpha.to_string(),
        }
        .into());
    }
    let case = match ctx_g
        .cosines
        .beta
        .cmp_exact(&ctx_h.cosines.beta)
        .expect("equal adjacency cosines put both betas in one field")
    {
        std::cmp::Ordering::Greater => BetaCase::SourceLarger,
        std::cmp::Ordering::Equal => BetaCase::Equal,
        std::cmp::Ordering::Less => BetaCase::TargetLarger,
    };
    let result = find_homs(g, h, SearchMode::Enumerate, Strategy::Oracle, budget)?;
    if !result.complete {
        return Err(HomError::Budget {
            explored: result.nodes,
        });
    }
    let e_h = certs::cosine_matrix(h)?;
    let e_g = certs::cosine_matrix(g)?;
    let mut report = TheoremReport {
        case,
        total: result.count,
        isomorphisms: 0,
        colorings: 0,
        others: 0,
        product_lemma_checked: 0,
    };
    for hom in &result.homs {
        match hom.kind {
            HomKind::IsoOntoInducedSubgraph => report.isomorphisms += 1,
            HomKind::Coloring => report.colorings += 1,
            HomKind::Other => report.others += 1,
        }
        let violates = match case {
            BetaCase::SourceLarger => hom.kind != HomKind::Coloring,
            BetaCase::Equal => hom.kind == HomKind::Other,
            BetaCase::TargetLarger => false,
        };
        if violates {
            return Err(HomError::CounterexampleFound(hom.map.clone()));
        }
        let pulled = certs::pullback(&e_h, &hom.map)?;
        certs::check_product_lemma(g, &pulled)?;
        let x = pulled.sub(&e_g);
        certs::check_product_lemma(g, &x)?;
        report.product_lemma_checked += 1;
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoreStrategy {
    /// Spectral shortcut for primitive SRGs, exhaustive search otherwise.
    Auto,
    /// `omega = 1 - k/tau = chi` test via the exact solvers (SRGs only).
    FastSrg,
    /// Per-pair constrained endomorphism search.
    Exhaustive,
    /// Run both and require agreement.
    Both,
}

/// Core-test outcome; `witness` is a proper endomorphism when not a core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreReport {
    pub is_core: bool,
    pub witness: Option<Hom>,
    pub fast_path: Option<bool>,
    pub exhaustive_path: Option<bool>,
}

/// Tests whether a graph is a core (has no proper endomorphism).
pub fn is_core(g: &Graph, strategy: CoreStrategy, budget: u64) -> Result<CoreReport, HomError> {
    let report = g.verify_srg();
    let srg_ok = report.primitive_params().is_some();
    let (run_fast, run_slow) = match strategy {
        CoreStrategy::Auto => (srg_ok, !srg_ok),
        CoreStrategy::FastSrg => (true, false),
        CoreStrategy::Exhaustive => (false, true),
        CoreStrategy::Both => (true, true),
    };
    let mut fast_path = None;
    let mut witness = None;
    if run_fast {
        let p = report
            .primitive_params()
            .ok_or(SolverError::NotPrimitiveSrg)?;
        let bound = params::hoffman_bound(&p).expect("verified SRG params are feasible");
        let omega = solvers::max_clique(g, budget)?;
        let core = if QuadNum::from_int(omega.size as i64) != bound {
            true // omega < bound: the sandwich cannot pinch
        } else {
            let chi = solvers::chromatic_number(g, budget)?;
            QuadNum::from_int(chi.chromatic as i64) != bound
        };
        fast_path = Some(core);
        if !core && witness.is_none() {
            witness = coloring_endo_witness(g, budget)?;
        }
    }
    let mut exhaustive_path = None;
    if run_slow {
        let found = find_identifying_endo(g, budget)?;
        exhaustive_path = Some(found.is_none());
        if let Some(hom) = found {
            witness = Some(hom);
        }
    }
    let is_core = match (fast_path, exhaustive_path) {
        (Some(a), Some(b)) if a != b => return Err(HomError::PathsDisagree),
        (Some(a), _) => a,
        (_, Some(b)) => b,
        (None, None) => unreachable!("at least one path always runs"),
    };
    Ok(CoreReport {
        is_core,
        witness,
        fast_path,
        exhaustive_path,
    })
}

/// Builds a proper endomorphism from a Hoffman coloring composed with a
/// Delsarte clique (exists exactly when `omega = 1 - k/tau = chi`).
fn coloring_endo_witness(g: &Graph, budget: u64) -> Result<Option<Hom>, HomError> {
    let coloring = solvers::enumerate_hoffman_colorings(g, 1)?;
    let Some(partition) = coloring.partitions.first() else {
        return Ok(None);
    };
    let clique = solvers::max_clique(g, budget)?;
    assert_eq!(
        partition.len(),
        clique.size,
        "Hoffman class count must equal the Delsarte clique size"
    );
    let mut map = vec![usize::MAX; g.vertex_count()];
    for (class, &target) in partition.iter().zip(clique.witness.iter()) {
        for &v in class {
            map[v] = target;
        }
    }
    Ok(Some(Hom::new(g, g, map)?))
}

/// First proper endomorphism found by per-pair constrained search: for each
/// non-adjacent pair, look for an endomorphism identifying it.
fn find_identifying_endo(g: &Graph, budget: u64) -> Result<Option<Hom>, HomError> {
    let n = g.vertex_count();
    let mut remaining = budget;
    for u in 0..n {
        for v in (u + 1)..n {
            if g.has_edge(u, v) {
                continue;
            }
            let mut engine = SearchEngine::identifying(g, g, remaining, (u, v));
            let result = engine.run(g, g, SearchMode::First);
            if !result.complete {
                return Err(HomError::Budget {
                    explored: budget - remaining + result.nodes,
                });
            }
            remaining = remaining.saturating_sub(result.nodes);
            if let Some(hom) = result.homs.into_iter().next() {
                return Ok(Some(hom));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HullStrategy {
    /// Per-pair constrained endomorphism search; any graph.
    BruteForce,
    /// For primitive SRGs: proper endomorphisms are exactly the colorings,
    /// so pairs are identified iff some Hoffman partition co-classes them.
    PseudocoreFast,
}

/// The hull: same vertex set, two vertices adjacent iff no endomorphism
/// identifies them. Every edge of the base graph is a hull edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullGraph {
    pub base: Graph,
    pub hull: Graph,
}

/// Computes the hull of a graph under the chosen strategy.
#[allow(clippy::needless_range_loop)]
pub fn hull(g: &Graph, strategy: HullStrategy, budget: u64) -> Result<HullGraph, HomError> {
    let n = g.vertex_count();
    let mut hull = Graph::new(n);
    for (u, v) in g.edges() {
        hull.add_edge(u, v);
    }
    match strategy {
        HullStrategy::BruteForce => {
            let mut remaining = budget;
            for u in 0..n {
                for v in (u + 1)..n {
                    if g.has_edge(u, v) {
                        continue;
                    }
                    let mut engine = SearchEngine::identifying(g, g, remaining, (u, v));
                    let result = engine.run(g, g, SearchMode::First);
                    if !result.complete {
                        return Err(HomError::Budget {
                            explored: budget - remaining + result.nodes,
                        });
                    }
                    remaining = remaining.saturating_sub(result.nodes);
                    if result.count == 0 {
                        hull.add_edge(u, v);
                    }
                }
            }
        }
        HullStrategy::PseudocoreFast => {
            let report = g.verify_srg();
            let p = report
                .primitive_params()
                .ok_or(SolverError::NotPrimitiveSrg)?;
            let bound = params::hoffman_bound(&p).expect("verified SRG params are feasible");
            let has_proper_endos = match bound.to_integer().and_then(|b| b.to_usize()) {
                None => false, // non-integer bound: no colorings, graph is a core
                Some(c) => {
                    let omega = solvers::max_clique(g, budget)?;
                    if omega.size != c {
                        false
                    } else {
                        let chi = solvers::chromatic_number(g, budget)?;
                        chi.chromatic == c
                    }
                }
            };
            if !has_proper_endos {
                // Core: no identifications, the hull is complete.
                for u in 0..n {
                    for v in (u + 1)..n {
                        if !g.has_edge(u, v) {
                            hull.add_edge(u, v);
                        }
                    }
                }
            } else {
                let enumeration = solvers::enumerate_hoffman_colorings(g, usize::MAX)?;
                assert!(!enumeration.truncated);
                let mut co_classed = vec![BitSet::new(n); n];
                for partition in &enumeration.partitions {
                    for class in partition {
                        for (i, &u) in class.iter().enumerate() {
                            for &v in &class[i + 1..] {
                                co_classed[u].insert(v);
                                co_classed[v].insert(u);
                            }
                        }
                    }
                }
                for u in 0..n {
                    for v in (u + 1)..n {
                        if !g.has_edge(u, v) && !co_classed[u].contains(v) {
                            hull.add_edge(u, v);
                        }
                    }
                }
            }
        }
    }
    for (u, v) in g.edges() {
        debug_assert!(hull.has_edge(u, v));
    }
    Ok(HullGraph {
        base: g.clone(),
        hull,
    })
}
