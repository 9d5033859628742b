//! Type classification of strongly regular graphs by which of the clique
//! and chromatic numbers meet the Hoffman bound, batch catalog processing,
//! and Hasse-diagram output of the homomorphism order.
//!
//! - Type A: omega < bound = chi
//! - Type B: omega = bound = chi
//! - Type C: omega = bound < chi
//! - Type X: omega < bound < chi
//!
//! A non-integer bound forces type X without any solving. Type B graphs are
//! exactly the non-cores; they form a single homomorphic-equivalence class.

use std::fmt;

use num::traits::ToPrimitive;
use rayon::prelude::*;

use crate::exactnum::QuadNum;
use crate::graphs::{parse_graph6_lines, Graph};
use crate::homs;
use crate::params::{self, SrgParams};
use crate::solvers::{self, SolverError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("graph is not a primitive strongly regular graph")]
    NotPrimitiveSrg,
    #[error("catalog entries carry mixed parameter sets: {left} vs {right}")]
    MixedParameters { left: SrgParams, right: SrgParams },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TypeTag {
    A,
    B,
    C,
    X,
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            TypeTag::A => 'A',
            TypeTag::B => 'B',
            TypeTag::C => 'C',
            TypeTag::X => 'X',
        };
        write!(f, "{c}")
    }
}

/// Exact chromatic number or honest bracketing bounds after budget
/// exhaustion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChiValue {
    Exact(usize),
    Bracket { lo: usize, hi: usize },
}

impl fmt::Display for ChiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChiValue::Exact(v) => write!(f, "{v}"),
            ChiValue::Bracket { lo, hi } => write!(f, "[{lo},{hi}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SrgType {
    pub tag: TypeTag,
    pub omega: usize,
    pub chi: ChiValue,
    pub bound: QuadNum,
}

/// Classification outcome: determined, or bracketed between the consistent
/// options when the budget ran out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TypeOutcome {
    Determined(SrgType),
    Undetermined {
        omega: Option<usize>,
        chi_lo: usize,
        chi_hi: usize,
        bound: QuadNum,
        options: Vec<TypeTag>,
    },
}

/// Classifies one primitive strongly regular graph, comparing the exact
/// clique and chromatic numbers against the Hoffman bound. A non-integer
/// bound short-circuits to type X.
pub fn classify_type(g: &Graph, budget: u64) -> Result<TypeOutcome, ClassifyError> {
    let report = g.verify_srg();
    let Some(p) = report.primitive_params() else {
        return Err(ClassifyError::NotPrimitiveSrg);
    };
    let bound = params::hoffman_bound(&p).expect("verified SRG params are feasible");
    let bound_int = bound.to_integer().and_then(|b| b.to_usize());

    let omega = match solvers::max_clique(g, budget) {
        Ok(r) => r.size,
        Err(SolverError::Budget { lower, .. }) => {
            let chi_lo = bound.ceil().to_usize().unwrap_or(lower);
            return Ok(TypeOutcome::Undetermined {
                omega: None,
                chi_lo,
                chi_hi: g.vertex_count(),
                bound,
                options: vec![TypeTag::A, TypeTag::B, TypeTag::C, TypeTag::X],
            });
        }
        Err(_) => return Err(ClassifyError::NotPrimitiveSrg),
    };

    let chi = solvers::chromatic_number(g, budget);
    match bound_int {
        None => {
            // Non-integer bound: neither omega nor chi can meet it.
            let chi_value = match chi {
                Ok(r) => ChiValue::Exact(r.chromatic),
                Err(SolverError::Budget { lower, upper, .. }) => ChiValue::Bracket {
                    lo: lower,
                    hi: upper,
                },
                Err(_) => return Err(ClassifyError::NotPrimitiveSrg),
            };
            Ok(TypeOutcome::Determined(SrgType {
                tag: TypeTag::X,
                omega,
                chi: chi_value,
                bound,
            }))
        }
        Some(c) => {
            let omega_meets = omega == c;
            match chi {
                Ok(r) => {
                    let chi_meets = r.chromatic == c;
                    let tag = match (omega_meets, chi_meets) {
                        (false, true) => TypeTag::A,
                        (true, true) => TypeTag::B,
                        (true, false) => TypeTag::C,
                        (false, false) => TypeTag::X,
                    };
                    Ok(TypeOutcome::Determined(SrgType {
                        tag,
                        omega,
                        chi: ChiValue::Exact(r.chromatic),
                        bound,
                    }))
                }
                Err(SolverError::Budget { lower, upper, .. }) => {
                    if lower > c {
                        // chi > bound is already proven.
                        let tag = if omega_meets { TypeTag::C } else { TypeTag::X };
                        Ok(TypeOutcome::Determined(SrgType {
                            tag,
                            omega,
                            chi: ChiValue::Bracket {
                                lo: lower,
                                hi: upper,
                            },
                            bound,
                        }))
                    } else {
                        let options = if omega_meets {
                            vec![TypeTag::B, TypeTag::C]
                        } else {
                            vec![TypeTag::A, TypeTag::X]
                        };
                        Ok(TypeOutcome::Undetermined {
                            omega: Some(omega),
                            chi_lo: lower,
                            chi_hi: upper,
                            bound,
                            options,
                        })
                    }
                }
                Err(_) => Err(ClassifyError::NotPrimitiveSrg),
            }
        }
    }
}

/// One classified catalog graph with its derived flags.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: String,
    pub graph: Graph,
    pub params: SrgParams,
    pub outcome: TypeOutcome,
    /// Exactly the type B graphs are non-cores.
    pub core: Option<bool>,
    /// Set when an exhaustive endomorphism enumeration completed and
    /// confirmed that every proper endomorphism is a coloring.
    pub pseudocore_verified: bool,
    /// chi meets the bound, i.e. type A or B.
    pub has_hoffman_coloring: Option<bool>,
    /// omega meets the bound, i.e. type B or C.
    pub has_delsarte_clique: Option<bool>,
}

impl CatalogEntry {
    pub fn tag(&self) -> Option<TypeTag> {
        match &self.outcome {
            TypeOutcome::Determined(t) => Some(t.tag),
            TypeOutcome::Undetermined { .. } => None,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TypeHistogram {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub x: usize,
    pub undetermined: usize,
}

#[derive(Debug, Clone)]
pub struct SkippedLine {
    pub line: usize,
    pub reason: String,
}

#[derive(Debug, Clone)]
pub struct BatchReport {
    pub entries: Vec<CatalogEntry>,
    pub skipped: Vec<SkippedLine>,
    pub histogram: TypeHistogram,
}

#[derive(Debug, Clone, Copy)]
pub struct BatchOptions {
    /// Node budget per graph.
    pub budget: u64,
    /// Run the exhaustive endomorphism check behind the
    /// `pseudocore_verified` flag (expensive; off by default).
    pub verify_pseudocore: bool,
}

impl Default for BatchOptions {
    fn default() -> BatchOptions {
        BatchOptions {
            budget: 1 << 28,
            verify_pseudocore: false,
        }
    }
}

/// Classifies every graph of a multi-line graph6 catalog. Unparseable and
/// non-SRG lines are collected, not fatal. Entries are processed in
/// parallel; output order follows the input.
pub fn batch_classify(text: &[u8], opts: BatchOptions) -> BatchReport {
    let parsed = parse_graph6_lines(text);
    let mut skipped = Vec::new();
    let mut work: Vec<(usize, Graph, SrgParams)> = Vec::new();
    for (line, result) in parsed {
        match result {
            Err(e) => skipped.push(SkippedLine {
                line,
                reason: e.to_string(),
            }),
            Ok(g) => {
                let report = g.verify_srg();
                match report.primitive_params() {
                    Some(p) => work.push((line, g, p)),
                    None => {
                        let reason = match report.failure {
                            Some(f) => format!("not strongly regular: {f}"),
                            None => "imprimitive strongly regular graph".to_string(),
                        };
                        skipped.push(SkippedLine { line, reason });
                    }
                }
            }
        }
    }
    let entries: Vec<CatalogEntry> = work
        .into_par_iter()
        .map(|(line, g, p)| {
            let outcome =
                classify_type(&g, opts.budget).expect("primitivity was checked before dispatch");
            let (core, hoffman, delsarte) = flags_from(&outcome);
            let pseudocore_verified =
                opts.verify_pseudocore && homs::verify_main_theorem(&g, &g, opts.budget).is_ok();
            CatalogEntry {
                id: format!("L{line}"),
                graph: g,
                params: p,
                outcome,
                core,
                pseudocore_verified,
                has_hoffman_coloring: hoffman,
                has_delsarte_clique: delsarte,
            }
        })
        .collect();
    let mut histogram = TypeHistogram::default();
    for entry in &entries {
        match entry.tag() {
            Some(TypeTag::A) => histogram.a += 1,
            Some(TypeTag::B) => histogram.b += 1,
            Some(TypeTag::C) => histogram.c += 1,
            Some(TypeTag::X) => histogram.x += 1,
            None => histogram.undetermined += 1,
        }
    }
    BatchReport {
        entries,
        skipped,
        histogram,
    }
}

fn flags_from(outcome: &TypeOutcome) -> (Option<bool>, Option<bool>, Option<bool>) {
    match outcome {
        TypeOutcome::Determined(t) => {
            let core = t.tag != TypeTag::B;
            let hoffman = matches!(t.tag, TypeTag::A | TypeTag::B);
            let delsarte = matches!(t.tag, TypeTag::B | TypeTag::C);
            (Some(core), Some(hoffman), Some(delsarte))
        }
        TypeOutcome::Undetermined { omega, bound, .. } => {
            // omega = bound is decidable even when chi is not.
            let delsarte = match (omega, bound.to_integer().and_then(|b| b.to_usize())) {
                (Some(o), Some(c)) => Some(*o == c),
                _ => None,
            };
            (None, None, delsarte)
        }
    }
}

/// Whether a proper homomorphism exists between non-isomorphic graphs of
/// these types: source must have a Hoffman coloring (A or B) and target a
/// Delsarte clique (B or C).
pub fn types_admit_hom(source: TypeTag, target: TypeTag) -> bool {
    matches!(source, TypeTag::A | TypeTag::B) && matches!(target, TypeTag::B | TypeTag::C)
}

/// Emits the Hasse diagram of the homomorphism order as a DOT digraph: one
/// node per type A, C, or X graph, a single merged node for all type B
/// graphs, and edges A -> B -> C only. Entries with undetermined type are
/// listed in a comment and omitted from the order.
pub fn hasse_dot(entries: &[CatalogEntry]) -> Result<String, ClassifyError> {
    for pair in entries.windows(2) {
        if pair[0].params != pair[1].params {
            return Err(ClassifyError::MixedParameters {
                left: pair[0].params,
                right: pair[1].params,
            });
        }
    }
    let mut out = String::from("digraph hasse {\n");
    out.push_str("  rankdir=TB;\n  node [shape=box];\n");
    let mut b_ids: Vec<&str> = Vec::new();
    let mut a_nodes: Vec<&CatalogEntry> = Vec::new();
    let mut c_nodes: Vec<&CatalogEntry> = Vec::new();
    for entry in entries {
        match entry.tag() {
            Some(TypeTag::B) => b_ids.push(&entry.id),
            Some(TypeTag::A) => a_nodes.push(entry),
            Some(TypeTag::C) => c_nodes.push(entry),
            Some(TypeTag::X) => {}
            None => {}
        }
    }
    for entry in entries {
        match entry.tag() {
            Some(tag @ (TypeTag::A | TypeTag::C | TypeTag::X)) => {
                let TypeOutcome::Determined(t) = &entry.outcome else {
                    unreachable!()
                };
                out.push_str(&format!(
                    "  \"{}\" [label=\"{} (type {})\\nomega={}, chi={}, bound={}\"];\n",
                    entry.id, entry.id, tag, t.omega, t.chi, t.bound
                ));
            }
            Some(TypeTag::B) => {}
            None => {
                out.push_str(&format!("  // undetermined: {}\n", entry.id));
            }
        }
    }
    if !b_ids.is_empty() {
        // All type B graphs are homomorphically equivalent: one node.
        let members = b_ids.join(", ");
        out.push_str(&format!("  \"B\" [label=\"type B class: {members}\"];\n"));
        for a in &a_nodes {
            out.push_str(&format!("  \"{}\" -> \"B\";\n", a.id));
        }
        for c in &c_nodes {
            out.push_str(&format!("  \"B\" -> \"{}\";\n", c.id));
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graphs::encode_graph6;

    const BUDGET: u64 = 1 << 26;

    #[test]
    fn fixture_types() {
        let pet = classify_type(&fixtures::petersen(), BUDGET).unwrap();
        match pet {
            TypeOutcome::Determined(t) => {
                assert_eq!(t.tag, TypeTag::X);
                assert_eq!(t.omega, 2);
                assert_eq!(t.chi, ChiValue::Exact(3));
                assert!(!t.bound.is_integer());
            }
            other => panic!("petersen should be determined, got {other:?}"),
        }
        let rook = classify_type(&fixtures::rook4(), BUDGET).unwrap();
        assert!(matches!(
            rook,
            TypeOutcome::Determined(SrgType {
                tag: TypeTag::B,
                omega: 4,
                ..
            })
        ));
        let shr = classify_type(&fixtures::shrikhande(), BUDGET).unwrap();
        assert!(matches!(
            shr,
            TypeOutcome::Determined(SrgType {
                tag: TypeTag::A,
                omega: 3,
                ..
            })
        ));
        let clebsch = classify_type(&fixtures::clebsch(), BUDGET).unwrap();
        match clebsch {
            TypeOutcome::Determined(t) => {
                assert_eq!(t.tag, TypeTag::X);
                assert!(!t.bound.is_integer());
            }
            other => panic!("clebsch should be determined, got {other:?}"),
        }
    }

    #[test]
    fn budget_pressure_never_yields_a_wrong_type() {
        // Shrikhande is type A. Under any budget the classifier must either
        // say so or report an undetermined outcome whose options include A,
        // with honest chi brackets.
        let shr = fixtures::shrikhande();
        let mut saw_undetermined = false;
        for budget in [5u64, 20, 80, 320, 1_280, 5_120, 1 << 22] {
            match classify_type(&shr, budget).unwrap() {
                TypeOutcome::Determined(t) => {
                    assert_eq!(t.tag, TypeTag::A, "budget {budget}");
                }
                TypeOutcome::Undetermined {
                    omega,
                    chi_lo,
                    chi_hi,
                    options,
                    ..
                } => {
                    saw_undetermined = true;
                    assert!(options.contains(&TypeTag::A), "budget {budget}");
                    assert!(chi_lo <= chi_hi);
                    assert!(chi_lo <= 4 && 4 <= chi_hi, "true chi inside the bracket");
                    if let Some(o) = omega {
                        assert_eq!(o, 3);
                    }
                }
            }
        }
        assert!(saw_undetermined, "small budgets should exhaust the search");
    }

    #[test]
    fn batch_histogram_and_skips() {
        let mut text = String::new();
        text.push_str(&encode_graph6(&fixtures::rook4()));
        text.push('\n');
        text.push_str(&encode_graph6(&fixtures::shrikhande()));
        text.push('\n');
        // C6 is not strongly regular.
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        text.push_str(&encode_graph6(&c6));
        text.push('\n');
        let report = batch_classify(
            text.as_bytes(),
            BatchOptions {
                budget: BUDGET,
                verify_pseudocore: false,
            },
        );
        assert_eq!(report.entries.len(), 2);
        assert_eq!(report.skipped.len(), 1);
        assert!(report.skipped[0].reason.contains("not strongly regular"));
        assert_eq!(
            report.histogram,
            TypeHistogram {
                a: 1,
                b: 1,
                c: 0,
                x: 0,
                undetermined: 0
            }
        );
        let rook_entry = &report.entries[0];
        assert_eq!(rook_entry.core, Some(false));
        assert_eq!(rook_entry.has_hoffman_coloring, Some(true));
        assert_eq!(rook_entry.has_delsarte_clique, Some(true));
        let shr_entry = &report.entries[1];
        assert_eq!(shr_entry.core, Some(true));
        assert_eq!(shr_entry.has_hoffman_coloring, Some(true));
        assert_eq!(shr_entry.has_delsarte_clique, Some(false));
    }

    #[test]
    fn hasse_for_16_6_2_2() {
        let mut text = String::new();
        text.push_str(&encode_graph6(&fixtures::rook4()));
        text.push('\n');
        text.push_str(&encode_graph6(&fixtures::shrikhande()));
        text.push('\n');
        let report = batch_classify(
            text.as_bytes(),
            BatchOptions {
                budget: BUDGET,
                verify_pseudocore: false,
            },
        );
        let dot = hasse_dot(&report.entries).unwrap();
        assert!(dot.contains("\"L2\" -> \"B\";"), "{dot}");
        assert_eq!(dot.matches("->").count(), 1, "{dot}");
    }

    #[test]
    fn hasse_of_x_entries_has_no_edges() {
        let text = format!("{}\n", encode_graph6(&fixtures::petersen()));
        let report = batch_classify(
            text.as_bytes(),
            BatchOptions {
                budget: BUDGET,
                verify_pseudocore: true,
            },
        );
        let dot = hasse_dot(&report.entries).unwrap();
        assert_eq!(dot.matches("->").count(), 0);
        assert!(dot.contains("type X"));
        // One entry: Petersen is type X, a core, and its exhaustive
        // endomorphism check completes.
        let entry = &report.entries[0];
        assert_eq!(entry.tag(), Some(TypeTag::X));
        assert_eq!(entry.core, Some(true));
        assert!(entry.pseudocore_verified);
        assert_eq!(entry.has_hoffman_coloring, Some(false));
        assert_eq!(entry.has_delsarte_clique, Some(false));
    }

    #[test]
    fn hasse_of_empty_list_is_an_empty_digraph() {
        let dot = hasse_dot(&[]).unwrap();
        assert!(dot.starts_with("digraph"));
        assert_eq!(dot.matches("label").count(), 0);
    }

    #[test]
    fn mixed_parameters_rejected() {
        let mut text = String::new();
        text.push_str(&encode_graph6(&fixtures::rook4()));
        text.push('\n');
        text.push_str(&encode_graph6(&fixtures::petersen()));
        text.push('\n');
        let report = batch_classify(
            text.as_bytes(),
            BatchOptions {
                budget: BUDGET,
                verify_pseudocore: false,
            },
        );
        assert!(matches!(
            hasse_dot(&report.entries),
            Err(ClassifyError::MixedParameters { .. })
        ));
    }

    #[test]
    fn type_hom_consistency_on_the_16_6_2_2_catalog() {
        use crate::homs::{find_homs, SearchMode, Strategy};
        let graphs = [("rook", fixtures::rook4()), ("shr", fixtures::shrikhande())];
        let mut tags = Vec::new();
        for (_, g) in &graphs {
            match classify_type(g, BUDGET).unwrap() {
                TypeOutcome::Determined(t) => tags.push(t.tag),
                _ => panic!("determined expected"),
            }
        }
        for (i, (_, g)) in graphs.iter().enumerate() {
            for (j, (_, h)) in graphs.iter().enumerate() {
                if i == j {
                    continue;
                }
                let expected = types_admit_hom(tags[i], tags[j]);
                let found = find_homs(g, h, SearchMode::First, Strategy::Fast, BUDGET).unwrap();
                assert!(found.complete);
                assert_eq!(
                    !found.homs.is_empty(),
                    expected,
                    "hom existence vs types for pair ({i},{j})"
                );
            }
        }
    }
}
