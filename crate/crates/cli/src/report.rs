//! Typed JSON report schemas for every subcommand. Exact numbers are
//! rendered as strings ("p/q" or "(p+q√d)/c"), never floats.
//!
//! These types double as the schema validator: a report is valid iff it
//! deserializes back into its type with unknown fields rejected.

use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ParamsReport {
    pub n: u32,
    pub k: u32,
    pub lambda: u32,
    pub mu: u32,
    pub feasible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumReport>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SpectrumReport {
    pub primitive: bool,
    pub theta: String,
    pub tau: String,
    pub m_theta: u32,
    pub m_tau: u32,
    pub complement: [u32; 4],
    pub complement_theta: String,
    pub complement_tau: String,
    /// Adjacency and non-adjacency cosines; absent for imprimitive sets.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<String>,
    pub hoffman_bound: String,
    pub hoffman_bound_integer: bool,
    pub ratio_bound: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct VerifyReport {
    pub n: usize,
    pub is_srg: bool,
    pub primitive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<[u32; 4]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
    /// Second neighborhoods all induce connected subgraphs.
    pub n2_connected: bool,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CertReport {
    pub params: [u32; 4],
    /// `A^2+(mu-lambda)A+(mu-k)I = mu J`, `(A-tau I)E_G = 0`,
    /// `E_G E_G = (n/m_tau) E_G`.
    pub projector_identities: bool,
    pub cosine_matrix_psd: bool,
    pub theta: ThetaReport,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ThetaReport {
    pub value: String,
    pub primal_feasible: bool,
    pub dual_feasible: bool,
    pub dual_objective: String,
    pub complementary_slackness_zero: bool,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SolveReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clique: Option<CliqueReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coclique: Option<CliqueReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chromatic: Option<ChromaticReport>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CliqueReport {
    pub size: usize,
    pub witness: Vec<usize>,
    pub delsarte: bool,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ChromaticReport {
    pub chromatic: usize,
    pub classes: Vec<Vec<usize>>,
    pub hoffman: bool,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct HomReport {
    pub mode: String,
    pub count: u64,
    pub complete: bool,
    pub homs: Vec<HomEntry>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct HomEntry {
    pub map: Vec<usize>,
    pub kind: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CoreCliReport {
    pub is_core: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fast_path: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exhaustive_path: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<HomEntry>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct HullReport {
    pub n: usize,
    pub strategy: String,
    pub base_edges: usize,
    pub hull_edges: usize,
    pub hull_is_complete: bool,
    pub hull_equals_base: bool,
    pub hull_graph6: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct TheoremCliReport {
    pub case: String,
    pub total: u64,
    pub isomorphisms: u64,
    pub colorings: u64,
    pub others: u64,
    pub product_lemma_checked: u64,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ClassifyReport {
    pub entries: Vec<ClassifyEntry>,
    pub skipped: Vec<SkippedEntry>,
    pub histogram: Histogram,
}

/// One catalog line: identity, parameters, exact omega, chi (or bracketing
/// bounds), the exact bound string, type tag, and the core flag.
#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ClassifyEntry {
    pub id: String,
    pub n: u32,
    pub k: u32,
    pub lambda: u32,
    pub mu: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<usize>,
    pub chi: ChiReport,
    pub bound: String,
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    pub type_tag: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub core: Option<bool>,
}

/// Exact chromatic number, or `[lo, hi]` bounds after budget exhaustion.
#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum ChiReport {
    Exact(usize),
    Bracket([usize; 2]),
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SkippedEntry {
    pub line: usize,
    pub reason: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Histogram {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub x: usize,
    pub undetermined: usize,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct FixtureReport {
    pub name: String,
    pub n: usize,
    pub graph6: String,
    pub params: [u32; 4],
}

/// Report kinds for schema validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportKind {
    Params,
    Verify,
    Cert,
    Theta,
    Solve,
    Hom,
    Core,
    Hull,
    Theorem,
    Classify,
    Fixture,
}

/// Validates a JSON report against its schema by round-tripping it through
/// the typed representation.
pub fn validate(kind: ReportKind, json: &str) -> Result<(), serde_json::Error> {
    match kind {
        ReportKind::Params => serde_json::from_str::<ParamsReport>(json).map(|_| ()),
        ReportKind::Verify => serde_json::from_str::<VerifyReport>(json).map(|_| ()),
        ReportKind::Cert => serde_json::from_str::<CertReport>(json).map(|_| ()),
        ReportKind::Theta => serde_json::from_str::<ThetaReport>(json).map(|_| ()),
        ReportKind::Solve => serde_json::from_str::<SolveReport>(json).map(|_| ()),
        ReportKind::Hom => serde_json::from_str::<HomReport>(json).map(|_| ()),
        ReportKind::Core => serde_json::from_str::<CoreCliReport>(json).map(|_| ()),
        ReportKind::Hull => serde_json::from_str::<HullReport>(json).map(|_| ()),
        ReportKind::Theorem => serde_json::from_str::<TheoremCliReport>(json).map(|_| ()),
        ReportKind::Classify => serde_json::from_str::<ClassifyReport>(json).map(|_| ()),
        ReportKind::Fixture => serde_json::from_str::<FixtureReport>(json).map(|_| ()),
    }
}
