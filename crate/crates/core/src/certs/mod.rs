//! Exact matrix certificates: cosine matrices, projector identities,
//! pullbacks, homomorphism matrices, ratio-bound witnesses, and the theta
//! primal/dual pair. Every check is an exact identity with zero tolerance.

mod matrix;

pub use matrix::{ldlt_psd, ExactMatrix, PsdOutcome, MAX_MATRIX};

use num::traits::ToPrimitive;

use crate::bitset::BitSet;
use crate::exactnum::QuadNum;
use crate::graphs::{Graph, SrgFailure};
use crate::params::{self, Cosines, Spectrum, SrgParams};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertError {
    #[error("graph is not strongly regular{}", .0.as_ref().map(|w| format!(": {w}")).unwrap_or_default())]
    NotSrg(Option<SrgFailure>),
    #[error("graph is not a primitive strongly regular graph")]
    NotPrimitiveSrg,
    #[error("certificate check '{check}' failed at entry ({u},{v}): {value}")]
    CertFailure {
        check: &'static str,
        u: usize,
        v: usize,
        value: String,
    },
    #[error("adjacency cosines differ: {left} vs {right}")]
    CosineMismatch { left: String, right: String },
    #[error("map is not a homomorphism: edge ({u},{v}) maps to non-edge ({fu},{fv})")]
    NotHomomorphism {
        u: usize,
        v: usize,
        fu: usize,
        fv: usize,
    },
    #[error("map image {index} out of range for a matrix of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("set is not a coclique: contains edge ({u},{v})")]
    NotCoclique { u: usize, v: usize },
    #[error("matrix is not symmetric")]
    AsymmetricInput,
    #[error("matrix size {n} exceeds the certificate cap {MAX_MATRIX}")]
    MatrixTooLarge { n: usize },
    #[error("entries from mixed quadratic fields Q(\u{221a}{0}) and Q(\u{221a}{1})")]
    MixedFields(u64, u64),
}

/// Exact spectral data of a verified primitive strongly regular graph,
/// shared by the certificate builders.
#[derive(Debug, Clone)]
pub struct SrgContext {
    pub params: SrgParams,
    pub spectrum: Spectrum,
    pub cosines: Cosines,
}

impl SrgContext {
    /// Verifies strong regularity combinatorially and derives the exact
    /// spectrum; requires primitivity.
    pub fn of(g: &Graph) -> Result<SrgContext, CertError> {
        let report = g.verify_srg();
        let Some(p) = report.params else {
            return Err(CertError::NotSrg(report.failure));
        };
        if !report.primitive {
            return Err(CertError::NotPrimitiveSrg);
        }
        let spectrum = params::spectrum(&p).map_err(|_| CertError::NotSrg(None))?;
        let cosines = params::cosines(&p).map_err(|_| CertError::NotPrimitiveSrg)?;
        Ok(SrgContext {
            params: p,
            spectrum,
            cosines,
        })
    }
}

/// The cosine matrix `E_G`: unit diagonal, `tau/k` on edges,
/// `(-tau-1)/(n-k-1)` on distinct non-adjacent pairs. A positive scaling of
/// the projector onto the tau-eigenspace.
pub fn cosine_matrix(g: &Graph) -> Result<ExactMatrix, CertError> {
    let ctx = SrgContext::of(g)?;
    Ok(cosine_matrix_with(g, &ctx))
}

fn cosine_matrix_with(g: &Graph, ctx: &SrgContext) -> ExactMatrix {
    ExactMatrix::from_fn(g.vertex_count(), |u, v| {
        if u == v {
            QuadNum::one()
        } else if g.has_edge(u, v) {
            ctx.cosines.alpha.clone()
        } else {
            ctx.cosines.beta.clone()
        }
    })
    .expect("cosines live in one field")
}

/// Verifies, exactly, the three matrix identities of a primitive strongly
/// regular graph:
///
/// 1. `A^2 + (mu-lambda)A + (mu-k)I = mu J`,
/// 2. `(A - tau I) E_G = 0`,
/// 3. `E_G E_G = (n/m_tau) E_G`.
pub fn check_projector_identities(g: &Graph) -> Result<(), CertError> {
    let ctx = SrgContext::of(g)?;
    let n = g.vertex_count();
    let a = ExactMatrix::adjacency(g);
    let e_g = cosine_matrix_with(g, &ctx);

    let p = ctx.params;
    let a_sq = a.mul(&a);
    let quadratic = a_sq
        .add(&a.scale(&QuadNum::from_int(p.mu as i64 - p.lambda as i64)))
        .add(&ExactMatrix::identity(n).scale(&QuadNum::from_int(p.mu as i64 - p.k as i64)));
    let mu_j = ExactMatrix::all_ones(n).scale(&QuadNum::from_int(p.mu as i64));
    expect_equal(&quadratic, &mu_j, "A^2+(mu-lambda)A+(mu-k)I = mu J")?;

    let a_minus_tau = a.sub(&ExactMatrix::identity(n).scale(&ctx.spectrum.tau));
    expect_zero(&a_minus_tau.mul(&e_g), "(A - tau I) E_G = 0")?;

    let scaled = e_g.scale(&QuadNum::ratio(n as i64, ctx.spectrum.m_tau as i64));
    expect_equal(&e_g.mul(&e_g), &scaled, "E_G E_G = (n/m_tau) E_G")?;
    Ok(())
}

fn expect_zero(m: &ExactMatrix, check: &'static str) -> Result<(), CertError> {
    match m.first_nonzero() {
        None => Ok(()),
        Some((u, v, value)) => Err(CertError::CertFailure {
            check,
            u,
            v,
            value: value.to_string(),
        }),
    }
}

fn expect_equal(
    m: &ExactMatrix,
    other: &ExactMatrix,
    check: &'static str,
) -> Result<(), CertError> {
    expect_zero(&m.sub(other), check)
}

/// Pullback `M^phi` of a matrix along a vertex map: `(M^phi)_{uv} =
/// M_{phi(u), phi(v)}`. Preserves positive semidefiniteness.
pub fn pullback(m: &ExactMatrix, map: &[usize]) -> Result<ExactMatrix, CertError> {
    for &w in map {
        if w >= m.size() {
            return Err(CertError::IndexOutOfRange {
                index: w,
                size: m.size(),
            });
        }
    }
    ExactMatrix::from_fn(map.len(), |u, v| m.at(map[u], map[v]).clone())
}

/// The homomorphism matrix `X = E_H^phi - E_G` together with the cosines
/// that determine its entries.
#[derive(Debug, Clone)]
pub struct HomMatrix {
    pub x: ExactMatrix,
    /// Shared adjacency cosine of source and target.
    pub alpha: QuadNum,
    /// Non-adjacency cosine of the source.
    pub beta: QuadNum,
    /// Non-adjacency cosine of the target.
    pub beta_prime: QuadNum,
}

/// Builds the homomorphism matrix of `phi: g -> h` for primitive strongly
/// regular graphs with equal adjacency cosines. Entries fall in
/// `{0, 1-beta, alpha-beta, beta_prime-beta}` and vanish on the diagonal and
/// on edges of `g`.
pub fn hom_matrix(g: &Graph, h: &Graph, map: &[usize]) -> Result<HomMatrix, CertError> {
    let ctx_g = SrgContext::of(g)?;
    let ctx_h = SrgContext::of(h)?;
    if ctx_g.cosines.alpha != ctx_h.cosines.alpha {
        return Err(CertError::CosineMismatch {
            left: ctx_g.cosines.alpha.to_string(),
            right: ctx_h.cosines.alpha.to_string(),
        });
    }
    check_hom_map(g, h, map)?;
    let e_h = cosine_matrix_with(h, &ctx_h);
    let e_g = cosine_matrix_with(g, &ctx_g);
    let pulled = pullback(&e_h, map)?;
    let x = pulled.sub(&e_g);
    Ok(HomMatrix {
        x,
        alpha: ctx_g.cosines.alpha,
        beta: ctx_g.cosines.beta,
        beta_prime: ctx_h.cosines.beta,
    })
}

/// Checks that every edge of `g` maps to an edge of `h`.
pub fn check_hom_map(g: &Graph, h: &Graph, map: &[usize]) -> Result<(), CertError> {
    assert_eq!(map.len(), g.vertex_count(), "map must be total on V(G)");
    for &w in map {
        if w >= h.vertex_count() {
            return Err(CertError::IndexOutOfRange {
                index: w,
                size: h.vertex_count(),
            });
        }
    }
    for (u, v) in g.edges() {
        let (fu, fv) = (map[u], map[v]);
        if fu == fv || !h.has_edge(fu, fv) {
            return Err(CertError::NotHomomorphism { u, v, fu, fv });
        }
    }
    Ok(())
}

/// Verifies `(A - tau I) M = 0` exactly, where `A, tau` belong to `g`.
/// Applies to both `E_H^phi` and the homomorphism matrix `X`.
pub fn check_product_lemma(g: &Graph, m: &ExactMatrix) -> Result<(), CertError> {
    let ctx = SrgContext::of(g)?;
    assert_eq!(m.size(), g.vertex_count(), "matrix must be indexed by V(G)");
    let a = ExactMatrix::adjacency(g);
    let a_minus_tau = a.sub(&ExactMatrix::identity(g.vertex_count()).scale(&ctx.spectrum.tau));
    expect_zero(&a_minus_tau.mul(m), "(A - tau I) M = 0")
}

/// Outcome of the ratio-bound certificate for a coclique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioWitness {
    pub size: usize,
    /// Exact bound `n tau / (tau - k)`.
    pub bound: QuadNum,
    /// Whether `|S|` meets the bound exactly.
    pub tight: bool,
    /// When tight: the equality condition that every outside vertex has
    /// exactly `-tau` neighbors in the coclique; `Some(Err((v, count)))`
    /// carries a violating vertex.
    pub equality_condition: Option<Result<(), (usize, usize)>>,
}

/// Certifies the ratio bound for a coclique of a strongly regular graph:
/// builds `N = (A - tau I) - ((k - tau)/n) J`, checks it is PSD by exact
/// LDL^T, compares `|S|` against `n tau/(tau-k)`, and when the bound is met
/// verifies the equality condition.
pub fn ratio_witness(g: &Graph, coclique: &BitSet) -> Result<RatioWitness, CertError> {
    let members: Vec<usize> = coclique.iter().collect();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if g.has_edge(u, v) {
                return Err(CertError::NotCoclique { u, v });
            }
        }
    }
    let report = g.verify_srg();
    let Some(p) = report.params else {
        return Err(CertError::NotSrg(report.failure));
    };
    let spectrum = params::spectrum(&p).map_err(|_| CertError::NotSrg(None))?;
    let n = g.vertex_count();
    let a = ExactMatrix::adjacency(g);
    let a_minus_tau = a.sub(&ExactMatrix::identity(n).scale(&spectrum.tau));
    let shift = QuadNum::from_int(p.k as i64)
        .checked_sub(&spectrum.tau)
        .expect("same field")
        .checked_div(&QuadNum::from_int(n as i64))
        .expect("n >= 1");
    let n_matrix = a_minus_tau.sub(&ExactMatrix::all_ones(n).scale(&shift));
    if let PsdOutcome::NotPsd { .. } = ldlt_psd(&n_matrix)? {
        return Err(CertError::CertFailure {
            check: "N = (A - tau I) - ((k-tau)/n)J is PSD",
            u: 0,
            v: 0,
            value: "negative direction found".into(),
        });
    }
    let bound = params::ratio_bound(&p).map_err(|_| CertError::NotSrg(None))?;
    let size = members.len();
    let size_q = QuadNum::from_int(size as i64);
    let cmp = size_q
        .cmp_exact(&bound)
        .expect("integer embeds in any field");
    if cmp == std::cmp::Ordering::Greater {
        return Err(CertError::CertFailure {
            check: "|S| <= n tau/(tau-k)",
            u: 0,
            v: 0,
            value: format!("coclique of size {size} exceeds bound {bound}"),
        });
    }
    let tight = cmp == std::cmp::Ordering::Equal;
    let equality_condition = if tight {
        let needed = (-&spectrum.tau)
            .to_integer()
            .and_then(|t| t.to_usize())
            .expect("tight bound forces a small integral -tau");
        let mut check = Ok(());
        for v in 0..n {
            if coclique.contains(v) {
                continue;
            }
            let count = g.neighbors(v).intersection_count(coclique);
            if count != needed {
                check = Err((v, count));
                break;
            }
        }
        Some(check)
    } else {
        None
    };
    Ok(RatioWitness {
        size,
        bound,
        tight,
        equality_condition,
    })
}

/// Jointly optimal primal/dual pair for the strict-vector-coloring program:
/// primal `M = (t-1) E_G`, dual `B = (A - tau I)/(n(-tau))`, shared objective
/// `t = 1 - k/tau`, complementary slackness `tr(MB) = 0`.
#[derive(Debug, Clone)]
pub struct ThetaCert {
    pub primal: ExactMatrix,
    pub dual: ExactMatrix,
    pub value: QuadNum,
}

/// Builds and verifies the certificate pair for a primitive strongly regular
/// graph. Every feasibility condition and the complementary-slackness
/// product are checked exactly.
pub fn theta_witnesses(g: &Graph) -> Result<ThetaCert, CertError> {
    let ctx = SrgContext::of(g)?;
    let n = g.vertex_count();
    let value = params::hoffman_bound(&ctx.params).map_err(|_| CertError::NotSrg(None))?;
    let t_minus_one = value.checked_sub(&QuadNum::one()).expect("same field");
    let e_g = cosine_matrix_with(g, &ctx);
    let primal = e_g.scale(&t_minus_one);

    // Primal feasibility: diagonal t-1, edges -1, PSD.
    for u in 0..n {
        if primal.at(u, u) != &t_minus_one {
            return Err(CertError::CertFailure {
                check: "primal diagonal = t-1",
                u,
                v: u,
                value: primal.at(u, u).to_string(),
            });
        }
    }
    let minus_one = QuadNum::from_int(-1);
    for (u, v) in g.edges() {
        if primal.at(u, v) != &minus_one {
            return Err(CertError::CertFailure {
                check: "primal edge entries = -1",
                u,
                v,
                value: primal.at(u, v).to_string(),
            });
        }
    }
    if let PsdOutcome::NotPsd { .. } = ldlt_psd(&primal)? {
        return Err(CertError::CertFailure {
            check: "primal PSD",
            u: 0,
            v: 0,
            value: "negative direction found".into(),
        });
    }

    // Dual: positive scaling of A - tau I with trace one.
    let a = ExactMatrix::adjacency(g);
    let a_minus_tau = a.sub(&ExactMatrix::identity(n).scale(&ctx.spectrum.tau));
    let scale = QuadNum::one()
        .checked_div(
            &QuadNum::from_int(n as i64)
                .checked_mul(&(-&ctx.spectrum.tau))
                .expect("same field"),
        )
        .expect("tau < 0");
    let dual = a_minus_tau.scale(&scale);
    for u in 0..n {
        for v in 0..n {
            if u != v && !g.has_edge(u, v) && !dual.at(u, v).is_zero() {
                return Err(CertError::CertFailure {
                    check: "dual vanishes on non-adjacent pairs",
                    u,
                    v,
                    value: dual.at(u, v).to_string(),
                });
            }
        }
    }
    if !dual
        .trace()
        .checked_sub(&QuadNum::one())
        .expect("same field")
        .is_zero()
    {
        return Err(CertError::CertFailure {
            check: "tr(B) = 1",
            u: 0,
            v: 0,
            value: dual.trace().to_string(),
        });
    }
    if let PsdOutcome::NotPsd { .. } = ldlt_psd(&dual)? {
        return Err(CertError::CertFailure {
            check: "dual PSD",
            u: 0,
            v: 0,
            value: "negative direction found".into(),
        });
    }
    // Dual objective sum(B) equals the shared value, and tr(MB) = 0.
    let dual_value = dual.sum();
    if dual_value != value {
        return Err(CertError::CertFailure {
            check: "sum(B) = 1 - k/tau",
            u: 0,
            v: 0,
            value: dual_value.to_string(),
        });
    }
    let slack = primal.mul(&dual).trace();
    if !slack.is_zero() {
        return Err(CertError::CertFailure {
            check: "tr(MB) = 0",
            u: 0,
            v: 0,
            value: slack.to_string(),
        });
    }
    Ok(ThetaCert {
        primal,
        dual,
        value,
    })
}

/// How the optimality tier of [`alphabeta_check`] resolved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Optimality {
    /// Dual witness `(A - tau I)`, scaled to trace one, certifies optimality
    /// with the given shared objective value.
    Certified { value: QuadNum },
    /// The graph is regular but the dual witness does not close the gap.
    Unverified { reason: String },
    /// Only regular graphs get the dual-witness tier.
    NotApplicable { reason: String },
}

/// Report of the two-tier `(alpha, beta)`-graph test.
#[derive(Debug, Clone)]
pub struct AlphaBetaReport {
    /// Tier 1: is `I + alpha A + beta (J - I - A)` positive semidefinite?
    pub gram: PsdOutcome,
    /// Tier 2 (regular graphs only): dual-witness optimality.
    pub optimality: Optimality,
}

/// Tests whether `I + alpha A_H + beta Abar_H` is the Gram matrix of a
/// strict vector coloring (feasibility tier) and, for regular `H`, whether a
/// scaled `A - tau I` dual witness certifies it optimal.
pub fn alphabeta_check(
    h: &Graph,
    alpha: &QuadNum,
    beta: &QuadNum,
) -> Result<AlphaBetaReport, CertError> {
    let n = h.vertex_count();
    let gram = ExactMatrix::from_fn(n, |u, v| {
        if u == v {
            QuadNum::one()
        } else if h.has_edge(u, v) {
            alpha.clone()
        } else {
            beta.clone()
        }
    })?;
    let gram_outcome = ldlt_psd(&gram)?;

    // A strict vector coloring has edge cosine -1/(t-1) with t >= 2.
    let alpha_in_range = alpha.sign() < 0 && *alpha >= QuadNum::from_int(-1);
    let degrees: Vec<usize> = (0..n).map(|u| h.degree(u)).collect();
    let regular = n > 0 && degrees.iter().all(|&d| d == degrees[0]);
    let optimality = if !alpha_in_range {
        Optimality::NotApplicable {
            reason: format!("alpha = {alpha} outside [-1, 0)"),
        }
    } else if !regular {
        Optimality::NotApplicable {
            reason: "graph is not regular; no dual witness available".into(),
        }
    } else if !gram_outcome.is_psd() {
        Optimality::NotApplicable {
            reason: "Gram matrix is not PSD".into(),
        }
    } else {
        certify_regular_optimality(h, &gram, alpha)
    };
    Ok(AlphaBetaReport {
        gram: gram_outcome,
        optimality,
    })
}

/// Complementary slackness for regular graphs: if `S A = tau S` for a
/// consistent scalar `tau < 0` and `A - tau I` is PSD, then the trace-one
/// scaling of `A - tau I` is a feasible dual that multiplies with the primal
/// to zero, so both are optimal with value `1 - 1/alpha`.
fn certify_regular_optimality(h: &Graph, gram: &ExactMatrix, alpha: &QuadNum) -> Optimality {
    let n = h.vertex_count();
    let a = ExactMatrix::adjacency(h);
    let product = gram.mul(&a);
    let Some((i, j, _)) = gram.first_nonzero() else {
        return Optimality::Unverified {
            reason: "Gram matrix is zero".into(),
        };
    };
    let tau = match product.at(i, j).checked_div(gram.at(i, j)) {
        Ok(t) => t,
        Err(_) => {
            return Optimality::Unverified {
                reason: "no consistent eigenvalue for the dual witness".into(),
            }
        }
    };
    let consistent = (0..n).all(|u| {
        (0..n).all(|v| match gram.at(u, v).checked_mul(&tau) {
            Ok(expected) => &expected == product.at(u, v),
            Err(_) => false,
        })
    });
    if !consistent {
        return Optimality::Unverified {
            reason: "S(A - tau I) != 0 for every scalar tau".into(),
        };
    }
    if tau.sign() >= 0 {
        return Optimality::Unverified {
            reason: format!("candidate eigenvalue {tau} is not negative"),
        };
    }
    let a_minus_tau = a.sub(&ExactMatrix::identity(n).scale(&tau));
    match ldlt_psd(&a_minus_tau) {
        Ok(PsdOutcome::Psd) => {
            let value = QuadNum::one()
                .checked_sub(&QuadNum::one().checked_div(alpha).expect("alpha != 0"))
                .expect("same field");
            Optimality::Certified { value }
        }
        Ok(PsdOutcome::NotPsd { .. }) => Optimality::Unverified {
            reason: format!("A - ({tau})I is not PSD; dual witness infeasible"),
        },
        Err(e) => Optimality::Unverified {
            reason: format!("dual PSD check failed: {e}"),
        },
    }
}
