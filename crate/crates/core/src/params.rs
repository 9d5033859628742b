//! Parameter algebra for strongly regular graphs: everything computable from
//! `(n, k, lambda, mu)` alone, in exact arithmetic.
//!
//! The restricted eigenvalues are the roots of `x^2 + (mu-lambda)x + (mu-k)`,
//! i.e. `(lambda-mu ± √Δ)/2` with `Δ = (lambda-mu)^2 + 4(k-mu)`. All derived
//! quantities (multiplicities, complement spectrum, cosines, Hoffman and
//! ratio bounds) stay inside the single quadratic field `Q(√Δ)`.

use std::fmt;

use num::bigint::BigInt;
use num::traits::{Signed, Zero};

use crate::exactnum::{QuadNum, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParamsError {
    #[error("infeasible parameters: {0}")]
    Infeasible(Infeasibility),
    #[error("parameters are imprimitive (need 1 <= mu < k)")]
    Imprimitive,
}

/// Why a parameter set fails the necessary feasibility conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Infeasibility {
    /// Violates `n > k >= 1`.
    Domain { n: u32, k: u32 },
    /// `k(k - lambda - 1) != (n - k - 1) mu`.
    EdgeIdentity { lhs: i64, rhs: i64 },
    /// Discriminant `(lambda-mu)^2 + 4(k-mu)` is not positive.
    DegenerateSpectrum { discriminant: i64 },
    /// Irrational eigenvalues require the conference condition
    /// `2k + (n-1)(lambda-mu) = 0` (equal multiplicities).
    ConferenceCondition { residual: i64 },
    /// The trace equations do not solve to positive integers.
    MultiplicityNotIntegral { m_theta: Rational },
}

impl fmt::Display for Infeasibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Infeasibility::Domain { n, k } => {
                write!(f, "need n > k >= 1, got n={n}, k={k}")
            }
            Infeasibility::EdgeIdentity { lhs, rhs } => {
                write!(f, "k(k-lambda-1) = {lhs} but (n-k-1)mu = {rhs}")
            }
            Infeasibility::DegenerateSpectrum { discriminant } => {
                write!(
                    f,
                    "discriminant (lambda-mu)^2+4(k-mu) = {discriminant} is not positive"
                )
            }
            Infeasibility::ConferenceCondition { residual } => {
                write!(
                    f,
                    "irrational eigenvalues need 2k+(n-1)(lambda-mu) = 0, got {residual}"
                )
            }
            Infeasibility::MultiplicityNotIntegral { m_theta } => {
                write!(
                    f,
                    "eigenvalue multiplicity m_theta = {m_theta} is not a positive integer"
                )
            }
        }
    }
}

/// The parameter quadruple of a strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SrgParams {
    pub n: u32,
    pub k: u32,
    pub lambda: u32,
    pub mu: u32,
}

/// Restricted eigenvalues `k > theta > tau` with their multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    pub theta: QuadNum,
    pub tau: QuadNum,
    pub m_theta: u32,
    pub m_tau: u32,
}

/// Adjacency cosine `tau/k` and non-adjacency cosine `(-tau-1)/(n-k-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cosines {
    pub alpha: QuadNum,
    pub beta: QuadNum,
}

/// Outcome of the necessary feasibility conditions (edge identity plus
/// multiplicity integrality). Krein and absolute-bound conditions are out of
/// scope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub feasible: bool,
    pub violation: Option<Infeasibility>,
}

impl SrgParams {
    pub fn new(n: u32, k: u32, lambda: u32, mu: u32) -> SrgParams {
        SrgParams { n, k, lambda, mu }
    }

    /// `1 <= mu < k`: equivalent to the graph and its complement both being
    /// connected.
    pub fn is_primitive(&self) -> bool {
        1 <= self.mu && self.mu < self.k
    }

    /// Discriminant of the restricted-eigenvalue quadratic.
    fn discriminant(&self) -> i64 {
        let diff = self.lambda as i64 - self.mu as i64;
        diff * diff + 4 * (self.k as i64 - self.mu as i64)
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.k, self.lambda, self.mu)
    }
}

/// Checks the edge-count identity and multiplicity integrality.
pub fn check_feasible(p: &SrgParams) -> FeasibilityReport {
    match feasibility_violation(p) {
        None => FeasibilityReport {
            feasible: true,
            violation: None,
        },
        Some(v) => FeasibilityReport {
            feasible: false,
            violation: Some(v),
        },
    }
}

fn feasibility_violation(p: &SrgParams) -> Option<Infeasibility> {
    let (n, k, l, m) = (p.n as i64, p.k as i64, p.lambda as i64, p.mu as i64);
    if !(n > k && k >= 1) {
        return Some(Infeasibility::Domain { n: p.n, k: p.k });
    }
    let lhs = k * (k - l - 1);
    let rhs = (n - k - 1) * m;
    if lhs != rhs {
        return Some(Infeasibility::EdgeIdentity { lhs, rhs });
    }
    let disc = p.discriminant();
    if disc <= 0 {
        return Some(Infeasibility::DegenerateSpectrum { discriminant: disc });
    }
    let sqrt = (disc as u64).isqrt();
    if sqrt * sqrt != disc as u64 {
        // Irrational eigenvalues force equal multiplicities (conference case).
        let residual = 2 * k + (n - 1) * (l - m);
        if residual != 0 || (n - 1) % 2 != 0 {
            return Some(Infeasibility::ConferenceCondition { residual });
        }
        return None;
    }
    // Rational (hence integral) eigenvalues: solve the trace equations
    //   m_theta + m_tau = n - 1,  k + m_theta*theta + m_tau*tau = 0
    // so m_theta = -(k + (n-1)tau) / (theta - tau) with theta - tau = √disc.
    let s = sqrt as i64;
    let tau2 = l - m - s; // 2*tau
    let numer = Rational::new(BigInt::from(-(2 * k + (n - 1) * tau2)), BigInt::from(2));
    let m_theta = numer / Rational::from_integer(BigInt::from(s));
    if !m_theta.is_integer()
        || !m_theta.is_positive()
        || m_theta >= Rational::from_integer(BigInt::from(n - 1))
    {
        return Some(Infeasibility::MultiplicityNotIntegral { m_theta });
    }
    None
}

/// Exact eigenvalues and multiplicities of a feasible parameter set.
pub fn spectrum(p: &SrgParams) -> Result<Spectrum, ParamsError> {
    if let Some(v) = feasibility_violation(p) {
        return Err(ParamsError::Infeasible(v));
    }
    let (n, k, l, m) = (p.n as i64, p.k as i64, p.lambda as i64, p.mu as i64);
    let disc = p.discriminant() as u64;
    let half = QuadNum::ratio(l - m, 2);
    let root_half = QuadNum::make(
        Rational::zero(),
        Rational::new(BigInt::from(1), BigInt::from(2)),
        disc,
    );
    let theta = half.checked_add(&root_half).expect("same field");
    let tau = half.checked_sub(&root_half).expect("same field");
    let (m_theta, m_tau) = if theta.is_rational() {
        let s = (disc).isqrt() as i64;
        let tau2 = l - m - s;
        let m_theta = -(2 * k + (n - 1) * tau2) / (2 * s);
        (m_theta as u32, (n - 1 - m_theta) as u32)
    } else {
        let half_n = ((n - 1) / 2) as u32;
        (half_n, half_n)
    };
    Ok(Spectrum {
        theta,
        tau,
        m_theta,
        m_tau,
    })
}

/// Complement parameters `(n, n-k-1, n-2k-2+mu, n-2k+lambda)` with the
/// complement spectrum `theta_bar = -tau-1`, `tau_bar = -theta-1`.
pub fn complement_params(p: &SrgParams) -> Result<(SrgParams, Spectrum), ParamsError> {
    let spec = spectrum(p)?;
    let (n, k, l, m) = (p.n as i64, p.k as i64, p.lambda as i64, p.mu as i64);
    let kbar = n - k - 1;
    let lbar = n - 2 * k - 2 + m;
    let mbar = n - 2 * k + l;
    if kbar < 0 || lbar < 0 || mbar < 0 {
        return Err(ParamsError::Infeasible(Infeasibility::Domain {
            n: p.n,
            k: p.k,
        }));
    }
    let comp = SrgParams::new(p.n, kbar as u32, lbar as u32, mbar as u32);
    let minus_one = QuadNum::from_int(-1);
    let theta_bar = (-&spec.tau).checked_add(&minus_one).expect("same field");
    let tau_bar = (-&spec.theta).checked_add(&minus_one).expect("same field");
    Ok((
        comp,
        Spectrum {
            theta: theta_bar,
            tau: tau_bar,
            m_theta: spec.m_tau,
            m_tau: spec.m_theta,
        },
    ))
}

/// Adjacency and non-adjacency cosines of a primitive parameter set.
pub fn cosines(p: &SrgParams) -> Result<Cosines, ParamsError> {
    if !p.is_primitive() {
        return Err(ParamsError::Imprimitive);
    }
    let spec = spectrum(p)?;
    let alpha = spec
        .tau
        .checked_div(&QuadNum::from_int(p.k as i64))
        .expect("k >= 1");
    let beta_num = (-&spec.tau)
        .checked_add(&QuadNum::from_int(-1))
        .expect("same field");
    let beta = beta_num
        .checked_div(&QuadNum::from_int(p.n as i64 - p.k as i64 - 1))
        .expect("n-k-1 >= 1 for primitive");
    Ok(Cosines { alpha, beta })
}

/// Hoffman bound `1 - k/tau`: lower bound on the chromatic number, upper
/// bound on the clique number.
pub fn hoffman_bound(p: &SrgParams) -> Result<QuadNum, ParamsError> {
    let spec = spectrum(p)?;
    let ratio = QuadNum::from_int(p.k as i64)
        .checked_div(&spec.tau)
        .expect("tau < 0 for feasible params");
    Ok(QuadNum::one().checked_sub(&ratio).expect("same field"))
}

/// Ratio bound `n·tau/(tau - k)`: upper bound on the coclique number.
pub fn ratio_bound(p: &SrgParams) -> Result<QuadNum, ParamsError> {
    let spec = spectrum(p)?;
    let numer = QuadNum::from_int(p.n as i64)
        .checked_mul(&spec.tau)
        .expect("same field");
    let denom = spec
        .tau
        .checked_sub(&QuadNum::from_int(p.k as i64))
        .expect("same field");
    Ok(numer.checked_div(&denom).expect("tau != k"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: u32, k: u32, l: u32, m: u32) -> SrgParams {
        SrgParams::new(n, k, l, m)
    }

    #[test]
    fn feasibility_examples() {
        assert!(check_feasible(&params(10, 3, 0, 1)).feasible);
        assert!(check_feasible(&params(16, 10, 6, 6)).feasible);
        let bad = check_feasible(&params(10, 3, 1, 1));
        assert!(!bad.feasible);
        assert_eq!(
            bad.violation,
            Some(Infeasibility::EdgeIdentity { lhs: 3, rhs: 6 })
        );
    }

    #[test]
    fn petersen_spectrum() {
        let s = spectrum(&params(10, 3, 0, 1)).unwrap();
        assert_eq!(s.theta, QuadNum::from_int(1));
        assert_eq!(s.tau, QuadNum::from_int(-2));
        assert_eq!((s.m_theta, s.m_tau), (5, 4));
    }

    #[test]
    fn pentagon_spectrum_is_golden() {
        let s = spectrum(&params(5, 2, 0, 1)).unwrap();
        let phi_minus = QuadNum::make(
            Rational::new(BigInt::from(-1), BigInt::from(2)),
            Rational::new(BigInt::from(1), BigInt::from(2)),
            5,
        );
        assert_eq!(s.theta, phi_minus);
        assert_eq!((s.m_theta, s.m_tau), (2, 2));
    }

    #[test]
    fn sixteen_ten_six_six_has_tau_minus_two() {
        let s = spectrum(&params(16, 10, 6, 6)).unwrap();
        assert_eq!(s.tau, QuadNum::from_int(-2));
    }

    #[test]
    fn eigenvalues_satisfy_their_quadratic() {
        // x^2 + (mu-lambda)x + (mu-k) = 0 for both theta and tau.
        let sets = [
            params(10, 3, 0, 1),
            params(16, 6, 2, 2),
            params(5, 2, 0, 1),
            params(13, 6, 2, 3),
            params(49, 12, 5, 2),
            params(16, 5, 0, 2),
        ];
        for p in sets {
            let s = spectrum(&p).unwrap();
            for x in [&s.theta, &s.tau] {
                let b = QuadNum::from_int(p.mu as i64 - p.lambda as i64);
                let c = QuadNum::from_int(p.mu as i64 - p.k as i64);
                let val = x.checked_mul(x).unwrap() + b.checked_mul(x).unwrap() + c;
                assert!(val.is_zero(), "{p}: quadratic not satisfied by {x}");
            }
            // Trace conditions.
            assert_eq!(1 + s.m_theta + s.m_tau, p.n);
            let trace = QuadNum::from_int(p.k as i64)
                + QuadNum::from_int(s.m_theta as i64)
                    .checked_mul(&s.theta)
                    .unwrap()
                + QuadNum::from_int(s.m_tau as i64)
                    .checked_mul(&s.tau)
                    .unwrap();
            assert!(trace.is_zero(), "{p}: trace not zero");
        }
    }

    #[test]
    fn ordering_k_theta_zero_tau() {
        for p in [
            params(10, 3, 0, 1),
            params(16, 6, 2, 2),
            params(5, 2, 0, 1),
            params(13, 6, 2, 3),
        ] {
            let s = spectrum(&p).unwrap();
            let k = QuadNum::from_int(p.k as i64);
            assert!(k > s.theta);
            assert!(s.theta.sign() > 0);
            assert!(s.tau.sign() < 0);
        }
    }

    #[test]
    fn complement_examples() {
        let (comp, spec) = complement_params(&params(10, 3, 0, 1)).unwrap();
        assert_eq!(comp, params(10, 6, 3, 4));
        assert_eq!(spec.theta, QuadNum::from_int(1));
        assert_eq!(spec.tau, QuadNum::from_int(-2));
        let (self_comp, _) = complement_params(&params(5, 2, 0, 1)).unwrap();
        assert_eq!(self_comp, params(5, 2, 0, 1));
    }

    #[test]
    fn complement_is_involutive_on_feasible_sets() {
        let mut seen = 0;
        'outer: for n in 2u32..=60 {
            for k in 1..n {
                for l in 0..k {
                    for m in 0..=k {
                        let p = params(n, k, l, m);
                        if !check_feasible(&p).feasible {
                            continue;
                        }
                        if complement_params(&p).is_err() {
                            continue;
                        }
                        let (c, _) = complement_params(&p).unwrap();
                        if check_feasible(&c).feasible {
                            let (back, _) = complement_params(&c).unwrap();
                            assert_eq!(back, p, "complement not involutive at {p}");
                            seen += 1;
                            if seen >= 100 {
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
        assert!(seen >= 100, "only found {seen} feasible sets to test");
    }

    #[test]
    fn shared_cosines_across_parameter_sets() {
        for p in [
            params(16, 10, 6, 6),
            params(26, 15, 8, 9),
            params(36, 20, 10, 12),
        ] {
            let c = cosines(&p).unwrap();
            assert_eq!(c.alpha, QuadNum::ratio(-1, 5), "{p}");
            assert_eq!(c.beta, QuadNum::ratio(1, 5), "{p}");
        }
    }

    #[test]
    fn cosine_intervals() {
        for p in [
            params(10, 3, 0, 1),
            params(16, 6, 2, 2),
            params(5, 2, 0, 1),
            params(13, 6, 2, 3),
            params(16, 5, 0, 2),
        ] {
            let c = cosines(&p).unwrap();
            assert!(c.alpha > QuadNum::from_int(-1) && c.alpha < QuadNum::zero());
            assert!(c.beta > QuadNum::zero() && c.beta < QuadNum::one());
        }
    }

    #[test]
    fn cosines_reject_imprimitive() {
        assert_eq!(cosines(&params(6, 4, 2, 4)), Err(ParamsError::Imprimitive));
        assert_eq!(cosines(&params(8, 3, 2, 0)), Err(ParamsError::Imprimitive));
    }

    #[test]
    fn hoffman_bound_examples() {
        let b = hoffman_bound(&params(10, 3, 0, 1)).unwrap();
        assert_eq!(b, QuadNum::ratio(5, 2));
        assert!(!b.is_integer());
        let b = hoffman_bound(&params(49, 12, 5, 2)).unwrap();
        assert_eq!(b, QuadNum::from_int(7));
        assert!(b.is_integer());
        assert_eq!(
            hoffman_bound(&params(16, 6, 2, 2)).unwrap(),
            QuadNum::from_int(4)
        );
    }

    #[test]
    fn ratio_bound_examples() {
        assert_eq!(
            ratio_bound(&params(10, 3, 0, 1)).unwrap(),
            QuadNum::from_int(4)
        );
        assert_eq!(
            ratio_bound(&params(16, 6, 2, 2)).unwrap(),
            QuadNum::from_int(4)
        );
        // Pentagon: n·tau/(tau-k) simplifies to √5.
        assert_eq!(
            ratio_bound(&params(5, 2, 0, 1)).unwrap(),
            QuadNum::sqrt_of(5)
        );
        assert!(QuadNum::from_int(2) < QuadNum::sqrt_of(5));
    }

    #[test]
    fn hoffman_equals_complement_ratio_bound() {
        // omega(G) <= ratio bound of the complement = 1 - k/tau, and the
        // same value is n divided by the ratio bound of G itself.
        for p in [
            params(10, 3, 0, 1),
            params(16, 6, 2, 2),
            params(5, 2, 0, 1),
            params(13, 6, 2, 3),
            params(49, 12, 5, 2),
        ] {
            let hoffman = hoffman_bound(&p).unwrap();
            let (comp, _) = complement_params(&p).unwrap();
            assert_eq!(hoffman, ratio_bound(&comp).unwrap(), "{p}");
            let via_self = QuadNum::from_int(p.n as i64)
                .checked_div(&ratio_bound(&p).unwrap())
                .unwrap();
            assert_eq!(hoffman, via_self, "{p}");
        }
    }
}
