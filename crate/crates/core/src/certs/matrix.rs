//! Dense square matrices over one quadratic field, with an exact LDL^T
//! positive-semidefiniteness test.

use num::bigint::BigInt;
use num::traits::One;

use crate::exactnum::{QuadNum, Rational};
use crate::graphs::Graph;

use super::CertError;

/// Certificate matrices target desk-scale graphs; exact O(n^3) products and
/// factorizations stay cheap there.
pub const MAX_MATRIX: usize = 256;

/// Square matrix of exact entries, all living in one quadratic field.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    n: usize,
    entries: Vec<QuadNum>,
    symmetric: bool,
    field: u64,
}

impl ExactMatrix {
    /// Builds an `n x n` matrix entrywise, rejecting mixed quadratic fields.
    pub fn from_fn(
        n: usize,
        mut f: impl FnMut(usize, usize) -> QuadNum,
    ) -> Result<ExactMatrix, CertError> {
        if n > MAX_MATRIX {
            return Err(CertError::MatrixTooLarge { n });
        }
        let mut entries = Vec::with_capacity(n * n);
        let mut field = 0u64;
        for i in 0..n {
            for j in 0..n {
                let v = f(i, j);
                match (field, v.field()) {
                    (_, 0) => {}
                    (0, d) => field = d,
                    (a, b) if a == b => {}
                    (a, b) => return Err(CertError::MixedFields(a, b)),
                }
                entries.push(v);
            }
        }
        let mut m = ExactMatrix {
            n,
            entries,
            symmetric: false,
            field,
        };
        m.symmetric = (0..n).all(|i| (0..i).all(|j| m.at(i, j) == m.at(j, i)));
        Ok(m)
    }

    pub fn zeros(n: usize) -> ExactMatrix {
        ExactMatrix::from_fn(n, |_, _| QuadNum::zero()).expect("constant entries")
    }

    pub fn identity(n: usize) -> ExactMatrix {
        ExactMatrix::from_fn(n, |i, j| {
            if i == j {
                QuadNum::one()
            } else {
                QuadNum::zero()
            }
        })
        .expect("constant entries")
    }

    pub fn all_ones(n: usize) -> ExactMatrix {
        ExactMatrix::from_fn(n, |_, _| QuadNum::one()).expect("constant entries")
    }

    /// 0/1 adjacency matrix of a graph.
    pub fn adjacency(g: &Graph) -> ExactMatrix {
        ExactMatrix::from_fn(g.vertex_count(), |i, j| {
            if g.has_edge(i, j) {
                QuadNum::one()
            } else {
                QuadNum::zero()
            }
        })
        .expect("0/1 entries")
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    /// Common squarefree radicand of the entries (0 when all rational).
    pub fn field(&self) -> u64 {
        self.field
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &QuadNum {
        &self.entries[i * self.n + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// First nonzero entry in row-major order, if any.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &QuadNum)> {
        for i in 0..self.n {
            for j in 0..self.n {
                if !self.at(i, j).is_zero() {
                    return Some((i, j, self.at(i, j)));
                }
            }
        }
        None
    }

    pub fn add(&self, other: &ExactMatrix) -> ExactMatrix {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &ExactMatrix) -> ExactMatrix {
        self.zip(other, |a, b| a - b)
    }

    /// Entrywise (Schur) product.
    pub fn schur(&self, other: &ExactMatrix) -> ExactMatrix {
        self.zip(other, |a, b| a * b)
    }

    fn zip(&self, other: &ExactMatrix, f: impl Fn(&QuadNum, &QuadNum) -> QuadNum) -> ExactMatrix {
        assert_eq!(self.n, other.n, "matrix dimension mismatch");
        ExactMatrix::from_fn(self.n, |i, j| f(self.at(i, j), other.at(i, j)))
            .expect("operands share a field")
    }

    pub fn scale(&self, c: &QuadNum) -> ExactMatrix {
        ExactMatrix::from_fn(self.n, |i, j| self.at(i, j) * c).expect("operands share a field")
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.n, other.n, "matrix dimension mismatch");
        ExactMatrix::from_fn(self.n, |i, j| {
            let mut acc = QuadNum::zero();
            for t in 0..self.n {
                let a = self.at(i, t);
                let b = other.at(t, j);
                if !a.is_zero() && !b.is_zero() {
                    acc = acc + a * b;
                }
            }
            acc
        })
        .expect("operands share a field")
    }

    pub fn trace(&self) -> QuadNum {
        let mut acc = QuadNum::zero();
        for i in 0..self.n {
            acc = acc + self.at(i, i).clone();
        }
        acc
    }

    /// Sum of all entries.
    pub fn sum(&self) -> QuadNum {
        let mut acc = QuadNum::zero();
        for e in &self.entries {
            acc = acc + e.clone();
        }
        acc
    }

    /// `tr(M^T N)` without forming the product, for the trace/Schur identity.
    pub fn trace_product(&self, other: &ExactMatrix) -> QuadNum {
        assert_eq!(self.n, other.n, "matrix dimension mismatch");
        let mut acc = QuadNum::zero();
        for i in 0..self.n {
            for j in 0..self.n {
                let a = self.at(i, j);
                let b = other.at(i, j);
                if !a.is_zero() && !b.is_zero() {
                    acc = acc + a * b;
                }
            }
        }
        acc
    }

    /// Evaluates the quadratic form `y^T M y` for a rational vector.
    pub fn quadratic_form(&self, y: &[Rational]) -> QuadNum {
        assert_eq!(y.len(), self.n);
        let mut acc = QuadNum::zero();
        for i in 0..self.n {
            if y[i] == Rational::from_integer(BigInt::from(0)) {
                continue;
            }
            for j in 0..self.n {
                if y[j] == Rational::from_integer(BigInt::from(0)) {
                    continue;
                }
                let coeff = QuadNum::from_rational(&y[i] * &y[j]);
                acc = acc + coeff * self.at(i, j).clone();
            }
        }
        acc
    }
}

impl std::fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.n, self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Outcome of the exact positive-semidefiniteness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PsdOutcome {
    Psd,
    /// A rational vector with `y^T M y < 0`.
    NotPsd {
        witness: Vec<Rational>,
    },
}

impl PsdOutcome {
    pub fn is_psd(&self) -> bool {
        matches!(self, PsdOutcome::Psd)
    }
}

/// Symmetric-pivot LDL^T over `Q(√d)`: PSD iff every pivot is nonnegative
/// and any zero pivot has an all-zero row at its elimination step. On
/// failure a rational certificate vector `y` with `y^T M y < 0` is returned.
pub fn ldlt_psd(m: &ExactMatrix) -> Result<PsdOutcome, CertError> {
    if !m.is_symmetric() {
        return Err(CertError::AsymmetricInput);
    }
    let n = m.size();
    let mut work: Vec<QuadNum> = m.entries.clone();
    // Unit lower-triangular multipliers; column k is filled when pivot k fires.
    let mut lower = vec![QuadNum::zero(); n * n];
    for k in 0..n {
        let pivot = work[k * n + k].clone();
        match pivot.sign() {
            -1 => {
                let y = back_substitute(&lower, n, &reduced_unit(n, k));
                return Ok(not_psd_with(m, y));
            }
            0 => {
                if let Some(j) = ((k + 1)..n).find(|&j| !work[k * n + j].is_zero()) {
                    // 2x2 principal minor [[0, c], [c, e]] of the Schur
                    // complement is indefinite: t = -(e+1)/(2c) makes the
                    // form value exactly -1.
                    let c = work[k * n + j].clone();
                    let e = work[j * n + j].clone();
                    let t = (-(e + QuadNum::one())) / (QuadNum::from_int(2) * c);
                    let mut z = vec![QuadNum::zero(); n];
                    z[k] = t;
                    z[j] = QuadNum::one();
                    let y = back_substitute(&lower, n, &z);
                    return Ok(not_psd_with(m, y));
                }
                // Zero row: nothing to eliminate.
            }
            _ => {
                for i in (k + 1)..n {
                    let l = &work[i * n + k] / &pivot;
                    if l.is_zero() {
                        continue;
                    }
                    for j in (k + 1)..n {
                        let delta = &l * &work[k * n + j];
                        work[i * n + j] = &work[i * n + j] - &delta;
                    }
                    lower[i * n + k] = l;
                }
            }
        }
    }
    Ok(PsdOutcome::Psd)
}

fn reduced_unit(n: usize, k: usize) -> Vec<QuadNum> {
    let mut z = vec![QuadNum::zero(); n];
    z[k] = QuadNum::one();
    z
}

/// Solves `L^T y = z` for the unit lower-triangular multiplier matrix
/// (implicit ones on the diagonal).
fn back_substitute(lower: &[QuadNum], n: usize, z: &[QuadNum]) -> Vec<QuadNum> {
    let mut y = vec![QuadNum::zero(); n];
    for i in (0..n).rev() {
        let mut acc = z[i].clone();
        for r in (i + 1)..n {
            let l = &lower[r * n + i];
            if !l.is_zero() && !y[r].is_zero() {
                acc = acc - l * &y[r];
            }
        }
        y[i] = acc;
    }
    y
}

/// Converts an exact (possibly irrational) negative direction into a
/// rational certificate by replacing √d with convergents until the exact
/// form value stays negative.
fn not_psd_with(m: &ExactMatrix, y: Vec<QuadNum>) -> PsdOutcome {
    if m.field() == 0
        || y.iter()
            .all(|v| v.sqrt_coeff() == &Rational::from_integer(BigInt::from(0)))
    {
        let witness: Vec<Rational> = y.iter().map(|v| v.rational_part().clone()).collect();
        debug_assert!(m.quadratic_form(&witness).sign() < 0);
        return PsdOutcome::NotPsd { witness };
    }
    let d = BigInt::from(m.field());
    let mut shift = 8u32;
    loop {
        let scale = BigInt::one() << shift;
        let approx = Rational::new((&d * &scale * &scale).sqrt(), scale);
        let witness: Vec<Rational> = y
            .iter()
            .map(|v| v.rational_part() + v.sqrt_coeff() * &approx)
            .collect();
        if m.quadratic_form(&witness).sign() < 0 {
            return PsdOutcome::NotPsd { witness };
        }
        shift += 16;
        assert!(
            shift < 2048,
            "rationalizing the PSD witness did not converge"
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(values: &[i64]) -> ExactMatrix {
        ExactMatrix::from_fn(values.len(), |i, j| {
            if i == j {
                QuadNum::from_int(values[i])
            } else {
                QuadNum::zero()
            }
        })
        .unwrap()
    }

    #[test]
    fn identity_is_psd() {
        assert_eq!(
            ldlt_psd(&ExactMatrix::identity(5)).unwrap(),
            PsdOutcome::Psd
        );
    }

    #[test]
    fn indefinite_diagonal_yields_the_expected_witness() {
        let m = diag(&[1, -1]);
        match ldlt_psd(&m).unwrap() {
            PsdOutcome::NotPsd { witness } => {
                assert_eq!(witness[0], Rational::from_integer(BigInt::from(0)));
                assert_eq!(witness[1], Rational::from_integer(BigInt::from(1)));
            }
            PsdOutcome::Psd => panic!("diag(1,-1) reported PSD"),
        }
    }

    #[test]
    fn witnesses_certify_negativity() {
        let cases = [
            diag(&[1, -1, 3]),
            // zero diagonal with nonzero off-diagonal entry
            ExactMatrix::from_fn(2, |i, j| {
                if i == j {
                    QuadNum::zero()
                } else {
                    QuadNum::one()
                }
            })
            .unwrap(),
            // irrational entries: [[1, √2], [√2, 1]] has eigenvalue 1-√2 < 0
            ExactMatrix::from_fn(2, |i, j| {
                if i == j {
                    QuadNum::one()
                } else {
                    QuadNum::sqrt_of(2)
                }
            })
            .unwrap(),
        ];
        for m in &cases {
            match ldlt_psd(m).unwrap() {
                PsdOutcome::NotPsd { witness } => {
                    assert!(m.quadratic_form(&witness).sign() < 0);
                }
                PsdOutcome::Psd => panic!("indefinite matrix reported PSD: {m:?}"),
            }
        }
    }

    #[test]
    fn psd_with_zero_pivot_row() {
        // [[1,1,0],[1,1,0],[0,0,2]] is PSD with a rank deficiency.
        let m = ExactMatrix::from_fn(3, |i, j| match (i, j) {
            (0, 0) | (0, 1) | (1, 0) | (1, 1) => QuadNum::one(),
            (2, 2) => QuadNum::from_int(2),
            _ => QuadNum::zero(),
        })
        .unwrap();
        assert_eq!(ldlt_psd(&m).unwrap(), PsdOutcome::Psd);
    }

    #[test]
    fn asymmetric_input_rejected() {
        let m = ExactMatrix::from_fn(2, |i, j| QuadNum::from_int((i * 2 + j) as i64)).unwrap();
        assert_eq!(ldlt_psd(&m), Err(CertError::AsymmetricInput));
    }

    #[test]
    fn mixed_fields_rejected_at_construction() {
        let r = ExactMatrix::from_fn(2, |i, _| {
            if i == 0 {
                QuadNum::sqrt_of(2)
            } else {
                QuadNum::sqrt_of(3)
            }
        });
        assert_eq!(r.unwrap_err(), CertError::MixedFields(2, 3));
    }

    #[test]
    fn gram_matrices_are_psd() {
        // M = B^T B for a fixed integer B.
        let b = [[1i64, 2, 0], [0, 1, -1], [3, 0, 1]];
        let m = ExactMatrix::from_fn(3, |i, j| {
            QuadNum::from_int((0..3).map(|t| b[t][i] * b[t][j]).sum())
        })
        .unwrap();
        assert_eq!(ldlt_psd(&m).unwrap(), PsdOutcome::Psd);
    }
}
