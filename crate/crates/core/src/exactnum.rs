//! Exact arithmetic over `Q` and real quadratic fields `Q(√d)`.
//!
//! Every eigenvalue-derived scalar for one strongly regular graph lives in a
//! single quadratic field, so arithmetic between values from *different*
//! irrational fields is rejected rather than coerced. Signs are decided by
//! integer comparisons, never by floating point.

use std::cmp::Ordering;
use std::fmt;

use num::bigint::BigInt;
use num::integer::Integer;
use num::traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always reduced, denominator positive.
pub type Rational = num::BigRational;

/// Errors for quadratic-field arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumError {
    /// Arithmetic between `Q(√d1)` and `Q(√d2)` with `d1 != d2`, both irrational.
    #[error("mixed quadratic fields: Q(\u{221a}{0}) vs Q(\u{221a}{1})")]
    MixedFields(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
}

/// A number `a + b√d` with `a, b` rational and `d` squarefree.
///
/// Canonical form: `d == 0` encodes a pure rational (then `b == 0`), and
/// `d` is never 1 or divisible by a square, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadNum {
    a: Rational,
    b: Rational,
    d: u64,
}

/// Splits `D` as `s^2 * d` with `d` squarefree. `D = 0` yields `(0, 0)`.
fn squarefree_split(big_d: u64) -> (u64, u64) {
    if big_d == 0 {
        return (0, 0);
    }
    let mut rem = big_d;
    let mut s: u64 = 1;
    let mut d: u64 = 1;
    let mut p: u64 = 2;
    while p * p <= rem {
        if rem.is_multiple_of(p) {
            let mut e = 0u32;
            while rem.is_multiple_of(p) {
                rem /= p;
                e += 1;
            }
            s *= p.pow(e / 2);
            if e % 2 == 1 {
                d *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    d *= rem;
    (s, d)
}

fn rat_i64(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

impl QuadNum {
    /// Builds `a + b·√D`, factoring `D = s^2·d` and folding rational square
    /// roots into the rational part.
    pub fn make(a: Rational, b: Rational, big_d: u64) -> QuadNum {
        let (s, d) = squarefree_split(big_d);
        if d <= 1 {
            // √D is rational (s, or 0 when D = 0): fold it into `a`.
            let folded = a + b * Rational::from_integer(BigInt::from(s) * BigInt::from(d));
            return QuadNum {
                a: folded,
                b: Rational::zero(),
                d: 0,
            };
        }
        let scaled = b * Rational::from_integer(BigInt::from(s));
        if scaled.is_zero() {
            QuadNum {
                a,
                b: Rational::zero(),
                d: 0,
            }
        } else {
            QuadNum { a, b: scaled, d }
        }
    }

    /// `√D` as a quadratic number.
    pub fn sqrt_of(big_d: u64) -> QuadNum {
        QuadNum::make(Rational::zero(), Rational::one(), big_d)
    }

    pub fn from_int(v: i64) -> QuadNum {
        QuadNum::from_rational(rat_i64(v))
    }

    pub fn from_rational(a: Rational) -> QuadNum {
        QuadNum {
            a,
            b: Rational::zero(),
            d: 0,
        }
    }

    pub fn zero() -> QuadNum {
        QuadNum::from_rational(Rational::zero())
    }

    pub fn one() -> QuadNum {
        QuadNum::from_rational(Rational::one())
    }

    /// Exact ratio of two integers; panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> QuadNum {
        QuadNum::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn sqrt_coeff(&self) -> &Rational {
        &self.b
    }

    /// The squarefree radicand, 0 for pure rationals.
    pub fn field(&self) -> u64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.d == 0
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.d == 0 {
            Some(&self.a)
        } else {
            None
        }
    }

    pub fn is_integer(&self) -> bool {
        self.d == 0 && self.a.is_integer()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        if self.is_integer() {
            Some(self.a.to_integer())
        } else {
            None
        }
    }

    /// Exact sign: -1, 0, or +1, decided by comparing `a^2` to `b^2 d`.
    pub fn sign(&self) -> i8 {
        if self.b.is_zero() {
            return sign_of(&self.a);
        }
        if self.a.is_zero() {
            return sign_of(&self.b);
        }
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sa == sb {
            return sa;
        }
        // Opposite signs: |a| vs |b|√d decides, i.e. a^2 vs b^2 d.
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * rat_i64(self.d as i64);
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0, // unreachable for canonical d >= 2
        }
    }

    fn unify_field(&self, other: &QuadNum) -> Result<u64, NumError> {
        match (self.d, other.d) {
            (0, d) | (d, 0) => Ok(d),
            (x, y) if x == y => Ok(x),
            (x, y) => Err(NumError::MixedFields(x, y)),
        }
    }

    fn canonical(a: Rational, b: Rational, d: u64) -> QuadNum {
        if b.is_zero() {
            QuadNum { a, b, d: 0 }
        } else {
            QuadNum { a, b, d }
        }
    }

    pub fn checked_add(&self, other: &QuadNum) -> Result<QuadNum, NumError> {
        let d = self.unify_field(other)?;
        Ok(QuadNum::canonical(
            &self.a + &other.a,
            &self.b + &other.b,
            d,
        ))
    }

    pub fn checked_sub(&self, other: &QuadNum) -> Result<QuadNum, NumError> {
        let d = self.unify_field(other)?;
        Ok(QuadNum::canonical(
            &self.a - &other.a,
            &self.b - &other.b,
            d,
        ))
    }

    pub fn checked_mul(&self, other: &QuadNum) -> Result<QuadNum, NumError> {
        let d = self.unify_field(other)?;
        if self.b.is_zero() && other.b.is_zero() {
            return Ok(QuadNum::from_rational(&self.a * &other.a));
        }
        let radicand = rat_i64(d as i64);
        let a = &self.a * &other.a + &self.b * &other.b * radicand;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(QuadNum::canonical(a, b, d))
    }

    pub fn checked_div(&self, other: &QuadNum) -> Result<QuadNum, NumError> {
        if other.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        let d = self.unify_field(other)?;
        if other.b.is_zero() {
            return Ok(QuadNum::canonical(
                &self.a / &other.a,
                &self.b / &other.a,
                d,
            ));
        }
        // Rationalize with the conjugate; the norm is nonzero since √d is irrational.
        let norm = &other.a * &other.a - &other.b * &other.b * rat_i64(d as i64);
        let a = (&self.a * &other.a - &self.b * &other.b * rat_i64(d as i64)) / &norm;
        let b = (&self.b * &other.a - &self.a * &other.b) / &norm;
        Ok(QuadNum::canonical(a, b, d))
    }

    /// Exact comparison within a common field.
    pub fn cmp_exact(&self, other: &QuadNum) -> Result<Ordering, NumError> {
        let diff = self.checked_sub(other)?;
        Ok(match diff.sign() {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        })
    }

    /// Largest integer `f` with `f <= self`.
    pub fn floor(&self) -> BigInt {
        if self.b.is_zero() {
            return self.a.floor().to_integer();
        }
        // Enclose b√d by integer square roots, then fix up exactly.
        let (p, q, c) = self.integer_form();
        let sq = (&q * &q * BigInt::from(self.d)).sqrt();
        let approx_num = if q.is_positive() {
            &p + &sq
        } else {
            &p - &sq - BigInt::one()
        };
        let mut f = approx_num.div_floor(&c);
        loop {
            let next = QuadNum::from_rational(Rational::from_integer(&f + BigInt::one()));
            if self.cmp_exact(&next).expect("same field") != Ordering::Less {
                f += BigInt::one();
            } else {
                break;
            }
        }
        loop {
            let cur = QuadNum::from_rational(Rational::from_integer(f.clone()));
            if self.cmp_exact(&cur).expect("same field") == Ordering::Less {
                f -= BigInt::one();
            } else {
                break;
            }
        }
        f
    }

    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    /// Writes the value as `(p + q√d)/c` with integer `p, q` and `c >= 1`.
    fn integer_form(&self) -> (BigInt, BigInt, BigInt) {
        let c = self.a.denom().lcm(self.b.denom());
        let p = self.a.numer() * (&c / self.a.denom());
        let q = self.b.numer() * (&c / self.b.denom());
        (p, q, c)
    }
}

fn sign_of(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

// Panicking operator impls for use once operands are known to share a field
// (e.g. inside matrix arithmetic, which enforces a common field on entry).
macro_rules! quad_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &QuadNum {
            type Output = QuadNum;
            fn $method(self, rhs: &QuadNum) -> QuadNum {
                self.$checked(rhs).expect("quadratic field mismatch")
            }
        }
        impl std::ops::$trait for QuadNum {
            type Output = QuadNum;
            fn $method(self, rhs: QuadNum) -> QuadNum {
                (&self).$checked(&rhs).expect("quadratic field mismatch")
            }
        }
    };
}
quad_binop!(Add, add, checked_add);
quad_binop!(Sub, sub, checked_sub);
quad_binop!(Mul, mul, checked_mul);
quad_binop!(Div, div, checked_div);

impl std::ops::Neg for &QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum::canonical(-&self.a, -&self.b, self.d)
    }
}

impl std::ops::Neg for QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        -&self
    }
}

impl PartialOrd for QuadNum {
    fn partial_cmp(&self, other: &QuadNum) -> Option<Ordering> {
        self.cmp_exact(other).ok()
    }
}

impl From<i64> for QuadNum {
    fn from(v: i64) -> QuadNum {
        QuadNum::from_int(v)
    }
}

impl From<Rational> for QuadNum {
    fn from(v: Rational) -> QuadNum {
        QuadNum::from_rational(v)
    }
}

impl fmt::Display for QuadNum {
    /// Renders `p/q` for rationals and `(p+q√d)/c` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let (p, q, c) = self.integer_form();
        let root = if q == BigInt::one() {
            format!("\u{221a}{}", self.d)
        } else if q == -BigInt::one() {
            format!("-\u{221a}{}", self.d)
        } else {
            format!("{}\u{221a}{}", q, self.d)
        };
        let core = if p.is_zero() {
            root
        } else if q.is_positive() {
            format!("{}+{}", p, root)
        } else {
            format!("{}{}", p, root)
        };
        if c.is_one() {
            write!(f, "{}", core)
        } else {
            write!(f, "({})/{}", core, c)
        }
    }
}

impl fmt::Debug for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn quad(an: i64, ad: i64, bn: i64, bd: i64, big_d: u64) -> QuadNum {
        QuadNum::make(rat(an, ad), rat(bn, bd), big_d)
    }

    #[test]
    fn make_folds_square_radicands() {
        assert_eq!(quad(0, 1, 1, 1, 9), QuadNum::from_int(3));
        let golden = quad(1, 2, 1, 2, 5);
        assert_eq!(golden.field(), 5);
        assert_eq!(golden.rational_part(), &rat(1, 2));
        assert_eq!(quad(0, 1, 2, 1, 8), quad(0, 1, 4, 1, 2));
    }

    #[test]
    fn make_is_idempotent_on_canonical_values() {
        let cases = [
            quad(1, 2, 1, 2, 5),
            quad(-3, 1, 2, 7, 13),
            quad(4, 9, 0, 1, 0),
        ];
        for x in cases {
            let again = QuadNum::make(x.rational_part().clone(), x.sqrt_coeff().clone(), x.field());
            assert_eq!(again, x);
        }
    }

    #[test]
    fn sign_examples() {
        assert_eq!(quad(1, 1, -1, 1, 2).sign(), -1); // 1 - √2 < 0
        assert_eq!(quad(3, 1, -2, 1, 2).sign(), 1); // 3 - 2√2 > 0 since 9 > 8
        assert_eq!(quad(0, 1, 0, 1, 0).sign(), 0);
    }

    #[test]
    fn golden_ratio_identities() {
        let phi = quad(1, 2, 1, 2, 5);
        let psi = quad(-1, 2, 1, 2, 5);
        assert_eq!(phi.checked_mul(&psi).unwrap(), QuadNum::one());
        assert_eq!(phi.checked_sub(&psi).unwrap(), QuadNum::one());
        assert_eq!(QuadNum::one().checked_div(&phi).unwrap(), psi);
        assert_eq!(
            phi.checked_add(&quad(-1, 2, -1, 2, 5)).unwrap(),
            QuadNum::zero()
        );
    }

    #[test]
    fn mixed_fields_rejected() {
        let x = QuadNum::sqrt_of(2);
        let y = QuadNum::sqrt_of(3);
        assert_eq!(x.checked_add(&y), Err(NumError::MixedFields(2, 3)));
        assert_eq!(x.checked_mul(&y), Err(NumError::MixedFields(2, 3)));
        // Rationals embed into any field.
        assert!(x.checked_add(&QuadNum::one()).is_ok());
    }

    #[test]
    fn division_by_zero_rejected() {
        assert_eq!(
            QuadNum::one().checked_div(&QuadNum::zero()),
            Err(NumError::DivisionByZero)
        );
    }

    #[test]
    fn conjugate_products_leave_the_field() {
        let x = quad(1, 1, 1, 1, 2); // 1 + √2
        let y = quad(1, 1, -1, 1, 2); // 1 - √2
        let prod = x.checked_mul(&y).unwrap();
        assert_eq!(prod, QuadNum::from_int(-1));
        assert!(prod.is_rational());
    }

    #[test]
    fn floor_and_ceil() {
        let phi = quad(1, 2, 1, 2, 5); // ≈ 1.618
        assert_eq!(phi.floor(), BigInt::from(1));
        assert_eq!(phi.ceil(), BigInt::from(2));
        let neg = -&phi;
        assert_eq!(neg.floor(), BigInt::from(-2));
        assert_eq!(neg.ceil(), BigInt::from(-1));
        assert_eq!(QuadNum::ratio(5, 2).floor(), BigInt::from(2));
        assert_eq!(QuadNum::from_int(7).floor(), BigInt::from(7));
        let sqrt5 = QuadNum::sqrt_of(5);
        assert_eq!(sqrt5.floor(), BigInt::from(2));
        assert_eq!(sqrt5.ceil(), BigInt::from(3));
    }

    #[test]
    fn display_forms() {
        assert_eq!(QuadNum::ratio(5, 2).to_string(), "5/2");
        assert_eq!(QuadNum::from_int(-2).to_string(), "-2");
        assert_eq!(quad(1, 2, 1, 2, 5).to_string(), "(1+\u{221a}5)/2");
        assert_eq!(quad(-1, 2, -1, 2, 5).to_string(), "(-1-\u{221a}5)/2");
        assert_eq!(quad(0, 1, 4, 1, 2).to_string(), "4\u{221a}2");
        assert_eq!(QuadNum::sqrt_of(5).to_string(), "\u{221a}5");
        assert_eq!(quad(0, 1, -1, 1, 5).to_string(), "-\u{221a}5");
    }

    #[test]
    fn squares_are_nonnegative() {
        let samples = [
            quad(1, 3, -2, 5, 7),
            quad(-4, 1, 1, 2, 3),
            QuadNum::zero(),
            quad(0, 1, -3, 4, 11),
        ];
        for x in samples {
            let sq = x.checked_mul(&x).unwrap();
            assert!(sq.sign() >= 0, "square of {x} reported negative");
        }
    }

    /// Independent sign oracle: encloses √d between isqrt(d·4^k)/2^k and
    /// (isqrt(d·4^k)+1)/2^k and refines until the enclosure decides the sign.
    fn interval_sign(x: &QuadNum) -> i8 {
        if x.is_zero() {
            return 0;
        }
        if x.sqrt_coeff().is_zero() {
            return sign_of(x.rational_part());
        }
        let d = BigInt::from(x.field());
        let mut shift = 4u32;
        loop {
            let scale = BigInt::one() << shift;
            let lo_root = (&d * &scale * &scale).sqrt();
            let hi_root = &lo_root + BigInt::one();
            let lo = Rational::new(lo_root, scale.clone());
            let hi = Rational::new(hi_root, scale.clone());
            let b = x.sqrt_coeff();
            let (low_end, high_end) = if b.is_positive() {
                (x.rational_part() + b * &lo, x.rational_part() + b * &hi)
            } else {
                (x.rational_part() + b * &hi, x.rational_part() + b * &lo)
            };
            if low_end.is_positive() {
                return 1;
            }
            if high_end.is_negative() {
                return -1;
            }
            shift += 8;
            assert!(shift < 512, "interval oracle failed to converge for {x}");
        }
    }

    #[test]
    fn sign_agrees_with_interval_oracle_on_random_samples() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5e1f);
        let radicands = [0u64, 2, 3, 5, 6, 7, 10, 13, 17, 21];
        for _ in 0..10_000 {
            let an = rng.gen_range(-100i64..=100);
            let ad = rng.gen_range(1i64..=40);
            let bn = rng.gen_range(-100i64..=100);
            let bd = rng.gen_range(1i64..=40);
            let d = radicands[rng.gen_range(0..radicands.len())];
            let x = quad(an, ad, bn, bd, d);
            assert_eq!(x.sign(), interval_sign(&x), "sign mismatch for {x}");
        }
    }
}
