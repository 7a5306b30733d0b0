use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;

use super::ratfn::RationalFn;
use crate::error::{Error, Result};

/// An element `a + b·ρ` of Q(s)[ρ]/(ρ² − 1 − s⁻⁴), where `q = s²`.
///
/// `ρ` is √(1 + q⁻²); together with `s = √q` it covers every radical the
/// quantum-group constructions need, e.g. √⟦2⟧_q = s·ρ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QScalar {
    a: RationalFn,
    b: RationalFn,
}

/// 1 + s⁻⁴, the value of ρ².
fn rho_squared() -> RationalFn {
    RationalFn::laurent(&[1, 0, 0, 0, 1], -4)
}

impl QScalar {
    pub fn new(a: RationalFn, b: RationalFn) -> Self {
        QScalar { a, b }
    }

    pub fn zero() -> Self {
        Self::from_ratfn(RationalFn::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_ratfn(RationalFn::from_int(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_ratfn(RationalFn::from_bigint(n))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::from_ratfn(RationalFn::from_rational(r))
    }

    pub fn from_ratfn(a: RationalFn) -> Self {
        QScalar {
            a,
            b: RationalFn::zero(),
        }
    }

    /// The symbol `s = q^{1/2}`.
    pub fn s() -> Self {
        Self::s_pow(1)
    }

    pub fn s_pow(k: i64) -> Self {
        Self::from_ratfn(RationalFn::s_pow(k))
    }

    /// The deformation parameter `q = s²`.
    pub fn q() -> Self {
        Self::s_pow(2)
    }

    pub fn q_pow(k: i64) -> Self {
        Self::s_pow(2 * k)
    }

    /// ρ = √(1 + q⁻²).
    pub fn rho() -> Self {
        QScalar {
            a: RationalFn::zero(),
            b: RationalFn::one(),
        }
    }

    /// `q − q⁻¹`, the ubiquitous deformation factor.
    pub fn q_minus_qinv() -> Self {
        Self::from_ratfn(RationalFn::laurent(&[-1, 0, 0, 0, 1], -2))
    }

    pub fn rational_part(&self) -> &RationalFn {
        &self.a
    }

    pub fn rho_part(&self) -> &RationalFn {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rho_free(&self) -> bool {
        self.b.is_zero()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse via the conjugate `(a − bρ) / (a² − b²ρ²)`.
    pub fn inv(&self) -> Option<Self> {
        if self.b.is_zero() {
            return self.a.inv().map(Self::from_ratfn);
        }
        let norm = self
            .a
            .mul(&self.a)
            .sub(&self.b.mul(&self.b).mul(&rho_squared()));
        let n_inv = norm.inv()?;
        Some(QScalar {
            a: self.a.mul(&n_inv),
            b: self.b.neg().mul(&n_inv),
        })
    }

    /// The substitution `s -> 1/s` (so `q -> 1/q`) applied to both
    /// components, with ρ kept as a formal symbol.
    pub fn invert_q(&self) -> Self {
        QScalar {
            a: self.a.invert_s(),
            b: self.b.invert_s(),
        }
    }

    /// Numeric value at complex `q`, with `s` and ρ taken on the principal
    /// square-root branch.
    pub fn eval(&self, q: Complex64) -> Result<Complex64> {
        if q.norm() == 0.0 {
            return Err(Error::Parameter("q must be non-zero".into()));
        }
        let s = q.sqrt();
        let a = self.a.eval(s)?;
        if self.b.is_zero() {
            return Ok(a);
        }
        let rho = (Complex64::new(1.0, 0.0) + q.powi(-2)).sqrt();
        Ok(a + self.b.eval(s)? * rho)
    }

    /// Exact value at `q = 1` for ρ-free elements.
    pub fn eval_at_one(&self) -> Result<BigRational> {
        if !self.b.is_zero() {
            return Err(Error::Parameter(
                "exact specialisation at q = 1 needs a ρ-free scalar".into(),
            ));
        }
        self.a.eval_at_one()
    }
}

pub fn eval_numeric(x: &QScalar, q: Complex64) -> Result<Complex64> {
    x.eval(q)
}

pub fn invert_q(x: &QScalar) -> QScalar {
    x.invert_q()
}

impl Default for QScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for QScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<RationalFn> for QScalar {
    fn from(a: RationalFn) -> Self {
        Self::from_ratfn(a)
    }
}

impl Add<&QScalar> for &QScalar {
    type Output = QScalar;
    fn add(self, rhs: &QScalar) -> QScalar {
        QScalar {
            a: self.a.add(&rhs.a),
            b: self.b.add(&rhs.b),
        }
    }
}

impl Sub<&QScalar> for &QScalar {
    type Output = QScalar;
    fn sub(self, rhs: &QScalar) -> QScalar {
        QScalar {
            a: self.a.sub(&rhs.a),
            b: self.b.sub(&rhs.b),
        }
    }
}

impl Mul<&QScalar> for &QScalar {
    type Output = QScalar;
    fn mul(self, rhs: &QScalar) -> QScalar {
        match (self.b.is_zero(), rhs.b.is_zero()) {
            (true, true) => QScalar::from_ratfn(self.a.mul(&rhs.a)),
            (true, false) => QScalar {
                a: self.a.mul(&rhs.a),
                b: self.a.mul(&rhs.b),
            },
            (false, true) => QScalar {
                a: self.a.mul(&rhs.a),
                b: self.b.mul(&rhs.a),
            },
            (false, false) => QScalar {
                a: self
                    .a
                    .mul(&rhs.a)
                    .add(&self.b.mul(&rhs.b).mul(&rho_squared())),
                b: self.a.mul(&rhs.b).add(&self.b.mul(&rhs.a)),
            },
        }
    }
}

impl Div<&QScalar> for &QScalar {
    type Output = QScalar;
    /// Panics on division by zero.
    fn div(self, rhs: &QScalar) -> QScalar {
        self * &rhs.inv().expect("division by zero scalar")
    }
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar {
            a: self.a.neg(),
            b: self.b.neg(),
        }
    }
}

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QScalar> for QScalar {
            type Output = QScalar;
            fn $m(self, rhs: QScalar) -> QScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QScalar> for QScalar {
            type Output = QScalar;
            fn $m(self, rhs: &QScalar) -> QScalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<QScalar> for &QScalar {
            type Output = QScalar;
            fn $m(self, rhs: QScalar) -> QScalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&QScalar> for QScalar {
    fn add_assign(&mut self, rhs: &QScalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&QScalar> for QScalar {
    fn sub_assign(&mut self, rhs: &QScalar) {
        *self = &*self - rhs;
    }
}

impl Sum for QScalar {
    fn sum<I: Iterator<Item = QScalar>>(iter: I) -> Self {
        iter.fold(QScalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a QScalar> for QScalar {
    fn sum<I: Iterator<Item = &'a QScalar>>(iter: I) -> Self {
        iter.fold(QScalar::zero(), |acc, x| acc + x)
    }
}

impl QScalar {
    /// True when the canonical rendering needs parentheses to act as a
    /// factor in a product.
    pub(crate) fn is_compound(&self) -> bool {
        if !self.b.is_zero() {
            return !self.a.is_zero() || !self.b.is_monomial();
        }
        self.a.is_laurent() && !self.a.is_monomial()
    }
}

impl fmt::Display for QScalar {
    /// Canonical text: the rational part as in [`RationalFn`]'s rendering,
    /// followed by the ρ part written as `<coefficient> * r`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let rho_part = if self.b.is_one() {
            "r".to_string()
        } else if self.b == RationalFn::from_int(-1) {
            "-r".to_string()
        } else if self.b.is_monomial() {
            format!("{} * r", self.b)
        } else {
            format!("({}) * r", self.b)
        };
        if self.a.is_zero() {
            return write!(f, "{rho_part}");
        }
        match rho_part.strip_prefix('-') {
            Some(rest) => write!(f, "{} - {}", self.a, rest),
            None => write!(f, "{} + {}", self.a, rho_part),
        }
    }
}

impl fmt::Debug for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rho_squares_to_one_plus_q_inv_squared() {
        let r = QScalar::rho();
        let expected = QScalar::one() + QScalar::q_pow(-2);
        assert_eq!(&r * &r, expected);
    }

    #[test]
    fn inverse_through_conjugate() {
        let x = QScalar::q() + QScalar::rho() * QScalar::s();
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, QScalar::one());
        assert!(QScalar::zero().inv().is_none());
    }

    #[test]
    fn sqrt_of_symmetric_two_is_s_rho() {
        // (sρ)² = q(1 + q⁻²) = q + q⁻¹
        let sr = QScalar::s() * QScalar::rho();
        assert_eq!(&sr * &sr, QScalar::q() + QScalar::q_pow(-1));
    }

    #[test]
    fn rendering() {
        assert_eq!(QScalar::rho().to_string(), "r");
        assert_eq!((QScalar::q() * QScalar::rho()).to_string(), "s^2 * r");
        assert_eq!((-QScalar::rho()).to_string(), "-r");
        assert_eq!((QScalar::one() - QScalar::rho()).to_string(), "1 - r");
        assert_eq!(QScalar::s().to_string(), "s");
        assert_eq!(QScalar::q_minus_qinv().to_string(), "s^2 - s^-2");
    }

    #[test]
    fn numeric_rho_at_one() {
        let v = QScalar::rho().eval(Complex64::new(1.0, 0.0)).unwrap();
        assert!((v.re - 2f64.sqrt()).abs() < 1e-15);
        assert!(QScalar::q_minus_qinv()
            .inv()
            .unwrap()
            .eval(Complex64::new(1.0, 0.0))
            .is_err());
    }
}
