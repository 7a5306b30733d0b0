//! Rational functions in `s` with integer coefficients, kept in a unique
//! canonical form so that structural equality is mathematical equality.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;
use crate::error::{Error, Result};

/// `num / den * s^shift`.
///
/// Canonical form: `den` has positive leading coefficient, `num` and `den`
/// are coprime in Z[s] (including their integer content), and neither is
/// divisible by `s`. Zero is `0 / 1 * s^0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: IntPoly,
    den: IntPoly,
    shift: i64,
}

impl RationalFn {
    pub fn zero() -> Self {
        RationalFn {
            num: IntPoly::zero(),
            den: IntPoly::one(),
            shift: 0,
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        if n.is_zero() {
            return Self::zero();
        }
        RationalFn {
            num: IntPoly::constant(n),
            den: IntPoly::one(),
            shift: 0,
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::new(
            IntPoly::constant(r.numer().clone()),
            IntPoly::constant(r.denom().clone()),
            0,
        )
    }

    /// `s^k`
    pub fn s_pow(k: i64) -> Self {
        RationalFn {
            num: IntPoly::one(),
            den: IntPoly::one(),
            shift: k,
        }
    }

    /// Laurent polynomial `sum c_i s^(i + shift)`.
    pub fn laurent(coeffs: &[i64], shift: i64) -> Self {
        Self::new(IntPoly::from_i64s(coeffs), IntPoly::one(), shift)
    }

    /// Builds and canonicalises `num / den * s^shift`.
    ///
    /// Panics if `den` is zero.
    pub fn new(num: IntPoly, den: IntPoly, shift: i64) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let vn = num.valuation();
        let vd = den.valuation();
        let mut num = num.shift_down(vn);
        let mut den = den.shift_down(vd);
        let shift = shift + vn as i64 - vd as i64;
        if !den.is_constant() {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.div_exact(&g);
                den = den.div_exact(&g);
            }
        } else if !den.is_one() {
            let g = num_integer::Integer::gcd(&num.content(), &den.leading());
            if !g.is_one() {
                num = num.div_exact_int(&g);
                den = den.div_exact_int(&g);
            }
        }
        if den.leading().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RationalFn { num, den, shift }
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    /// True when the value is a Laurent polynomial in `s`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// True when the value is `c * s^k` for an integer `c`.
    pub fn is_monomial(&self) -> bool {
        self.den.is_one() && self.num.term_count() == 1
    }

    pub fn neg(&self) -> Self {
        RationalFn {
            num: self.num.neg(),
            den: self.den.clone(),
            shift: self.shift,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let base = self.shift.min(other.shift);
        let a_up = (self.shift - base) as usize;
        let b_up = (other.shift - base) as usize;
        if self.den.is_one() && other.den.is_one() {
            let num = self.num.shift_up(a_up).add(&other.num.shift_up(b_up));
            return Self::new(num, IntPoly::one(), base);
        }
        if self.den == other.den {
            let num = self.num.shift_up(a_up).add(&other.num.shift_up(b_up));
            return Self::new(num, self.den.clone(), base);
        }
        let num = self
            .num
            .shift_up(a_up)
            .mul(&other.den)
            .add(&other.num.shift_up(b_up).mul(&self.den));
        Self::new(num, self.den.mul(&other.den), base)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            // Product of polynomials with non-zero constant terms keeps a
            // non-zero constant term, and Z[s] content is multiplicative.
            return RationalFn {
                num: self.num.mul(&other.num),
                den: IntPoly::one(),
                shift: self.shift + other.shift,
            };
        }
        // Cross-cancel before multiplying to keep sizes down.
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1);
        let d2 = other.den.div_exact(&g1);
        let n2 = other.num.div_exact(&g2);
        let d1 = self.den.div_exact(&g2);
        let mut num = n1.mul(&n2);
        let mut den = d1.mul(&d2);
        if den.leading().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RationalFn {
            num,
            den,
            shift: self.shift + other.shift,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Some(RationalFn {
            num,
            den,
            shift: -self.shift,
        })
    }

    /// Panics on division by zero.
    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv().expect("division by zero rational function"))
    }

    /// The substitution `s -> 1/s`.
    pub fn invert_s(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let dn = self.num.degree() as i64;
        let dd = self.den.degree() as i64;
        Self::new(
            self.num.reversed(),
            self.den.reversed(),
            -self.shift - dn + dd,
        )
    }

    /// Evaluates at a complex `s`, reporting a pole when the denominator
    /// vanishes there.
    pub fn eval(&self, s: Complex64) -> Result<Complex64> {
        let den = self.den.eval(s);
        let scale = self.den.eval_abs(s.norm()).max(f64::MIN_POSITIVE);
        if den.norm() <= 1e-13 * scale || s.norm() == 0.0 && self.shift < 0 {
            return Err(Error::Pole {
                denominator: self.pole_description(),
                q: format_complex(s * s),
            });
        }
        Ok(self.num.eval(s) / den * s.powi(self.shift as i32))
    }

    fn pole_description(&self) -> String {
        let d = LaurentDisplay {
            poly: &self.den,
            shift: 0,
        };
        if self.den.is_one() {
            format!("s^{}", -self.shift)
        } else {
            format!("{d}")
        }
    }

    /// Exact value at `s = 1`.
    pub fn eval_at_one(&self) -> Result<BigRational> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            return Err(Error::Pole {
                denominator: self.pole_description(),
                q: "1".into(),
            });
        }
        Ok(BigRational::new(self.num.eval_at_one(), d))
    }

    /// Largest and smallest exponent appearing, for Laurent polynomials.
    pub fn laurent_terms(&self) -> Option<Vec<(i64, BigInt)>> {
        if !self.den.is_one() {
            return None;
        }
        Some(
            self.num
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i64 + self.shift, c.clone()))
                .collect(),
        )
    }
}

/// `a`, `a+bi` or `a-bi`.
pub fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

struct LaurentDisplay<'a> {
    poly: &'a IntPoly,
    shift: i64,
}

impl fmt::Display for LaurentDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt_laurent(self.shift, f)
    }
}

impl fmt::Display for RationalFn {
    /// Laurent polynomials render as expanded terms (`s^2 + 1 + s^-2`);
    /// proper fractions as `((P)/(Q))*s^k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return self.num.fmt_laurent(self.shift, f);
        }
        write!(f, "(({})/({}))", self.num, self.den)?;
        if self.shift != 0 {
            write!(f, "*s^{}", self.shift)?;
        }
        Ok(())
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
