//! q-numbers, q-factorials, q-Pochhammer symbols, the q-exponential and
//! truncated basic hypergeometric series.

use num_complex::Complex64;

use super::qscalar::QScalar;
use super::ratfn::RationalFn;
use crate::error::{Error, Result};

/// Minimal field interface shared by the exact scalars and complex numbers,
/// so the series code is written once for both.
pub trait QField: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Option<Self>;
}

impl QField for QScalar {
    fn zero() -> Self {
        QScalar::zero()
    }
    fn one() -> Self {
        QScalar::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero(&self) -> bool {
        QScalar::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        QScalar::inv(self)
    }
}

impl QField for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero(&self) -> bool {
        self.norm() == 0.0
    }
    fn inv(&self) -> Option<Self> {
        if self.norm() == 0.0 {
            None
        } else {
            Some(Complex64::new(1.0, 0.0) / self)
        }
    }
}

/// Heine's basic number `[n]_base = 1 + base + … + base^{n−1}`.
pub fn heine_number<F: QField>(n: u32, base: &F) -> F {
    let mut acc = F::zero();
    let mut p = F::one();
    for _ in 0..n {
        acc = acc.add(&p);
        p = p.mul(base);
    }
    acc
}

/// `[n]_q = (1 − qⁿ)/(1 − q)` as a polynomial in q.
pub fn q_int_heine(n: u32) -> QScalar {
    heine_number(n, &QScalar::q())
}

/// `⟦n⟧_q = (qⁿ − q⁻ⁿ)/(q − q⁻¹) = q^{n−1} + q^{n−3} + … + q^{1−n}`.
pub fn q_int_sym(n: i64) -> QScalar {
    let m = n.unsigned_abs() as i64;
    if m == 0 {
        return QScalar::zero();
    }
    // exponents of s run over 2(m−1), 2(m−3), …, −2(m−1)
    let mut coeffs = vec![0i64; (4 * (m - 1) + 1) as usize];
    for k in 0..m {
        coeffs[(4 * k) as usize] = 1;
    }
    let v = QScalar::from_ratfn(RationalFn::laurent(&coeffs, -2 * (m - 1)));
    if n < 0 {
        -v
    } else {
        v
    }
}

/// Numeric `⟦n⟧_q` for real positive q, via sinh(n·ln q)/sinh(ln q) so that
/// the value stays accurate as q approaches 1.
pub fn q_int_sym_real(n: f64, q: f64) -> f64 {
    let h = q.ln();
    if h.abs() < 1e-300 {
        return n;
    }
    (n * h).sinh() / h.sinh()
}

/// `[n]_base! = [n]_base [n−1]_base … [1]_base`, with `[0]! = 1`.
pub fn q_factorial<F: QField>(n: u32, base: &F) -> F {
    (1..=n).fold(F::one(), |acc, k| acc.mul(&heine_number(k, base)))
}

/// `(x; q)_n = ∏_{k<n} (1 − x q^k)` for an arbitrary base `q`.
pub fn q_pochhammer<F: QField>(x: &F, q: &F, n: u32) -> F {
    let mut acc = F::one();
    let mut xq = x.clone();
    for _ in 0..n {
        acc = acc.mul(&F::one().sub(&xq));
        xq = xq.mul(q);
    }
    acc
}

/// `(x; q)_n` with the symbolic deformation parameter as base.
pub fn q_shifted_factorial(x: &QScalar, n: u32) -> QScalar {
    q_pochhammer(x, &QScalar::q(), n)
}

/// Truncated q-exponential `Σ_{n<terms} zⁿ / [n]_base!`.
pub fn q_exp<F: QField>(z: &F, base: &F, terms: usize) -> Result<F> {
    let mut sum = F::zero();
    let mut zn = F::one();
    let mut fact = F::one();
    for n in 0..terms {
        if n > 0 {
            zn = zn.mul(z);
            fact = fact.mul(&heine_number(n as u32, base));
        }
        let inv = fact.inv().ok_or_else(|| Error::Domain {
            index: n,
            reason: format!("[{n}]! vanishes for this base"),
        })?;
        sum = sum.add(&zn.mul(&inv));
    }
    Ok(sum)
}

/// Partial sum of `rφs(a; b; q, z)` through `terms` terms, including the
/// `((−1)ⁿ q^{n(n−1)/2})^{1+s−r}` factor.
pub fn basic_hypergeometric(
    a: &[Complex64],
    b: &[Complex64],
    q: Complex64,
    z: Complex64,
    terms: usize,
) -> Result<Complex64> {
    let extra = 1 + b.len() as i64 - a.len() as i64;
    let one = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    // running ratio of Pochhammer products and powers of z
    let mut num = one;
    let mut den = one;
    let mut zn = one;
    let mut qk = one; // q^n
    let mut tri = one; // q^{n(n-1)/2}
    for n in 0..terms {
        if n > 0 {
            let k = qk; // q^{n-1}
            tri *= k;
            for ai in a {
                num *= one - ai * k;
            }
            for bi in b {
                den *= one - bi * k;
            }
            den *= one - q * k;
            zn *= z;
            qk *= q;
        }
        if den.norm() == 0.0 {
            return Err(Error::Domain {
                index: n,
                reason: "a lower Pochhammer factor vanishes".into(),
            });
        }
        let sign = if n % 2 == 1 { -one } else { one };
        let factor = powi_signed(sign * tri, extra);
        sum += num / den * factor * zn;
    }
    Ok(sum)
}

fn powi_signed(x: Complex64, e: i64) -> Complex64 {
    if e == 0 {
        Complex64::new(1.0, 0.0)
    } else {
        x.powi(e as i32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn heine_numbers() {
        assert_eq!(q_int_heine(0), QScalar::zero());
        assert_eq!(q_int_heine(1), QScalar::one());
        let q = QScalar::q();
        assert_eq!(q_int_heine(3), QScalar::one() + &q + &q * &q);
    }

    #[test]
    fn symmetric_numbers() {
        assert_eq!(q_int_sym(0), QScalar::zero());
        assert_eq!(q_int_sym(2), QScalar::q() + QScalar::q_pow(-1));
        for n in 1..=5 {
            assert_eq!(q_int_sym(-n), -q_int_sym(n));
        }
        // defining quotient
        for n in 1..=6 {
            let lhs = &q_int_sym(n) * &QScalar::q_minus_qinv();
            assert_eq!(lhs, QScalar::q_pow(n) - QScalar::q_pow(-n));
        }
    }

    #[test]
    fn factorials() {
        let q = QScalar::q();
        assert_eq!(q_factorial(0, &q), QScalar::one());
        assert_eq!(q_factorial(2, &q), QScalar::one() + &q);
        // [2]_{q²}[3]_{q²} = (1+q²)(1+q²+q⁴), expanded by hand:
        // 1 + 2q² + 2q⁴ + q⁶
        let q2 = &q * &q;
        let expected = QScalar::from_ratfn(RationalFn::laurent(
            &[1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1],
            0,
        ));
        assert_eq!(q_factorial(3, &q2), expected);
    }

    #[test]
    fn shifted_factorials() {
        let x = QScalar::s_pow(3);
        assert_eq!(q_shifted_factorial(&x, 0), QScalar::one());
        let q = QScalar::q();
        let expected = (QScalar::one() - &x) * (QScalar::one() - &x * &q);
        assert_eq!(q_shifted_factorial(&x, 2), expected);
        assert_eq!(q_shifted_factorial(&q, 1), QScalar::one() - &q);
    }

    #[test]
    fn q_exp_exact_three_terms() {
        let z = QScalar::s_pow(5);
        let q = QScalar::q();
        let expected = QScalar::one() + &z + &(&z * &z) / &(QScalar::one() + &q);
        assert_eq!(q_exp(&z, &q, 3).unwrap(), expected);
        assert_eq!(q_exp(&QScalar::zero(), &q, 7).unwrap(), QScalar::one());
    }

    #[test]
    fn q_exp_classical_limit() {
        let v = q_exp(&c(1.0), &c(1.0), 30).unwrap();
        assert!((v.re - std::f64::consts::E).abs() < 1e-9);
    }

    #[test]
    fn phi_one_zero_is_q_exponential() {
        let q = 0.5;
        let z = 1.0;
        let phi = basic_hypergeometric(&[c(0.0)], &[], c(q), c((1.0 - q) * z), 25).unwrap();
        let e = q_exp(&c(z), &c(q), 25).unwrap();
        assert!((phi - e).norm() < 1e-12);
    }

    #[test]
    fn phi_with_zero_argument() {
        let v = basic_hypergeometric(&[c(0.3), c(0.2)], &[c(0.7)], c(0.5), c(0.0), 10).unwrap();
        assert_eq!(v, c(1.0));
    }

    #[test]
    fn terminating_two_phi_one() {
        // a1 = q^{-1}: (a1; q)_n vanishes for n ≥ 2, so only two terms survive.
        let q = 0.5;
        let (a1, a2, b1, z) = (1.0 / q, 0.4, 0.8, 0.3);
        let series = basic_hypergeometric(&[c(a1), c(a2)], &[c(b1)], c(q), c(z), 12).unwrap();
        // brute force: n = 0 gives 1; n = 1 gives (1−a1)(1−a2) z / ((1−b1)(1−q))
        let direct = 1.0 + (1.0 - a1) * (1.0 - a2) * z / ((1.0 - b1) * (1.0 - q));
        assert!((series.re - direct).abs() < 1e-14);
        assert_eq!(series.im, 0.0);
    }

    #[test]
    fn vanishing_lower_parameter_is_domain_error() {
        // b = q^{-2}: (b; q)_3 contains (1 − q^{-2} q^2) = 0
        let q = 0.5;
        let err = basic_hypergeometric(&[], &[c(1.0 / (q * q))], c(q), c(0.1), 5).unwrap_err();
        assert_eq!(
            err,
            Error::Domain {
                index: 3,
                reason: "a lower Pochhammer factor vanishes".into()
            }
        );
    }

    #[test]
    fn real_symmetric_number_is_stable_near_one() {
        assert!((q_int_sym_real(3.0, 1.0 + 1e-9) - 3.0).abs() < 1e-8);
        assert!((q_int_sym_real(2.0, 1.5) - (1.5 + 1.0 / 1.5)).abs() < 1e-14);
    }
}
