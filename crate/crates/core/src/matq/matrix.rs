use std::fmt;
use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ncpoly::{NCPoly, Presentation};
use crate::scalars::QScalar;

/// The coefficient ring of a matrix: exact scalars, or an algebra given by
/// a presentation (products are reduced to normal form).
pub trait Ring {
    type Elem: Clone + PartialEq + fmt::Debug;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, c: &QScalar, a: &Self::Elem) -> Self::Elem;
    fn from_scalar(&self, c: &QScalar) -> Self::Elem;
    fn render(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

/// The exact coefficient field.
#[derive(Clone, Copy, Debug, Default)]
pub struct Scalars;

impl Ring for Scalars {
    type Elem = QScalar;
    fn zero(&self) -> QScalar {
        QScalar::zero()
    }
    fn one(&self) -> QScalar {
        QScalar::one()
    }
    fn is_zero(&self, x: &QScalar) -> bool {
        x.is_zero()
    }
    fn add(&self, a: &QScalar, b: &QScalar) -> QScalar {
        a + b
    }
    fn neg(&self, a: &QScalar) -> QScalar {
        -a
    }
    fn mul(&self, a: &QScalar, b: &QScalar) -> QScalar {
        a * b
    }
    fn scale(&self, c: &QScalar, a: &QScalar) -> QScalar {
        c * a
    }
    fn from_scalar(&self, c: &QScalar) -> QScalar {
        c.clone()
    }
    fn render(&self, a: &QScalar) -> String {
        a.to_string()
    }
    fn sub(&self, a: &QScalar, b: &QScalar) -> QScalar {
        a - b
    }
}

impl Ring for Presentation {
    type Elem = NCPoly;
    fn zero(&self) -> NCPoly {
        NCPoly::zero()
    }
    fn one(&self) -> NCPoly {
        NCPoly::one()
    }
    fn is_zero(&self, x: &NCPoly) -> bool {
        x.is_zero()
    }
    fn add(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        a.add(b)
    }
    fn neg(&self, a: &NCPoly) -> NCPoly {
        a.neg()
    }
    fn mul(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        Presentation::mul(self, a, b)
    }
    fn scale(&self, c: &QScalar, a: &NCPoly) -> NCPoly {
        a.scale(c)
    }
    fn from_scalar(&self, c: &QScalar) -> NCPoly {
        NCPoly::constant(c.clone())
    }
    fn render(&self, a: &NCPoly) -> String {
        Presentation::render(self, a)
    }
    fn sub(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        a.sub(b)
    }
}

/// Dense row-major matrix. Shape mismatches in arithmetic are programming
/// errors and panic; the fallible entry points return [`Error::Dimension`].
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    entries: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged or empty rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// 0-based entry access.
    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: E) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn entries(&self) -> &[E] {
        &self.entries
    }

    pub fn map<F: Clone>(&self, f: impl Fn(&E) -> F) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Row/column positions (0-based) with their entries.
    pub fn indexed(&self) -> impl Iterator<Item = (usize, usize, &E)> {
        let c = self.cols;
        self.entries
            .iter()
            .enumerate()
            .map(move |(k, e)| (k / c, k % c, e))
    }
}

impl<E: Clone + PartialEq + fmt::Debug> Matrix<E> {
    pub fn zeros_in<R: Ring<Elem = E>>(r: &R, rows: usize, cols: usize) -> Self {
        let z = r.zero();
        Matrix::from_fn(rows, cols, |_, _| z.clone())
    }

    pub fn identity_in<R: Ring<Elem = E>>(r: &R, n: usize) -> Self {
        let (z, o) = (r.zero(), r.one());
        Matrix::from_fn(n, n, |i, j| if i == j { o.clone() } else { z.clone() })
    }

    pub fn is_zero_in<R: Ring<Elem = E>>(&self, r: &R) -> bool {
        self.entries.iter().all(|x| r.is_zero(x))
    }

    pub fn add_in<R: Ring<Elem = E>>(&self, r: &R, other: &Self) -> Self {
        self.assert_same_shape(other);
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| r.add(a, b))
                .collect(),
        }
    }

    pub fn sub_in<R: Ring<Elem = E>>(&self, r: &R, other: &Self) -> Self {
        self.assert_same_shape(other);
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| r.sub(a, b))
                .collect(),
        }
    }

    pub fn scale_in<R: Ring<Elem = E>>(&self, r: &R, c: &QScalar) -> Self {
        self.map(|x| r.scale(c, x))
    }

    pub fn mul_in<R: Ring<Elem = E>>(&self, r: &R, other: &Self) -> Self {
        self.checked_mul_in(r, other)
            .unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn checked_mul_in<R: Ring<Elem = E>>(&self, r: &R, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros_in(r, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if r.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if r.is_zero(b) {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.entries[idx] = r.add(&out.entries[idx], &r.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product with entries `a_{ij} b_{kl}` at row `i·rows(b)+k`.
    pub fn kron_in<R: Ring<Elem = E>>(&self, r: &R, other: &Self) -> Self {
        let (br, bc) = (other.rows, other.cols);
        Matrix::from_fn(self.rows * br, self.cols * bc, |i, j| {
            r.mul(self.get(i / br, j / bc), other.get(i % br, j % bc))
        })
    }

    /// Places `self`, acting on the tensor factors at `slots` (0-based, in
    /// the order of `self`'s factors), inside the tensor product of spaces
    /// with dimensions `dims`, with the identity on the other factors.
    pub fn embed_in<R: Ring<Elem = E>>(
        &self,
        r: &R,
        slots: &[usize],
        dims: &[usize],
    ) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Dimension("embed needs a square matrix".into()));
        }
        if slots.iter().any(|&s| s >= dims.len()) {
            return Err(Error::Dimension("slot out of range".into()));
        }
        for (i, s) in slots.iter().enumerate() {
            if slots[..i].contains(s) {
                return Err(Error::Dimension("repeated slot".into()));
            }
        }
        let local: usize = slots.iter().map(|&s| dims[s]).product();
        if local != self.rows {
            return Err(Error::Dimension(format!(
                "matrix of size {} does not act on slots of total dimension {local}",
                self.rows
            )));
        }
        let total: usize = dims.iter().product();
        let digits = |mut x: usize| {
            let mut d = vec![0; dims.len()];
            for k in (0..dims.len()).rev() {
                d[k] = x % dims[k];
                x /= dims[k];
            }
            d
        };
        let local_index = |d: &[usize]| slots.iter().fold(0, |acc, &s| acc * dims[s] + d[s]);
        let z = r.zero();
        let others: Vec<usize> = (0..dims.len()).filter(|k| !slots.contains(k)).collect();
        Ok(Matrix::from_fn(total, total, |i, j| {
            let (di, dj) = (digits(i), digits(j));
            if others.iter().any(|&k| di[k] != dj[k]) {
                z.clone()
            } else {
                self.get(local_index(&di), local_index(&dj)).clone()
            }
        }))
    }

    /// First nonzero entry of `self`, rendered, as `(row, col)` 1-based.
    pub fn first_nonzero<R: Ring<Elem = E>>(&self, r: &R) -> Option<String> {
        self.indexed()
            .find(|(_, _, x)| !r.is_zero(x))
            .map(|(i, j, x)| format!("entry ({},{}) = {}", i + 1, j + 1, r.render(x)))
    }

    pub fn to_json_in<R: Ring<Elem = E>>(&self, r: &R) -> Value {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| r.render(self.get(i, j))).collect())
            .collect();
        json!({"rows": self.rows, "cols": self.cols, "entries": rows})
    }

    pub fn to_csv_in<R: Ring<Elem = E>>(&self, r: &R) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| crate::report::csv_field(&r.render(self.get(i, j))))
                .collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    fn assert_same_shape(&self, other: &Self) {
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "shape mismatch: {}x{} vs {}x{}",
            self.rows,
            self.cols,
            other.rows,
            other.cols
        );
    }
}

/// Matrix with exact scalar entries.
pub type RepMatrix = Matrix<QScalar>;

impl RepMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::zeros_in(&Scalars, rows, cols)
    }

    pub fn identity(n: usize) -> Self {
        Matrix::identity_in(&Scalars, n)
    }

    pub fn diag(d: &[QScalar]) -> Self {
        let n = d.len();
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                d[i].clone()
            } else {
                QScalar::zero()
            }
        })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| QScalar::from_int(x)).collect())
                .collect(),
        )
        .expect("rectangular integer rows")
    }

    /// The flip `|i⟩⊗|j⟩ ↦ |j⟩⊗|i⟩` on `C^d ⊗ C^d`.
    pub fn flip(d: usize) -> Self {
        Self::flip_mixed(d, d)
    }

    /// The flip `C^{d1} ⊗ C^{d2} → C^{d2} ⊗ C^{d1}`.
    pub fn flip_mixed(d1: usize, d2: usize) -> Self {
        let n = d1 * d2;
        Matrix::from_fn(n, n, |row, col| {
            // col = (i, j) in d1×d2, row = (j, i) in d2×d1
            let (i, j) = (col / d2, col % d2);
            if row == j * d1 + i {
                QScalar::one()
            } else {
                QScalar::zero()
            }
        })
    }

    pub fn is_zero(&self) -> bool {
        self.is_zero_in(&Scalars)
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        self.scale_in(&Scalars, c)
    }

    pub fn kron(&self, other: &Self) -> Self {
        self.kron_in(&Scalars, other)
    }

    pub fn embed(&self, slots: &[usize], dims: &[usize]) -> Result<Self> {
        self.embed_in(&Scalars, slots, dims)
    }

    pub fn is_rho_free(&self) -> bool {
        self.entries().iter().all(QScalar::is_rho_free)
    }

    pub fn invert_q(&self) -> Self {
        self.map(QScalar::invert_q)
    }

    pub fn lift(&self) -> Matrix<NCPoly> {
        self.map(|c| NCPoly::constant(c.clone()))
    }

    pub fn eval(&self, q: Complex64) -> Result<DMatrix<Complex64>> {
        let vals = self
            .entries()
            .iter()
            .map(|x| x.eval(q))
            .collect::<Result<Vec<_>>>()?;
        Ok(DMatrix::from_row_slice(self.rows(), self.cols(), &vals))
    }

    /// Exact inverse by Gauss–Jordan elimination; `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows();
        let mut a = self.clone();
        let mut inv = RepMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    swap(&mut a, pivot, col, j);
                    swap(&mut inv, pivot, col, j);
                }
            }
            let p = a.get(col, col).inv()?;
            for j in 0..n {
                let x = a.get(col, j) * &p;
                a.set(col, j, x);
                let y = inv.get(col, j) * &p;
                inv.set(col, j, y);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let x = a.get(r, j) - &(&f * a.get(col, j));
                    a.set(r, j, x);
                    let y = inv.get(r, j) - &(&f * inv.get(col, j));
                    inv.set(r, j, y);
                }
            }
        }
        Some(inv)
    }

    pub fn first_nonzero_entry(&self) -> Option<String> {
        self.first_nonzero(&Scalars)
    }

    pub fn to_json(&self) -> Value {
        self.to_json_in(&Scalars)
    }

    pub fn to_csv(&self) -> String {
        self.to_csv_in(&Scalars)
    }

    /// Whether `self = c·other` for a single scalar `c`; returns `c`.
    pub fn proportional_to(&self, other: &Self) -> Option<QScalar> {
        if self.rows() != other.rows() || self.cols() != other.cols() {
            return None;
        }
        let k = other.entries().iter().position(|x| !x.is_zero())?;
        let c = &self.entries()[k] / &other.entries()[k];
        let ok = self
            .entries()
            .iter()
            .zip(other.entries())
            .all(|(a, b)| *a == &c * b);
        ok.then_some(c)
    }
}

fn swap(m: &mut RepMatrix, r1: usize, r2: usize, j: usize) {
    let a = m.get(r1, j).clone();
    let b = m.get(r2, j).clone();
    m.set(r1, j, b);
    m.set(r2, j, a);
}

macro_rules! rep_ops {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl std::ops::$tr<&RepMatrix> for &RepMatrix {
            type Output = RepMatrix;
            fn $m(self, rhs: &RepMatrix) -> RepMatrix {
                self.$imp(&Scalars, rhs)
            }
        }
        impl std::ops::$tr<RepMatrix> for RepMatrix {
            type Output = RepMatrix;
            fn $m(self, rhs: RepMatrix) -> RepMatrix {
                (&self).$imp(&Scalars, &rhs)
            }
        }
    };
}

rep_ops!(Add, add, add_in);
rep_ops!(Sub, sub, sub_in);
rep_ops!(Mul, mul, mul_in);

impl fmt::Display for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows() {
            let row: Vec<String> = (0..self.cols())
                .map(|j| self.get(i, j).to_string())
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Matrix whose entries live in a presented algebra, kept in normal form.
#[derive(Clone, Debug)]
pub struct NCMatrix {
    pub m: Matrix<NCPoly>,
    pub ambient: Arc<Presentation>,
}

impl PartialEq for NCMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && *self.ambient == *other.ambient
    }
}

impl NCMatrix {
    /// Wraps `m`, normal-forming every entry.
    pub fn new(m: Matrix<NCPoly>, ambient: Arc<Presentation>) -> Self {
        let m = m.map(|p| ambient.normal_form(p));
        NCMatrix { m, ambient }
    }

    pub fn from_rows(rows: Vec<Vec<NCPoly>>, ambient: Arc<Presentation>) -> Result<Self> {
        Ok(Self::new(Matrix::from_rows(rows)?, ambient))
    }

    pub fn identity(n: usize, ambient: Arc<Presentation>) -> Self {
        NCMatrix {
            m: Matrix::identity_in(&*ambient, n),
            ambient,
        }
    }

    pub fn from_scalars(s: &RepMatrix, ambient: Arc<Presentation>) -> Self {
        NCMatrix {
            m: s.lift(),
            ambient,
        }
    }

    pub fn rows(&self) -> usize {
        self.m.rows()
    }

    pub fn cols(&self) -> usize {
        self.m.cols()
    }

    pub fn get(&self, i: usize, j: usize) -> &NCPoly {
        self.m.get(i, j)
    }

    pub fn mul(&self, other: &NCMatrix) -> NCMatrix {
        NCMatrix {
            m: self.m.mul_in(&*self.ambient, &other.m),
            ambient: self.ambient.clone(),
        }
    }

    pub fn add(&self, other: &NCMatrix) -> NCMatrix {
        NCMatrix {
            m: self.m.add_in(&*self.ambient, &other.m),
            ambient: self.ambient.clone(),
        }
    }

    pub fn sub(&self, other: &NCMatrix) -> NCMatrix {
        NCMatrix {
            m: self.m.sub_in(&*self.ambient, &other.m),
            ambient: self.ambient.clone(),
        }
    }

    pub fn scale(&self, c: &QScalar) -> NCMatrix {
        NCMatrix {
            m: self.m.scale_in(&*self.ambient, c),
            ambient: self.ambient.clone(),
        }
    }

    /// Scalar matrix on the left.
    pub fn lmul_scalar(&self, s: &RepMatrix) -> NCMatrix {
        NCMatrix::from_scalars(s, self.ambient.clone()).mul(self)
    }

    /// Scalar matrix on the right.
    pub fn rmul_scalar(&self, s: &RepMatrix) -> NCMatrix {
        self.mul(&NCMatrix::from_scalars(s, self.ambient.clone()))
    }

    pub fn kron(&self, other: &NCMatrix) -> NCMatrix {
        NCMatrix {
            m: self.m.kron_in(&*self.ambient, &other.m),
            ambient: self.ambient.clone(),
        }
    }

    /// `self ⊗ I_n`.
    pub fn kron_identity(&self, n: usize) -> NCMatrix {
        self.kron(&NCMatrix::identity(n, self.ambient.clone()))
    }

    /// `I_n ⊗ self`.
    pub fn identity_kron(&self, n: usize) -> NCMatrix {
        NCMatrix::identity(n, self.ambient.clone()).kron(self)
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero_in(&*self.ambient)
    }

    pub fn first_nonzero_entry(&self) -> Option<String> {
        self.m.first_nonzero(&*self.ambient)
    }

    pub fn render_entry(&self, i: usize, j: usize) -> String {
        self.ambient.render(self.get(i, j))
    }

    pub fn to_json(&self) -> Value {
        self.m.to_json_in(&*self.ambient)
    }

    pub fn to_csv(&self) -> String {
        self.m.to_csv_in(&*self.ambient)
    }
}

pub fn kron(a: &RepMatrix, b: &RepMatrix) -> RepMatrix {
    a.kron(b)
}

/// `m` acting on the factors `slots` (1-based, as in `R_13`) of a tensor
/// product of `dims.len()` spaces.
pub fn embed(m: &RepMatrix, slots: &[usize], dims: &[usize]) -> Result<RepMatrix> {
    if slots.contains(&0) {
        return Err(Error::Dimension("slots are numbered from 1".into()));
    }
    let zero_based: Vec<usize> = slots.iter().map(|s| s - 1).collect();
    m.embed(&zero_based, dims)
}
