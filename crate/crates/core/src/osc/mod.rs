//! Truncated Fock realizations: bosons and q-bosons, Jordan–Schwinger
//! generators of su(2) and su_q(2), their addition rules, and the
//! clock/shift pair on a periodic grid.
//!
//! Relations are only asserted on interior states, where no ladder
//! operator reaches past the truncation.

use nalgebra::DMatrix;
use num_complex::Complex64;
use sprs::{CsMat, TriMat};

use crate::error::{Error, Result};
use crate::matq::CoproductVariant;
use crate::report::{CheckReport, Mode, Status};
use crate::scalars::q_int_sym_real;

pub type CMatrix = DMatrix<Complex64>;

/// Tolerance for relations among undeformed bosons.
pub const TOL_BOSON: f64 = 1e-12;
/// Tolerance for q-deformed relations.
pub const TOL_Q: f64 = 1e-9;
/// Tolerance for hermiticity and the clock/shift relation.
pub const TOL_EXACT: f64 = 1e-12;

pub const CHECKS: [&str; 7] = [
    "addition-q",
    "addition-qinv",
    "boson-ccr",
    "clock-shift",
    "js-su2",
    "js-suq2",
    "qboson-relations",
];

/// Numeric parameters of the oscillator checks.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OscParams {
    pub d: usize,
    pub q: f64,
}

impl Default for OscParams {
    fn default() -> Self {
        OscParams { d: 8, q: 1.3 }
    }
}

impl OscParams {
    pub fn validate(&self) -> Result<()> {
        validate_d(self.d)?;
        validate_q(self.q)
    }
}

fn validate_d(d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::Parameter(format!(
            "truncation d = {d} must be at least 2"
        )));
    }
    Ok(())
}

fn validate_q(q: f64) -> Result<()> {
    if !(q.is_finite() && q > 0.0) {
        return Err(Error::Parameter(format!("q = {q} must be a positive real")));
    }
    Ok(())
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Ladder and number operators on `span{|0⟩, …, |d−1⟩}`.
#[derive(Clone, Debug, PartialEq)]
pub struct FockOps {
    pub d: usize,
    pub q: f64,
    pub a: CMatrix,
    pub adag: CMatrix,
    pub n: CMatrix,
}

impl FockOps {
    /// Basis states `|0⟩ … |d−2⟩`.
    pub fn interior(&self) -> Vec<usize> {
        (0..self.d - 1).collect()
    }

    /// `q^{±N}` as a diagonal matrix.
    pub fn q_pow_n(&self, sign: f64) -> CMatrix {
        CMatrix::from_fn(self.d, self.d, |i, j| {
            if i == j {
                c(self.q.powf(sign * i as f64))
            } else {
                c(0.0)
            }
        })
    }
}

fn ladder(d: usize, q: f64, weight: impl Fn(usize) -> f64) -> FockOps {
    // a|k⟩ = √w(k)|k−1⟩
    let a = CMatrix::from_fn(d, d, |i, j| {
        if j == i + 1 {
            c(weight(j).sqrt())
        } else {
            c(0.0)
        }
    });
    let adag = a.adjoint();
    let n = CMatrix::from_fn(d, d, |i, j| if i == j { c(i as f64) } else { c(0.0) });
    FockOps { d, q, a, adag, n }
}

/// The undeformed oscillator truncated to `d` levels.
pub fn boson_fock(d: usize) -> Result<FockOps> {
    validate_d(d)?;
    Ok(ladder(d, 1.0, |k| k as f64))
}

/// The q-oscillator, `A|k⟩ = √⟦k⟧|k−1⟩`.
pub fn q_fock(d: usize, q: f64) -> Result<FockOps> {
    validate_d(d)?;
    validate_q(q)?;
    Ok(ladder(d, q, |k| q_int_sym_real(k as f64, q)))
}

/// Eigenvalues of `(AA† + A†A)/2` on the interior block, ascending.
pub fn hamiltonian_spectrum(f: &FockOps) -> Vec<f64> {
    let h = (&f.a * &f.adag + &f.adag * &f.a) * c(0.5);
    let m = f.d - 1;
    let block = DMatrix::<f64>::from_fn(m, m, |i, j| h[(i, j)].re);
    let mut ev: Vec<f64> = block
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .collect();
    ev.sort_by(|a, b| a.total_cmp(b));
    ev
}

fn commutator(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a * b - b * a
}

/// `max |L − R|` over the given columns, relative to `max(1, |L|, |R|)` on
/// those columns.
pub fn interior_residual(lhs: &CMatrix, rhs: &CMatrix, cols: &[usize]) -> f64 {
    let mut diff: f64 = 0.0;
    let mut scale: f64 = 1.0;
    for &j in cols {
        for i in 0..lhs.nrows() {
            let (l, r) = (lhs[(i, j)], rhs[(i, j)]);
            diff = diff.max((l - r).norm());
            scale = scale.max(l.norm()).max(r.norm());
        }
    }
    diff / scale
}

/// `max |M† − H|` over all entries.
pub fn adjoint_residual(m: &CMatrix, h: &CMatrix) -> f64 {
    (m.adjoint() - h)
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
}

fn numeric_report(name: &str, parts: &[(&str, f64, f64)]) -> CheckReport {
    // parts are (label, residual, tolerance); the report carries the largest residual
    let residual = parts.iter().map(|p| p.1).fold(0.0, f64::max);
    let failing = parts.iter().find(|p| !(p.1 <= p.2));
    CheckReport {
        name: name.into(),
        mode: Mode::Numeric,
        status: if failing.is_some() {
            Status::Fail
        } else {
            Status::Pass
        },
        residual: Some(residual),
        witness: failing.map(|p| format!("{}: residual {:e} exceeds {:e}", p.0, p.1, p.2)),
        duration_ms: 0.0,
        convention_notes: None,
    }
}

fn param_report(name: &str, run: impl FnOnce() -> Result<CheckReport>) -> CheckReport {
    run().unwrap_or_else(|e| CheckReport::error(name, Mode::Numeric, &e))
}

/// `[a, a†] = 1` and `[N, a†] = a†` on interior states.
pub fn check_boson_ccr(d: usize) -> CheckReport {
    param_report("boson-ccr", || {
        let f = boson_fock(d)?;
        let cols = f.interior();
        let id = CMatrix::identity(d, d);
        Ok(numeric_report(
            "boson-ccr",
            &[
                (
                    "[a, a+] = 1",
                    interior_residual(&commutator(&f.a, &f.adag), &id, &cols),
                    TOL_BOSON,
                ),
                (
                    "[N, a+] = a+",
                    interior_residual(&commutator(&f.n, &f.adag), &f.adag, &cols),
                    TOL_BOSON,
                ),
                ("a+ = a^H", adjoint_residual(&f.a, &f.adag), TOL_EXACT),
            ],
        ))
    })
}

/// `AA† − qA†A = q^{−N}` and `[N, A†] = A†` on interior states.
pub fn check_qboson_relations(d: usize, q: f64) -> CheckReport {
    param_report("qboson-relations", || {
        let f = q_fock(d, q)?;
        let cols = f.interior();
        let lhs = &f.a * &f.adag - &f.adag * &f.a * c(q);
        Ok(numeric_report(
            "qboson-relations",
            &[
                (
                    "A.A+ - q A+.A = q^-N",
                    interior_residual(&lhs, &f.q_pow_n(-1.0), &cols),
                    TOL_Q,
                ),
                (
                    "[N, A+] = A+",
                    interior_residual(&commutator(&f.n, &f.adag), &f.adag, &cols),
                    TOL_Q,
                ),
                ("A+ = A^H", adjoint_residual(&f.a, &f.adag), TOL_EXACT),
            ],
        ))
    })
}

/// Two commuting copies of an oscillator and the generators
/// `J₀ = (N₁ − N₂)/2`, `J₊ = A₁†A₂`, `J₋ = A₂†A₁` on the d²-dimensional space.
#[derive(Clone, Debug, PartialEq)]
pub struct JordanSchwinger {
    pub d: usize,
    pub q: f64,
    pub j0: CMatrix,
    pub jp: CMatrix,
    pub jm: CMatrix,
    /// States `|n₁, n₂⟩ = n₁·d + n₂` with both indices at most `d − 2`.
    pub interior: Vec<usize>,
}

impl JordanSchwinger {
    /// Diagonal of `J₀`.
    pub fn j0_diagonal(&self) -> Vec<f64> {
        (0..self.j0.nrows()).map(|i| self.j0[(i, i)].re).collect()
    }

    /// `⟦2J₀⟧_q` on the `J₀` eigenbasis.
    pub fn q_int_2j0(&self) -> CMatrix {
        let diag: Vec<Complex64> = self
            .j0_diagonal()
            .iter()
            .map(|&j| c(q_int_sym_real(2.0 * j, self.q)))
            .collect();
        CMatrix::from_diagonal(&nalgebra::DVector::from_vec(diag))
    }
}

/// Jordan–Schwinger generators from q-oscillators (bosons when `q = 1`).
pub fn jordan_schwinger(d: usize, q: f64) -> Result<JordanSchwinger> {
    let f = if q == 1.0 {
        boson_fock(d)?
    } else {
        q_fock(d, q)?
    };
    let id = CMatrix::identity(d, d);
    let a1 = f.a.kronecker(&id);
    let a2 = id.kronecker(&f.a);
    let (a1d, a2d) = (a1.adjoint(), a2.adjoint());
    let n1 = f.n.kronecker(&id);
    let n2 = id.kronecker(&f.n);
    let j0 = (n1 - n2) * c(0.5);
    let jp = &a1d * &a2;
    let jm = &a2d * &a1;
    let interior = (0..d * d)
        .filter(|i| i / d <= d - 2 && i % d <= d - 2)
        .collect();
    Ok(JordanSchwinger {
        d,
        q,
        j0,
        jp,
        jm,
        interior,
    })
}

fn js_parts(js: &JordanSchwinger, top: &CMatrix, tol: f64) -> Vec<(&'static str, f64, f64)> {
    let cols = &js.interior;
    vec![
        (
            "[J0, J+] = J+",
            interior_residual(&commutator(&js.j0, &js.jp), &js.jp, cols),
            tol,
        ),
        (
            "[J0, J-] = -J-",
            interior_residual(&commutator(&js.j0, &js.jm), &(-&js.jm), cols),
            tol,
        ),
        (
            "[J+, J-]",
            interior_residual(&commutator(&js.jp, &js.jm), top, cols),
            tol,
        ),
        ("J+^H = J-", adjoint_residual(&js.jp, &js.jm), TOL_EXACT),
        ("J0^H = J0", adjoint_residual(&js.j0, &js.j0), TOL_EXACT),
    ]
}

/// The su(2) relations for undeformed oscillators.
pub fn check_js_su2(d: usize) -> CheckReport {
    param_report("js-su2", || {
        let js = jordan_schwinger(d, 1.0)?;
        let two_j0 = &js.j0 * c(2.0);
        Ok(numeric_report("js-su2", &js_parts(&js, &two_j0, TOL_Q)))
    })
}

/// The su_q(2) relations `[J₀, J±] = ±J±`, `[J₊, J₋] = ⟦2J₀⟧`.
pub fn check_js_suq2(d: usize, q: f64) -> CheckReport {
    param_report("js-suq2", || {
        validate_q(q)?;
        let js = jordan_schwinger(d, q)?;
        let top = js.q_int_2j0();
        Ok(numeric_report("js-suq2", &js_parts(&js, &top, TOL_Q)))
    })
}

type Sparse = CsMat<f64>;

fn to_sparse(m: &CMatrix) -> Sparse {
    let mut t = TriMat::new((m.nrows(), m.ncols()));
    for j in 0..m.ncols() {
        for i in 0..m.nrows() {
            let z = m[(i, j)];
            debug_assert!(z.im == 0.0);
            if z.re != 0.0 {
                t.add_triplet(i, j, z.re);
            }
        }
    }
    t.to_csr()
}

fn sparse_diag(d: &[f64]) -> Sparse {
    let mut t = TriMat::new((d.len(), d.len()));
    for (i, &x) in d.iter().enumerate() {
        if x != 0.0 {
            t.add_triplet(i, i, x);
        }
    }
    t.to_csr()
}

fn sparse_identity(n: usize) -> Sparse {
    CsMat::eye(n)
}

fn kron(a: &Sparse, b: &Sparse) -> Sparse {
    sprs::kronecker_product(a.view(), b.view()).to_csr()
}

fn sparse_commutator(a: &Sparse, b: &Sparse) -> Sparse {
    let ab: Sparse = a * b;
    let ba: Sparse = b * a;
    &ab - &ba
}

/// Relative residual of `lhs = rhs` on the given columns.
fn sparse_residual(lhs: &Sparse, rhs: &Sparse, cols: &[bool]) -> f64 {
    let diff: Sparse = lhs - rhs;
    let col_max = |m: &Sparse| {
        m.iter()
            .filter(|(_, (_, j))| cols[*j])
            .map(|(v, _)| v.abs())
            .fold(0.0, f64::max)
    };
    col_max(&diff) / col_max(lhs).max(col_max(rhs)).max(1.0)
}

/// Coproduct images of the Jordan–Schwinger generators on the tensor square,
/// `Δ(J₀) = J₀⊗1 + 1⊗J₀` and `Δ(J±) = J±⊗q^{±J₀} + q^{∓J₀}⊗J±` with the
/// upper sign for [`CoproductVariant::Q`].
pub struct AdditionOps {
    pub j0: Sparse,
    pub jp: Sparse,
    pub jm: Sparse,
    /// Diagonal of `Δ(J₀)`.
    pub j0_diag: Vec<f64>,
    /// Interior flag per basis state of the tensor square.
    pub interior: Vec<bool>,
}

pub fn addition_ops(js: &JordanSchwinger, variant: CoproductVariant) -> AdditionOps {
    let n = js.j0.nrows();
    let sign = match variant {
        CoproductVariant::Q => 1.0,
        CoproductVariant::QInv => -1.0,
    };
    let jd = js.j0_diagonal();
    let kp = sparse_diag(&jd.iter().map(|j| js.q.powf(sign * j)).collect::<Vec<_>>());
    let km = sparse_diag(&jd.iter().map(|j| js.q.powf(-sign * j)).collect::<Vec<_>>());
    let id = sparse_identity(n);
    let j0 = to_sparse(&js.j0);
    let delta = |x: &CMatrix| {
        let x = to_sparse(x);
        &kron(&x, &kp) + &kron(&km, &x)
    };
    let dj0 = &kron(&j0, &id) + &kron(&id, &j0);
    let j0_diag = (0..n * n).map(|k| jd[k / n] + jd[k % n]).collect();
    let inner: Vec<bool> = {
        let mut v = vec![false; n];
        for &i in &js.interior {
            v[i] = true;
        }
        v
    };
    let interior = (0..n * n).map(|k| inner[k / n] && inner[k % n]).collect();
    AdditionOps {
        j0: dj0,
        jp: delta(&js.jp),
        jm: delta(&js.jm),
        j0_diag,
        interior,
    }
}

/// The su_q(2) relations for `Δ_{q^{±1}}` images on the tensor square of
/// the Jordan–Schwinger space.
pub fn check_addition_rules(d: usize, q: f64, variant: CoproductVariant) -> CheckReport {
    let name = match variant {
        CoproductVariant::Q => "addition-q",
        CoproductVariant::QInv => "addition-qinv",
    };
    param_report(name, || {
        validate_q(q)?;
        let js = jordan_schwinger(d, q)?;
        let ops = addition_ops(&js, variant);
        let top = sparse_diag(
            &ops.j0_diag
                .iter()
                .map(|&j| q_int_sym_real(2.0 * j, q))
                .collect::<Vec<_>>(),
        );
        let neg_jm = ops.jm.map(|x| -x);
        let cols = &ops.interior;
        Ok(numeric_report(
            name,
            &[
                (
                    "[DJ0, DJ+] = DJ+",
                    sparse_residual(&sparse_commutator(&ops.j0, &ops.jp), &ops.jp, cols),
                    TOL_Q,
                ),
                (
                    "[DJ0, DJ-] = -DJ-",
                    sparse_residual(&sparse_commutator(&ops.j0, &ops.jm), &neg_jm, cols),
                    TOL_Q,
                ),
                (
                    "[DJ+, DJ-] = [[2 DJ0]]",
                    sparse_residual(&sparse_commutator(&ops.jp, &ops.jm), &top, cols),
                    TOL_Q,
                ),
                (
                    "DJ+^T = DJ-",
                    sparse_residual(
                        &ops.jp.transpose_view().to_csr(),
                        &ops.jm,
                        &vec![true; cols.len()],
                    ),
                    TOL_EXACT,
                ),
            ],
        ))
    })
}

/// Cyclic shift `T|k+1⟩ = |k⟩` and clock `G = diag(e^{iθk})`, `θ = 2πm/N`.
pub fn clock_shift(n: usize, m: i64) -> Result<(CMatrix, CMatrix, Complex64)> {
    if n < 2 {
        return Err(Error::Parameter(format!(
            "grid size N = {n} must be at least 2"
        )));
    }
    let theta = 2.0 * std::f64::consts::PI * m as f64 / n as f64;
    let t = CMatrix::from_fn(n, n, |i, j| if j == (i + 1) % n { c(1.0) } else { c(0.0) });
    let g = CMatrix::from_fn(n, n, |i, j| {
        if i == j {
            Complex64::from_polar(1.0, theta * i as f64)
        } else {
            c(0.0)
        }
    });
    Ok((t, g, Complex64::from_polar(1.0, theta)))
}

/// `max |T·G − e^{iθ}·G·T|`.
pub fn clock_shift_residual(n: usize, m: i64) -> Result<f64> {
    let (t, g, phase) = clock_shift(n, m)?;
    let d = &t * &g - (&g * &t) * phase;
    Ok(d.iter().map(|z| z.norm()).fold(0.0, f64::max))
}

/// `T·G = e^{iθ}·G·T` at one root of unity.
pub fn clock_shift_check(n: usize, m: i64) -> CheckReport {
    param_report("clock-shift", || {
        let r = clock_shift_residual(n, m)?;
        let label = format!("N={n}, m={m}");
        Ok(numeric_report(
            "clock-shift",
            &[(label.as_str(), r, TOL_EXACT)],
        ))
    })
}

/// The clock/shift relation at `(N, m) ∈ {(4, 1), (6, 2)}`.
pub fn check_clock_shift() -> CheckReport {
    param_report("clock-shift", || {
        let a = clock_shift_residual(4, 1)?;
        let b = clock_shift_residual(6, 2)?;
        Ok(numeric_report(
            "clock-shift",
            &[("N=4, m=1", a, TOL_EXACT), ("N=6, m=2", b, TOL_EXACT)],
        ))
    })
}

/// Runs the named check at the given parameters.
pub fn run_check(name: &str, p: OscParams) -> Result<CheckReport> {
    Ok(match name {
        "boson-ccr" => check_boson_ccr(p.d),
        "qboson-relations" => check_qboson_relations(p.d, p.q),
        "js-su2" => check_js_su2(p.d),
        "js-suq2" => check_js_suq2(p.d, p.q),
        "addition-q" => check_addition_rules(p.d, p.q, CoproductVariant::Q),
        "addition-qinv" => check_addition_rules(p.d, p.q, CoproductVariant::QInv),
        "clock-shift" => check_clock_shift(),
        other => {
            return Err(Error::UnknownKey {
                kind: "check",
                key: other.into(),
            })
        }
    })
}

#[cfg(test)]
mod tests;
