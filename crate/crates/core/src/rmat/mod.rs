//! R-matrices: the fundamental one, images of the universal R-matrix,
//! and the Yang–Baxter, braid, intertwiner, RTT and RLL checks.

mod universal;

use std::sync::Arc;

use num_complex::Complex64;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matq::{builtin_rep, fundamental_t, NCMatrix, Rep, RepMatrix};
use crate::ncpoly::{builtin_presentation, Presentation};
use crate::report::{CheckReport, Mode};
use crate::scalars::QScalar;

pub use universal::{
    calibrated_convention, cartan_factor, intertwiner_violation, universal_r, universal_series,
    Coefficient, Convention, Dressing, Factorial,
};

/// Every check name of this module, in report order.
pub const CHECKS: [&str; 14] = [
    "braid-2",
    "braid-far-commute",
    "intertwine-2",
    "intertwine-3",
    "r-fund",
    "r-universal-2",
    "r-universal-3",
    "rll-mm",
    "rll-pm",
    "rll-pp",
    "rtt",
    "ybe-2",
    "ybe-3",
    "ybe-mixed",
];

/// An R-matrix on `C^{d1} ⊗ C^{d2}`.
#[derive(Clone, Debug, PartialEq)]
pub struct RMatrixValue {
    pub r: RepMatrix,
    pub dims: (usize, usize),
    pub note: String,
}

impl RMatrixValue {
    pub fn new(r: RepMatrix, dims: (usize, usize), note: impl Into<String>) -> Result<Self> {
        if r.rows() != dims.0 * dims.1 || !r.is_square() {
            return Err(Error::Dimension(format!(
                "R of size {}x{} on factors {}x{}",
                r.rows(),
                r.cols(),
                dims.0,
                dims.1
            )));
        }
        Ok(RMatrixValue {
            r,
            dims,
            note: note.into(),
        })
    }

    /// `c·R`.
    pub fn scaled(&self, c: &QScalar) -> Self {
        RMatrixValue {
            r: self.r.scale(c),
            dims: self.dims,
            note: format!("{} scaled by {c}", self.note),
        }
    }

    /// Exact inverse, checked against `R·R⁻¹ = I`.
    pub fn inverse(&self) -> Result<RepMatrix> {
        let inv = self
            .r
            .inverse()
            .ok_or_else(|| Error::Construction("R is singular".into()))?;
        if &self.r * &inv != RepMatrix::identity(self.r.rows()) {
            return Err(Error::Construction(
                "R.R^-1 differs from the identity".into(),
            ));
        }
        Ok(inv)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dims": [self.dims.0, self.dims.1],
            "note": self.note,
            "matrix": self.r.to_json(),
        })
    }
}

/// `s⁻¹·[[q,0,0,0],[0,1,q−q⁻¹,0],[0,0,1,0],[0,0,0,q]]`.
pub fn fundamental_r() -> RMatrixValue {
    let (z, o, q) = (QScalar::zero(), QScalar::one(), QScalar::q());
    let rows = vec![
        vec![q.clone(), z.clone(), z.clone(), z.clone()],
        vec![z.clone(), o.clone(), QScalar::q_minus_qinv(), z.clone()],
        vec![z.clone(), z.clone(), o, z.clone()],
        vec![z.clone(), z.clone(), z, q],
    ];
    let r = RepMatrix::from_rows(rows)
        .expect("4x4")
        .scale(&QScalar::s_pow(-1));
    RMatrixValue {
        r,
        dims: (2, 2),
        note: "fundamental R-matrix, overall factor s^-1".into(),
    }
}

fn exact_report(name: &str, run: impl FnOnce() -> Result<Option<String>>) -> CheckReport {
    match run() {
        Ok(w) => CheckReport::exact(name, w),
        Err(e) => CheckReport::error(name, Mode::Exact, &e),
    }
}

fn square_dim(r: &RMatrixValue) -> Result<usize> {
    if r.dims.0 != r.dims.1 {
        return Err(Error::Dimension(format!(
            "factors {}x{} are not equal",
            r.dims.0, r.dims.1
        )));
    }
    Ok(r.dims.0)
}

fn diff_witness(lhs: &RepMatrix, rhs: &RepMatrix, what: &str) -> Option<String> {
    (lhs - rhs)
        .first_nonzero_entry()
        .map(|e| format!("{what}: difference has {e}"))
}

fn ybe_witness(r12: &RepMatrix, r13: &RepMatrix, r23: &RepMatrix) -> Option<String> {
    let lhs = &(r12 * r13) * r23;
    let rhs = &(r23 * r13) * r12;
    diff_witness(&lhs, &rhs, "R12.R13.R23 - R23.R13.R12")
}

/// `R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂` on `(C^d)^{⊗3}`.
pub fn check_ybe(r: &RMatrixValue) -> CheckReport {
    let name = format!("ybe-{}", r.dims.0);
    exact_report(&name, || {
        let d = square_dim(r)?;
        let dims = [d, d, d];
        let r12 = r.r.embed(&[0, 1], &dims)?;
        let r13 = r.r.embed(&[0, 2], &dims)?;
        let r23 = r.r.embed(&[1, 2], &dims)?;
        Ok(ybe_witness(&r12, &r13, &r23))
    })
}

/// The Yang–Baxter equation on `V₁ ⊗ V₂ ⊗ V₃` with each `R_ij` the
/// universal R-matrix on `V_i ⊗ V_j`.
pub fn check_ybe_mixed(reps: [&Rep; 3], name: &str) -> CheckReport {
    exact_report(name, || {
        let dims = [reps[0].dim, reps[1].dim, reps[2].dim];
        let pair = |i: usize, j: usize| -> Result<RepMatrix> {
            let r = universal_r(reps[i], reps[j], 8)?;
            r.r.embed(&[i, j], &dims)
        };
        let (r12, r13, r23) = (pair(0, 1)?, pair(0, 2)?, pair(1, 2)?);
        Ok(ybe_witness(&r12, &r13, &r23)
            .map(|w| format!("{}⊗{}⊗{}: {w}", reps[0].name, reps[1].name, reps[2].name)))
    })
}

/// YBE over every ordered triple drawn from `{fund, spin1}` with both
/// kinds of factor present.
pub fn check_ybe_mixed_family() -> CheckReport {
    exact_report("ybe-mixed", || {
        let f = builtin_rep("fund")?;
        let s = builtin_rep("spin1")?;
        let triples: [[&Rep; 3]; 6] = [
            [&f, &f, &s],
            [&f, &s, &f],
            [&s, &f, &f],
            [&f, &s, &s],
            [&s, &f, &s],
            [&s, &s, &f],
        ];
        for t in triples {
            let rep = check_ybe_mixed(t, "ybe-mixed");
            if !rep.passed() {
                return Ok(Some(rep.witness.unwrap_or_default()));
            }
        }
        Ok(None)
    })
    .with_notes("triples fund/spin1 with mixed factor dimensions")
}

/// `Ř = P·R`.
pub fn braid_form(r: &RMatrixValue) -> RepMatrix {
    &RepMatrix::flip_mixed(r.dims.0, r.dims.1) * &r.r
}

/// `S₁S₂S₁ = S₂S₁S₂` with `S₁ = Ř⊗I`, `S₂ = I⊗Ř`.
pub fn check_braid(r: &RMatrixValue) -> CheckReport {
    let name = format!("braid-{}", r.dims.0);
    exact_report(&name, || {
        let d = square_dim(r)?;
        let b = braid_form(r);
        let id = RepMatrix::identity(d);
        let s1 = b.kron(&id);
        let s2 = id.kron(&b);
        let lhs = &(&s1 * &s2) * &s1;
        let rhs = &(&s2 * &s1) * &s2;
        Ok(diff_witness(&lhs, &rhs, "S1.S2.S1 - S2.S1.S2"))
    })
}

/// `σ₁σ₃ = σ₃σ₁` on four strands.
pub fn check_braid_far_commute(r: &RMatrixValue) -> CheckReport {
    exact_report("braid-far-commute", || {
        let d = square_dim(r)?;
        let b = braid_form(r);
        let dims = [d, d, d, d];
        let s1 = b.embed(&[0, 1], &dims)?;
        let s3 = b.embed(&[2, 3], &dims)?;
        Ok(diff_witness(
            &(&s1 * &s3),
            &(&s3 * &s1),
            "sigma1.sigma3 - sigma3.sigma1",
        ))
    })
}

/// `R·Δ_q(g) = Δ_{q⁻¹}(g)·R` for `g ∈ {E, F, K}`.
pub fn check_intertwiner(r: &RMatrixValue, r1: &Rep, r2: &Rep) -> CheckReport {
    let name = format!("intertwine-{}", r1.dim);
    exact_report(&name, || {
        if (r1.dim, r2.dim) != r.dims {
            return Err(Error::Dimension(format!(
                "R on {}x{} applied to {}⊗{}",
                r.dims.0, r.dims.1, r1.name, r2.name
            )));
        }
        Ok(intertwiner_violation(&r.r, r1, r2))
    })
}

/// Largest entry of `R·Δ_q(g) − Δ_{q⁻¹}(g)·R` over `g` at numeric `q`.
pub fn intertwiner_residual(r: &RepMatrix, r1: &Rep, r2: &Rep, q: f64) -> Result<f64> {
    use crate::matq::{coproduct_rep, CoproductVariant};
    let s = Complex64::new(q.sqrt(), 0.0);
    let dq = coproduct_rep(r1, r2, CoproductVariant::Q);
    let dqi = coproduct_rep(r1, r2, CoproductVariant::QInv);
    let rn = r.eval(s)?;
    let mut worst: f64 = 0.0;
    for (a, b) in [(&dq.e, &dqi.e), (&dq.f, &dqi.f), (&dq.k, &dqi.k)] {
        let d = &rn * a.eval(s)? - b.eval(s)? * &rn;
        worst = d.iter().map(|z| z.norm()).fold(worst, f64::max);
    }
    Ok(worst)
}

fn funq_gl2() -> Result<Arc<Presentation>> {
    builtin_presentation("funq_gl2")
}

/// `T₁T₂` and `T₂T₁` over `funq_gl2`.
pub fn t1t2_t2t1() -> Result<(NCMatrix, NCMatrix)> {
    let t = fundamental_t(funq_gl2()?);
    let t1 = t.kron_identity(2);
    let t2 = t.identity_kron(2);
    Ok((t1.mul(&t2), t2.mul(&t1)))
}

/// `R·T₁T₂ − T₂T₁·R`, the RTT relation in the orientation `R T₁ T₂ = T₂ T₁ R`.
pub fn rtt_literal_residual(r: &RepMatrix) -> Result<NCMatrix> {
    let (t12, t21) = t1t2_t2t1()?;
    Ok(t12.lmul_scalar(r).sub(&t21.rmul_scalar(r)))
}

/// `R·T₂T₁ − T₁T₂·R`. This is the RTT relation with `R⁻¹`
/// (`R⁻¹T₁T₂ = T₂T₁R⁻¹`), the same form as the RLL relations.
pub fn rtt_residual(r: &RepMatrix) -> Result<NCMatrix> {
    let (t12, t21) = t1t2_t2t1()?;
    Ok(t21.lmul_scalar(r).sub(&t12.rmul_scalar(r)))
}

/// RTT relation for a scalar `R` on `C² ⊗ C²`.
pub fn check_rtt_with(r: &RepMatrix) -> CheckReport {
    exact_report("rtt", || {
        let res = rtt_residual(r)?;
        if let Some(e) = res.first_nonzero_entry() {
            return Ok(Some(format!("R.T2.T1 - T1.T2.R has {e}")));
        }
        let (t12, t21) = t1t2_t2t1()?;
        let comm = t12.sub(&t21);
        if comm.is_zero() {
            return Ok(Some("T1.T2 = T2.T1, so the entries commute".into()));
        }
        Ok(None)
    })
}

/// RTT relation for the fundamental R-matrix. The notes record the
/// noncommuting `T₁T₂ − T₂T₁` entry and the failure of the orientation
/// `R T₁ T₂ = T₂ T₁ R`.
pub fn check_rtt() -> CheckReport {
    let r = fundamental_r().r;
    let report = check_rtt_with(&r);
    let notes = (|| -> Result<String> {
        let (t12, t21) = t1t2_t2t1()?;
        let comm = t12.sub(&t21);
        let literal = rtt_literal_residual(&r)?;
        let lit = literal
            .first_nonzero_entry()
            .map(|e| format!("the orientation R.T1.T2 = T2.T1.R fails: {e}"))
            .unwrap_or_else(|| "the orientation R.T1.T2 = T2.T1.R also holds".into());
        Ok(format!(
            "checked R.T2.T1 = T1.T2.R, equivalently R^-1.T1.T2 = T2.T1.R^-1; (T1.T2 - T2.T1)(2,2) = {}; {lit}",
            comm.render_entry(1, 1)
        ))
    })();
    match notes {
        Ok(n) => report.with_notes(n),
        Err(e) => CheckReport::error("rtt", Mode::Exact, &e),
    }
}

/// Which pair of L-operators enters an RLL relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RllPair {
    PlusPlus,
    MinusMinus,
    PlusMinus,
}

impl RllPair {
    pub fn check_name(self) -> &'static str {
        match self {
            RllPair::PlusPlus => "rll-pp",
            RllPair::MinusMinus => "rll-mm",
            RllPair::PlusMinus => "rll-pm",
        }
    }
}

/// `L⁽⁺⁾ = [[K⁻¹, −s(q−q⁻¹)F], [0, K]]` over `uq_sl2`.
pub fn l_plus(uq: &Arc<Presentation>) -> NCMatrix {
    let c = -(QScalar::s() * QScalar::q_minus_qinv());
    NCMatrix::from_rows(
        vec![
            vec![uq.g("Kinv"), uq.g("F").scale(&c)],
            vec![crate::ncpoly::NCPoly::zero(), uq.g("K")],
        ],
        uq.clone(),
    )
    .expect("2x2")
}

/// `L⁽⁻⁾ = [[K, 0], [s⁻¹(q−q⁻¹)E, K⁻¹]]` over `uq_sl2`.
pub fn l_minus(uq: &Arc<Presentation>) -> NCMatrix {
    let c = QScalar::s_pow(-1) * QScalar::q_minus_qinv();
    NCMatrix::from_rows(
        vec![
            vec![uq.g("K"), crate::ncpoly::NCPoly::zero()],
            vec![uq.g("E").scale(&c), uq.g("Kinv")],
        ],
        uq.clone(),
    )
    .expect("2x2")
}

/// `R⁻¹L₁L₂′ − L₂′L₁R⁻¹` with `L₁ = L⊗I`, `L₂′ = I⊗L′`.
pub fn rll_residual(r: &RMatrixValue, pair: RllPair) -> Result<NCMatrix> {
    rll_residual_in(r, pair, &builtin_presentation("uq_sl2")?)
}

/// As [`rll_residual`], over any presentation with generators
/// `E`, `F`, `K`, `Kinv`.
pub fn rll_residual_in(
    r: &RMatrixValue,
    pair: RllPair,
    uq: &Arc<Presentation>,
) -> Result<NCMatrix> {
    let uq = uq.clone();
    let (a, b) = match pair {
        RllPair::PlusPlus => (l_plus(&uq), l_plus(&uq)),
        RllPair::MinusMinus => (l_minus(&uq), l_minus(&uq)),
        RllPair::PlusMinus => (l_plus(&uq), l_minus(&uq)),
    };
    let rinv = r.inverse()?;
    let l1 = a.kron_identity(2);
    let l2 = b.identity_kron(2);
    let lhs = l1.mul(&l2).lmul_scalar(&rinv);
    let rhs = l2.mul(&l1).rmul_scalar(&rinv);
    Ok(lhs.sub(&rhs))
}

pub fn check_rll_with(r: &RMatrixValue, pair: RllPair) -> CheckReport {
    exact_report(pair.check_name(), || {
        let res = rll_residual(r, pair)?;
        Ok(res
            .first_nonzero_entry()
            .map(|e| format!("R^-1.L1.L2 - L2.L1.R^-1 has {e}")))
    })
}

pub fn check_rll(pair: RllPair) -> CheckReport {
    check_rll_with(&fundamental_r(), pair)
}

/// `fundamental_r` agrees with an entrywise construction, is invertible,
/// and is the identity at `q = 1`.
pub fn check_r_fund() -> CheckReport {
    exact_report("r-fund", || {
        let r = fundamental_r();
        let s = QScalar::s();
        let si = QScalar::s_pow(-1);
        let mut expected = RepMatrix::zeros(4, 4);
        expected.set(0, 0, s.clone());
        expected.set(1, 1, si.clone());
        expected.set(1, 2, s - QScalar::s_pow(-3));
        expected.set(2, 2, si);
        expected.set(3, 3, QScalar::s());
        if let Some(w) = diff_witness(&r.r, &expected, "R - expected") {
            return Ok(Some(w));
        }
        r.inverse()?;
        let at_one = r.r.eval(Complex64::new(1.0, 0.0))?;
        let dev = (at_one - nalgebra::DMatrix::<Complex64>::identity(4, 4))
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        if dev > 1e-12 {
            return Ok(Some(format!(
                "R at q = 1 differs from the identity by {dev:e}"
            )));
        }
        Ok(None)
    })
}

/// Image of the universal R-matrix on `fund ⊗ fund`, compared with
/// `fundamental_r`; the overall scalar goes into the notes.
pub fn check_r_universal_2() -> CheckReport {
    let mut notes = String::new();
    let rep = exact_report("r-universal-2", || {
        let f = builtin_rep("fund")?;
        let u = universal_r(&f, &f, 4)?;
        notes = u.note.clone();
        match u.r.proportional_to(&fundamental_r().r) {
            Some(c) => {
                notes = format!("universal image = ({c}) * fundamental R; {notes}");
                Ok(None)
            }
            None => Ok(Some(format!(
                "universal image is not a multiple of the fundamental R: {}",
                u.r.first_nonzero_entry().unwrap_or_default()
            ))),
        }
    });
    if notes.is_empty() {
        rep
    } else {
        rep.with_notes(notes)
    }
}

/// Image of the universal R-matrix on `spin1 ⊗ spin1`: ρ-free and invertible.
pub fn check_r_universal_3() -> CheckReport {
    let mut notes = String::new();
    let rep = exact_report("r-universal-3", || {
        let s = builtin_rep("spin1")?;
        let u = universal_r(&s, &s, 6)?;
        notes = u.note.clone();
        if !u.r.is_rho_free() {
            let (i, j, x) =
                u.r.indexed()
                    .find(|(_, _, x)| !x.is_rho_free())
                    .expect("entry");
            return Ok(Some(format!(
                "entry ({},{}) = {x} involves rho",
                i + 1,
                j + 1
            )));
        }
        u.inverse()?;
        Ok(None)
    });
    if notes.is_empty() {
        rep
    } else {
        rep.with_notes(notes)
    }
}

fn spin1_r() -> Result<RMatrixValue> {
    let s = builtin_rep("spin1")?;
    universal_r(&s, &s, 6)
}

/// Runs the named check of this module.
pub fn run_check(name: &str) -> Result<CheckReport> {
    let err_report = |name: &str, e: Error| CheckReport::error(name, Mode::Exact, &e);
    Ok(match name {
        "r-fund" => check_r_fund(),
        "r-universal-2" => check_r_universal_2(),
        "r-universal-3" => check_r_universal_3(),
        "ybe-2" => check_ybe(&fundamental_r()),
        "ybe-3" => spin1_r().map_or_else(|e| err_report(name, e), |r| check_ybe(&r)),
        "ybe-mixed" => check_ybe_mixed_family(),
        "braid-2" => check_braid(&fundamental_r()),
        "braid-far-commute" => check_braid_far_commute(&fundamental_r()),
        "intertwine-2" => {
            let f = builtin_rep("fund")?;
            check_intertwiner(&fundamental_r(), &f, &f)
        }
        "intertwine-3" => {
            let s = builtin_rep("spin1")?;
            spin1_r().map_or_else(|e| err_report(name, e), |r| check_intertwiner(&r, &s, &s))
        }
        "rtt" => check_rtt(),
        "rll-pp" => check_rll(RllPair::PlusPlus),
        "rll-mm" => check_rll(RllPair::MinusMinus),
        "rll-pm" => check_rll(RllPair::PlusMinus),
        other => {
            return Err(Error::UnknownKey {
                kind: "check",
                key: other.into(),
            })
        }
    })
}
