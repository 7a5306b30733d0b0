use serde_json::{json, Value};

use super::matrix::{RepMatrix, Scalars};
use crate::error::{Error, Result};
use crate::ncpoly::{builtin_presentation, NCPoly, Presentation};
use crate::report::{CheckReport, Witness};
use crate::scalars::QScalar;

/// Images of `E`, `F`, `K`, `K⁻¹` under a finite-dimensional representation.
#[derive(Clone, Debug, PartialEq)]
pub struct Rep {
    pub name: String,
    pub dim: usize,
    pub e: RepMatrix,
    pub f: RepMatrix,
    pub k: RepMatrix,
    pub kinv: RepMatrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoproductVariant {
    /// `Δ(E) = E⊗K + K⁻¹⊗E`
    Q,
    /// `Δ(E) = E⊗K⁻¹ + K⊗E`
    QInv,
}

impl CoproductVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            CoproductVariant::Q => "q",
            CoproductVariant::QInv => "qinv",
        }
    }
}

pub const REPS: [&str; 2] = ["fund", "spin1"];

impl Rep {
    /// Image of a `uq_sl2` generator by name.
    pub fn image(&self, name: &str) -> Option<&RepMatrix> {
        match name {
            "E" => Some(&self.e),
            "F" => Some(&self.f),
            "K" => Some(&self.k),
            "Kinv" => Some(&self.kinv),
            _ => None,
        }
    }

    /// Images indexed by generator id of `pres` (which must be `uq_sl2`).
    pub fn images_for(&self, pres: &Presentation) -> Result<Vec<RepMatrix>> {
        pres.generators()
            .iter()
            .map(|g| {
                self.image(&g.name)
                    .cloned()
                    .ok_or_else(|| Error::MissingImage(g.label()))
            })
            .collect()
    }

    /// Exponents `k_i` with `K = diag(s^{k_i})`, i.e. twice the weights.
    pub fn doubled_weights(&self) -> Result<Vec<i64>> {
        let mut out = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i != j && !self.k.get(i, j).is_zero() {
                    return Err(Error::Construction("K image is not diagonal".into()));
                }
            }
            let d = self.k.get(i, i);
            let a = d.rational_part();
            if !d.is_rho_free()
                || !a.is_monomial()
                || !a.numerator().is_one()
                || !a.denominator().is_one()
            {
                return Err(Error::Construction(format!(
                    "K diagonal entry {d} is not a power of s"
                )));
            }
            out.push(a.shift());
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "dim": self.dim,
            "E": self.e.to_json(),
            "F": self.f.to_json(),
            "K": self.k.to_json(),
            "Kinv": self.kinv.to_json(),
        })
    }
}

/// Catalog representation: `fund` (dimension 2) or `spin1` (dimension 3).
pub fn builtin_rep(name: &str) -> Result<Rep> {
    let z = QScalar::zero;
    let s = QScalar::s_pow;
    match name {
        "fund" => Ok(Rep {
            name: "fund".into(),
            dim: 2,
            e: RepMatrix::from_ints(&[&[0, 1], &[0, 0]]),
            f: RepMatrix::from_ints(&[&[0, 0], &[1, 0]]),
            k: RepMatrix::diag(&[s(1), s(-1)]),
            kinv: RepMatrix::diag(&[s(-1), s(1)]),
        }),
        "spin1" => {
            let r = QScalar::rho();
            let qr = QScalar::q() * &r;
            let e = RepMatrix::from_rows(vec![
                vec![z(), r.clone(), z()],
                vec![z(), z(), qr.clone()],
                vec![z(), z(), z()],
            ])?;
            let f = RepMatrix::from_rows(vec![
                vec![z(), z(), z()],
                vec![qr, z(), z()],
                vec![z(), r, z()],
            ])?;
            Ok(Rep {
                name: "spin1".into(),
                dim: 3,
                e,
                f,
                k: RepMatrix::diag(&[s(2), s(0), s(-2)]),
                kinv: RepMatrix::diag(&[s(-2), s(0), s(2)]),
            })
        }
        _ => Err(Error::UnknownKey {
            kind: "representation",
            key: name.into(),
        }),
    }
}

/// Evaluates `p` with generator `g` replaced by `images[g]`.
pub fn eval_on_matrices(p: &NCPoly, images: &[RepMatrix], dim: usize) -> RepMatrix {
    let mut out = RepMatrix::zeros(dim, dim);
    for (w, c) in p.terms() {
        let mut acc = RepMatrix::identity(dim);
        for &g in w.letters() {
            acc = &acc * &images[g as usize];
        }
        out = &out + &acc.scale(c);
    }
    out
}

/// First relation of `pres` violated by `images`, with its residual.
pub fn relation_violation(pres: &Presentation, images: &[RepMatrix], dim: usize) -> Option<String> {
    let mut w = Witness::new();
    for rule in pres.rules() {
        let lhs = NCPoly::word(&[rule.lhs.0, rule.lhs.1]);
        let diff = lhs.sub(&rule.rhs);
        let residual = eval_on_matrices(&diff, images, dim);
        w.expect(residual.is_zero(), || {
            format!(
                "relation {} = {} fails: residual {}",
                pres.render(&lhs),
                pres.render(&rule.rhs),
                residual.first_nonzero(&Scalars).unwrap_or_default()
            )
        });
        if w.failed() {
            break;
        }
    }
    w.into_option()
}

/// Verifies the `uq_sl2` relations for the images of `rep`.
pub fn check_rep(rep: &Rep) -> CheckReport {
    let name = format!("rep-{}", rep.name);
    let uq = match builtin_presentation("uq_sl2") {
        Ok(p) => p,
        Err(e) => return CheckReport::error(name, crate::report::Mode::Exact, &e),
    };
    let images = match rep.images_for(&uq) {
        Ok(i) => i,
        Err(e) => return CheckReport::error(name, crate::report::Mode::Exact, &e),
    };
    CheckReport::exact(name, relation_violation(&uq, &images, rep.dim))
}

/// Tensor-product representation through `Δ_q` or `Δ_{q⁻¹}`.
pub fn coproduct_rep(r1: &Rep, r2: &Rep, variant: CoproductVariant) -> Rep {
    let (left, right) = match variant {
        CoproductVariant::Q => (&r1.kinv, &r2.k),
        CoproductVariant::QInv => (&r1.k, &r2.kinv),
    };
    // Δ(X) = X⊗right + left⊗X for X ∈ {E, F}
    let delta = |x1: &RepMatrix, x2: &RepMatrix| &x1.kron(right) + &left.kron(x2);
    Rep {
        name: format!("{}⊗{}", r1.name, r2.name),
        dim: r1.dim * r2.dim,
        e: delta(&r1.e, &r2.e),
        f: delta(&r1.f, &r2.f),
        k: r1.k.kron(&r2.k),
        kinv: r1.kinv.kron(&r2.kinv),
    }
}
