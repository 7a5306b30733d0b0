//! Quantum-group identities on the symbolic layer: covariance of the
//! q-calculus, the quantum determinant and inverse, coproducts of the
//! function algebra and of the enveloping algebra, and corepresentations.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matq::{fundamental_t, spin1_t, CoproductVariant, NCMatrix};
use crate::ncpoly::{
    apply_morphism, builtin_presentation, morphism_violation, tensor_presentation, GenId, NCPoly,
    Presentation,
};
use crate::report::{CheckReport, Mode, Witness};
use crate::scalars::QScalar;

#[cfg(test)]
mod tests;

fn catalog(name: &str) -> Arc<Presentation> {
    builtin_presentation(name).expect("catalog presentation")
}

fn exact_report(name: &str, run: impl FnOnce() -> Result<Option<String>>) -> CheckReport {
    match run() {
        Ok(w) => CheckReport::exact(name, w),
        Err(e) => CheckReport::error(name, Mode::Exact, &e),
    }
}

/// How the derivatives transform under `T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivativeTransform {
    /// By the inverse of the transposed quantum matrix,
    /// `(Tᵀ)⁻¹ = [[D, −q⁻¹C], [−qB, A]]`.
    TransposeInverse,
    /// By the matrix `[[D, −qC], [−q⁻¹B, A]]`, the transpose of `T⁻¹`.
    InverseTranspose,
}

/// Images of the plane generators under the linear transformation by `T`:
/// `X′ = AX + BY`, `Y′ = CX + DY`, and `(∂X′, ∂Y′)` by the chosen matrix.
pub fn covariance_images(
    cov: &Presentation,
    plane: &Presentation,
    how: DerivativeTransform,
) -> BTreeMap<GenId, NCPoly> {
    let w = |a: &str, b: &str| cov.word(&[a, b]);
    let (c_coeff, b_coeff) = match how {
        DerivativeTransform::TransposeInverse => (QScalar::q_pow(-1), QScalar::q()),
        DerivativeTransform::InverseTranspose => (QScalar::q(), QScalar::q_pow(-1)),
    };
    let images = [
        ("X", w("A", "X").add(&w("B", "Y"))),
        ("Y", w("C", "X").add(&w("D", "Y"))),
        ("Dx", w("D", "Dx").sub(&w("C", "Dy").scale(&c_coeff))),
        ("Dy", w("A", "Dy").sub(&w("B", "Dx").scale(&b_coeff))),
    ];
    images
        .into_iter()
        .map(|(n, p)| (plane.gen_id(n).expect("plane generator"), p))
        .collect()
}

/// All six plane relations hold for the transformed coordinates and
/// derivatives, with the derivatives transformed by `(Tᵀ)⁻¹`. The notes
/// record the first relation broken by the transpose of `T⁻¹`, which
/// agrees with `(Tᵀ)⁻¹` only at `q = 1`.
pub fn check_covariance() -> CheckReport {
    let name = "covariance";
    let run = || -> Result<(Option<String>, String)> {
        let cov = catalog("covariance");
        let plane = catalog("quantum_plane");
        let how = DerivativeTransform::TransposeInverse;
        let w = morphism_violation(&plane, &covariance_images(&cov, &plane, how), &cov)?;
        let other = DerivativeTransform::InverseTranspose;
        let note =
            match morphism_violation(&plane, &covariance_images(&cov, &plane, other), &cov)? {
                Some(v) => format!(
                    "derivatives transform by (T^t)^-1 = [[D, -q^-1 C], [-q B, A]]; \
                 the matrix [[D, -q C], [-q^-1 B, A]] fails: {v}"
                ),
                None => "derivatives transform by (T^t)^-1; [[D, -q C], [-q^-1 B, A]] also passes"
                    .into(),
            };
        Ok((w, note))
    };
    match run() {
        Ok((w, note)) => CheckReport::exact(name, w).with_notes(note),
        Err(e) => CheckReport::error(name, Mode::Exact, &e),
    }
}

/// The `s = 1` specialization: the transformed quantities obey the
/// classical commutation relations. The residual is the largest
/// coefficient magnitude over the six relations.
pub fn check_covariance_classical() -> CheckReport {
    let name = "covariance-classical";
    let run = || -> Result<(f64, Option<String>)> {
        let cov = catalog("covariance").specialize_at_one()?;
        let plane = catalog("quantum_plane").specialize_at_one()?;
        let images = covariance_images(&cov, &plane, DerivativeTransform::TransposeInverse);
        let one = num_complex::Complex64::new(1.0, 0.0);
        let mut worst = 0.0f64;
        let mut witness = None;
        for rule in plane.rules() {
            let lhs = NCPoly::word(&[rule.lhs.0, rule.lhs.1]);
            let diff = apply_morphism(&plane, &images, &lhs.sub(&rule.rhs), &cov)?;
            for (_, c) in diff.terms() {
                let v = c.eval(one)?.norm();
                if v > worst {
                    worst = v;
                    witness = Some(format!(
                        "classical relation {} = {} leaves {}",
                        plane.render(&lhs),
                        plane.render(&rule.rhs),
                        cov.render(&diff)
                    ));
                }
            }
        }
        Ok((worst, witness))
    };
    match run() {
        Ok((r, w)) => CheckReport::numeric(name, r, 1e-12, w),
        Err(e) => CheckReport::error(name, Mode::Numeric, &e),
    }
}

/// `A·D − q·B·C` for a 2×2 matrix over its ambient algebra.
pub fn detq(t: &NCMatrix) -> Result<NCPoly> {
    if t.rows() != 2 || t.cols() != 2 {
        return Err(Error::Dimension("detq needs a 2x2 matrix".into()));
    }
    let p = &t.ambient;
    let ad = p.mul(t.get(0, 0), t.get(1, 1));
    let bc = p.mul(t.get(0, 1), t.get(1, 0));
    Ok(ad.sub(&bc.scale(&QScalar::q())))
}

/// The quantum determinant is central in `funq_gl2` and equals 1 in
/// `funq_sl2`.
pub fn check_detq_central() -> CheckReport {
    exact_report("detq-central", || {
        let gl = catalog("funq_gl2");
        let det = detq(&fundamental_t(gl.clone()))?;
        let mut w = Witness::new();
        for g in ["A", "B", "C", "D"] {
            let c = gl.commutator(&det, &gl.g(g));
            w.expect(c.is_zero(), || format!("[detq, {g}] = {}", gl.render(&c)));
        }
        let sl = catalog("funq_sl2");
        let d1 = detq(&fundamental_t(sl.clone()))?;
        w.expect(d1 == NCPoly::one(), || {
            format!("detq in funq_sl2 = {}", sl.render(&d1))
        });
        Ok(w.into_option())
    })
}

/// `T⁻¹ = [[D, −q⁻¹B], [−qC, A]]`.
pub fn t_inverse(pres: Arc<Presentation>) -> NCMatrix {
    let g = |n: &str| pres.g(n);
    NCMatrix::from_rows(
        vec![
            vec![g("D"), g("B").scale(&-QScalar::q_pow(-1))],
            vec![g("C").scale(&-QScalar::q()), g("A")],
        ],
        pres.clone(),
    )
    .expect("2x2")
}

pub fn check_t_inverse() -> CheckReport {
    exact_report("t-inverse", || {
        let sl = catalog("funq_sl2");
        let t = fundamental_t(sl.clone());
        let ti = t_inverse(sl.clone());
        let id = NCMatrix::identity(2, sl);
        let mut w = Witness::new();
        for (label, prod) in [("T.Tinv", t.mul(&ti)), ("Tinv.T", ti.mul(&t))] {
            let d = prod.sub(&id);
            w.expect(d.is_zero(), || {
                format!(
                    "{label} - 1: {}",
                    d.first_nonzero_entry().unwrap_or_default()
                )
            });
        }
        Ok(w.into_option())
    })
}

/// Images `Δ(T_ij) = Σ_l T_il ⊗ T_lj` of the quantum-matrix entries in
/// `pres ⊗ pres`.
pub fn delta_fun_images(pres: &Presentation, tensor: &Presentation) -> BTreeMap<GenId, NCPoly> {
    let names = [["A", "B"], ["C", "D"]];
    let mut m = BTreeMap::new();
    for i in 0..2 {
        for j in 0..2 {
            let mut img = NCPoly::zero();
            for l in 0..2 {
                img = img.add(&tensor.tensor_elem(&pres.g(names[i][l]), &pres.g(names[l][j])));
            }
            m.insert(pres.gen_id(names[i][j]).expect("funq generator"), img);
        }
    }
    m
}

/// The coproduct of `funq_gl2` or `funq_sl2` applied to `p`, landing in the
/// tensor square.
pub fn delta_fun(p: &NCPoly, pres: &Presentation) -> Result<(Presentation, NCPoly)> {
    let tensor = tensor_presentation(pres, pres);
    let images = delta_fun_images(pres, &tensor);
    let out = apply_morphism(pres, &images, p, &tensor)?;
    Ok((tensor, out))
}

/// The coproduct images satisfy the quantum-matrix relations, and the
/// determinant relation in the special linear case.
pub fn check_delta_fun() -> CheckReport {
    exact_report("delta-fun", || {
        for name in ["funq_gl2", "funq_sl2"] {
            let p = catalog(name);
            let tensor = tensor_presentation(&p, &p);
            let images = delta_fun_images(&p, &tensor);
            if let Some(w) = morphism_violation(&p, &images, &tensor)? {
                return Ok(Some(format!("{name}: {w}")));
            }
        }
        Ok(None)
    })
}

/// Checks `Σ_l t_il ⊗ t_lj = Δ(t_ij)` for every entry of a square matrix
/// over `funq_sl2` (or `funq_gl2`).
pub fn check_corepresentation(t: &NCMatrix) -> CheckReport {
    let name = match t.rows() {
        2 => "corep-fund".to_string(),
        3 => "corep-spin1".to_string(),
        n => format!("corep-{n}"),
    };
    exact_report(&name, || {
        if t.rows() != t.cols() {
            return Err(Error::Dimension("corepresentation must be square".into()));
        }
        let pres = &t.ambient;
        let tensor = tensor_presentation(pres, pres);
        let images = delta_fun_images(pres, &tensor);
        let n = t.rows();
        let mut w = Witness::new();
        for i in 0..n {
            for j in 0..n {
                let mut lhs = NCPoly::zero();
                for l in 0..n {
                    lhs = lhs.add(&tensor.tensor_elem(t.get(i, l), t.get(l, j)));
                }
                let rhs = apply_morphism(pres, &images, t.get(i, j), &tensor)?;
                w.expect(lhs == rhs, || {
                    format!(
                        "entry ({},{}): {}",
                        i + 1,
                        j + 1,
                        tensor.render(&lhs.sub(&rhs))
                    )
                });
            }
        }
        Ok(w.into_option())
    })
}

pub fn check_corep_fund() -> CheckReport {
    check_corepresentation(&fundamental_t(catalog("funq_sl2")))
}

pub fn check_corep_spin1() -> CheckReport {
    check_corepresentation(&spin1_t(catalog("funq_sl2")))
}

/// Coproduct images of `E, F, K, K⁻¹` in `uq ⊗ uq`.
pub fn delta_uq_images(
    uq: &Presentation,
    tensor: &Presentation,
    variant: CoproductVariant,
) -> BTreeMap<GenId, NCPoly> {
    let g = |n: &str| uq.g(n);
    let t = |a: &NCPoly, b: &NCPoly| tensor.tensor_elem(a, b);
    let (left, right) = match variant {
        CoproductVariant::Q => (g("Kinv"), g("K")),
        CoproductVariant::QInv => (g("K"), g("Kinv")),
    };
    let mut m = BTreeMap::new();
    for x in ["E", "F"] {
        let img = t(&g(x), &right).add(&t(&left, &g(x)));
        m.insert(uq.gen_id(x).expect("uq generator"), img);
    }
    for k in ["K", "Kinv"] {
        m.insert(uq.gen_id(k).expect("uq generator"), t(&g(k), &g(k)));
    }
    m
}

pub fn delta_uq(p: &NCPoly, variant: CoproductVariant) -> Result<(Presentation, NCPoly)> {
    let uq = catalog("uq_sl2");
    let tensor = tensor_presentation(&uq, &uq);
    let images = delta_uq_images(&uq, &tensor, variant);
    let out = apply_morphism(&uq, &images, p, &tensor)?;
    Ok((tensor, out))
}

/// The coproduct of the given variant is an algebra map.
pub fn check_delta_uq(variant: CoproductVariant) -> CheckReport {
    let name = format!("delta-uq-{}", variant.as_str());
    exact_report(&name, || {
        let uq = catalog("uq_sl2");
        let tensor = tensor_presentation(&uq, &uq);
        let images = delta_uq_images(&uq, &tensor, variant);
        morphism_violation(&uq, &images, &tensor)
    })
}

/// `Δ_{q⁻¹} = τ∘Δ_q` on generators; the notes record that the two
/// coproducts differ on `E`.
pub fn check_delta_flip() -> CheckReport {
    let name = "delta-flip";
    let run = || -> Result<(Option<String>, String)> {
        let uq = catalog("uq_sl2");
        let tensor = tensor_presentation(&uq, &uq);
        let dq = delta_uq_images(&uq, &tensor, CoproductVariant::Q);
        let dqi = delta_uq_images(&uq, &tensor, CoproductVariant::QInv);
        let mut w = Witness::new();
        for (g, img) in &dq {
            let flipped = tensor.flip(img)?;
            w.expect(flipped == dqi[g], || {
                format!(
                    "flip of delta_q({}) = {} but delta_qinv = {}",
                    uq.render(&NCPoly::gen(*g)),
                    tensor.render(&flipped),
                    tensor.render(&dqi[g])
                )
            });
        }
        let e = uq.gen_id("E").expect("E");
        let note = if dq[&e] != dqi[&e] {
            format!(
                "noncocommutative: delta_q(E) = {} differs from delta_qinv(E) = {}",
                tensor.render(&dq[&e]),
                tensor.render(&dqi[&e])
            )
        } else {
            w.expect(false, || "delta_q(E) equals delta_qinv(E)".into());
            String::new()
        };
        Ok((w.into_option(), note))
    };
    match run() {
        Ok((w, note)) => CheckReport::exact(name, w).with_notes(note),
        Err(e) => CheckReport::error(name, Mode::Exact, &e),
    }
}
