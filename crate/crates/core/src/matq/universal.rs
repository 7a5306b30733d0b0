use std::collections::BTreeMap;
use std::sync::Arc;

use super::matrix::{Matrix, NCMatrix, Ring};
use super::rep::Rep;
use crate::error::{Error, Result};
use crate::ncpoly::{
    apply_morphism, builtin_presentation, morphism_violation, GenId, NCPoly, Presentation,
};
use crate::report::{CheckReport, Mode, Witness};
use crate::scalars::{q_factorial, QScalar};

/// Truncated matrix q-exponential `Σ_{n<k} mⁿ / [n]_base!`.
///
/// If `m^k = 0` for some `k ≤ max_order` the sum is exact. Otherwise the
/// call fails unless `truncate` is set, in which case the first
/// `max_order` terms are returned.
pub fn matrix_q_exp<R: Ring>(
    ring: &R,
    m: &Matrix<R::Elem>,
    base: &QScalar,
    max_order: usize,
    truncate: bool,
) -> Result<Matrix<R::Elem>> {
    if !m.is_square() {
        return Err(Error::Dimension(
            "q-exponential of a non-square matrix".into(),
        ));
    }
    let n = m.rows();
    let mut sum = Matrix::identity_in(ring, n);
    let mut power = Matrix::identity_in(ring, n);
    for k in 1..=max_order {
        power = power.mul_in(ring, m);
        if power.is_zero_in(ring) {
            return Ok(sum);
        }
        if k == max_order {
            break;
        }
        let fact = q_factorial(k as u32, base)
            .inv()
            .ok_or_else(|| Error::Domain {
                index: k,
                reason: format!("[{k}]! vanishes for base {base}"),
            })?;
        sum = sum.add_in(ring, &power.scale_in(ring, &fact));
    }
    if truncate {
        Ok(sum)
    } else {
        Err(Error::NotNilpotent { max_order })
    }
}

fn param_alg() -> Arc<Presentation> {
    builtin_presentation("param_alg").expect("catalog")
}

/// `x · m` for a generator `x` and a scalar matrix `m`.
fn dress(m: &super::RepMatrix, x: &NCPoly) -> Matrix<NCPoly> {
    m.map(|c| x.scale(c))
}

/// The universal T-matrix in the representation `rep`:
/// `e_{q⁻²}^{γ·F} · diag(u^{k_i}) · e_{q²}^{β·E}` with `K = diag(s^{k_i})`.
pub fn universal_t(rep: &Rep) -> Result<NCMatrix> {
    let pa = param_alg();
    let order = rep.dim + 1;
    let lower = matrix_q_exp(
        &*pa,
        &dress(&rep.f, &pa.g("gamma")),
        &QScalar::q_pow(-2),
        order,
        false,
    )?;
    let upper = matrix_q_exp(
        &*pa,
        &dress(&rep.e, &pa.g("beta")),
        &QScalar::q_pow(2),
        order,
        false,
    )?;
    let weights = rep.doubled_weights()?;
    let mut middle = Matrix::zeros_in(&*pa, rep.dim, rep.dim);
    for (i, &k) in weights.iter().enumerate() {
        let g = if k >= 0 { pa.g("u") } else { pa.g("uinv") };
        middle.set(i, i, pa.pow(&g, k.unsigned_abs() as u32));
    }
    let m = lower.mul_in(&*pa, &middle).mul_in(&*pa, &upper);
    Ok(NCMatrix::new(m, pa))
}

/// `[[A, B], [C, D]]` over `pres`.
pub fn fundamental_t(pres: Arc<Presentation>) -> NCMatrix {
    let g = |n: &str| pres.g(n);
    NCMatrix::from_rows(
        vec![vec![g("A"), g("B")], vec![g("C"), g("D")]],
        pres.clone(),
    )
    .expect("2x2")
}

/// The three-dimensional corepresentation
/// `[[A², ρAB, B²], [ρAC, AD + q⁻¹BC, ρBD], [C², ρCD, D²]]` over `pres`.
pub fn spin1_t(pres: Arc<Presentation>) -> NCMatrix {
    let w = |a: &str, b: &str| pres.word(&[a, b]);
    let r = QScalar::rho();
    let mid = w("A", "D").add(&w("B", "C").scale(&QScalar::q_pow(-1)));
    NCMatrix::from_rows(
        vec![
            vec![w("A", "A"), w("A", "B").scale(&r), w("B", "B")],
            vec![w("A", "C").scale(&r), mid, w("B", "D").scale(&r)],
            vec![w("C", "C"), w("C", "D").scale(&r), w("D", "D")],
        ],
        pres.clone(),
    )
    .expect("3x3")
}

/// The parametrization `A = u, B = u·β, C = γ·u, D = u⁻¹ + γ·u·β`.
pub fn parametrized_t() -> NCMatrix {
    let pa = param_alg();
    let u = pa.g("u");
    let a = u.clone();
    let b = pa.word(&["u", "beta"]);
    let c = pa.word(&["gamma", "u"]);
    let d = pa.g("uinv").add(&pa.word(&["gamma", "u", "beta"]));
    NCMatrix::from_rows(vec![vec![a, b], vec![c, d]], pa.clone()).expect("2x2")
}

/// Images of `A, B, C, D` (of a `funq` presentation) under the
/// parametrization.
pub fn parametrization_images(funq: &Presentation) -> BTreeMap<GenId, NCPoly> {
    let t = parametrized_t();
    let mut m = BTreeMap::new();
    for (name, (i, j)) in [("A", (0, 0)), ("B", (0, 1)), ("C", (1, 0)), ("D", (1, 1))] {
        m.insert(
            funq.gen_id(name).expect("funq generator"),
            t.get(i, j).clone(),
        );
    }
    m
}

fn first_difference(a: &NCMatrix, b: &NCMatrix) -> Option<String> {
    let mut w = Witness::new();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            w.expect(a.get(i, j) == b.get(i, j), || {
                format!(
                    "entry ({},{}): {} vs {}",
                    i + 1,
                    j + 1,
                    a.render_entry(i, j),
                    b.render_entry(i, j)
                )
            });
        }
    }
    w.into_option()
}

/// Reconstruction check of the universal T-matrix for `fund` or `spin1`.
pub fn check_universal_t(rep: &Rep) -> CheckReport {
    let name = format!("universal-t-{}", rep.name);
    let run = || -> Result<Option<String>> {
        let ut = universal_t(rep)?;
        let pa = param_alg();
        let sl2 = builtin_presentation("funq_sl2")?;
        let images = parametrization_images(&sl2);
        match rep.name.as_str() {
            "fund" => {
                if let Some(w) = first_difference(&ut, &parametrized_t()) {
                    return Ok(Some(w));
                }
                morphism_violation(&sl2, &images, &pa)
            }
            "spin1" => {
                let t1 = spin1_t(sl2.clone());
                let mapped =
                    t1.m.entries()
                        .iter()
                        .map(|p| apply_morphism(&sl2, &images, p, &pa))
                        .collect::<Result<Vec<_>>>()?;
                let rows = mapped.chunks(3).map(<[NCPoly]>::to_vec).collect();
                let expected = NCMatrix::from_rows(rows, pa)?;
                Ok(first_difference(&ut, &expected))
            }
            other => Err(Error::UnknownKey {
                kind: "representation",
                key: other.to_string(),
            }),
        }
    };
    match run() {
        Ok(w) => CheckReport::exact(name, w),
        Err(e) => CheckReport::error(name, Mode::Exact, &e),
    }
}
