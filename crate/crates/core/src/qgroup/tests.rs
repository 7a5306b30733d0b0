use super::*;

fn q(k: i64) -> QScalar {
    QScalar::q_pow(k)
}

#[test]
fn all_checks_pass() {
    for r in [
        check_covariance(),
        check_covariance_classical(),
        check_detq_central(),
        check_t_inverse(),
        check_delta_fun(),
        check_corep_fund(),
        check_corep_spin1(),
        check_delta_uq(CoproductVariant::Q),
        check_delta_uq(CoproductVariant::QInv),
        check_delta_flip(),
    ] {
        assert!(r.passed(), "{}: {:?}", r.name, r.witness);
        if r.mode == Mode::Exact {
            assert_eq!(r.residual, None);
        }
    }
}

#[test]
fn covariance_examples() {
    let cov = catalog("covariance");
    let plane = catalog("quantum_plane");
    let im = covariance_images(&cov, &plane, DerivativeTransform::TransposeInverse);
    let img = |n: &str| im[&plane.gen_id(n).unwrap()].clone();
    let (x, y, dy) = (img("X"), img("Y"), img("Dy"));
    let d = cov.mul(&x, &y).sub(&cov.mul(&y, &x).scale(&q(1)));
    assert!(d.is_zero());
    let d = cov
        .mul(&dy, &y)
        .sub(&cov.mul(&y, &dy).scale(&q(2)))
        .sub(&NCPoly::one());
    assert!(d.is_zero());
}

#[test]
fn detq_examples() {
    let gl = catalog("funq_gl2");
    let det = detq(&fundamental_t(gl.clone())).unwrap();
    assert!(gl.commutator(&det, &gl.g("B")).is_zero());
    let id = NCMatrix::identity(2, gl);
    assert_eq!(detq(&id).unwrap(), NCPoly::one());
}

#[test]
fn t_inverse_entries() {
    let sl = catalog("funq_sl2");
    let t = fundamental_t(sl.clone());
    let p = t_inverse(sl).mul(&t);
    assert!(p.get(0, 1).is_zero());
    assert_eq!(
        *t.mul(&t_inverse(t.ambient.clone())).get(0, 0),
        NCPoly::one()
    );
}

#[test]
fn delta_fun_examples() {
    let sl = catalog("funq_sl2");
    let (tensor, da) = delta_fun(&sl.g("A"), &sl).unwrap();
    let (_, db) = delta_fun(&sl.g("B"), &sl).unwrap();
    let d = tensor.mul(&da, &db).sub(&tensor.mul(&db, &da).scale(&q(1)));
    assert!(d.is_zero());
    let (_, dad) = delta_fun(&sl.word(&["A", "D"]), &sl).unwrap();
    let (_, dbc) = delta_fun(&sl.word(&["B", "C"]), &sl).unwrap();
    assert_eq!(dad.sub(&dbc.scale(&q(1))), NCPoly::one());
    let (_, d1) = delta_fun(&NCPoly::one(), &sl).unwrap();
    assert_eq!(d1, NCPoly::one());

    // (ΔA)² = A²⊗A² + (1+q⁻²) AB⊗AC + B²⊗C² after reduction
    let (_, da2) = delta_fun(&sl.word(&["A", "A"]), &sl).unwrap();
    let pair = |l: &[&str], r: &[&str]| tensor.tensor_elem(&sl.word(l), &sl.word(r));
    let expected = pair(&["A", "A"], &["A", "A"])
        .add(&pair(&["A", "B"], &["A", "C"]).scale(&(QScalar::one() + q(-2))))
        .add(&pair(&["B", "B"], &["C", "C"]));
    assert_eq!(da2, expected);
}

#[test]
fn trivial_corepresentation() {
    let sl = catalog("funq_sl2");
    let one = NCMatrix::identity(1, sl);
    assert!(check_corepresentation(&one).passed());
}

#[test]
fn broken_corepresentation_fails() {
    let sl = catalog("funq_sl2");
    let t = fundamental_t(sl.clone()).scale(&q(1));
    assert!(!check_corepresentation(&t).passed());
}

#[test]
fn flip_notes_witness_noncocommutativity() {
    let r = check_delta_flip();
    assert!(r.convention_notes.unwrap().starts_with("noncocommutative"));
}

#[test]
fn transpose_of_inverse_is_not_covariant() {
    let cov = catalog("covariance");
    let plane = catalog("quantum_plane");
    let im = covariance_images(&cov, &plane, DerivativeTransform::InverseTranspose);
    let w = morphism_violation(&plane, &im, &cov).unwrap().unwrap();
    assert!(w.starts_with("relation Dx.Y"), "{w}");
    assert!(check_covariance()
        .convention_notes
        .unwrap()
        .contains("fails"));
}
