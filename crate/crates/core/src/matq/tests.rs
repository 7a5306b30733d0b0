use num_complex::Complex64;

use super::*;
use crate::ncpoly::builtin_presentation;
use crate::scalars::{q_int_sym, QScalar};

#[test]
fn fund_matches_catalog() {
    let r = builtin_rep("fund").unwrap();
    assert_eq!(r.e, RepMatrix::from_ints(&[&[0, 1], &[0, 0]]));
    assert_eq!(r.f, RepMatrix::from_ints(&[&[0, 0], &[1, 0]]));
    assert!(check_rep(&r).passed());
}

#[test]
fn spin1_commutator_by_hand() {
    let r = builtin_rep("spin1").unwrap();
    assert_eq!(*r.e.get(0, 1), QScalar::rho());
    assert_eq!(*r.e.get(1, 2), QScalar::q() * QScalar::rho());
    let comm = &(&r.e * &r.f) - &(&r.f * &r.e);
    let two = q_int_sym(2);
    assert_eq!(comm, RepMatrix::diag(&[two.clone(), QScalar::zero(), -two]));
    assert!(check_rep(&r).passed());
}

#[test]
fn swapped_rep_fails_on_commutator() {
    let mut r = builtin_rep("fund").unwrap();
    std::mem::swap(&mut r.e, &mut r.f);
    let rep = check_rep(&r);
    assert!(!rep.passed());
}

#[test]
fn coproduct_reps_are_reps() {
    for a in REPS {
        for b in REPS {
            let (ra, rb) = (builtin_rep(a).unwrap(), builtin_rep(b).unwrap());
            for v in [CoproductVariant::Q, CoproductVariant::QInv] {
                let r = coproduct_rep(&ra, &rb, v);
                let rep = check_rep(&r);
                assert!(rep.passed(), "{a}⊗{b} {v:?}: {:?}", rep.witness);
            }
        }
    }
}

#[test]
fn coproduct_k_eigenvalues_and_flip() {
    let f = builtin_rep("fund").unwrap();
    let d = coproduct_rep(&f, &f, CoproductVariant::Q);
    let diag: Vec<_> = (0..4).map(|i| d.k.get(i, i).clone()).collect();
    assert_eq!(
        diag,
        vec![
            QScalar::q(),
            QScalar::one(),
            QScalar::one(),
            QScalar::q_pow(-1)
        ]
    );
    let p = RepMatrix::flip(2);
    let dinv = coproduct_rep(&f, &f, CoproductVariant::QInv);
    assert_eq!(&(&p * &d.e) * &p, dinv.e);
    assert_eq!(&(&p * &d.f) * &p, dinv.f);
}

#[test]
fn coproducts_agree_at_q_one() {
    let s = builtin_rep("spin1").unwrap();
    let f = builtin_rep("fund").unwrap();
    let one = Complex64::new(1.0, 0.0);
    let a = coproduct_rep(&f, &s, CoproductVariant::Q);
    let b = coproduct_rep(&f, &s, CoproductVariant::QInv);
    for (x, y) in [(&a.e, &b.e), (&a.f, &b.f)] {
        let diff = x.eval(one).unwrap() - y.eval(one).unwrap();
        assert!(diff.norm() < 1e-12);
    }
}

#[test]
fn kron_and_embed() {
    let i2 = RepMatrix::identity(2);
    assert_eq!(kron(&i2, &i2), RepMatrix::identity(4));
    let r = RepMatrix::from_ints(&[&[1, 2, 0, 0], &[0, 3, 4, 0], &[0, 0, 5, 0], &[6, 0, 0, 7]]);
    assert_eq!(embed(&r, &[1, 2], &[2, 2, 2]).unwrap(), r.kron(&i2));
    assert_eq!(embed(&r, &[2, 3], &[2, 2, 2]).unwrap(), i2.kron(&r));
    // R13 for a pure tensor a⊗b is a⊗I⊗b
    let a = RepMatrix::from_ints(&[&[1, 2], &[3, 4]]);
    let b = RepMatrix::from_ints(&[&[0, 5], &[6, 7]]);
    assert_eq!(
        embed(&a.kron(&b), &[1, 3], &[2, 2, 2]).unwrap(),
        a.kron(&i2).kron(&b)
    );
    assert!(matches!(
        embed(&r, &[1, 2], &[2, 3]),
        Err(crate::Error::Dimension(_))
    ));
}

#[test]
fn exact_inverse() {
    let r = RepMatrix::from_rows(vec![
        vec![QScalar::q(), QScalar::rho()],
        vec![QScalar::one(), QScalar::s()],
    ])
    .unwrap();
    let inv = r.inverse().unwrap();
    assert_eq!(&r * &inv, RepMatrix::identity(2));
    assert!(RepMatrix::from_ints(&[&[1, 1], &[1, 1]])
        .inverse()
        .is_none());
}

#[test]
fn q_exp_examples() {
    let f = builtin_rep("fund").unwrap();
    let e = matrix_q_exp(&Scalars, &f.e, &QScalar::q(), 4, false).unwrap();
    assert_eq!(e, &RepMatrix::identity(2) + &f.e);
    let z = RepMatrix::zeros(3, 3);
    assert_eq!(
        matrix_q_exp(&Scalars, &z, &QScalar::q(), 2, false).unwrap(),
        RepMatrix::identity(3)
    );
    let k = builtin_rep("spin1").unwrap().k;
    assert_eq!(
        matrix_q_exp(&Scalars, &k, &QScalar::q(), 5, false),
        Err(crate::Error::NotNilpotent { max_order: 5 })
    );
    assert!(matrix_q_exp(&Scalars, &k, &QScalar::q(), 5, true).is_ok());

    // γ·F(spin1) with base q⁻²: I + γF + γ²F²/(1+q⁻²)
    let pa = builtin_presentation("param_alg").unwrap();
    let f1 = builtin_rep("spin1").unwrap().f;
    let gamma = pa.g("gamma");
    let m = f1.map(|c| gamma.scale(c));
    let got = matrix_q_exp(&*pa, &m, &QScalar::q_pow(-2), 4, false).unwrap();
    let f2 = &f1 * &f1;
    let g2 = pa.word(&["gamma", "gamma"]);
    let denom = (QScalar::one() + QScalar::q_pow(-2)).inv().unwrap();
    let expected = Matrix::identity_in(&*pa, 3)
        .add_in(&*pa, &m)
        .add_in(&*pa, &f2.map(|c| g2.scale(&(c * &denom))));
    assert_eq!(got, expected);
}

#[test]
fn universal_t_fund_and_spin1() {
    let f = builtin_rep("fund").unwrap();
    assert_eq!(universal_t(&f).unwrap(), parametrized_t());
    let r = check_universal_t(&f);
    assert!(r.passed(), "{:?}", r.witness);

    let s = builtin_rep("spin1").unwrap();
    let t = universal_t(&s).unwrap();
    let pa = builtin_presentation("param_alg").unwrap();
    assert_eq!(*t.get(0, 0), pa.word(&["u", "u"]));
    let r = check_universal_t(&s);
    assert!(r.passed(), "{:?}", r.witness);
}

#[test]
fn universal_t_diagonal_at_zero_parameters() {
    let s = builtin_rep("spin1").unwrap();
    let t = universal_t(&s).unwrap();
    let pa = builtin_presentation("param_alg").unwrap();
    // drop every term containing gamma or beta
    let (g, b) = (pa.gen_id("gamma").unwrap(), pa.gen_id("beta").unwrap());
    let strip = |p: &crate::ncpoly::NCPoly| {
        crate::ncpoly::NCPoly::from_terms(
            p.terms()
                .filter(|(w, _)| !w.letters().iter().any(|&x| x == g || x == b))
                .map(|(w, c)| (w.clone(), c.clone())),
        )
    };
    let expected = [
        pa.word(&["u", "u"]),
        crate::ncpoly::NCPoly::one(),
        pa.word(&["uinv", "uinv"]),
    ];
    for i in 0..3 {
        for j in 0..3 {
            let e = strip(t.get(i, j));
            if i == j {
                assert_eq!(e, expected[i]);
            } else {
                assert!(e.is_zero());
            }
        }
    }
}

#[test]
fn json_export() {
    let f = builtin_rep("fund").unwrap();
    let v = f.k.to_json();
    assert_eq!(v["rows"], 2);
    assert_eq!(v["entries"][0][0], "s");
    assert_eq!(v["entries"][1][1], "s^-1");
}
