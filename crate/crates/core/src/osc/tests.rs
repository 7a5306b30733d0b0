use super::*;

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() < tol
}

#[test]
fn all_pass_at_defaults() {
    for name in CHECKS {
        let r = run_check(name, OscParams::default()).unwrap();
        assert!(r.passed(), "{name}: {:?}", r.witness);
        assert!(r.residual.is_some());
    }
    assert!(run_check("nope", OscParams::default()).is_err());
}

#[test]
fn two_level_boson() {
    let f = boson_fock(2).unwrap();
    assert_eq!(
        f.a,
        CMatrix::from_row_slice(2, 2, &[c(0.0), c(1.0), c(0.0), c(0.0)])
    );
    assert!(boson_fock(1).is_err());
}

#[test]
fn number_commutator_on_three() {
    let f = boson_fock(8).unwrap();
    let comm = &f.n * &f.adag - &f.adag * &f.n;
    let col = comm.column(3);
    for i in 0..8 {
        let want = if i == 4 { 2.0 } else { 0.0 };
        assert!((col[i] - c(want)).norm() < 1e-12);
    }
    let ccr = &f.a * &f.adag - &f.adag * &f.a;
    for k in 0..7 {
        assert!((ccr[(k, k)] - c(1.0)).norm() < 1e-12);
    }
    // the top state is not canonical
    assert!((ccr[(7, 7)] - c(1.0)).norm() > 1.0);
}

#[test]
fn spectra() {
    let f = boson_fock(6).unwrap();
    let ev = hamiltonian_spectrum(&f);
    for (k, e) in ev.iter().enumerate() {
        assert!(close(*e, k as f64 + 0.5, 1e-12));
    }
    let g = q_fock(6, 1.5).unwrap();
    let ev = hamiltonian_spectrum(&g);
    assert_eq!(ev.len(), 5);
    assert!(close(ev[0], 0.5, 1e-12));
    assert!(close(ev[1], (1.0 + 1.5 + 1.0 / 1.5) / 2.0, 1e-12));
}

#[test]
fn qboson_by_hand() {
    let q = 1.3;
    let f = q_fock(7, q).unwrap();
    let m = &f.a * &f.adag - &f.adag * &f.a * c(q);
    let sym = |n: i32| (q.powi(n) - q.powi(-n)) / (q - 1.0 / q);
    for k in 0..6 {
        assert!(close(sym(k + 1) - q * sym(k), q.powi(-k), 1e-12));
        assert!((m[(k as usize, k as usize)] - c(q.powi(-k))).norm() < 1e-12);
    }
    assert!(q_fock(4, 0.0).is_err());
    assert!(q_fock(4, -1.0).is_err());
    assert!(check_qboson_relations(4, -1.0).status == Status::Error);
}

#[test]
fn qboson_limits_and_symmetry() {
    let b = boson_fock(9).unwrap();
    let q1 = q_fock(9, 1.0).unwrap();
    assert!((&b.a - &q1.a).iter().all(|z| z.norm() < 1e-12));
    let two = q_fock(2, 1.7).unwrap();
    let n = &two.adag * &two.a;
    assert!((n[(0, 0)]).norm() < 1e-12 && (n[(1, 1)] - c(1.0)).norm() < 1e-12);
    let (x, y) = (q_fock(9, 1.7).unwrap(), q_fock(9, 1.0 / 1.7).unwrap());
    assert!((&x.a - &y.a).iter().all(|z| z.norm() < 1e-12));
}

#[test]
fn truncation_stays_local() {
    let q = 1.4;
    let diff = |d: usize| {
        let f = q_fock(d, q).unwrap();
        &f.a * &f.adag - &f.adag * &f.a * c(q) - f.q_pow_n(-1.0)
    };
    let (small, large) = (diff(6), diff(12));
    for j in 0..5 {
        for i in 0..6 {
            assert!((small[(i, j)] - large[(i, j)]).norm() < 1e-12);
        }
    }
}

#[test]
fn jordan_schwinger_relations() {
    let js = jordan_schwinger(5, 1.0).unwrap();
    assert_eq!(js.interior.len(), 16);
    assert!(adjoint_residual(&js.jp, &js.jm) < 1e-12);
    assert!(check_js_su2(5).passed());
    let r = check_js_suq2(6, 1.3);
    assert!(r.passed() && r.residual.unwrap() < 1e-9);
    // the q-relation fails with the undeformed right-hand side
    let jq = jordan_schwinger(6, 1.3).unwrap();
    let comm = &jq.jp * &jq.jm - &jq.jm * &jq.jp;
    assert!(interior_residual(&comm, &(&jq.j0 * c(2.0)), &jq.interior) > 1e-3);
}

#[test]
fn classical_limit() {
    let eps = 1.0 + 1e-8;
    for d in [4, 6] {
        let a = check_js_suq2(d, eps).residual.unwrap();
        let b = check_js_su2(d).residual.unwrap();
        assert!((a - b).abs() < 1e-6);
        let x = jordan_schwinger(d, eps).unwrap();
        let two = &x.j0 * c(2.0);
        assert!((x.q_int_2j0() - two).iter().all(|z| z.norm() < 1e-6));
        let qa = check_addition_rules(d, eps, CoproductVariant::Q)
            .residual
            .unwrap();
        assert!(qa < 1e-6);
    }
}

#[test]
fn addition_rules() {
    for v in [CoproductVariant::Q, CoproductVariant::QInv] {
        let r = check_addition_rules(3, 1.3, v);
        assert!(r.passed() && r.residual.unwrap() < 1e-9, "{:?}", r.witness);
    }
    let js = jordan_schwinger(3, 1.0).unwrap();
    let (a, b) = (
        addition_ops(&js, CoproductVariant::Q),
        addition_ops(&js, CoproductVariant::QInv),
    );
    let d: Sparse = &a.jp - &b.jp;
    assert!(d.iter().all(|(x, _)| x.abs() < 1e-12));
    // the two variants differ away from q = 1
    let js = jordan_schwinger(3, 1.3).unwrap();
    let (a, b) = (
        addition_ops(&js, CoproductVariant::Q),
        addition_ops(&js, CoproductVariant::QInv),
    );
    let d: Sparse = &a.jp - &b.jp;
    assert!(d.iter().any(|(x, _)| x.abs() > 1e-3));
}

#[test]
fn clock_and_shift() {
    let (t, g, phase) = clock_shift(4, 1).unwrap();
    assert!((phase - Complex64::i()).norm() < 1e-15);
    let lhs = &t * &g;
    let rhs = (&g * &t) * Complex64::i();
    assert!((lhs - rhs).iter().all(|z| z.norm() < 1e-12));
    assert!(clock_shift_residual(5, 0).unwrap() < 1e-15);
    let (t0, g0, _) = clock_shift(5, 0).unwrap();
    assert!((&t0 * &g0 - &g0 * &t0).iter().all(|z| z.norm() < 1e-15));
    assert!(clock_shift_check(6, 2).passed());
    assert!(clock_shift(1, 1).is_err());
}
