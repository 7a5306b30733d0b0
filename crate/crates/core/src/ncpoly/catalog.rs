use std::sync::{Arc, OnceLock};

use super::poly::{GenId, NCPoly};
use super::presentation::Presentation;
use crate::error::{Error, Result};
use crate::scalars::QScalar;

pub const CATALOG: [&str; 7] = [
    "quantum_plane",
    "funq_gl2",
    "funq_sl2",
    "uq_sl2",
    "q_osc",
    "param_alg",
    "covariance",
];

fn q(k: i64) -> QScalar {
    QScalar::q_pow(k)
}

fn one() -> QScalar {
    QScalar::one()
}

fn quantum_plane() -> Presentation {
    Presentation::builder("quantum_plane")
        .gens(&["X", "Y", "Dx", "Dy"])
        .rule("Y", "X", &[(q(-1), &["X", "Y"])])
        .rule("Dy", "Dx", &[(q(1), &["Dx", "Dy"])])
        .rule("Dx", "Y", &[(q(1), &["Y", "Dx"])])
        .rule("Dy", "X", &[(q(1), &["X", "Dy"])])
        .rule(
            "Dx",
            "X",
            &[
                (one(), &[]),
                (q(2), &["X", "Dx"]),
                (q(2) - one(), &["Y", "Dy"]),
            ],
        )
        .rule("Dy", "Y", &[(one(), &[]), (q(2), &["Y", "Dy"])])
        .build()
        .expect("quantum_plane")
}

fn funq_gl2_builder(name: &str) -> super::presentation::PresentationBuilder {
    Presentation::builder(name)
        .gens(&["A", "B", "C", "D"])
        .rule("B", "A", &[(q(-1), &["A", "B"])])
        .rule("C", "A", &[(q(-1), &["A", "C"])])
        .rule("D", "B", &[(q(-1), &["B", "D"])])
        .rule("D", "C", &[(q(-1), &["C", "D"])])
        .rule("C", "B", &[(one(), &["B", "C"])])
        .rule(
            "D",
            "A",
            &[
                (one(), &["A", "D"]),
                (-QScalar::q_minus_qinv(), &["B", "C"]),
            ],
        )
}

fn funq_gl2() -> Presentation {
    funq_gl2_builder("funq_gl2").build().expect("funq_gl2")
}

// The determinant relation A·D − q·B·C = 1 is oriented on B·C: with A·D as
// the left side the system neither terminates in this order nor resolves
// the A·D·B overlap.
fn funq_sl2() -> Presentation {
    funq_gl2_builder("funq_sl2")
        .rule("B", "C", &[(q(-1), &["A", "D"]), (-q(-1), &[])])
        .build()
        .expect("funq_sl2")
}

fn uq_sl2() -> Presentation {
    let c = QScalar::q_minus_qinv()
        .inv()
        .expect("q - 1/q is invertible");
    Presentation::builder("uq_sl2")
        .gens(&["F", "Kinv", "K", "E"])
        .rule("K", "F", &[(q(-1), &["F", "K"])])
        .rule("E", "K", &[(q(-1), &["K", "E"])])
        .rule("Kinv", "F", &[(q(1), &["F", "Kinv"])])
        .rule("E", "Kinv", &[(q(1), &["Kinv", "E"])])
        .rule(
            "E",
            "F",
            &[
                (one(), &["F", "E"]),
                (c.clone(), &["K", "K"]),
                (-c, &["Kinv", "Kinv"]),
            ],
        )
        .inverse_pair("K", "Kinv")
        .build()
        .expect("uq_sl2")
}

fn q_osc() -> Presentation {
    Presentation::builder("q_osc")
        .gens(&["Adag", "KNinv", "KN", "A"])
        .rule("KN", "Adag", &[(q(1), &["Adag", "KN"])])
        .rule("A", "KN", &[(q(1), &["KN", "A"])])
        .rule("KNinv", "Adag", &[(q(-1), &["Adag", "KNinv"])])
        .rule("A", "KNinv", &[(q(-1), &["KNinv", "A"])])
        .rule("A", "Adag", &[(q(1), &["Adag", "A"]), (one(), &["KNinv"])])
        .inverse_pair("KN", "KNinv")
        .build()
        .expect("q_osc")
}

fn param_alg() -> Presentation {
    Presentation::builder("param_alg")
        .gens(&["gamma", "uinv", "u", "beta"])
        .rule("u", "gamma", &[(q(1), &["gamma", "u"])])
        .rule("beta", "u", &[(q(-1), &["u", "beta"])])
        .rule("beta", "gamma", &[(one(), &["gamma", "beta"])])
        .rule("uinv", "gamma", &[(q(-1), &["gamma", "uinv"])])
        .rule("beta", "uinv", &[(q(1), &["uinv", "beta"])])
        .inverse_pair("u", "uinv")
        .build()
        .expect("param_alg")
}

/// Quantum-matrix entries together with the plane coordinates and
/// derivatives, every entry commuting with every plane generator.
fn covariance() -> Presentation {
    let sl2 = funq_sl2();
    let plane = quantum_plane();
    let mut b = Presentation::builder("covariance").gens(&["A", "B", "C", "D"]);
    b = b.gens(&["X", "Y", "Dx", "Dy"]);
    for r in sl2.rules() {
        b = b.rule_poly(r.lhs, r.rhs.clone());
    }
    let off = sl2.num_generators() as GenId;
    for r in plane.rules() {
        b = b.rule_poly(
            (r.lhs.0 + off, r.lhs.1 + off),
            r.rhs.map_letters(|g| g + off),
        );
    }
    for p in 0..plane.num_generators() as GenId {
        for f in 0..off {
            b = b.rule_poly((p + off, f), NCPoly::word(&[f, p + off]));
        }
    }
    b.build().expect("covariance")
}

/// Catalog presentation by key. Presentations are built once and shared.
pub fn builtin_presentation(name: &str) -> Result<Arc<Presentation>> {
    static CACHE: OnceLock<Vec<Arc<Presentation>>> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        vec![
            Arc::new(quantum_plane()),
            Arc::new(funq_gl2()),
            Arc::new(funq_sl2()),
            Arc::new(uq_sl2()),
            Arc::new(q_osc()),
            Arc::new(param_alg()),
            Arc::new(covariance()),
        ]
    });
    CATALOG
        .iter()
        .position(|k| *k == name)
        .map(|i| all[i].clone())
        .ok_or_else(|| Error::UnknownKey {
            kind: "presentation",
            key: name.to_string(),
        })
}
