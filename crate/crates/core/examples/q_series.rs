//! q-numbers, q-factorials and q-exponentials, exact and numeric.

use num_complex::Complex64;
use qalg::scalars::{
    basic_hypergeometric, format_complex, q_exp, q_factorial, q_int_heine, q_int_sym, QScalar,
};

fn main() -> qalg::Result<()> {
    println!("[3]_q   = {}", q_int_heine(3));
    println!("[[4]]_q = {}", q_int_sym(4));
    println!("[3]_q!  = {}", q_factorial(3, &QScalar::q()));
    println!(
        "e_q^1, four terms = {}",
        q_exp(&QScalar::one(), &QScalar::q(), 4)?
    );

    let q = Complex64::new(0.5, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let e = q_exp(&one, &q, 30)?;
    let phi = basic_hypergeometric(&[Complex64::new(0.0, 0.0)], &[], q, (one - q) * one, 30)?;
    println!(
        "e_q^1 at q = 0.5: {} (1phi0: {})",
        format_complex(e),
        format_complex(phi)
    );

    let near = Complex64::new(1.0 - 1e-9, 0.0);
    println!(
        "e_q^1 as q -> 1: {}",
        format_complex(q_exp(&one, &near, 30)?)
    );
    Ok(())
}
