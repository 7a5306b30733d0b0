//! Quantum plane arithmetic and the covariance of its differential calculus.

use qalg::ncpoly::{builtin_presentation, check_confluence};
use qalg::qgroup;

fn main() -> qalg::Result<()> {
    let plane = builtin_presentation("quantum_plane")?;
    let (x, y) = (plane.g("X"), plane.g("Y"));

    println!("Y.X   = {}", plane.display(&plane.mul(&y, &x)));
    println!("Dx.X  = {}", plane.display(&plane.word(&["Dx", "X"])));
    println!("(X+Y)^3 = {}", plane.display(&plane.pow(&x.add(&y), 3)));
    println!("[X, Y] = {}", plane.display(&plane.commutator(&x, &y)));

    for report in [
        check_confluence(&plane),
        qgroup::check_covariance(),
        qgroup::check_covariance_classical(),
    ] {
        println!("{}", report.text_line());
    }
    Ok(())
}
