//! Fun_q(SL(2)): the q-determinant, the antipode matrix and the coproduct.

use qalg::matq::{fundamental_t, spin1_t};
use qalg::ncpoly::builtin_presentation;
use qalg::qgroup::{self, delta_fun, detq, t_inverse};

fn main() -> qalg::Result<()> {
    let gl2 = builtin_presentation("funq_gl2")?;
    let t = fundamental_t(gl2.clone());
    println!("det_q T = {}", gl2.display(&detq(&t)?));

    let sl2 = builtin_presentation("funq_sl2")?;
    let tinv = t_inverse(sl2.clone());
    let id = fundamental_t(sl2.clone()).mul(&tinv);
    println!(
        "T.T^-1 = [[{}, {}], [{}, {}]]",
        id.render_entry(0, 0),
        id.render_entry(0, 1),
        id.render_entry(1, 0),
        id.render_entry(1, 1)
    );

    let ab = gl2.word(&["A", "B"]);
    let (tensor, image) = delta_fun(&ab, &gl2)?;
    println!("Delta(A.B) = {}", tensor.display(&image));

    let t1 = spin1_t(sl2);
    println!("T1(2,2) = {}", t1.render_entry(1, 1));

    for report in [
        qgroup::check_detq_central(),
        qgroup::check_t_inverse(),
        qgroup::check_delta_fun(),
        qgroup::check_corep_fund(),
        qgroup::check_corep_spin1(),
    ] {
        println!("{}", report.text_line());
    }
    Ok(())
}
