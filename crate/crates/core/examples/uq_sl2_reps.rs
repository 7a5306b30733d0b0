//! U_q(sl2) in K-form, its two small representations and the two coproducts.

use qalg::matq::{builtin_rep, check_rep, coproduct_rep, CoproductVariant};
use qalg::ncpoly::builtin_presentation;
use qalg::qgroup::{self, delta_uq};

fn main() -> qalg::Result<()> {
    let uq = builtin_presentation("uq_sl2")?;
    let (e, f) = (uq.g("E"), uq.g("F"));
    println!("[E, F] = {}", uq.display(&uq.commutator(&e, &f)));

    for name in ["fund", "spin1"] {
        let rep = builtin_rep(name)?;
        println!("{name}: E =\n{}", rep.e);
        println!("{}", check_rep(&rep).text_line());
    }

    let fund = builtin_rep("fund")?;
    let both = coproduct_rep(&fund, &fund, CoproductVariant::Q);
    println!(
        "fund (x) fund under Delta_q: {}",
        check_rep(&both).text_line()
    );

    let (tensor, image) = delta_uq(&e, CoproductVariant::Q)?;
    println!("Delta_q(E) = {}", tensor.display(&image));
    let flip = qgroup::check_delta_flip();
    println!("{}", flip.text_line());
    if let Some(note) = &flip.convention_notes {
        println!("  {note}");
    }
    Ok(())
}
