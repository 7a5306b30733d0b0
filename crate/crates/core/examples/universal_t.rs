//! The universal T-matrix: q-exponentials in noncommuting parameters.

use qalg::matq::{builtin_rep, check_universal_t, parametrized_t, universal_t};

fn main() -> qalg::Result<()> {
    let t = parametrized_t();
    println!(
        "parametrized T = [[{}, {}], [{}, {}]]",
        t.render_entry(0, 0),
        t.render_entry(0, 1),
        t.render_entry(1, 0),
        t.render_entry(1, 1)
    );

    for name in ["fund", "spin1"] {
        let rep = builtin_rep(name)?;
        let u = universal_t(&rep)?;
        println!(
            "universal T on {name}, entry (1,1): {}",
            u.render_entry(0, 0)
        );
        println!("{}", check_universal_t(&rep).text_line());
    }
    Ok(())
}
