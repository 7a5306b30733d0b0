//! R-matrices: the fundamental one, universal images, YBE and the braid form.

use qalg::matq::builtin_rep;
use qalg::rmat::{self, fundamental_r, universal_r};

fn main() -> qalg::Result<()> {
    let r = fundamental_r();
    println!("R =\n{}", r.r);
    println!("braid form P.R =\n{}", rmat::braid_form(&r));

    let fund = builtin_rep("fund")?;
    let spin1 = builtin_rep("spin1")?;
    let u = universal_r(&fund, &fund, 4)?;
    println!(
        "universal image / R = {}",
        u.r.proportional_to(&r.r).expect("multiple")
    );
    println!("  {}", u.note);

    let u3 = universal_r(&spin1, &spin1, 3)?;
    println!("spin1 R is rho-free: {}", u3.r.is_rho_free());

    for report in [
        rmat::check_ybe(&r),
        rmat::check_braid(&r),
        rmat::check_braid_far_commute(&r),
        rmat::check_intertwiner(&r, &fund, &fund),
        rmat::check_ybe(&u3),
        rmat::check_ybe_mixed_family(),
    ] {
        println!("{}", report.text_line());
    }
    Ok(())
}
