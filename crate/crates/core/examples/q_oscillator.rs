//! Truncated Fock space: bosons, q-bosons, Jordan–Schwinger and addition rules.

use qalg::matq::CoproductVariant;
use qalg::osc::{self, hamiltonian_spectrum, q_fock};

fn main() -> qalg::Result<()> {
    let (d, q) = (10, 1.3);
    let f = q_fock(d, q)?;
    let spectrum = hamiltonian_spectrum(&f);
    println!("q = {q}: lowest levels {:.4?}", &spectrum[..4]);

    for report in [
        osc::check_boson_ccr(d),
        osc::check_qboson_relations(d, q),
        osc::check_js_su2(d),
        osc::check_js_suq2(d, q),
        osc::check_addition_rules(d, q, CoproductVariant::Q),
        osc::check_addition_rules(d, q, CoproductVariant::QInv),
        osc::check_clock_shift(),
    ] {
        println!("{}", report.text_line());
    }

    let (_, _, phase) = osc::clock_shift(6, 2)?;
    println!("clock/shift phase for N = 6, m = 2: {phase:.6}");
    Ok(())
}
