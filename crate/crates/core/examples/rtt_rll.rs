//! RTT and RLL relations: the algebra relations packed into matrix identities.

use qalg::ncpoly::builtin_presentation;
use qalg::rmat::{self, l_minus, l_plus, RllPair};

fn main() -> qalg::Result<()> {
    let (t12, t21) = rmat::t1t2_t2t1()?;
    let comm = t12.sub(&t21);
    println!("(T1.T2 - T2.T1)(1,2) = {}", comm.render_entry(0, 1));

    let rtt = rmat::check_rtt();
    println!("{}", rtt.text_line());
    if let Some(note) = &rtt.convention_notes {
        println!("  {note}");
    }

    let uq = builtin_presentation("uq_sl2")?;
    let (lp, lm) = (l_plus(&uq), l_minus(&uq));
    println!(
        "L+(1,2) = {}, L-(2,1) = {}",
        lp.render_entry(0, 1),
        lm.render_entry(1, 0)
    );
    for pair in [RllPair::PlusPlus, RllPair::MinusMinus, RllPair::PlusMinus] {
        println!("{}", rmat::check_rll(pair).text_line());
    }
    Ok(())
}
