//! Exact coefficient field and q-number toolkit.
//!
//! Every symbolic computation in the crate happens over [`QScalar`]: the
//! quadratic extension Q(s)[ρ]/(ρ² − 1 − s⁻⁴) with `q = s²`.

mod poly;
mod qscalar;
mod qseries;
mod ratfn;

pub use poly::IntPoly;
pub use qscalar::{eval_numeric, invert_q, QScalar};
pub use qseries::{
    basic_hypergeometric, heine_number, q_exp, q_factorial, q_int_heine, q_int_sym, q_int_sym_real,
    q_pochhammer, q_shifted_factorial, QField,
};
pub use ratfn::RationalFn;

/// A numeric specialisation of a [`QScalar`].
pub type QValue = num_complex::Complex64;

pub use ratfn::format_complex;
