//! Matrices over exact scalars and over presented algebras,
//! representations of `U_q(sl2)` and universal T-matrices.

mod matrix;
mod rep;
mod universal;

pub use matrix::{embed, kron, Matrix, NCMatrix, RepMatrix, Ring, Scalars};
pub use rep::{
    builtin_rep, check_rep, coproduct_rep, eval_on_matrices, relation_violation, CoproductVariant,
    Rep, REPS,
};
pub use universal::{
    check_universal_t, fundamental_t, matrix_q_exp, parametrization_images, parametrized_t,
    spin1_t, universal_t,
};

#[cfg(test)]
mod tests;
