//! Noncommutative polynomials and rewriting modulo presented relations.

mod catalog;
mod confluence;
mod poly;
mod presentation;

pub use catalog::{builtin_presentation, CATALOG};
pub use confluence::{ambiguities, check_confluence, Ambiguity};
pub use poly::{GenId, NCPoly, Word};
pub use presentation::{
    apply_morphism, commutator, morphism_violation, nc_mul, normal_form, specialize_poly_at_one,
    tensor_power, tensor_presentation, Generator, Presentation, PresentationBuilder, Rule,
};
