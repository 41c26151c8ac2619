mod cartan;
mod closed;
mod context;
mod residue;

pub use cartan::{
    cartan_relation_check, cartan_relation_sides, phi_cartan, phi_cartan_fn, phi_series_coeff, phi_series_function,
    relation_lhs, relation_rhs, CartanGenerator, CartanKind, CartanRelation,
};
pub use closed::{phi_gen, phi_gen_summand};
pub use context::{CoulombContext, PhiError};
pub use residue::{
    phi_residue, phi_residue_term, phi_residue_with, residue_at, residue_bracket, residue_bracket_with,
    residue_normalization, MinusBracket,
};
