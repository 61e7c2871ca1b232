//! Classical sl(3) character theory, integrable fusion at integer level,
//! and complex-valued q-characters with their modular S-matrices.

mod classical;
mod fold;
mod qeval;

pub use classical::{
    character, tensor_decompose, tensor_multiplicity, tensor_multiplicity_with,
    weight_multiplicity, weyl_dimension, ClassicalCharacter,
};
pub use fold::{fold_to_alcove, fusion_product, integrable_fusion, FoldResult};
pub use qeval::{modular_s, q_character_eval, r_eval, resolve_shifted};

pub(crate) use qeval::cis_frac;
