//! The extended character ring inside ℤ[W̃]: generalised Verma and
//! finite-module characters, products and structure constants, Pieri
//! rules, dimensions, and generator decompositions.

mod character;
mod ring;
mod structure;

pub use character::{
    class_element, embed_classical, embed_classical_weight, ext_character, ext_character_classical,
    ext_character_extended, verma_character_truncated, verma_multiplicity, ExtCharacter,
};
pub use ring::GroupRingElement;
pub use structure::{
    decompose, dimension, dimension_from_support, express_in_generators, generator,
    multiply_characters, pieri, structure_constant, structure_constant_weyl_sum,
    GeneratorPolynomial,
};
