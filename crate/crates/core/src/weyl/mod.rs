//! Exact arithmetic for the finite, affine, and extended affine Weyl
//! groups of sl(3), the twisted logarithm, chambers and alcoves, word
//! length, and the Kostant partition function.

mod affine;
mod chamber;
mod finite;
mod kostant;
mod length;
mod weight;

pub use affine::{alcove_rotation, gamma_p, sigma_p, AffineElement};
pub use chamber::{
    element_with_twisted_log, enumerate_alcove, enumerate_extended_alcove, in_extended_alcove,
    in_twisted_log_image, is_dominant, reduce_to_fundamental, reduce_with_sign, validate_level,
};
pub use finite::{ratio, FiniteWeyl};
pub use kostant::{kostant, refined_partition};
pub use length::{cayley_ball, chamber_by_length, length};
pub use weight::{QWeight, Weight};
