//! Extended character ring of sl(3) and its quantisation.
//!
//! The classical character ring of sl(3) is generated by formal
//! exponentials on the weight lattice. This crate builds its extension
//! over the extended affine Weyl group W̃ of sl(3)-hat: the "characters"
//! become finite integer combinations of group elements of W̃, closed
//! under multiplication, and the resulting commutative ring carries a
//! Weyl–Steinberg-type formula for its structure constants.
//!
//! At rational shifted level κ = 3/p (p ≥ 2, coprime to 3) the formal
//! characters quantise to complex-valued functions on a p²-point dual
//! set E_p. They are joint eigenvectors of the fusion matrices of the
//! admissible representations of sl(3)-hat at that level, and the
//! Pasquier–Verlinde sum over E_p reconstructs the integer fusion
//! multiplicities exactly. Three independent routes to those
//! multiplicities are implemented and cross-checked:
//!
//! 1. Kac–Walton folding of classical tensor products at shifted level
//!    3p, applied to twisted-logarithm images ([`admissible::fusion_table`]);
//! 2. the direct det-weighted sum over the group W^[p] = t_{pQ} ⋊ W̄
//!    ([`admissible::fusion_constant_direct`]);
//! 3. spectral reconstruction from the unitary eigenvector matrix
//!    ([`admissible::pasquier_verlinde`]).
//!
//! Everything upstream of the final complex-valued evaluations is exact
//! integer (or rational) arithmetic.
//!
//! Module map:
//! - [`weyl`]: Weyl groups of sl(3), canonical forms, twisted logarithm,
//!   chambers, alcoves, word length, Kostant partition functions.
//! - [`charring`]: classical sl(3) characters, Kac–Walton fusion at
//!   integer level, q-characters and Kac–Peterson modular S-matrices.
//! - [`extring`]: the extended ring inside ℤ[W̃] — generalised Verma and
//!   finite-module characters, structure constants, Pieri rules,
//!   dimensions, generator decompositions.
//! - [`admissible`]: the quantisation at κ = 3/p — dual set, quantised
//!   characters, fusion tables, spectral data.
//! - [`checks`]: the named verification suites with pinned tolerances.

pub mod admissible;
pub mod charring;
pub mod checks;
mod error;
pub mod extring;
pub mod weyl;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use weyl::{AffineElement, FiniteWeyl, QWeight, Weight};
