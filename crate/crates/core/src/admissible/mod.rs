//! Quantisation at shifted level κ = 3/p: the dual set E_p, quantised
//! characters, fusion tables by two routes, and the spectral
//! (Pasquier–Verlinde) reconstruction.

mod dual;
mod fusion;
mod qchar;
mod spectral;

pub use dual::{dual_set, f_eval, DualPoint, Root};
pub use fusion::{fusion_constant_direct, fusion_table, FusionTable};
pub use qchar::{q_char, q_char_level_3p};
pub use spectral::{eigen_data, pasquier_verlinde, EigenData, PV_ROUNDING_TOL, UNITARITY_TOL};

pub(crate) use fusion::fusion_constant_direct_with;
