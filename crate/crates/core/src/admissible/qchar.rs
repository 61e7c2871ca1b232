//! Quantised characters of the admissible alcove.
//!
//! The formal characters of the extended ring become complex functions
//! on E_p by sending formal exponentials to true exponentials at shifted
//! level p, the unit γ to the phase e^{2πip·τ(μ)/3}, and the class
//! element F to ε(μ)|R(μ)|. The six-term expansion of a chamber
//! character then reads, for y = ȳ t₋λ ∈ C̃_p:
//!
//! χ_y^{(p)}(μ) = e^{−2πip·τ(μ)τ(λ)/3} ( χ̄^{(p)}_{λ+ȳ⁻¹·0}
//!   + χ̄^{(p)}_{λ+ȳ⁻¹·(−2ω̄₁)} + χ̄^{(p)}_{λ+ȳ⁻¹·(−2ω̄₂)}
//!   + (F(μ)+2)(χ̄^{(p)}_{λ+ȳ⁻¹·(−ρ̄)} + χ̄^{(p)}_{λ+ȳ⁻¹·(−ω̄₂)}
//!   + χ̄^{(p)}_{λ+ȳ⁻¹·(−ω̄₁)}) )(μ).
//!
//! An equivalent evaluation goes through the integrable q-characters at
//! shifted level 3p: χ_y^{(p)} = ε_y(χ̄^{(3p)}_{ι(y)} − r_ε·(odd part)),
//! with r_ε = R + R̄ − ε|R|. Both are implemented; they agree to within
//! roundoff and reduce to χ̄^{(3p)}_{ι(y)} on the hyperplanes of E_p.

use num_complex::Complex64;

use crate::admissible::dual::{f_eval, DualPoint};
use crate::charring::{cis_frac, q_character_eval, r_eval};
use crate::error::{Error, Result};
use crate::weyl::{in_extended_alcove, AffineElement, Weight};

fn phase(y: AffineElement, mu: Weight, p: i64) -> Complex64 {
    cis_frac(-p * mu.triality() * y.lam.triality(), 3)
}

fn odd_part(y: AffineElement, mu: Weight, p: i64) -> Complex64 {
    let winv = y.wbar.inverse();
    [-Weight::RHO, -Weight::OMEGA2, -Weight::OMEGA1]
        .into_iter()
        .map(|shift| q_character_eval(y.lam + winv.shifted_apply(shift), mu, p))
        .sum()
}

fn even_part(y: AffineElement, mu: Weight, p: i64) -> Complex64 {
    let winv = y.wbar.inverse();
    [Weight::ZERO, Weight::OMEGA1 * -2, Weight::OMEGA2 * -2]
        .into_iter()
        .map(|shift| q_character_eval(y.lam + winv.shifted_apply(shift), mu, p))
        .sum()
}

/// The quantised character χ_y^{(p)}(μ) for y ∈ C̃_p.
pub fn q_char(y: AffineElement, point: &DualPoint, p: i64) -> Result<Complex64> {
    if !in_extended_alcove(y, p) {
        return Err(Error::OutsideAdmissibleAlcove(y.to_string(), p));
    }
    let f = f_eval(point, p);
    let value = even_part(y, point.mu, p) + (f + 2.0) * odd_part(y, point.mu, p);
    Ok(phase(y, point.mu, p) * value)
}

/// The same character through the shifted-level-3p integrable
/// q-characters: ε_y (χ̄^{(3p)}_{ι(y)}(μ) − r_ε(μ)·odd(μ)).
pub fn q_char_level_3p(y: AffineElement, point: &DualPoint, p: i64) -> Result<Complex64> {
    if !in_extended_alcove(y, p) {
        return Err(Error::OutsideAdmissibleAlcove(y.to_string(), p));
    }
    let r = r_eval(point.mu, p);
    let r_eps = r + r.conj() - point.epsilon as f64 * r.norm();
    let value =
        q_character_eval(y.twisted_log(), point.mu, 3 * p) - r_eps * odd_part(y, point.mu, p);
    Ok(phase(y, point.mu, p) * value)
}
