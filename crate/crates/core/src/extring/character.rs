//! Characters of the generalised Verma and finite modules, as elements
//! of ℤ[W̃].
//!
//! A chamber element y ∈ C̃ labels a finite character χ_y = Σ_z m^y_z · z
//! whose support lies in the coset W·y and whose multiplicities are the
//! classical ones transported through the twisted logarithm,
//! m^y_z = m̄^{ι(y)}_{ι(z)}. Two constructions are provided:
//!
//! - [`ext_character`] fills the support directly from the weight
//!   diagram of ι(y), one group element per diagram point that lies in
//!   the image of ι;
//! - [`ext_character_classical`] expands χ_y through ordinary sl(3)
//!   characters embedded as translation sums, the units γ^{±1}, and the
//!   class element F = w₀ + w₁ + w₂, using the fixed six-term pattern of
//!   shifts (0, −2ω̄₁, −2ω̄₂) and (−ρ̄, −ω̄₂, −ω̄₁).
//!
//! The two must agree exactly; the second is the template that later
//! quantises to complex-valued characters.

use crate::charring::{character, ClassicalCharacter};
use crate::error::{Error, Result};
use crate::extring::ring::GroupRingElement;
use crate::weyl::{
    element_with_twisted_log, is_dominant, kostant, reduce_with_sign, AffineElement, Weight,
};

/// A finite character: its chamber label and its group-ring expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtCharacter {
    pub base: AffineElement,
    pub elem: GroupRingElement,
}

impl ExtCharacter {
    pub fn conjugate(&self) -> ExtCharacter {
        ExtCharacter {
            base: self.base.conjugate(),
            elem: self.elem.conjugate(),
        }
    }
}

/// Generalised Verma multiplicity K^y_z = K_{ι(y)−ι(z)}, zero off the
/// coset W·y.
pub fn verma_multiplicity(y: AffineElement, z: AffineElement) -> i64 {
    if z.multiply(y.inverse()).in_affine_group() {
        kostant(y.twisted_log() - z.twisted_log())
    } else {
        0
    }
}

/// Truncation of the generalised Verma character of y: all terms z with
/// ι(y) − ι(z) of root height at most 3·depth, i.e. within `depth` steps
/// of the translation lattice.
pub fn verma_character_truncated(y: AffineElement, depth: u32) -> GroupRingElement {
    let top = y.twisted_log();
    let tau = y.tau();
    let span = 3 * depth as i64;
    let mut out = GroupRingElement::zero();
    for a in 0..=span {
        for b in 0..=(span - a) {
            let beta = Weight::from_root_coords(a, b);
            if let Some(z) = element_with_twisted_log(top - beta, tau) {
                out.add_term(z, kostant(beta));
            }
        }
    }
    out
}

/// The class element F = w₀ + w₁ + w₂ = Σ_{a∈A} a w₀ a⁻¹.
pub fn class_element() -> GroupRingElement {
    GroupRingElement::from_terms([
        (AffineElement::w0(), 1),
        (AffineElement::w1(), 1),
        (AffineElement::w2(), 1),
    ])
}

/// Embed a classical character into ℤ[W̃]: Σ_μ m̄^λ_μ t₋μ.
pub fn embed_classical(ch: &ClassicalCharacter) -> GroupRingElement {
    GroupRingElement::from_terms(ch.iter().map(|(mu, m)| (AffineElement::t_minus(mu), m)))
}

/// Embed χ̄_ν for arbitrary ν ∈ P, resolving through the shifted orbit:
/// det(w̄)·χ̄_{ν′} for ν = w̄·ν′ dominant, zero on walls.
pub fn embed_classical_weight(nu: Weight) -> GroupRingElement {
    match crate::charring::resolve_shifted(nu) {
        None => GroupRingElement::zero(),
        Some((sign, dom)) => {
            embed_classical(&character(dom).expect("resolved weight is dominant")).scale(sign)
        }
    }
}

/// Direct construction of χ_y from the weight diagram of ι(y).
pub fn ext_character(y: AffineElement) -> Result<ExtCharacter> {
    if !is_dominant(y) {
        return Err(Error::NotDominant(y.to_string()));
    }
    let diagram = character(y.twisted_log())?;
    let tau = y.tau();
    let mut elem = GroupRingElement::zero();
    for (nu, m) in diagram.iter() {
        if let Some(z) = element_with_twisted_log(nu, tau) {
            elem.add_term(z, m);
        }
    }
    Ok(ExtCharacter { base: y, elem })
}

/// Construction of χ_y through classical characters and the class
/// element. Exactly equal to [`ext_character`].
pub fn ext_character_classical(y: AffineElement) -> Result<ExtCharacter> {
    if !is_dominant(y) {
        return Err(Error::NotDominant(y.to_string()));
    }
    let gamma = GroupRingElement::from_element(AffineElement::gamma());
    let gamma_inv = GroupRingElement::from_element(AffineElement::gamma().inverse());
    let unit = GroupRingElement::one();
    let f_plus_2 = &class_element() + &unit.scale(2);

    let winv = y.wbar.inverse();
    let arg = |shift: Weight| y.lam + winv.shifted_apply(shift);

    let even_terms: [(GroupRingElement, Weight); 3] = [
        (unit.clone(), arg(Weight::ZERO)),
        (gamma.clone(), arg(Weight::OMEGA1 * -2)),
        (gamma_inv.clone(), arg(Weight::OMEGA2 * -2)),
    ];
    let odd_terms: [(GroupRingElement, Weight); 3] = [
        (unit, arg(-Weight::RHO)),
        (gamma, arg(-Weight::OMEGA2)),
        (gamma_inv, arg(-Weight::OMEGA1)),
    ];

    let mut elem = GroupRingElement::zero();
    for (prefactor, nu) in even_terms {
        elem = &elem + &(&prefactor * &embed_classical_weight(nu));
    }
    let mut odd = GroupRingElement::zero();
    for (prefactor, nu) in odd_terms {
        odd = &odd + &(&prefactor * &embed_classical_weight(nu));
    }
    elem = &elem + &(&f_plus_2 * &odd);
    Ok(ExtCharacter { base: y, elem })
}

/// The skew extension of y ↦ χ_y to all of W̃: χ_{x w̄} = det(w̄) χ_x with
/// x ∈ C̃, which covers every element exactly once.
pub fn ext_character_extended(z: AffineElement) -> GroupRingElement {
    let (x, sign) = reduce_with_sign(z);
    ext_character(x)
        .expect("reduction lands in the chamber")
        .elem
        .scale(sign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::FiniteWeyl;

    #[test]
    fn verma_multiplicity_examples() {
        let e = AffineElement::identity();
        assert_eq!(verma_multiplicity(e, e), 1);
        // ι(s1) = −α₁ gives K_{α₁} = 1
        assert_eq!(verma_multiplicity(e, AffineElement::w1()), 1);
        // off-coset elements carry multiplicity zero
        assert_eq!(verma_multiplicity(e, AffineElement::gamma()), 0);
        // ι(w₀) − ι(e) = θ, and K_θ = 2
        assert_eq!(verma_multiplicity(AffineElement::w0(), e), 2);
    }

    #[test]
    fn verma_truncation_leading_bracket() {
        // the depth-2 truncation of ch(V_1) restricted to the finite Weyl
        // elements reproduces the leading coefficients 1,1,1,2,2,3
        let v = verma_character_truncated(AffineElement::identity(), 2);
        let coeff = |w: FiniteWeyl| v.get(&AffineElement::from_wbar(w));
        assert_eq!(coeff(FiniteWeyl::E), 1);
        assert_eq!(coeff(FiniteWeyl::S1), 1);
        assert_eq!(coeff(FiniteWeyl::S2), 1);
        assert_eq!(coeff(FiniteWeyl::S12), 2);
        assert_eq!(coeff(FiniteWeyl::S21), 2);
        assert_eq!(coeff(FiniteWeyl::S121), 3);
    }

    #[test]
    fn character_of_identity_is_one() {
        let chi = ext_character(AffineElement::identity()).unwrap();
        assert_eq!(chi.elem, GroupRingElement::one());
        // units have singleton characters
        let g = AffineElement::gamma();
        assert!(is_dominant(g));
        assert_eq!(
            ext_character(g).unwrap().elem,
            GroupRingElement::from_element(g)
        );
    }

    #[test]
    fn character_of_w0() {
        // χ_{w₀} = 2 + F
        let chi = ext_character(AffineElement::w0()).unwrap();
        let expect = &GroupRingElement::one().scale(2) + &class_element();
        assert_eq!(chi.elem, expect);
    }

    #[test]
    fn character_of_fundamental_translation() {
        // χ_{t₋ω̄₁} = γ⁻¹(w₂₀ + w₁₂ + w₀₁ + w₀ + w₁ + w₂ + 1)
        let f = AffineElement::t_minus(Weight::OMEGA1);
        let chi = ext_character(f).unwrap();
        assert_eq!(chi.elem.len(), 7);
        assert!(chi.elem.iter().all(|(_, c)| c == 1));
        let g_inv = AffineElement::gamma().inverse();
        let w0 = AffineElement::w0();
        let w1 = AffineElement::w1();
        let w2 = AffineElement::w2();
        let words = [
            w2.multiply(w0),
            w1.multiply(w2),
            w0.multiply(w1),
            w0,
            w1,
            w2,
            AffineElement::identity(),
        ];
        let expect = GroupRingElement::from_terms(words.iter().map(|&w| (g_inv.multiply(w), 1)));
        assert_eq!(chi.elem, expect);
    }

    #[test]
    fn constructions_agree() {
        let mut labels = vec![
            AffineElement::identity(),
            AffineElement::w0(),
            AffineElement::gamma(),
            AffineElement::t_minus(Weight::OMEGA1),
            AffineElement::t_minus(Weight::new(2, 1)),
            AffineElement::new(FiniteWeyl::S12, Weight::new(2, 1)),
            AffineElement::new(FiniteWeyl::S21, Weight::new(3, 0)),
            AffineElement::new(FiniteWeyl::S121, Weight::new(2, 2)),
            AffineElement::new(FiniteWeyl::S1, Weight::new(1, 2)),
            AffineElement::new(FiniteWeyl::S2, Weight::new(2, 2)),
        ];
        labels.retain(|&y| is_dominant(y));
        assert!(labels.len() >= 9);
        for y in labels {
            let a = ext_character(y).unwrap();
            let b = ext_character_classical(y).unwrap();
            assert_eq!(a.elem, b.elem, "y = {y}");
        }
    }

    #[test]
    fn extension_rules() {
        // χ_{a y} = a χ_y for a ∈ A, and χ_{y w̄} = det(w̄) χ_y
        let y = AffineElement::new(FiniteWeyl::S12, Weight::new(2, 1));
        let chi = ext_character(y).unwrap().elem;
        for a in AffineElement::group_a() {
            let lhs = ext_character(a.multiply(y)).unwrap().elem;
            let rhs = &GroupRingElement::from_element(a) * &chi;
            assert_eq!(lhs, rhs);
            // conjugation by a leaves the character invariant
            let conj = &(&GroupRingElement::from_element(a) * &chi)
                * &GroupRingElement::from_element(a.inverse());
            assert_eq!(conj, chi);
        }
        for w in FiniteWeyl::ALL {
            let z = y.multiply(AffineElement::from_wbar(w));
            assert_eq!(ext_character_extended(z), chi.scale(w.det()));
        }
    }

    #[test]
    fn multiplicity_symmetries() {
        // m^y_{a⁻¹ z a} = m^y_z, and m^y_{a t₋w̄(μ)} = m^y_{a t₋μ}
        let y = AffineElement::t_minus(Weight::new(2, 1));
        let chi = ext_character(y).unwrap().elem;
        for (z, c) in chi.iter() {
            for a in AffineElement::group_a() {
                assert_eq!(chi.get(&a.inverse().multiply(z).multiply(a)), c);
            }
        }
        for a in AffineElement::group_a() {
            for mu in [Weight::new(1, 0), Weight::new(1, 1), Weight::new(2, 1)] {
                let base = chi.get(&a.multiply(AffineElement::t_minus(mu)));
                for w in FiniteWeyl::ALL {
                    let other = a.multiply(AffineElement::t_minus(w.apply(mu)));
                    assert_eq!(chi.get(&other), base, "a={a} mu={mu} w={w}");
                }
            }
        }
    }

    #[test]
    fn support_lies_in_coset() {
        let y = AffineElement::new(FiniteWeyl::S21, Weight::new(2, 2));
        assert!(is_dominant(y));
        let chi = ext_character(y).unwrap();
        for (z, m) in chi.elem.iter() {
            assert!(z.multiply(y.inverse()).in_affine_group());
            assert_eq!(
                m,
                crate::charring::weight_multiplicity(y.twisted_log(), z.twisted_log()).unwrap()
            );
        }
    }

    #[test]
    fn non_dominant_rejected() {
        assert!(ext_character(AffineElement::w1()).is_err());
        assert!(ext_character_classical(AffineElement::w1()).is_err());
    }
}
