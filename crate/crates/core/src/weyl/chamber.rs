//! Dominant chamber of the extended affine Weyl group and the admissible
//! alcoves at rational shifted level 3/p.
//!
//! The chamber C̃ = {y | ι(y) ∈ P₊} is a fundamental domain for the right
//! action of W̄ on W̃; the twisted logarithm ι provides the membership
//! test directly, with no affine-root bookkeeping. At rational level the
//! same picture truncates to the alcove C̃_p = {y | ι(y) ∈ P₊^{3p−3}},
//! a fundamental domain for the right action of W^[p] = t_{pQ} ⋊ W̄.

use crate::error::{Error, Result};
use crate::weyl::affine::AffineElement;
use crate::weyl::finite::FiniteWeyl;
use crate::weyl::weight::Weight;

/// Membership in the dominant chamber C̃: ι(y) ∈ P₊.
pub fn is_dominant(y: AffineElement) -> bool {
    y.twisted_log().is_dominant()
}

/// The unique factorisation y = x·w̄ with x ∈ C̃, w̄ ∈ W̄.
///
/// ι(y) + ρ̄ is always W̄-regular (its pairing with any root is nonzero
/// mod 3), so exactly one w̄ works; anything else is a bug and panics.
pub fn reduce_to_fundamental(y: AffineElement) -> (AffineElement, FiniteWeyl) {
    let xi = y.twisted_log() + Weight::RHO;
    let mut found = None;
    for u in FiniteWeyl::ALL {
        if u.apply(xi).is_strictly_dominant() {
            assert!(found.is_none(), "twisted log of {y} is not regular");
            found = Some(u);
        }
    }
    let u = found.unwrap_or_else(|| panic!("twisted log of {y} is not regular"));
    let x = y.multiply(AffineElement::from_wbar(u.inverse()));
    debug_assert!(is_dominant(x));
    (x, u)
}

/// Reduction together with the sign picked up by a skew-invariant
/// character: y = x·w̄ gives (x, det w̄).
pub fn reduce_with_sign(y: AffineElement) -> (AffineElement, i64) {
    let (x, w) = reduce_to_fundamental(y);
    (x, w.det())
}

/// Whether ν lies in the image of the twisted logarithm. A triality-zero
/// weight is excluded exactly when ν + ρ̄ ≡ 0 (mod 3) in both coordinates.
pub fn in_twisted_log_image(nu: Weight) -> bool {
    if nu.triality() != 0 {
        return false;
    }
    let xi = nu + Weight::RHO;
    !(xi.c1.rem_euclid(3) == 0 && xi.c2.rem_euclid(3) == 0)
}

/// The unique element of the A-coset with translation triality `tau` whose
/// twisted logarithm is ν, if any.
pub fn element_with_twisted_log(nu: Weight, tau: i64) -> Option<AffineElement> {
    let xi = nu + Weight::RHO;
    for wbar in FiniteWeyl::ALL {
        let q = xi - wbar.inverse().apply(Weight::RHO);
        if q.c1.rem_euclid(3) == 0 && q.c2.rem_euclid(3) == 0 {
            let lam = Weight::new(q.c1 / 3, q.c2 / 3);
            if lam.triality() == tau.rem_euclid(3) {
                let z = AffineElement::new(wbar, lam);
                debug_assert_eq!(z.twisted_log(), nu);
                return Some(z);
            }
        }
    }
    None
}

pub fn validate_level(p: i64) -> Result<()> {
    if p >= 2 && p % 3 != 0 {
        Ok(())
    } else {
        Err(Error::InvalidLevel(p))
    }
}

/// Membership in the admissible extended alcove C̃_p.
pub fn in_extended_alcove(y: AffineElement, p: i64) -> bool {
    let nu = y.twisted_log();
    nu.is_dominant() && nu.height() <= 3 * p - 3
}

/// The extended admissible alcove C̃_p, all 3p² elements in canonical order.
pub fn enumerate_extended_alcove(p: i64) -> Result<Vec<AffineElement>> {
    validate_level(p)?;
    Ok(enumerate_alcove_impl(p, false))
}

/// The admissible alcove C_p = C̃_p ∩ W, all p² elements in canonical order.
pub fn enumerate_alcove(p: i64) -> Result<Vec<AffineElement>> {
    validate_level(p)?;
    Ok(enumerate_alcove_impl(p, true))
}

fn enumerate_alcove_impl(p: i64, triality_zero: bool) -> Vec<AffineElement> {
    // Per-row constraints on λ for (w̄, λ) ∈ C̃_p: coordinates listed in
    // I(w̄) = {i | w̄(αᵢ) < 0} must be strictly positive, and λ₁+λ₂ is
    // bounded by p−1 or p according to the sign of w̄(θ).
    let rows: [(FiniteWeyl, bool, bool, i64); 6] = [
        (FiniteWeyl::E, false, false, p - 1),
        (FiniteWeyl::S1, true, false, p - 1),
        (FiniteWeyl::S2, false, true, p - 1),
        (FiniteWeyl::S12, false, true, p),
        (FiniteWeyl::S21, true, false, p),
        (FiniteWeyl::S121, true, true, p),
    ];
    let mut out = Vec::new();
    for (wbar, strict1, strict2, bound) in rows {
        let lo1 = i64::from(strict1);
        let lo2 = i64::from(strict2);
        for c1 in lo1..=bound {
            for c2 in lo2..=(bound - c1) {
                let lam = Weight::new(c1, c2);
                if triality_zero && lam.triality() != 0 {
                    continue;
                }
                out.push(AffineElement::new(wbar, lam));
            }
        }
    }
    out.sort();
    out
}
