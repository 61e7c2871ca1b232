//! Kac–Walton folding and integrable fusion at shifted level h.
//!
//! The affine Weyl group at level h−3 acts on shifted weights ν+ρ̄; the
//! closed fundamental alcove is {ξ : ξ₁ ≥ 0, ξ₂ ≥ 0, ξ₁+ξ₂ ≤ h}. Fusion
//! multiplicities are classical tensor multiplicities folded into the
//! alcove with signs, walls contributing zero.

use std::collections::BTreeMap;

use crate::charring::classical::tensor_decompose;
use crate::error::{Error, Result};
use crate::weyl::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FoldResult {
    pub weight: Weight,
    /// +1 or −1 off the walls, 0 on a wall.
    pub sign: i64,
}

/// Reflect ν into the level-(h−3) alcove under the shifted affine action.
pub fn fold_to_alcove(nu: Weight, h: i64) -> FoldResult {
    assert!(h >= 2, "level too small: h = {h}");
    let mut xi = nu + Weight::RHO;
    let mut sign = 1;
    for iter in 0.. {
        assert!(
            iter < 10 * h,
            "folding of {nu} at h = {h} did not terminate"
        );
        if xi.c1 < 0 {
            xi = Weight::new(-xi.c1, xi.c1 + xi.c2);
            sign = -sign;
        } else if xi.c2 < 0 {
            xi = Weight::new(xi.c1 + xi.c2, -xi.c2);
            sign = -sign;
        } else if xi.height() > h {
            // affine reflection across ⟨ξ, θ⟩ = h
            xi = xi - Weight::THETA * (xi.height() - h);
            sign = -sign;
        } else {
            break;
        }
    }
    if xi.c1 == 0 || xi.c2 == 0 || xi.height() == h {
        sign = 0;
    }
    FoldResult {
        weight: xi - Weight::RHO,
        sign,
    }
}

/// Fused decomposition of λ ⊗ μ at shifted level h: every classical
/// constituent folded into the alcove with its sign.
pub fn fusion_product(lam: Weight, mu: Weight, h: i64) -> Result<BTreeMap<Weight, i64>> {
    let mut out: BTreeMap<Weight, i64> = BTreeMap::new();
    for (xi, n) in tensor_decompose(lam, mu)? {
        let folded = fold_to_alcove(xi, h);
        if folded.sign != 0 {
            *out.entry(folded.weight).or_insert(0) += folded.sign * n;
        }
    }
    out.retain(|_, n| *n != 0);
    debug_assert!(out.values().all(|&n| n > 0));
    Ok(out)
}

fn require_in_alcove(lam: Weight, h: i64) -> Result<()> {
    if lam.is_dominant() && lam.height() <= h - 3 {
        Ok(())
    } else {
        Err(Error::OutOfAlcove(lam.to_string(), h))
    }
}

/// Integrable fusion multiplicity at shifted level h (Kac–Walton).
///
/// The tensor factors λ, μ must label representations in the alcove. The
/// output index ν may be any dominant weight; it is folded first, so a ν
/// on a wall gives zero and a reflected ν picks up the sign.
pub fn integrable_fusion(lam: Weight, mu: Weight, nu: Weight, h: i64) -> Result<i64> {
    require_in_alcove(lam, h)?;
    require_in_alcove(mu, h)?;
    nu.require_dominant()?;
    let folded = fold_to_alcove(nu, h);
    if folded.sign == 0 {
        return Ok(0);
    }
    let n = fusion_product(lam, mu, h)?
        .get(&folded.weight)
        .copied()
        .unwrap_or(0);
    Ok(folded.sign * n)
}
