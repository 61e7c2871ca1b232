//! Word length in the affine Weyl group W with respect to the Coxeter
//! generators {w₀, w₁, w₂}.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::weyl::affine::AffineElement;
use crate::weyl::weight::Weight;

fn root_is_positive(alpha: Weight) -> bool {
    alpha.height() > 0
}

/// Reduced word length of y ∈ W, by the closed formula
///
/// ℓ(t_μ w̄) = Σ_{α>0, w̄⁻¹α>0} |⟨μ,α⟩| + Σ_{α>0, w̄⁻¹α<0} |⟨μ,α⟩ − 1|,
///
/// applied to the canonical form w̄ t₋λ = t_{−w̄(λ)} w̄. Elements with
/// nonzero triality have no word in these generators and are rejected.
/// The Cayley-graph BFS [`cayley_ball`] is the oracle for this formula.
pub fn length(y: AffineElement) -> Result<u32> {
    if !y.in_affine_group() {
        return Err(Error::NotTrialityZero(y.to_string()));
    }
    let mu = -y.wbar.apply(y.lam);
    let mut total = 0;
    for alpha in [Weight::ALPHA1, Weight::ALPHA2, Weight::THETA] {
        let pairing = mu.inner_times3(alpha) / 3;
        let offset = i64::from(!root_is_positive(y.wbar.inverse().apply(alpha)));
        total += (pairing - offset).unsigned_abs() as u32;
    }
    Ok(total)
}

/// Breadth-first search over the Cayley graph of W from the identity,
/// returning every element within the given radius together with its
/// graph distance, sorted by (distance, canonical order).
pub fn cayley_ball(radius: u32) -> Vec<(AffineElement, u32)> {
    let gens = [
        AffineElement::w0(),
        AffineElement::w1(),
        AffineElement::w2(),
    ];
    let mut dist: HashMap<AffineElement, u32> = HashMap::new();
    dist.insert(AffineElement::identity(), 0);
    let mut frontier = vec![AffineElement::identity()];
    for d in 1..=radius {
        let mut next = Vec::new();
        for y in frontier {
            for g in gens {
                let z = y.multiply(g);
                if let std::collections::hash_map::Entry::Vacant(slot) = dist.entry(z) {
                    slot.insert(d);
                    next.push(z);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<(AffineElement, u32)> = dist.into_iter().collect();
    out.sort_by_key(|&(y, d)| (d, y));
    out
}

/// Elements of the chamber C = C̃ ∩ W with word length at most `radius`,
/// sorted by (length, canonical order).
pub fn chamber_by_length(radius: u32) -> Vec<(AffineElement, u32)> {
    cayley_ball(radius)
        .into_iter()
        .filter(|(y, _)| crate::weyl::is_dominant(*y))
        .collect()
}
