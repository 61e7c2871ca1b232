//! Kostant partition function of sl(3) and its bounded refinement.

use crate::weyl::weight::Weight;

/// Number of ways to write β = k₁α₁ + k₂α₂ + k₃θ with kᵢ ≥ 0.
///
/// In root coordinates β = aα₁ + bα₂ the count is min(a, b) + 1 when
/// a, b ≥ 0 (choose k₃, the rest is forced), and zero off the positive
/// cone or off the root lattice.
pub fn kostant(beta: Weight) -> i64 {
    match beta.root_coords() {
        Some((a, b)) if a >= 0 && b >= 0 => a.min(b) + 1,
        _ => 0,
    }
}

/// Refined partition count with every coefficient bounded by 2: the number
/// of ways to write μ = k₁α₁ + k₂α₂ + k₃θ with kᵢ ∈ {0, 1, 2}.
pub fn refined_partition(mu: Weight) -> i64 {
    let Some((a, b)) = mu.root_coords() else {
        return 0;
    };
    let mut count = 0;
    for k3 in 0..=2 {
        let (k1, k2) = (a - k3, b - k3);
        if (0..=2).contains(&k1) && (0..=2).contains(&k2) {
            count += 1;
        }
    }
    count
}
