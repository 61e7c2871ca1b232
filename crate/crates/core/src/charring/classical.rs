//! Weight multiplicities, characters, and tensor products of finite
//! dimensional sl(3) modules.
//!
//! Multiplicities come from the Kostant alternating sum
//! m̄^λ_μ = Σ_{w∈W̄} det(w) K_{w·λ − μ}, and tensor multiplicities from
//! the Weyl–Steinberg formula N̄^ν_{λμ} = Σ_w det(w) m̄^λ_{w·ν − μ}.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::weyl::{kostant, FiniteWeyl, Weight};

/// Sparse weight diagram of an irreducible finite dimensional module:
/// the map μ ↦ m̄^λ_μ over its support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalCharacter {
    highest: Weight,
    coeffs: BTreeMap<Weight, i64>,
}

impl ClassicalCharacter {
    pub fn highest_weight(&self) -> Weight {
        self.highest
    }

    pub fn get(&self, mu: Weight) -> i64 {
        self.coeffs.get(&mu).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Weight, i64)> + '_ {
        self.coeffs.iter().map(|(&w, &m)| (w, m))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    /// Total mass Σ_μ m̄^λ_μ, which equals the Weyl dimension.
    pub fn mass(&self) -> i64 {
        self.coeffs.values().sum()
    }
}

/// m̄^λ_μ for dominant λ.
pub fn weight_multiplicity(lam: Weight, mu: Weight) -> Result<i64> {
    lam.require_dominant()?;
    Ok(weight_multiplicity_unchecked(lam, mu))
}

pub(crate) fn weight_multiplicity_unchecked(lam: Weight, mu: Weight) -> i64 {
    FiniteWeyl::ALL
        .iter()
        .map(|&w| w.det() * kostant(w.shifted_apply(lam) - mu))
        .sum()
}

/// Full weight diagram of the irreducible module of highest weight λ.
pub fn character(lam: Weight) -> Result<ClassicalCharacter> {
    lam.require_dominant()?;
    let span = lam.height();
    let mut coeffs = BTreeMap::new();
    // support lies in λ − Q⁺, bounded below by the lowest weight −λ*
    for a in 0..=span {
        for b in 0..=span {
            let mu = lam - Weight::ALPHA1 * a - Weight::ALPHA2 * b;
            let m = weight_multiplicity_unchecked(lam, mu);
            if m != 0 {
                coeffs.insert(mu, m);
            }
        }
    }
    Ok(ClassicalCharacter {
        highest: lam,
        coeffs,
    })
}

/// Weyl dimension (λ₁+1)(λ₂+1)(λ₁+λ₂+2)/2.
pub fn weyl_dimension(lam: Weight) -> Result<i64> {
    lam.require_dominant()?;
    Ok((lam.c1 + 1) * (lam.c2 + 1) * (lam.c1 + lam.c2 + 2) / 2)
}

/// Littlewood–Richardson multiplicity N̄^ν_{λμ} by Weyl–Steinberg.
pub fn tensor_multiplicity(lam: Weight, mu: Weight, nu: Weight) -> Result<i64> {
    mu.require_dominant()?;
    nu.require_dominant()?;
    Ok(tensor_multiplicity_with(&character(lam)?, mu, nu))
}

/// Weyl–Steinberg against a precomputed diagram of λ.
pub fn tensor_multiplicity_with(lam_char: &ClassicalCharacter, mu: Weight, nu: Weight) -> i64 {
    FiniteWeyl::ALL
        .iter()
        .map(|&w| w.det() * lam_char.get(w.shifted_apply(nu) - mu))
        .sum()
}

/// Decomposition of λ ⊗ μ into irreducibles: ν ↦ N̄^ν_{λμ}, nonzero only.
pub fn tensor_decompose(lam: Weight, mu: Weight) -> Result<BTreeMap<Weight, i64>> {
    let lam_char = character(lam)?;
    mu.require_dominant()?;
    let top = lam + mu;
    let span = top.height();
    let mut out = BTreeMap::new();
    for a in 0..=span {
        for b in 0..=span {
            let nu = top - Weight::ALPHA1 * a - Weight::ALPHA2 * b;
            if !nu.is_dominant() {
                continue;
            }
            let n = tensor_multiplicity_with(&lam_char, mu, nu);
            if n != 0 {
                out.insert(nu, n);
            }
        }
    }
    Ok(out)
}
