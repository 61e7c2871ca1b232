//! The dual set E_p and the sign-resolved class-element value F(μ).
//!
//! E_p = {μ ∈ P₊ : 0 ≤ μᵢ ≤ p−1} is the p²-point "double alcove" that
//! labels the joint eigenvectors of all fusion matrices. It splits into
//! E_p⁺ = P₊^{p−2} and its complement; the sign ε(μ) = ±1 on the two
//! parts fixes the square root F(μ) = ε(μ)|R(μ)|. On the reflection
//! hyperplanes ⟨μ+ρ̄, α⟩ = p the convention is +1 for α = θ and −1 for
//! α = α₁, α₂, which is exactly the ε(μ) of the two subsets.

use std::fmt;

use crate::charring::r_eval;
use crate::error::{Error, Result};
use crate::weyl::{validate_level, Weight};

/// A positive root of sl(3).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Root {
    Theta,
    Alpha1,
    Alpha2,
}

impl Root {
    pub fn weight(self) -> Weight {
        match self {
            Root::Theta => Weight::THETA,
            Root::Alpha1 => Weight::ALPHA1,
            Root::Alpha2 => Weight::ALPHA2,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Root::Theta => "theta",
            Root::Alpha1 => "alpha1",
            Root::Alpha2 => "alpha2",
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A point of E_p with its sign and hyperplane annotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualPoint {
    pub mu: Weight,
    /// +1 on P₊^{p−2}, −1 on the mirror part.
    pub epsilon: i64,
    /// A positive root α with ⟨μ+ρ̄, α⟩ = p, if any (θ before α₁, α₂).
    pub on_hyperplane: Option<Root>,
}

impl DualPoint {
    pub fn new(mu: Weight, p: i64) -> Result<DualPoint> {
        validate_level(p)?;
        if !(0..p).contains(&mu.c1) || !(0..p).contains(&mu.c2) {
            return Err(Error::OutsideDualSet(mu.to_string(), p));
        }
        let epsilon = if mu.height() <= p - 2 { 1 } else { -1 };
        let xi = mu + Weight::RHO;
        let on_hyperplane = [Root::Theta, Root::Alpha1, Root::Alpha2]
            .into_iter()
            .find(|r| xi.inner_times3(r.weight()) == 3 * p);
        Ok(DualPoint {
            mu,
            epsilon,
            on_hyperplane,
        })
    }

    pub fn is_on_hyperplane(&self) -> bool {
        self.on_hyperplane.is_some()
    }
}

/// All p² points of E_p in lexicographic (μ₁, μ₂) order.
pub fn dual_set(p: i64) -> Result<Vec<DualPoint>> {
    validate_level(p)?;
    let mut out = Vec::with_capacity((p * p) as usize);
    for c1 in 0..p {
        for c2 in 0..p {
            out.push(DualPoint::new(Weight::new(c1, c2), p)?);
        }
    }
    Ok(out)
}

/// The quantised class element F(μ) = ε(μ)·|R(μ)|, a real number with
/// F(μ)² = 3 + χ̄^{(p)}_{(1,0)}(μ) + χ̄^{(p)}_{(0,1)}(μ).
pub fn f_eval(point: &DualPoint, p: i64) -> f64 {
    point.epsilon as f64 * r_eval(point.mu, p).norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charring::q_character_eval;
    use num_complex::Complex64;

    #[test]
    fn dual_set_p2() {
        let e2 = dual_set(2).unwrap();
        assert_eq!(e2.len(), 4);
        let signs: Vec<i64> = e2.iter().map(|d| d.epsilon).collect();
        assert_eq!(signs, vec![1, -1, -1, -1]);
        // every point of E_2 sits on a hyperplane
        assert!(e2.iter().all(|d| d.is_on_hyperplane()));
        assert_eq!(e2[0].on_hyperplane, Some(Root::Theta));
        assert_eq!(e2[1].on_hyperplane, Some(Root::Alpha2)); // μ = (0,1)
        assert_eq!(e2[2].on_hyperplane, Some(Root::Alpha1)); // μ = (1,0)
        assert!(dual_set(3).is_err());
        assert!(DualPoint::new(Weight::new(5, 0), 5).is_err());
    }

    #[test]
    fn dual_set_p5_theta_plane() {
        let e5 = dual_set(5).unwrap();
        assert_eq!(e5.len(), 25);
        for d in &e5 {
            if d.mu.height() == 3 {
                assert_eq!(d.epsilon, 1);
                assert_eq!(d.on_hyperplane, Some(Root::Theta));
            }
            // ε = +1 exactly on P₊^{p−2}
            assert_eq!(d.epsilon == 1, d.mu.height() <= 3);
        }
    }

    #[test]
    fn f_squared_matches_fundamental_characters() {
        for p in [2, 4, 5] {
            for d in dual_set(p).unwrap() {
                let f = f_eval(&d, p);
                let expect = Complex64::new(3.0, 0.0)
                    + q_character_eval(Weight::OMEGA1, d.mu, p)
                    + q_character_eval(Weight::OMEGA2, d.mu, p);
                assert!(expect.im.abs() < 1e-10);
                assert!(
                    (f * f - expect.re).abs() < 1e-10,
                    "p={p} mu={} F²={} expect={}",
                    d.mu,
                    f * f,
                    expect.re
                );
            }
        }
    }

    #[test]
    fn hyperplane_sign_cancellation() {
        // r_ε(μ) = R + R̄ − ε|R| vanishes on every hyperplane point
        for p in [2, 4, 5, 7] {
            for d in dual_set(p).unwrap() {
                if !d.is_on_hyperplane() {
                    continue;
                }
                let r = crate::charring::r_eval(d.mu, p);
                let val = r + r.conj() - d.epsilon as f64 * r.norm();
                assert!(val.norm() < 1e-10, "p={p} mu={}", d.mu);
            }
        }
    }

    #[test]
    fn f_at_origin_p5() {
        // R(0) = e^{−4πi/15} + 2e^{2πi/15}, and ε((0,0)) = +1
        let d = DualPoint::new(Weight::ZERO, 5).unwrap();
        let r = Complex64::from_polar(1.0, -4.0 * std::f64::consts::PI / 15.0)
            + Complex64::from_polar(2.0, 2.0 * std::f64::consts::PI / 15.0);
        assert!((f_eval(&d, 5) - r.norm()).abs() < 1e-12);
        assert!(f_eval(&d, 5) > 0.0);
    }
}
