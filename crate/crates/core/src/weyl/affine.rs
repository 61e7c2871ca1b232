//! The extended affine Weyl group W̃ = W̄ ⋉ t_P of sl(3)-hat.
//!
//! Every element is kept in the canonical form (w̄, λ) ⇔ w̄·t₋λ with
//! w̄ ∈ S₃ and λ in the weight lattice P. The product law follows from
//! conjugation of translations, y t_β y⁻¹ = t_{ȳ(β)}:
//!
//! (w̄₁, λ₁)·(w̄₂, λ₂) = (w̄₁w̄₂, w̄₂⁻¹(λ₁) + λ₂).
//!
//! The non-extended affine group W = W̄ ⋉ t_Q is the triality-zero part.
//! The cyclic subgroup A = {1, γ, γ²} of units is generated by
//! γ = t_{ω̄₁}·s₁s₂ = (s12, ω̄₂).

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::weyl::finite::FiniteWeyl;
use crate::weyl::weight::{QWeight, Weight};

/// An element w̄·t₋λ of the extended affine Weyl group, in canonical form.
///
/// The derived ordering (w̄ first, then λ lexicographically) is the
/// canonical ordering of alcove tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct AffineElement {
    pub wbar: FiniteWeyl,
    pub lam: Weight,
}

impl AffineElement {
    pub const fn new(wbar: FiniteWeyl, lam: Weight) -> Self {
        AffineElement { wbar, lam }
    }

    pub fn identity() -> Self {
        AffineElement::default()
    }

    /// The translation t₋λ = (e, λ).
    pub fn t_minus(lam: Weight) -> Self {
        AffineElement::new(FiniteWeyl::E, lam)
    }

    pub fn from_wbar(wbar: FiniteWeyl) -> Self {
        AffineElement::new(wbar, Weight::ZERO)
    }

    /// Affine simple reflection w₀ = t_θ w_θ = (s121, θ).
    pub fn w0() -> Self {
        AffineElement::new(FiniteWeyl::S121, Weight::THETA)
    }

    pub fn w1() -> Self {
        AffineElement::from_wbar(FiniteWeyl::S1)
    }

    pub fn w2() -> Self {
        AffineElement::from_wbar(FiniteWeyl::S2)
    }

    /// Generator γ = (s12, ω̄₂) of the order-3 group A of units.
    pub fn gamma() -> Self {
        AffineElement::new(FiniteWeyl::S12, Weight::OMEGA2)
    }

    /// The three elements of A in the order 1, γ, γ².
    pub fn group_a() -> [Self; 3] {
        let g = Self::gamma();
        [Self::identity(), g, g.multiply(g)]
    }

    pub fn multiply(self, rhs: AffineElement) -> AffineElement {
        AffineElement::new(
            self.wbar.compose(rhs.wbar),
            rhs.wbar.inverse().apply(self.lam) + rhs.lam,
        )
    }

    pub fn inverse(self) -> AffineElement {
        AffineElement::new(self.wbar.inverse(), -self.wbar.apply(self.lam))
    }

    pub fn pow(self, n: i64) -> AffineElement {
        let base = if n >= 0 { self } else { self.inverse() };
        let mut out = AffineElement::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.multiply(base);
        }
        out
    }

    pub fn det(self) -> i64 {
        self.wbar.det()
    }

    /// Triality of the translation part; zero exactly on W = W̄ ⋉ t_Q.
    pub fn tau(self) -> i64 {
        self.lam.triality()
    }

    pub fn in_affine_group(self) -> bool {
        self.tau() == 0
    }

    /// The twisted logarithm ι(w̄ t₋λ) = 3λ + w̄⁻¹(ρ̄) − ρ̄ ∈ Q.
    ///
    /// It obeys ι(xy) = ȳ⁻¹(ι(x)) + ι(y) and intertwines the right
    /// W̄-action with the shifted Weyl action: ι(y w̄) = w̄⁻¹·ι(y).
    pub fn twisted_log(self) -> Weight {
        self.lam * 3 + self.wbar.inverse().apply(Weight::RHO) - Weight::RHO
    }

    /// Dynkin-diagram involution: swaps α₁ ↔ α₂ on both components.
    pub fn conjugate(self) -> AffineElement {
        AffineElement::new(self.wbar.conjugate(), self.lam.conjugate())
    }

    /// Horizontal projection h(w̄ t₋λ) = w̄(ρ̄ − κλ) − ρ̄ at shifted level κ,
    /// exact in rational arithmetic. Satisfies h(xy) = h(x) + x̄(h(y)).
    pub fn horizontal_weight(self, kappa: Ratio<i64>) -> QWeight {
        let inner = QWeight::from(Weight::RHO) - QWeight::from(self.lam).scale(kappa);
        self.wbar.apply_rational(inner) - QWeight::from(Weight::RHO)
    }
}

/// γ_[p] = t_{p ω̄₁}·s₁s₂ = (s12, p ω̄₂), the generator of A^[p].
pub fn gamma_p(p: i64) -> Result<AffineElement> {
    crate::weyl::validate_level(p)?;
    Ok(AffineElement::new(FiniteWeyl::S12, Weight::OMEGA2 * p))
}

/// The order-3 alcove automorphism σ_p(x) = γ·x·γ_[p]^{−p}.
///
/// It permutes the admissible alcove C_p, preserving triality, and plays
/// the role of a simple current on fusion labels.
pub fn sigma_p(p: i64, x: AffineElement) -> Result<AffineElement> {
    let gp = gamma_p(p)?;
    // A^[p] is cyclic of order 3, so reduce the exponent mod 3.
    let e = (-p).rem_euclid(3);
    Ok(AffineElement::gamma().multiply(x).multiply(gp.pow(e)))
}

/// Alcove rotation σ_[k](λ) = s₁s₂(λ) + k ω̄₁ of the shifted level-(k+3)
/// integrable alcove P₊ᵏ, induced by the action of A.
pub fn alcove_rotation(k: i64, lam: Weight) -> Weight {
    FiniteWeyl::S12.apply(lam) + Weight::OMEGA1 * k
}

impl fmt::Display for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == AffineElement::identity() {
            return f.write_str("e");
        }
        write!(f, "{}*t[{},{}]", self.wbar, -self.lam.c1, -self.lam.c2)
    }
}

impl FromStr for AffineElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "affine element",
            input: s.to_string(),
        };
        let parse_t = |part: &str| -> Result<Weight> {
            let inner = part
                .strip_prefix("t[")
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(err)?;
            let mut nums = inner.splitn(2, ',');
            let a: i64 = nums
                .next()
                .ok_or_else(err)?
                .trim()
                .parse()
                .map_err(|_| err())?;
            let b: i64 = nums
                .next()
                .ok_or_else(err)?
                .trim()
                .parse()
                .map_err(|_| err())?;
            // the text form records t_{-λ}, so negate to recover λ
            Ok(Weight::new(-a, -b))
        };
        let mut wbar = FiniteWeyl::E;
        let mut lam = Weight::ZERO;
        let mut seen_t = false;
        for (i, part) in s.trim().split('*').enumerate() {
            let part = part.trim();
            if part.starts_with("t[") {
                if seen_t {
                    return Err(err());
                }
                lam = parse_t(part)?;
                seen_t = true;
            } else if i == 0 && !seen_t {
                wbar = part.parse().map_err(|_| err())?;
            } else {
                return Err(err());
            }
        }
        Ok(AffineElement::new(wbar, lam))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::finite::ratio;

    #[test]
    fn reflections_are_involutions() {
        let s1 = AffineElement::w1();
        assert_eq!(s1.multiply(s1), AffineElement::identity());
        let w0 = AffineElement::w0();
        assert_eq!(w0.multiply(w0), AffineElement::identity());
    }

    #[test]
    fn gamma_has_order_three() {
        let g = AffineElement::gamma();
        assert_eq!(g.pow(3), AffineElement::identity());
        assert_ne!(g.pow(2), AffineElement::identity());
        // γ⁻¹ · w₂₀ = t₋ω̄₁
        let w20 = AffineElement::new(FiniteWeyl::S12, Weight::THETA);
        assert_eq!(
            g.inverse().multiply(w20),
            AffineElement::t_minus(Weight::OMEGA1)
        );
    }

    #[test]
    fn translation_conjugation() {
        // y t_β y⁻¹ = t_{ȳ(β)}
        let y = AffineElement::new(FiniteWeyl::S21, Weight::new(2, -1));
        let beta = Weight::new(1, 1);
        let t = AffineElement::t_minus(-beta);
        let lhs = y.multiply(t).multiply(y.inverse());
        assert_eq!(lhs, AffineElement::t_minus(-y.wbar.apply(beta)));
    }

    #[test]
    fn twisted_log_examples() {
        assert_eq!(AffineElement::identity().twisted_log(), Weight::ZERO);
        // ι(w₀) = (1,1), ι(w₂₀) = (3,0), ι(w₁₀) = (0,3)
        assert_eq!(AffineElement::w0().twisted_log(), Weight::new(1, 1));
        let w20 = AffineElement::w2().multiply(AffineElement::w0());
        let w10 = AffineElement::w1().multiply(AffineElement::w0());
        assert_eq!(w20, AffineElement::new(FiniteWeyl::S12, Weight::THETA));
        assert_eq!(w20.twisted_log(), Weight::new(3, 0));
        assert_eq!(w10.twisted_log(), Weight::new(0, 3));
        // ι vanishes on A
        for a in AffineElement::group_a() {
            assert_eq!(a.twisted_log(), Weight::ZERO);
        }
    }

    #[test]
    fn twisted_log_cocycle() {
        let xs = [
            AffineElement::new(FiniteWeyl::S12, Weight::new(3, -2)),
            AffineElement::t_minus(Weight::new(-1, 4)),
            AffineElement::w0(),
        ];
        for x in xs {
            for y in xs {
                let lhs = x.multiply(y).twisted_log();
                let rhs = y.wbar.inverse().apply(x.twisted_log()) + y.twisted_log();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn sigma_p_examples() {
        // σ_p fixes the middle point of the alcove; for p = 4 that is t₋ρ̄.
        let mid = AffineElement::t_minus(Weight::RHO);
        assert_eq!(sigma_p(4, mid).unwrap(), mid);
        assert!(gamma_p(3).is_err());
        assert!(sigma_p(1, mid).is_err());
        // γ_[p] generates an order-3 group
        for p in [2, 4, 5, 7] {
            let gp = gamma_p(p).unwrap();
            assert_eq!(gp.pow(3), AffineElement::identity());
        }
    }

    #[test]
    fn horizontal_projection() {
        let k = ratio(3, 5);
        assert_eq!(
            AffineElement::identity().horizontal_weight(k),
            QWeight::zero()
        );
        // ȳ = e reduces to −κλ
        let lam = Weight::new(2, -1);
        let h = AffineElement::t_minus(lam).horizontal_weight(k);
        assert_eq!(h, QWeight::from(-lam).scale(k));
        // cocycle h(xy) = h(x) + x̄(h(y))
        let x = AffineElement::new(FiniteWeyl::S21, Weight::new(1, 3));
        let y = AffineElement::new(FiniteWeyl::S121, Weight::new(-2, 1));
        let lhs = x.multiply(y).horizontal_weight(k);
        let rhs = x.horizontal_weight(k) + x.wbar.apply_rational(y.horizontal_weight(k));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn element_text_form() {
        assert_eq!(AffineElement::identity().to_string(), "e");
        let w0 = AffineElement::w0();
        assert_eq!(w0.to_string(), "s121*t[-1,-1]");
        assert_eq!("s121*t[-1,-1]".parse::<AffineElement>().unwrap(), w0);
        assert_eq!(
            "t[-1,0]".parse::<AffineElement>().unwrap(),
            AffineElement::t_minus(Weight::OMEGA1)
        );
        assert_eq!(
            "s12".parse::<AffineElement>().unwrap(),
            AffineElement::from_wbar(FiniteWeyl::S12)
        );
        assert!("q*t[1,2]".parse::<AffineElement>().is_err());
        assert!("s1*s2".parse::<AffineElement>().is_err());
    }
}
