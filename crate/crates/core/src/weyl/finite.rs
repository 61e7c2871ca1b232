//! The finite Weyl group of sl(3): the six permutations of S₃ acting on
//! the weight lattice.
//!
//! Elements are named by reduced words in the simple reflections, with
//! `S12` meaning s₁s₂ (apply s₂ first). The enum order `e < s1 < s2 <
//! s12 < s21 < s121` is the canonical ordering used for alcove tables.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::Error;
use crate::weyl::weight::{QWeight, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum FiniteWeyl {
    #[default]
    E,
    S1,
    S2,
    S12,
    S21,
    S121,
}

fn s1(w: Weight) -> Weight {
    // sᵢ(λ) = λ − λᵢ αᵢ
    Weight::new(-w.c1, w.c1 + w.c2)
}

fn s2(w: Weight) -> Weight {
    Weight::new(w.c1 + w.c2, -w.c2)
}

fn s1q(w: QWeight) -> QWeight {
    QWeight::new(-w.c1, w.c1 + w.c2)
}

fn s2q(w: QWeight) -> QWeight {
    QWeight::new(w.c1 + w.c2, -w.c2)
}

impl FiniteWeyl {
    pub const ALL: [FiniteWeyl; 6] = [
        FiniteWeyl::E,
        FiniteWeyl::S1,
        FiniteWeyl::S2,
        FiniteWeyl::S12,
        FiniteWeyl::S21,
        FiniteWeyl::S121,
    ];

    pub fn apply(self, w: Weight) -> Weight {
        match self {
            FiniteWeyl::E => w,
            FiniteWeyl::S1 => s1(w),
            FiniteWeyl::S2 => s2(w),
            FiniteWeyl::S12 => s1(s2(w)),
            FiniteWeyl::S21 => s2(s1(w)),
            FiniteWeyl::S121 => s1(s2(s1(w))),
        }
    }

    pub fn apply_rational(self, w: QWeight) -> QWeight {
        match self {
            FiniteWeyl::E => w,
            FiniteWeyl::S1 => s1q(w),
            FiniteWeyl::S2 => s2q(w),
            FiniteWeyl::S12 => s1q(s2q(w)),
            FiniteWeyl::S21 => s2q(s1q(w)),
            FiniteWeyl::S121 => s1q(s2q(s1q(w))),
        }
    }

    /// Shifted action w·λ = w(λ + ρ̄) − ρ̄.
    pub fn shifted_apply(self, w: Weight) -> Weight {
        self.apply(w + Weight::RHO) - Weight::RHO
    }

    /// Group product: `(self ∘ rhs)(λ) = self(rhs(λ))`.
    pub fn compose(self, rhs: FiniteWeyl) -> FiniteWeyl {
        // ρ̄ has trivial stabiliser, so the image of ρ̄ identifies the element.
        Self::from_rho_image(self.apply(rhs.apply(Weight::RHO)))
    }

    fn from_rho_image(w: Weight) -> FiniteWeyl {
        match (w.c1, w.c2) {
            (1, 1) => FiniteWeyl::E,
            (-1, 2) => FiniteWeyl::S1,
            (2, -1) => FiniteWeyl::S2,
            (-2, 1) => FiniteWeyl::S12,
            (1, -2) => FiniteWeyl::S21,
            (-1, -1) => FiniteWeyl::S121,
            _ => unreachable!("not in the orbit of the Weyl vector: {w}"),
        }
    }

    pub fn inverse(self) -> FiniteWeyl {
        match self {
            FiniteWeyl::S12 => FiniteWeyl::S21,
            FiniteWeyl::S21 => FiniteWeyl::S12,
            w => w,
        }
    }

    pub fn det(self) -> i64 {
        match self {
            FiniteWeyl::E | FiniteWeyl::S12 | FiniteWeyl::S21 => 1,
            _ => -1,
        }
    }

    /// Dynkin-diagram involution s₁ ↔ s₂.
    pub fn conjugate(self) -> FiniteWeyl {
        match self {
            FiniteWeyl::S1 => FiniteWeyl::S2,
            FiniteWeyl::S2 => FiniteWeyl::S1,
            FiniteWeyl::S12 => FiniteWeyl::S21,
            FiniteWeyl::S21 => FiniteWeyl::S12,
            w => w,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            FiniteWeyl::E => "e",
            FiniteWeyl::S1 => "s1",
            FiniteWeyl::S2 => "s2",
            FiniteWeyl::S12 => "s12",
            FiniteWeyl::S21 => "s21",
            FiniteWeyl::S121 => "s121",
        }
    }
}

impl fmt::Display for FiniteWeyl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for FiniteWeyl {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "e" => Ok(FiniteWeyl::E),
            "s1" => Ok(FiniteWeyl::S1),
            "s2" => Ok(FiniteWeyl::S2),
            "s12" => Ok(FiniteWeyl::S12),
            "s21" => Ok(FiniteWeyl::S21),
            "s121" | "s212" => Ok(FiniteWeyl::S121),
            _ => Err(Error::Parse {
                what: "finite Weyl element",
                input: s.to_string(),
            }),
        }
    }
}

/// Rational scalar helper for horizontal projections.
pub fn ratio(num: i64, den: i64) -> Ratio<i64> {
    Ratio::new(num, den)
}
