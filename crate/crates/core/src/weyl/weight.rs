//! Integer weights of sl(3) in the fundamental-weight basis.
//!
//! A weight λ = λ₁ω̄₁ + λ₂ω̄₂ is stored as the integer pair (λ₁, λ₂).
//! With the normalisation ⟨ω̄ᵢ, αⱼ⟩ = δᵢⱼ the pairing of a weight with a
//! simple root reads off a coordinate, and the symmetric bilinear form
//! takes values in (1/3)ℤ:
//!
//! ⟨λ, μ⟩ = (2λ₁μ₁ + λ₁μ₂ + λ₂μ₁ + 2λ₂μ₂)/3.
//!
//! The simple roots are α₁ = (2,−1) and α₂ = (−1,2); the highest root is
//! θ = α₁ + α₂ = (1,1), which coincides with the Weyl vector ρ̄.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Weight {
    pub c1: i64,
    pub c2: i64,
}

impl Weight {
    pub const ZERO: Weight = Weight { c1: 0, c2: 0 };
    pub const OMEGA1: Weight = Weight { c1: 1, c2: 0 };
    pub const OMEGA2: Weight = Weight { c1: 0, c2: 1 };
    pub const ALPHA1: Weight = Weight { c1: 2, c2: -1 };
    pub const ALPHA2: Weight = Weight { c1: -1, c2: 2 };
    /// Highest root θ = α₁ + α₂; equals the Weyl vector ρ̄ in this basis.
    pub const THETA: Weight = Weight { c1: 1, c2: 1 };
    pub const RHO: Weight = Weight { c1: 1, c2: 1 };

    pub const fn new(c1: i64, c2: i64) -> Self {
        Weight { c1, c2 }
    }

    /// Three times the invariant bilinear form, an exact integer.
    pub fn inner_times3(self, other: Weight) -> i64 {
        2 * self.c1 * other.c1 + self.c1 * other.c2 + self.c2 * other.c1 + 2 * self.c2 * other.c2
    }

    /// Exact value of ⟨self, other⟩ as a rational number.
    pub fn inner(self, other: Weight) -> Ratio<i64> {
        Ratio::new(self.inner_times3(other), 3)
    }

    /// ℤ₃ grading (λ₁ + 2λ₂) mod 3; zero exactly on the root lattice Q.
    pub fn triality(self) -> i64 {
        (self.c1 + 2 * self.c2).rem_euclid(3)
    }

    pub fn in_root_lattice(self) -> bool {
        self.triality() == 0
    }

    /// Coordinates (a, b) with λ = aα₁ + bα₂, when λ lies in Q.
    pub fn root_coords(self) -> Option<(i64, i64)> {
        if self.triality() != 0 {
            return None;
        }
        Some(((2 * self.c1 + self.c2) / 3, (self.c1 + 2 * self.c2) / 3))
    }

    pub fn from_root_coords(a: i64, b: i64) -> Weight {
        Weight::new(2 * a - b, 2 * b - a)
    }

    /// ⟨λ, ρ̄⟩ = λ₁ + λ₂. On the root lattice this is the root height.
    pub fn height(self) -> i64 {
        self.c1 + self.c2
    }

    pub fn is_dominant(self) -> bool {
        self.c1 >= 0 && self.c2 >= 0
    }

    pub fn is_strictly_dominant(self) -> bool {
        self.c1 > 0 && self.c2 > 0
    }

    /// Dynkin-diagram involution ω̄₁ ↔ ω̄₂.
    pub fn conjugate(self) -> Weight {
        Weight::new(self.c2, self.c1)
    }

    pub fn require_dominant(self) -> Result<Weight, Error> {
        if self.is_dominant() {
            Ok(self)
        } else {
            Err(Error::WeightNotDominant(self.to_string()))
        }
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight::new(self.c1 + rhs.c1, self.c2 + rhs.c2)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        Weight::new(self.c1 - rhs.c1, self.c2 - rhs.c2)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.c1, -self.c2)
    }
}

impl Mul<i64> for Weight {
    type Output = Weight;
    fn mul(self, rhs: i64) -> Weight {
        Weight::new(self.c1 * rhs, self.c2 * rhs)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.c1, self.c2)
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let err = || Error::Parse {
            what: "weight",
            input: s.to_string(),
        };
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(err)?;
        let mut parts = inner.splitn(2, ',');
        let c1 = parts
            .next()
            .ok_or_else(err)?
            .trim()
            .parse()
            .map_err(|_| err())?;
        let c2 = parts
            .next()
            .ok_or_else(err)?
            .trim()
            .parse()
            .map_err(|_| err())?;
        Ok(Weight::new(c1, c2))
    }
}

/// Weight with exact rational coordinates, used for horizontal projections
/// at a rational shifted level κ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QWeight {
    pub c1: Ratio<i64>,
    pub c2: Ratio<i64>,
}

impl QWeight {
    pub fn new(c1: Ratio<i64>, c2: Ratio<i64>) -> Self {
        QWeight { c1, c2 }
    }

    pub fn zero() -> Self {
        QWeight::new(Ratio::from_integer(0), Ratio::from_integer(0))
    }

    pub fn scale(self, r: Ratio<i64>) -> Self {
        QWeight::new(self.c1 * r, self.c2 * r)
    }
}

impl From<Weight> for QWeight {
    fn from(w: Weight) -> Self {
        QWeight::new(Ratio::from_integer(w.c1), Ratio::from_integer(w.c2))
    }
}

impl Add for QWeight {
    type Output = QWeight;
    fn add(self, rhs: QWeight) -> QWeight {
        QWeight::new(self.c1 + rhs.c1, self.c2 + rhs.c2)
    }
}

impl Sub for QWeight {
    type Output = QWeight;
    fn sub(self, rhs: QWeight) -> QWeight {
        QWeight::new(self.c1 - rhs.c1, self.c2 - rhs.c2)
    }
}

impl Neg for QWeight {
    type Output = QWeight;
    fn neg(self) -> QWeight {
        QWeight::new(-self.c1, -self.c2)
    }
}

impl fmt::Display for QWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.c1, self.c2)
    }
}
