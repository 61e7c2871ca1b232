//! Sparse integer group-ring arithmetic over the extended affine Weyl
//! group.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::weyl::AffineElement;

/// A finite integer combination of elements of W̃. Addition is pointwise
/// and multiplication is bilinear over the group law.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupRingElement {
    terms: BTreeMap<AffineElement, i64>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        GroupRingElement::default()
    }

    pub fn one() -> Self {
        GroupRingElement::from_element(AffineElement::identity())
    }

    pub fn from_element(y: AffineElement) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(y, 1);
        GroupRingElement { terms }
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (AffineElement, i64)>) -> Self {
        let mut out = GroupRingElement::zero();
        for (y, c) in pairs {
            out.add_term(y, c);
        }
        out
    }

    pub fn add_term(&mut self, y: AffineElement, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(y).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&y);
        }
    }

    pub fn get(&self, y: &AffineElement) -> i64 {
        self.terms.get(y).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (AffineElement, i64)> + '_ {
        self.terms.iter().map(|(&y, &c)| (y, c))
    }

    pub fn support(&self) -> impl Iterator<Item = AffineElement> + '_ {
        self.terms.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients (every group element set to 1).
    pub fn coefficient_mass(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return GroupRingElement::zero();
        }
        GroupRingElement {
            terms: self.terms.iter().map(|(&y, &m)| (y, m * c)).collect(),
        }
    }

    /// Dynkin-diagram involution applied to every group element.
    pub fn conjugate(&self) -> Self {
        GroupRingElement {
            terms: self
                .terms
                .iter()
                .map(|(&y, &c)| (y.conjugate(), c))
                .collect(),
        }
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (y, c) in rhs.iter() {
            out.add_term(y, c);
        }
        out
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (y, c) in rhs.iter() {
            out.add_term(y, -c);
        }
        out
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        self.scale(-1)
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;
    fn mul(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in rhs.iter() {
                out.add_term(a.multiply(b), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (y, c)) in self.iter().enumerate() {
            if i == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else if c < 0 {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let a = c.abs();
            if a != 1 {
                write!(f, "{a}·")?;
            }
            write!(f, "{y}")?;
        }
        Ok(())
    }
}
