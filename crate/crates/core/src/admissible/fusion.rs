//! Fusion multiplicities of the admissible representations at shifted
//! level 3/p.
//!
//! The primary route is all-integer: ^{(p)}N^z_{x,y} equals the
//! integrable Kac–Walton fusion at shifted level 3p evaluated on twisted
//! logarithms, ^{(3p)}N̄^{ι(z)}_{ι(x) ι(y)}. The verification route sums
//! det-weighted generalised multiplicities over W^[p] = t_{pQ} ⋊ W̄
//! directly; the translation sum is finite because the weight diagram of
//! ι(x) is.

use std::collections::BTreeMap;

use crate::charring::{character, fusion_product, ClassicalCharacter};
use crate::error::{Error, Result};
use crate::weyl::{enumerate_alcove, validate_level, AffineElement, FiniteWeyl, Weight};

/// The integer 3-tensor ^{(p)}N^z_{x,y} over the admissible alcove C_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionTable {
    pub p: i64,
    labels: Vec<AffineElement>,
    index: BTreeMap<AffineElement, usize>,
    n: Vec<i64>,
}

impl FusionTable {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[AffineElement] {
        &self.labels
    }

    pub fn index_of(&self, y: &AffineElement) -> Option<usize> {
        self.index.get(y).copied()
    }

    pub fn get(&self, x: usize, y: usize, z: usize) -> i64 {
        let n = self.size();
        self.n[(x * n + y) * n + z]
    }

    pub fn constant(&self, x: &AffineElement, y: &AffineElement, z: &AffineElement) -> Option<i64> {
        Some(self.get(self.index_of(x)?, self.index_of(y)?, self.index_of(z)?))
    }

    fn set(&mut self, x: usize, y: usize, z: usize, value: i64) {
        let n = self.size();
        self.n[(x * n + y) * n + z] = value;
    }

    /// The matrix N_y acting on the alcove: (N_y)_x^z = N^z_{y,x}.
    pub fn matrix(&self, y: usize) -> Vec<Vec<i64>> {
        let n = self.size();
        (0..n)
            .map(|x| (0..n).map(|z| self.get(y, x, z)).collect())
            .collect()
    }

    pub(crate) fn from_parts(p: i64, labels: Vec<AffineElement>, n: Vec<i64>) -> Result<Self> {
        let size = labels.len();
        assert_eq!(n.len(), size * size * size);
        if let Some(&bad) = n.iter().find(|&&v| v < 0) {
            return Err(Error::Defect {
                what: format!("negative fusion entry {bad} at p = {p}"),
                defect: bad.unsigned_abs() as f64,
                tol: 0.0,
            });
        }
        let index = labels.iter().enumerate().map(|(i, &y)| (y, i)).collect();
        Ok(FusionTable {
            p,
            labels,
            index,
            n,
        })
    }
}

/// Build the full fusion table by Kac–Walton folding at shifted level 3p
/// on twisted-logarithm images.
pub fn fusion_table(p: i64) -> Result<FusionTable> {
    validate_level(p)?;
    let labels = enumerate_alcove(p)?;
    let size = labels.len();
    let index: BTreeMap<AffineElement, usize> =
        labels.iter().enumerate().map(|(i, &y)| (y, i)).collect();
    let log_index: BTreeMap<Weight, usize> = labels
        .iter()
        .enumerate()
        .map(|(i, &y)| (y.twisted_log(), i))
        .collect();
    assert_eq!(log_index.len(), size);
    let mut table = FusionTable {
        p,
        labels: labels.clone(),
        index,
        n: vec![0; size * size * size],
    };
    let h = 3 * p;
    for (xi, x) in labels.iter().enumerate() {
        for (yi, y) in labels.iter().enumerate() {
            let product = fusion_product(x.twisted_log(), y.twisted_log(), h)?;
            for (nu, n) in product {
                // constituents outside the image of ι do not label
                // admissible representations and are dropped
                if let Some(&zi) = log_index.get(&nu) {
                    debug_assert!(n >= 0);
                    table.set(xi, yi, zi, n);
                }
            }
        }
    }
    Ok(table)
}

/// One fusion multiplicity by the direct sum over W^[p]:
///
/// ^{(p)}N^z_{x,y} = Σ_{w ∈ W^[p]} det(w̄) m^x_{z w y⁻¹}.
///
/// For each w̄ and each diagram point ν of ι(x) the translation part is
/// solved for exactly, so the sum is exact with no cutoff.
pub fn fusion_constant_direct(
    x: AffineElement,
    y: AffineElement,
    z: AffineElement,
    p: i64,
) -> Result<i64> {
    validate_level(p)?;
    let diagram =
        character(x.twisted_log()).map_err(|_| Error::OutsideAdmissibleAlcove(x.to_string(), p))?;
    Ok(fusion_constant_direct_with(&diagram, x, y, z, p))
}

pub(crate) fn fusion_constant_direct_with(
    diagram: &ClassicalCharacter,
    x: AffineElement,
    y: AffineElement,
    z: AffineElement,
    p: i64,
) -> i64 {
    debug_assert_eq!(diagram.highest_weight(), x.twisted_log());
    let mut total = 0;
    for wbar in FiniteWeyl::ALL {
        // ι(z t_{pβ} ŵ y⁻¹) = ν solves to β = (ι(z) + w̄ȳ⁻¹(K₀ − ν))/3p
        // with K₀ = ι(ŵ y⁻¹)
        let k0 = AffineElement::from_wbar(wbar)
            .multiply(y.inverse())
            .twisted_log();
        let rot = wbar.compose(y.wbar.inverse());
        for (nu, m) in diagram.iter() {
            let numer = z.twisted_log() + rot.apply(k0 - nu);
            if numer.c1.rem_euclid(3 * p) == 0 && numer.c2.rem_euclid(3 * p) == 0 {
                let beta = Weight::new(numer.c1 / (3 * p), numer.c2 / (3 * p));
                if beta.in_root_lattice() {
                    total += wbar.det() * m;
                }
            }
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::sigma_p;

    #[test]
    fn p2_w0_row() {
        let t = fusion_table(2).unwrap();
        let w0 = AffineElement::w0();
        let e = AffineElement::identity();
        let w10 = AffineElement::new(FiniteWeyl::S21, Weight::THETA);
        let w20 = AffineElement::new(FiniteWeyl::S12, Weight::THETA);
        assert_eq!(t.constant(&w0, &w0, &e), Some(1));
        assert_eq!(t.constant(&w0, &w0, &w0), Some(2));
        assert_eq!(t.constant(&w0, &w0, &w10), Some(1));
        assert_eq!(t.constant(&w0, &w0, &w20), Some(1));
    }

    #[test]
    fn unit_slice_is_identity() {
        for p in [2, 4, 5] {
            let t = fusion_table(p).unwrap();
            let e = t.index_of(&AffineElement::identity()).unwrap();
            for x in 0..t.size() {
                for z in 0..t.size() {
                    assert_eq!(t.get(e, x, z), i64::from(x == z));
                    assert_eq!(t.get(x, e, z), i64::from(x == z));
                }
            }
        }
    }

    #[test]
    fn duality_pairing() {
        // N^1_{x,y} = δ_{x,y*}
        for p in [2, 4] {
            let t = fusion_table(p).unwrap();
            let e = t.index_of(&AffineElement::identity()).unwrap();
            for (xi, x) in t.labels().iter().enumerate() {
                for (yi, y) in t.labels().iter().enumerate() {
                    let expect = i64::from(*y == x.conjugate());
                    assert_eq!(t.get(xi, yi, e), expect, "x={x} y={y}");
                }
            }
        }
    }

    #[test]
    fn commutative_and_nonnegative() {
        for p in [2, 4] {
            let t = fusion_table(p).unwrap();
            for x in 0..t.size() {
                for y in 0..t.size() {
                    for z in 0..t.size() {
                        assert!(t.get(x, y, z) >= 0);
                        assert_eq!(t.get(x, y, z), t.get(y, x, z));
                    }
                }
            }
        }
    }

    #[test]
    fn simple_current_symmetry() {
        // N^{σ_p(z)}_{x, σ_p(y)} = N^z_{x,y} on all of C_4
        let p = 4;
        let t = fusion_table(p).unwrap();
        for x in t.labels() {
            for y in t.labels() {
                for z in t.labels() {
                    let sy = sigma_p(p, *y).unwrap();
                    let sz = sigma_p(p, *z).unwrap();
                    assert_eq!(
                        t.constant(x, &sy, &sz),
                        t.constant(x, y, z),
                        "x={x} y={y} z={z}"
                    );
                }
            }
        }
    }

    #[test]
    fn sigma_p_permutes_alcove() {
        for p in [2, 4, 5] {
            let alcove = enumerate_alcove(p).unwrap();
            let mut seen = std::collections::BTreeSet::new();
            for &y in &alcove {
                let s = sigma_p(p, y).unwrap();
                assert!(alcove.binary_search(&s).is_ok(), "σ_{p}({y}) = {s} outside");
                assert_eq!(s.tau(), y.tau());
                seen.insert(s);
                // order three
                let s3 = sigma_p(p, sigma_p(p, s).unwrap()).unwrap();
                assert_eq!(s3, y);
            }
            assert_eq!(seen.len(), alcove.len());
        }
    }

    #[test]
    fn routes_agree_p2_full() {
        let t = fusion_table(2).unwrap();
        for (xi, x) in t.labels().iter().enumerate() {
            let diagram = character(x.twisted_log()).unwrap();
            for (yi, y) in t.labels().iter().enumerate() {
                for (zi, z) in t.labels().iter().enumerate() {
                    let direct = fusion_constant_direct_with(&diagram, *x, *y, *z, 2);
                    assert_eq!(t.get(xi, yi, zi), direct, "x={x} y={y} z={z}");
                }
            }
        }
    }
}
