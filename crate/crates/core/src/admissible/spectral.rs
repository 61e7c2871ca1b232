//! Spectral decomposition of the fusion algebra and the
//! Pasquier–Verlinde reconstruction.
//!
//! The vectors χ(μ) = (χ_y^{(p)}(μ))_{y ∈ C_p}, μ ∈ E_p, are joint
//! eigenvectors of all fusion matrices. Normalising each column by a
//! real positive ψ₁^{(μ)} gives a unitary p² × p² matrix ψ, and
//!
//! ^{(p)}N^z_{x,y} = Σ_{μ∈E_p} (ψ_x^{(μ)}/ψ₁^{(μ)}) ψ_y^{(μ)} ψ_z^{(μ)*}
//!
//! reconstructs the integer table. Unitarity and reconstruction defects
//! above the pinned tolerances are hard errors: they would signal a
//! sign or phase inconsistency, never roundoff.

use num_complex::Complex64;

use crate::admissible::dual::{dual_set, DualPoint};
use crate::admissible::fusion::FusionTable;
use crate::admissible::qchar::q_char;
use crate::error::{Error, Result};
use crate::weyl::{enumerate_alcove, validate_level, AffineElement};

/// Unitarity defect above this is a construction error.
pub const UNITARITY_TOL: f64 = 1e-8;
/// Pre-rounding reconstruction defect above this is a construction error.
pub const PV_ROUNDING_TOL: f64 = 1e-6;

/// Eigenvalue and eigenvector data of the fusion algebra at level 3/p.
#[derive(Debug, Clone)]
pub struct EigenData {
    pub p: i64,
    /// Row labels: the admissible alcove C_p in canonical order.
    pub labels: Vec<AffineElement>,
    /// Column labels: the dual set E_p in lexicographic order.
    pub dual: Vec<DualPoint>,
    /// chi[y][μ] = χ_y^{(p)}(μ), the eigenvalue of N_y on column μ.
    pub chi: Vec<Vec<Complex64>>,
    /// psi[y][μ] = χ_y^{(p)}(μ)·ψ₁^{(μ)}, the unitary eigenvector matrix.
    pub psi: Vec<Vec<Complex64>>,
    /// The real positive normalisations ψ₁^{(μ)}.
    pub psi_one: Vec<f64>,
}

impl EigenData {
    /// Max deviation of ψ†ψ from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        let n = self.labels.len();
        let mut defect: f64 = 0.0;
        for a in 0..n {
            for b in 0..n {
                // column orthonormality: Σ_y ψ_y^{(μ_a)} ψ_y^{(μ_b)*}
                let dot: Complex64 = (0..n).map(|y| self.psi[y][a] * self.psi[y][b].conj()).sum();
                let expect = Complex64::new(f64::from(a == b), 0.0);
                defect = defect.max((dot - expect).norm());
                // row orthonormality: Σ_μ ψ_{y_a}^{(μ)} ψ_{y_b}^{(μ)*}
                let dot: Complex64 = (0..n).map(|m| self.psi[a][m] * self.psi[b][m].conj()).sum();
                defect = defect.max((dot - expect).norm());
            }
        }
        defect
    }
}

/// Fill the eigenvalue matrix over C_p × E_p and normalise.
pub fn eigen_data(p: i64) -> Result<EigenData> {
    validate_level(p)?;
    let labels = enumerate_alcove(p)?;
    let dual = dual_set(p)?;
    let chi: Vec<Vec<Complex64>> = labels
        .iter()
        .map(|&y| {
            dual.iter()
                .map(|d| q_char(y, d, p))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let psi_one: Vec<f64> = (0..dual.len())
        .map(|m| {
            let norm2: f64 = chi.iter().map(|row| row[m].norm_sqr()).sum();
            1.0 / norm2.sqrt()
        })
        .collect();
    let psi: Vec<Vec<Complex64>> = chi
        .iter()
        .map(|row| row.iter().zip(&psi_one).map(|(&c, &n)| c * n).collect())
        .collect();
    let data = EigenData {
        p,
        labels,
        dual,
        chi,
        psi,
        psi_one,
    };
    let defect = data.unitarity_defect();
    if defect >= UNITARITY_TOL {
        return Err(Error::Defect {
            what: format!("eigenvector unitarity at p = {p}"),
            defect,
            tol: UNITARITY_TOL,
        });
    }
    Ok(data)
}

/// Reconstruct the fusion table from the spectral data. The pre-rounding
/// defect must stay below [`PV_ROUNDING_TOL`]; rounding is never allowed
/// to hide a larger defect.
pub fn pasquier_verlinde(data: &EigenData) -> Result<FusionTable> {
    let n = data.labels.len();
    let mut entries = vec![0i64; n * n * n];
    let mut defect: f64 = 0.0;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let sum: Complex64 = (0..n)
                    .map(|m| data.chi[x][m] * data.psi[y][m] * data.psi[z][m].conj())
                    .sum();
                let rounded = sum.re.round();
                defect = defect.max((sum - Complex64::new(rounded, 0.0)).norm());
                entries[(x * n + y) * n + z] = rounded as i64;
            }
        }
    }
    if defect >= PV_ROUNDING_TOL {
        return Err(Error::Defect {
            what: format!("Pasquier-Verlinde reconstruction at p = {}", data.p),
            defect,
            tol: PV_ROUNDING_TOL,
        });
    }
    FusionTable::from_parts(data.p, data.labels.clone(), entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::admissible::fusion::fusion_table;
    use crate::charring::modular_s;

    #[test]
    fn identity_row_is_all_ones() {
        let data = eigen_data(4).unwrap();
        let e = data
            .labels
            .iter()
            .position(|&y| y == AffineElement::identity())
            .unwrap();
        for m in 0..data.dual.len() {
            assert!((data.chi[e][m] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
            assert!(data.psi_one[m] > 0.0);
            assert!((data.psi[e][m].re - data.psi_one[m]).abs() < 1e-12);
        }
    }

    #[test]
    fn columns_are_distinct_on_generator_rows() {
        // the four rows 1, w₀, w₁₀, w₂₀ already separate the columns
        for p in [2, 4, 5] {
            let data = eigen_data(p).unwrap();
            let rows: Vec<usize> = ["e", "s121*t[-1,-1]", "s21*t[-1,-1]", "s12*t[-1,-1]"]
                .iter()
                .map(|s| {
                    let y: AffineElement = s.parse().unwrap();
                    data.labels.iter().position(|&l| l == y).unwrap()
                })
                .collect();
            let n = data.dual.len();
            for a in 0..n {
                for b in (a + 1)..n {
                    let separated = rows
                        .iter()
                        .any(|&r| (data.chi[r][a] - data.chi[r][b]).norm() > 1e-6);
                    assert!(separated, "p={p} columns {a} and {b} coincide");
                }
            }
        }
    }

    #[test]
    fn eigen_equation_holds() {
        for p in [2, 4] {
            let table = fusion_table(p).unwrap();
            let data = eigen_data(p).unwrap();
            let n = data.labels.len();
            for x in 0..n {
                for y in 0..n {
                    for m in 0..data.dual.len() {
                        let lhs = data.chi[x][m] * data.chi[y][m];
                        let rhs: Complex64 = (0..n)
                            .map(|z| table.get(x, y, z) as f64 * data.chi[z][m])
                            .sum();
                        assert!((lhs - rhs).norm() < 1e-8, "p={p} x={x} y={y} μ={m}");
                    }
                }
            }
        }
    }

    #[test]
    fn reconstruction_matches_table() {
        for p in [2, 4] {
            let table = fusion_table(p).unwrap();
            let reconstructed = pasquier_verlinde(&eigen_data(p).unwrap()).unwrap();
            assert_eq!(table, reconstructed, "p = {p}");
        }
    }

    #[test]
    fn hyperplane_columns_are_rescaled_s_matrix() {
        // ψ_y^{(μ)} = √3 S^{(3p)}_{ι(y),μ}, except the factor 1 at μ+ρ̄ = pρ̄
        for p in [4, 5] {
            let data = eigen_data(p).unwrap();
            for (m, d) in data.dual.iter().enumerate() {
                if !d.is_on_hyperplane() {
                    continue;
                }
                let factor = if d.mu + crate::Weight::RHO == crate::Weight::RHO * p {
                    1.0
                } else {
                    3f64.sqrt()
                };
                for (yi, y) in data.labels.iter().enumerate() {
                    let expect = factor * modular_s(y.twisted_log(), d.mu, 3 * p);
                    assert!(
                        (data.psi[yi][m] - expect).norm() < 1e-9,
                        "p={p} y={y} mu={}",
                        d.mu
                    );
                }
            }
        }
    }
}
