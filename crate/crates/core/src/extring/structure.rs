//! Structure constants, Pieri rules, dimensions, and the generator
//! decomposition of the extended character ring.

use std::collections::BTreeMap;

use crate::charring::{character, weyl_dimension};
use crate::error::{Error, Result};
use crate::extring::character::{ext_character, ExtCharacter};
use crate::extring::ring::GroupRingElement;
use crate::weyl::{is_dominant, length, reduce_with_sign, AffineElement, FiniteWeyl, Weight};

fn grading_compatible(x: AffineElement, y: AffineElement, z: AffineElement) -> bool {
    (x.tau() + y.tau() - z.tau()).rem_euclid(3) == 0
}

/// Structure constant N^z_{x,y} of the ring, as the classical tensor
/// multiplicity N̄^{ι(z)}_{ι(x) ι(y)}. The inputs must be chamber
/// elements; an A-grading mismatch gives zero.
pub fn structure_constant(x: AffineElement, y: AffineElement, z: AffineElement) -> i64 {
    for e in [x, y, z] {
        assert!(
            is_dominant(e),
            "structure constant of non-chamber element {e}"
        );
    }
    if !grading_compatible(x, y, z) {
        return 0;
    }
    crate::charring::tensor_multiplicity(x.twisted_log(), y.twisted_log(), z.twisted_log())
        .expect("twisted logs of chamber elements are dominant")
}

/// The same constant by the det-weighted sum over the right W̄-action:
/// N^z_{x,y} = Σ_{w̄} det(w̄) m^x_{z w̄ y⁻¹}.
pub fn structure_constant_weyl_sum(x: AffineElement, y: AffineElement, z: AffineElement) -> i64 {
    for e in [x, y, z] {
        assert!(
            is_dominant(e),
            "structure constant of non-chamber element {e}"
        );
    }
    if !grading_compatible(x, y, z) {
        return 0;
    }
    let diagram = character(x.twisted_log()).expect("dominant");
    let y_inv = y.inverse();
    let mut total = 0;
    for w in FiniteWeyl::ALL {
        let v = z.multiply(AffineElement::from_wbar(w)).multiply(y_inv);
        if v.multiply(x.inverse()).in_affine_group() {
            total += w.det() * diagram.get(v.twisted_log());
        }
    }
    total
}

/// Decompose an element of the character ring into chamber characters:
/// returns the pairs (z, N_z) with Σ N_z χ_z equal to the input.
///
/// Strips repeatedly by the chamber elements of maximal ι-height, which
/// carry their own coefficient; panics if the input is not in the span.
pub fn decompose(elem: &GroupRingElement) -> Vec<(AffineElement, i64)> {
    let mut rem = elem.clone();
    let mut out: BTreeMap<AffineElement, i64> = BTreeMap::new();
    while !rem.is_zero() {
        let top = rem
            .support()
            .filter(|&u| is_dominant(u))
            .map(|u| u.twisted_log().height())
            .max()
            .unwrap_or_else(|| panic!("element is not in the character ring: {rem}"));
        let leaders: Vec<AffineElement> = rem
            .support()
            .filter(|&u| is_dominant(u) && u.twisted_log().height() == top)
            .collect();
        // every support element at maximal height must be a chamber label
        assert!(
            rem.support()
                .filter(|u| u.twisted_log().height() == top)
                .all(is_dominant),
            "element is not in the character ring: {rem}"
        );
        for u in leaders {
            let c = rem.get(&u);
            out.insert(u, c);
            rem = &rem - &ext_character(u).expect("dominant").elem.scale(c);
        }
    }
    out.into_iter().collect()
}

/// Product of two chamber characters, decomposed into chamber characters.
pub fn multiply_characters(x: &ExtCharacter, y: &ExtCharacter) -> Vec<(AffineElement, i64)> {
    decompose(&(&x.elem * &y.elem))
}

const GENERATOR_LABELS: [(FiniteWeyl, Weight); 3] = [
    (FiniteWeyl::S121, Weight::THETA), // w₀
    (FiniteWeyl::S12, Weight::THETA),  // w₂₀
    (FiniteWeyl::S21, Weight::THETA),  // w₁₀
];

/// The fundamental triality-zero generator f_j: f₀ = χ_{w₀},
/// f₁ = χ_{w₂₀}, f₂ = χ_{w₁₀}.
pub fn generator(j: usize) -> ExtCharacter {
    let (wbar, lam) = GENERATOR_LABELS[j];
    ext_character(AffineElement::new(wbar, lam)).expect("generators are dominant")
}

/// Pieri rule: the decomposition of f_j·χ_y into chamber characters,
/// with orbit cancellations applied through the reduction signs.
/// Generic y gives the four-term pattern {y:2, wⱼy:1} for j = 0 and
/// seven unit terms for j = 1, 2.
pub fn pieri(j: usize, y: AffineElement) -> Result<Vec<(AffineElement, i64)>> {
    if !is_dominant(y) {
        return Err(Error::NotDominant(y.to_string()));
    }
    let mut out: BTreeMap<AffineElement, i64> = BTreeMap::new();
    for (u, m) in generator(j).elem.iter() {
        let (x, sign) = reduce_with_sign(u.multiply(y));
        let entry = out.entry(x).or_insert(0);
        *entry += sign * m;
        if *entry == 0 {
            out.remove(&x);
        }
    }
    Ok(out.into_iter().collect())
}

/// Dimension of the finite module of y ∈ C̃, by the closed form
/// D_y = (2 D̄_{ι(y)} + det ȳ)/3.
pub fn dimension(y: AffineElement) -> Result<i64> {
    if !is_dominant(y) {
        return Err(Error::NotDominant(y.to_string()));
    }
    let classical = weyl_dimension(y.twisted_log())?;
    let num = 2 * classical + y.det();
    debug_assert_eq!(num % 3, 0);
    Ok(num / 3)
}

/// Dimension by its definition Σ_z m^y_z, the mass of the character.
pub fn dimension_from_support(y: AffineElement) -> Result<i64> {
    Ok(ext_character(y)?.elem.coefficient_mass())
}

/// Integer polynomial in the generators f₀, f₁, f₂ with f₀-degree ≤ 1.
/// Monomial keys are (ε, n₁, n₂) for f₀^ε f₁^{n₁} f₂^{n₂}.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GeneratorPolynomial {
    terms: BTreeMap<(u8, u32, u32), i64>,
}

impl GeneratorPolynomial {
    pub fn one() -> Self {
        GeneratorPolynomial {
            terms: BTreeMap::from([((0, 0, 0), 1)]),
        }
    }

    fn monomial(eps: u8, n1: u32, n2: u32) -> Self {
        GeneratorPolynomial {
            terms: BTreeMap::from([((eps, n1, n2), 1)]),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = ((u8, u32, u32), i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    fn add_scaled(&mut self, other: &Self, c: i64) {
        for (k, m) in other.iter() {
            let entry = self.terms.entry(k).or_insert(0);
            *entry += c * m;
            if *entry == 0 {
                self.terms.remove(&k);
            }
        }
    }

    /// Multiply by f_j (j = 1 or 2); never raises the f₀-degree.
    fn shift_by_generator(&self, j: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(e, n1, n2), &c)| {
                let key = if j == 1 {
                    (e, n1 + 1, n2)
                } else {
                    (e, n1, n2 + 1)
                };
                (key, c)
            })
            .collect();
        GeneratorPolynomial { terms }
    }

    /// Evaluate in ℤ[W̃].
    pub fn evaluate(&self) -> GroupRingElement {
        let f0 = generator(0).elem;
        let f1 = generator(1).elem;
        let f2 = generator(2).elem;
        let mut out = GroupRingElement::zero();
        for (&(e, n1, n2), &c) in &self.terms {
            let mut term = GroupRingElement::one();
            if e == 1 {
                term = &term * &f0;
            }
            for _ in 0..n1 {
                term = &term * &f1;
            }
            for _ in 0..n2 {
                term = &term * &f2;
            }
            out = &out + &term.scale(c);
        }
        out
    }
}

impl std::fmt::Display for GeneratorPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((e, n1, n2), c)) in self.iter().enumerate() {
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
            let mut wrote = false;
            if a != 1 {
                write!(f, "{a}")?;
                wrote = true;
            }
            for (name, pow) in [("f0", e as u32), ("f1", n1), ("f2", n2)] {
                if pow > 0 {
                    if wrote {
                        f.write_str("·")?;
                    }
                    write!(f, "{name}")?;
                    if pow > 1 {
                        write!(f, "^{pow}")?;
                    }
                    wrote = true;
                }
            }
            if !wrote {
                f.write_str("1")?;
            }
        }
        Ok(())
    }
}

/// Express χ_y, for y in the triality-zero chamber C, as a polynomial in
/// f₀, f₁, f₂ with f₀-degree at most one.
///
/// Built by induction on word length: multiplying a level-k character by
/// f₁ or f₂ exposes exactly one new character two levels up, everything
/// else lying at most one level up. Ties are resolved by the canonical
/// alcove order.
pub fn express_in_generators(y: AffineElement) -> Result<GeneratorPolynomial> {
    if !y.in_affine_group() {
        return Err(Error::NotTrialityZero(y.to_string()));
    }
    if !is_dominant(y) {
        return Err(Error::NotDominant(y.to_string()));
    }
    let target_len = length(y)?;
    let chamber = crate::weyl::chamber_by_length(target_len);
    let mut polys: BTreeMap<AffineElement, GeneratorPolynomial> = BTreeMap::new();
    polys.insert(AffineElement::identity(), GeneratorPolynomial::one());
    if target_len >= 1 {
        polys.insert(AffineElement::w0(), GeneratorPolynomial::monomial(1, 0, 0));
    }
    for level in 2..=target_len {
        let sources: Vec<AffineElement> = chamber
            .iter()
            .filter(|&&(_, d)| d == level - 2)
            .map(|&(x, _)| x)
            .collect();
        for x in sources {
            for j in [1, 2] {
                let dec = pieri(j, x)?;
                let tops: Vec<(AffineElement, i64)> = dec
                    .iter()
                    .copied()
                    .filter(|&(z, _)| length(z).expect("triality zero") == level)
                    .collect();
                assert_eq!(
                    tops.len(),
                    1,
                    "Pieri product f{j}·χ_{x} has {} top elements",
                    tops.len()
                );
                let (top, top_coeff) = tops[0];
                assert_eq!(top_coeff, 1, "top multiplicity of f{j}·χ_{x}");
                if polys.contains_key(&top) {
                    continue;
                }
                let mut poly = polys[&x].shift_by_generator(j);
                for (z, c) in dec {
                    if z == top {
                        continue;
                    }
                    let sub = polys
                        .get(&z)
                        .unwrap_or_else(|| panic!("lower term {z} not yet expressed"))
                        .clone();
                    poly.add_scaled(&sub, -c);
                }
                polys.insert(top, poly);
            }
        }
        // the induction must have filled the whole level
        for &(z, d) in chamber.iter().filter(|&&(_, d)| d == level) {
            assert!(polys.contains_key(&z), "level-{d} element {z} unreachable");
        }
    }
    Ok(polys.remove(&y).expect("target expressed"))
}
