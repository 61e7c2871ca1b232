//! Complex-valued q-characters at shifted level h and the Kac–Peterson
//! modular S-matrix.
//!
//! A formal exponential e^{−κλ} is turned into the true exponential
//! e^{−2πi⟨λ, μ+ρ̄⟩/h}. The q-character of a dominant ν is its weight
//! diagram evaluated this way; a general ν is resolved through the
//! shifted W̄-orbit and picks up det(w̄), or vanishes when ν+ρ̄ sits on a
//! reflection wall. Unlike the S-matrix ratio, this evaluation stays
//! well defined on the hyperplanes ⟨μ+ρ̄, α⟩ ∈ hℤ.

use num_complex::Complex64;

use crate::charring::classical::character;
use crate::weyl::{FiniteWeyl, Weight};

/// e^{2πi·num/den}.
pub(crate) fn cis_frac(num: i64, den: i64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * num as f64 / den as f64)
}

/// Resolve ν through the shifted Weyl orbit: ν = w̄·ν′ with ν′ dominant
/// gives (det w̄, ν′); returns None when ν+ρ̄ lies on a wall.
pub fn resolve_shifted(nu: Weight) -> Option<(i64, Weight)> {
    let mut xi = nu + Weight::RHO;
    let mut sign = 1;
    loop {
        if xi.c1 == 0 || xi.c2 == 0 || xi.height() == 0 {
            return None;
        }
        if xi.c1 < 0 {
            xi = Weight::new(-xi.c1, xi.c1 + xi.c2);
            sign = -sign;
        } else if xi.c2 < 0 {
            xi = Weight::new(xi.c1 + xi.c2, -xi.c2);
            sign = -sign;
        } else {
            return Some((sign, xi - Weight::RHO));
        }
    }
}

/// The q-character χ̄^{(h)}_ν(μ) for arbitrary ν ∈ P, μ ∈ P.
pub fn q_character_eval(nu: Weight, mu: Weight, h: i64) -> Complex64 {
    assert!(h >= 2, "level too small: h = {h}");
    let Some((sign, dom)) = resolve_shifted(nu) else {
        return Complex64::new(0.0, 0.0);
    };
    let mu_rho = mu + Weight::RHO;
    let diagram = character(dom).expect("resolved weight is dominant");
    let mut total = Complex64::new(0.0, 0.0);
    for (w, m) in diagram.iter() {
        total += m as f64 * cis_frac(-w.inner_times3(mu_rho), 3 * h);
    }
    sign as f64 * total
}

/// Kac–Peterson modular matrix at shifted level h:
///
/// S^{(h)}_{λμ} = (−i/(h√3)) Σ_{w∈W̄} det(w) e^{−2πi⟨w(λ+ρ̄), μ+ρ̄⟩/h}.
///
/// The prefactor makes i·3p√3·S^{(3p)}_{0μ} = R(μ) − R̄(μ) an exact
/// identity, which pins the normalisation and the global phase.
pub fn modular_s(lam: Weight, mu: Weight, h: i64) -> Complex64 {
    assert!(h >= 2, "level too small: h = {h}");
    let lam_rho = lam + Weight::RHO;
    let mu_rho = mu + Weight::RHO;
    let mut total = Complex64::new(0.0, 0.0);
    for w in FiniteWeyl::ALL {
        let term = cis_frac(-w.apply(lam_rho).inner_times3(mu_rho), 3 * h);
        total += w.det() as f64 * term;
    }
    Complex64::new(0.0, -1.0) / (h as f64 * 3f64.sqrt()) * total
}

/// The three-term exponential sum over the rotation orbit of θ:
///
/// R(μ) = e^{−2πi⟨θ,μ+ρ̄⟩/3p} + e^{2πi⟨α₁,μ+ρ̄⟩/3p} + e^{2πi⟨α₂,μ+ρ̄⟩/3p}.
///
/// |R(μ)|² quantises the square of the class element, and R − R̄ is the
/// inverse quantised Weyl denominator at shifted level 3p.
pub fn r_eval(mu: Weight, p: i64) -> Complex64 {
    let mu_rho = mu + Weight::RHO;
    cis_frac(-Weight::THETA.inner_times3(mu_rho), 9 * p)
        + cis_frac(Weight::ALPHA1.inner_times3(mu_rho), 9 * p)
        + cis_frac(Weight::ALPHA2.inner_times3(mu_rho), 9 * p)
}
