//! `Π_{k≥2} (1 − χ(k)z/k)` for a nonprincipal character `χ` mod `q`.
//!
//! Splitting `k` into residue classes and using the Weierstrass product of
//! `1/Γ` (the exponential factors cancel because `Σχ(j) = 0`) gives
//!
//! ```text
//! Π_{k≥2} (1 − χ(k)z/k) = (2π)^{φ(q)/2} / ((1−z)·ε(q)) · Π_{gcd(j,q)=1} 1/Γ((j − χ(j)z)/q)
//! ```
//!
//! and for odd `χ`, pairing `j` with `q − j` through the reflection formula,
//!
//! ```text
//! Π_{k≥2} (1 − χ(k)z/k) = 2^{φ(q)/2} / ((1−z)·ε(q)) · Π_{gcd(j,q)=1, j<q/2} sin(π(j − χ(j)z)/q)
//! ```
//!
//! Only `Σχ(j) = 0` is used, so imprimitive characters are accepted too.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::report::{EvalReport, MethodTag};
use crate::arith::{epsilon_q, euler_phi, gcd};
use crate::characters::DirichletCharacter;
use crate::error::{invalid, Error, Result};
use crate::oracle::cap_terms;
use crate::specfun::gamma::{cgamma, rgamma};
use crate::specfun::trig::csin_pi;

/// Default oracle length per unit of modulus: `K = q·10⁵`.
pub const PARTIAL_TERMS_PER_MODULUS: u64 = 100_000;

fn is_one(z: Complex64) -> bool {
    z == Complex64::new(1.0, 0.0)
}

fn is_gamma_pole(w: Complex64) -> bool {
    w.im == 0.0 && w.re <= 0.0 && w.re == w.re.round()
}

/// `(j, χ(j))` over the units `1 ≤ j < q`.
fn unit_values(chi: &DirichletCharacter) -> Vec<(u64, Complex64)> {
    let q = chi.modulus();
    (1..q)
        .filter(|&j| gcd(j, q) == 1)
        .map(|j| (j, chi.evaluate(j as i64)))
        .collect()
}

/// Gamma form of the product; `z = 1` goes to [`char_product_at_one`].
pub fn char_product_gamma(chi: &DirichletCharacter, z: Complex64) -> Result<Complex64> {
    chi.require_nonprincipal("char_product_gamma")?;
    if is_one(z) {
        return Err(invalid("char_product_gamma: z = 1 is a removable singularity; use the at-one value"));
    }
    let q = chi.modulus();
    let qf = q as f64;
    let mut prod = Complex64::new(1.0, 0.0);
    for (j, c) in unit_values(chi) {
        let w = (j as f64 - c * z) / qf;
        if is_gamma_pole(w) {
            return Err(Error::GammaPole(w));
        }
        prod *= rgamma(w);
    }
    let pre = (2.0 * PI).powf(euler_phi(q) as f64 / 2.0) / epsilon_q(q)?;
    Ok(pre * prod / (1.0 - z))
}

/// Sine form of the product for odd `χ`.
pub fn char_product_sine(chi: &DirichletCharacter, z: Complex64) -> Result<Complex64> {
    chi.require_odd("char_product_sine")?;
    if is_one(z) {
        return Err(invalid("char_product_sine: z = 1 is a removable singularity; use the at-one value"));
    }
    let q = chi.modulus();
    let prod: Complex64 = unit_values(chi)
        .into_iter()
        .filter(|&(j, _)| 2 * j < q)
        .map(|(j, c)| csin_pi((j as f64 - c * z) / q as f64))
        .product();
    let pre = 2f64.powf(euler_phi(q) as f64 / 2.0) / epsilon_q(q)?;
    Ok(pre * prod / (1.0 - z))
}

/// The product at `z = 1`, where the `j = 1` factor `(1/Γ((1−z)/q))/(1−z)` tends to `1/q`:
/// `(2π)^{φ(q)/2} / (q·ε(q)) · Π_{j≥2} 1/Γ((j − χ(j))/q)`.
pub fn char_product_at_one(chi: &DirichletCharacter) -> Result<Complex64> {
    chi.require_nonprincipal("char_product_at_one")?;
    let q = chi.modulus();
    let qf = q as f64;
    let prod: Complex64 = unit_values(chi)
        .into_iter()
        .skip(1)
        .map(|(j, c)| rgamma((j as f64 - c) / qf))
        .product();
    let pre = (2.0 * PI).powf(euler_phi(q) as f64 / 2.0) / (qf * epsilon_q(q)?);
    Ok(pre * prod)
}

/// Sine form at `z = 1` for odd `χ`: `π·2^{φ(q)/2} / (q·ε(q)) · Π_{2≤j<q/2} sin(π(j − χ(j))/q)`.
pub fn char_product_at_one_sine(chi: &DirichletCharacter) -> Result<Complex64> {
    chi.require_odd("char_product_at_one_sine")?;
    let q = chi.modulus();
    let qf = q as f64;
    let prod: Complex64 = unit_values(chi)
        .into_iter()
        .skip(1)
        .filter(|&(j, _)| 2 * j < q)
        .map(|(j, c)| csin_pi((j as f64 - c) / qf))
        .product();
    let pre = PI * 2f64.powf(euler_phi(q) as f64 / 2.0) / (qf * epsilon_q(q)?);
    Ok(pre * prod)
}

/// Gamma form, or the at-one value when `z = 1`.
pub fn char_product(chi: &DirichletCharacter, z: Complex64) -> Result<Complex64> {
    if is_one(z) {
        char_product_at_one(chi)
    } else {
        char_product_gamma(chi, z)
    }
}

/// Sine form, or its at-one value when `z = 1`.
pub fn char_product_sine_any(chi: &DirichletCharacter, z: Complex64) -> Result<Complex64> {
    if is_one(z) {
        char_product_at_one_sine(chi)
    } else {
        char_product_sine(chi, z)
    }
}

/// `Π_{k=2}^{N} (1 − χ(k)z/k)` with `N` rounded up to a multiple of `q`,
/// returned as the mean of the last `q` partial products. Averaging over a
/// full period cancels the `O(1/N)` oscillation of the partial products.
///
/// Returns the value and the `N` actually used.
pub fn char_product_partial(chi: &DirichletCharacter, z: Complex64, terms: u64) -> Result<(Complex64, u64)> {
    let q = chi.modulus();
    if terms < q {
        return Err(invalid(format!("char_product_partial needs N >= q = {q}, got {terms}")));
    }
    let n = terms.div_ceil(q) * q;
    let table: Vec<Complex64> = (0..q as i64).map(|j| chi.evaluate(j)).collect();
    let mut prod = Complex64::new(1.0, 0.0);
    let mut window = Complex64::new(0.0, 0.0);
    let window_start = n - q + 1;
    for k in 2..=n {
        let c = table[(k % q) as usize];
        if c.re != 0.0 || c.im != 0.0 {
            prod *= 1.0 - c * z / k as f64;
        }
        if k >= window_start {
            window += prod;
        }
    }
    // With q = 2 the window starts at k = 1, whose partial product is 1.
    if window_start < 2 {
        window += Complex64::new(1.0, 0.0);
    }
    Ok((window / q as f64, n))
}

/// `(2^{(q−1)/2}/√q) · Π_{j=1}^{⌊(q−1)/2⌋} sin(π(j − χ(j)z)/q)`, taken over all
/// `j`, which equals `Π_{k≥1} (1 − χ(k)z/k)` for odd `χ`.
pub fn yamasaki_product(chi: &DirichletCharacter, z: Complex64) -> Result<Complex64> {
    chi.require_odd("yamasaki_product")?;
    let q = chi.modulus();
    let qf = q as f64;
    let prod: Complex64 = (1..=(q - 1) / 2)
        .map(|j| csin_pi((j as f64 - chi.evaluate(j as i64) * z) / qf))
        .product();
    Ok(2f64.powf((qf - 1.0) / 2.0) / qf.sqrt() * prod)
}

/// `Π_j Γ(zⱼ)/Γ(zⱼ − fⱼa)` for `Σ fⱼ = 0`; equal to
/// `Π_{k≥0} Π_j (1 − fⱼa/(zⱼ + k))`. Vanishes when some `zⱼ − fⱼa` is a pole of `Γ`.
pub fn general_product_gamma(f: &[Complex64], a: Complex64, zs: &[Complex64]) -> Result<Complex64> {
    if f.len() != zs.len() || f.is_empty() {
        return Err(invalid(format!(
            "general_product_gamma needs matching nonempty f and z lists, got {} and {}",
            f.len(),
            zs.len()
        )));
    }
    let sum: Complex64 = f.iter().sum();
    let scale: f64 = f.iter().map(|v| v.norm()).sum::<f64>().max(1.0);
    if sum.norm() > 1e-12 * scale {
        return Err(Error::Hypothesis(format!(
            "general_product_gamma needs sum f = 0, got {sum}"
        )));
    }
    if zs.iter().any(|&zj| zj == Complex64::new(0.0, 0.0)) {
        return Err(invalid("general_product_gamma needs nonzero z_j"));
    }
    if a == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let mut prod = Complex64::new(1.0, 0.0);
    for (&fj, &zj) in f.iter().zip(zs) {
        prod *= cgamma(zj)? * rgamma(zj - fj * a);
    }
    Ok(prod)
}

/// Which closed form [`evaluate_char_product`] reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductMethod {
    Gamma,
    Sine,
    Partial,
}

/// Closed form (or, for [`ProductMethod::Partial`], the truncated product)
/// next to the other as reference. `terms` defaults to `q·10⁵`.
pub fn evaluate_char_product(
    chi: &DirichletCharacter,
    z: Complex64,
    method: ProductMethod,
    terms: Option<u64>,
) -> Result<EvalReport> {
    let q = chi.modulus();
    let terms = cap_terms(terms.unwrap_or(q * PARTIAL_TERMS_PER_MODULUS)).max(q);
    let (closed, tag) = match method {
        ProductMethod::Sine => (
            char_product_sine_any(chi, z)?,
            if is_one(z) { MethodTag::CharAtOneSine } else { MethodTag::CharSine },
        ),
        _ => (
            char_product(chi, z)?,
            if is_one(z) { MethodTag::CharAtOne } else { MethodTag::CharGamma },
        ),
    };
    let (partial, used) = char_product_partial(chi, z, terms)?;
    Ok(match method {
        ProductMethod::Partial => EvalReport::new(partial, closed, used, MethodTag::CharPartial),
        _ => EvalReport::new(closed, partial, used, tag),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::enumerate_characters;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn chi(id: &str) -> DirichletCharacter {
        DirichletCharacter::parse(id).unwrap()
    }

    #[test]
    fn at_one_values() {
        let v4 = char_product_at_one(&chi("chi-4")).unwrap();
        assert!((v4 - c(PI * 2f64.sqrt() / 4.0)).norm() < 1e-14);
        let v3 = char_product_at_one(&chi("chi3")).unwrap();
        assert!((v3 - c(2.0 * PI / (3.0 * 3f64.sqrt()))).norm() < 1e-14);
        let v6 = char_product_at_one(&chi("chi6")).unwrap();
        assert!((v6 - c(PI / 3.0)).norm() < 1e-14);
        for id in ["chi-4", "chi3", "chi6"] {
            let s = char_product_at_one_sine(&chi(id)).unwrap();
            assert!((s - char_product_at_one(&chi(id)).unwrap()).norm() < 1e-14);
        }
    }

    #[test]
    fn half_values() {
        let v = char_product_gamma(&chi("chi3"), c(0.5)).unwrap();
        assert!((v - c(2.0 / 3f64.sqrt())).norm() < 1e-14);
        let v6 = char_product_sine(&chi("chi6"), c(0.5)).unwrap();
        assert!((v6 - c(2.0 * (2.0 - 3f64.sqrt()).sqrt())).norm() < 1e-14);
        let v4 = char_product_sine(&chi("chi-4"), c(0.5)).unwrap();
        assert!((v4 - c(2.0 * 2f64.sqrt() * (PI / 8.0).sin())).norm() < 1e-14);
    }

    #[test]
    fn mod_six_sine_form_is_explicit() {
        for k in -9..=9 {
            let z = c(k as f64 / 10.0);
            let v = char_product_sine(&chi("chi6"), z).unwrap();
            let expect = 2.0 / (1.0 - z) * csin_pi((1.0 - z) / 6.0);
            assert!((v - expect).norm() < 1e-14);
        }
    }

    #[test]
    fn zero_gives_one() {
        for q in 3..=20 {
            for ch in enumerate_characters(q).unwrap().into_iter().skip(1) {
                let v = char_product_gamma(&ch, c(0.0)).unwrap();
                assert!((v - c(1.0)).norm() < 1e-12, "{}", ch.label());
                assert_eq!(char_product_partial(&ch, c(0.0), q).unwrap().0, c(1.0));
            }
        }
    }

    #[test]
    fn mod_five_complex_at_one() {
        let ch = enumerate_characters(5)
            .unwrap()
            .into_iter()
            .find(|ch| ch.evaluate(2) == Complex64::new(0.0, 1.0))
            .unwrap();
        let v = char_product_at_one(&ch).unwrap();
        let expect = 4.0 * PI / (5.0 * 5f64.sqrt()) * csin_pi(Complex64::new(2.0, -1.0) / 5.0);
        assert!((v - expect).norm() < 1e-13);
        // conjugate character gives the conjugate value at real z
        let vb = char_product_at_one(&ch.conjugate()).unwrap();
        assert!((vb - v.conj()).norm() < 1e-13);
    }

    #[test]
    fn gamma_and_sine_forms_agree() {
        let mut grid: Vec<Complex64> = (0..20).map(|k| c(-0.9 + 1.8 * k as f64 / 19.0)).collect();
        for a in -3..=3 {
            for b in -3..=3 {
                let z = Complex64::new(0.3 * a as f64, 0.3 * b as f64);
                if z.norm() <= 0.9 {
                    grid.push(z);
                }
            }
        }
        for q in 3..=30 {
            for ch in enumerate_characters(q).unwrap() {
                if !ch.is_odd() || ch.conductor() != q {
                    continue;
                }
                for &z in &grid {
                    let g = char_product_gamma(&ch, z).unwrap();
                    let s = char_product_sine(&ch, z).unwrap();
                    assert!((g - s).norm() < 1e-9 * g.norm().max(1.0), "{} at {z}", ch.label());
                    let y = yamasaki_product(&ch, z).unwrap();
                    assert!((y - (1.0 - z) * s).norm() < 1e-10 * y.norm().max(1.0), "{} at {z}", ch.label());
                }
            }
        }
    }

    #[test]
    fn hypotheses_enforced() {
        let even = enumerate_characters(5).unwrap().into_iter().find(|c| !c.is_odd() && !c.is_principal()).unwrap();
        assert!(matches!(char_product_sine(&even, c(0.5)), Err(Error::Hypothesis(_))));
        assert!(matches!(yamasaki_product(&even, c(0.5)), Err(Error::Hypothesis(_))));
        let principal = DirichletCharacter::principal(5).unwrap();
        assert!(matches!(char_product_gamma(&principal, c(0.5)), Err(Error::Hypothesis(_))));
        assert!(char_product_gamma(&chi("chi-4"), c(1.0)).is_err());
        // k = 5 factor vanishes at z = 5: Γ((1 − 5)/4) = Γ(−1)
        assert!(matches!(char_product_gamma(&chi("chi-4"), c(5.0)), Err(Error::GammaPole(_))));
    }

    #[test]
    fn yamasaki_small_cases() {
        assert!((yamasaki_product(&chi("chi-4"), c(0.0)).unwrap() - c(1.0)).norm() < 1e-15);
        let y6 = yamasaki_product(&chi("chi6"), c(0.5)).unwrap();
        let s6 = char_product_sine(&chi("chi6"), c(0.5)).unwrap();
        assert!((y6 - 0.5 * s6).norm() < 1e-14);
    }

    #[test]
    fn partial_products_converge() {
        let (p4, n) = char_product_partial(&chi("chi-4"), c(1.0), 400_000).unwrap();
        assert_eq!(n, 400_000);
        assert!((p4 - c(PI * 2f64.sqrt() / 4.0)).norm() < 1e-5);
        let (p3, _) = char_product_partial(&chi("chi3"), c(0.5), 300_000).unwrap();
        assert!((p3 - c(2.0 / 3f64.sqrt())).norm() < 1e-5);
        assert!(char_product_partial(&chi("chi3"), c(0.5), 2).is_err());
    }

    #[test]
    fn general_lemma() {
        let f = [c(1.0), c(-1.0)];
        let zs = [Complex64::new(0.7, 0.2), c(1.3)];
        let a = c(0.4);
        let v = general_product_gamma(&f, a, &zs).unwrap();
        let direct = cgamma(zs[0]).unwrap() * cgamma(zs[1]).unwrap()
            / (cgamma(zs[0] - a).unwrap() * cgamma(zs[1] + a).unwrap());
        assert!((v - direct).norm() < 1e-13);
        assert_eq!(general_product_gamma(&f, c(0.0), &zs).unwrap(), c(1.0));
        // z₁ − a = 0 is a pole of Γ in the denominator
        assert_eq!(general_product_gamma(&f, c(1.0), &[c(1.0), c(2.0)]).unwrap(), c(0.0));
        assert!(general_product_gamma(&[c(1.0), c(1.0)], a, &zs).is_err());
        assert!(general_product_gamma(&f, a, &[c(0.0), c(1.0)]).is_err());
    }

    #[test]
    fn general_lemma_cube_roots() {
        let w = crate::specfun::trig::expi_pi(2.0 / 3.0);
        let f = [c(1.0), w, w * w];
        let zs = [c(1.0); 3];
        let a = c(0.2);
        let v = general_product_gamma(&f, a, &zs).unwrap();
        let t = crate::oracle::general_product_truncated(&f, a, &zs, 100_000);
        assert!((v - t).norm() < 1e-6, "{v} vs {t}");
    }

    #[test]
    fn report_roles() {
        let r = evaluate_char_product(&chi("chi-4"), c(1.0), ProductMethod::Gamma, Some(40_000)).unwrap();
        assert_eq!(r.method_tag, MethodTag::CharAtOne);
        assert!(r.abs_discrepancy < 1e-4);
        let p = evaluate_char_product(&chi("chi-4"), c(1.0), ProductMethod::Partial, Some(40_000)).unwrap();
        assert_eq!(p.closed_form, r.oracle);
        assert!(evaluate_char_product(&chi("chi3").conjugate(), c(0.5), ProductMethod::Sine, None).is_ok());
    }
}
