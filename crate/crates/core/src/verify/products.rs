use std::f64::consts::PI;

use num_complex::Complex64;

use super::{Case, Outcome};
use crate::characters::{enumerate_characters, DirichletCharacter};
use crate::error::Result;
use crate::oracle::{cap_terms, general_product_truncated};
use crate::products::{
    char_product, char_product_at_one, char_product_at_one_sine, char_product_gamma, char_product_partial,
    char_product_sine, general_product_gamma, yamasaki_product, PARTIAL_TERMS_PER_MODULUS,
};
use crate::specfun::cgamma;
use crate::specfun::trig::{csin_pi, expi_pi};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn chi(id: &str) -> Result<DirichletCharacter> {
    DirichletCharacter::parse(id)
}

fn partial(chi: &DirichletCharacter, z: Complex64) -> Result<Complex64> {
    let terms = cap_terms(chi.modulus() * PARTIAL_TERMS_PER_MODULUS);
    Ok(char_product_partial(chi, z, terms)?.0)
}

/// The nonprincipal real even character mod 5.
fn real_even_mod5() -> Result<DirichletCharacter> {
    Ok(enumerate_characters(5)?
        .into_iter()
        .find(|ch| !ch.is_principal() && ch.is_real())
        .expect("mod 5 has a real nonprincipal character"))
}

/// The character mod 5 with `χ(2) = i`.
fn complex_mod5() -> Result<DirichletCharacter> {
    Ok(enumerate_characters(5)?
        .into_iter()
        .find(|ch| ch.evaluate(2) == Complex64::new(0.0, 1.0))
        .expect("mod 5 has a character with chi(2) = i"))
}

/// 20 real points on `[−0.9, 0.9]` and the complex grid `0.3·(a + bi)`, `|z| ≤ 0.9`.
fn z_grid() -> Vec<Complex64> {
    let mut grid: Vec<Complex64> = (0..20).map(|k| c(-0.9 + 1.8 * k as f64 / 19.0)).collect();
    for a in -3..=3 {
        for b in -3..=3 {
            let z = Complex64::new(0.3 * a as f64, 0.3 * b as f64);
            if z.norm() <= 0.9 + 1e-12 {
                grid.push(z);
            }
        }
    }
    grid
}

fn odd_primitive(max_q: u64) -> Vec<DirichletCharacter> {
    (3..=max_q)
        .flat_map(|q| enumerate_characters(q).unwrap_or_default())
        .filter(|ch| ch.is_odd() && ch.conductor() == ch.modulus())
        .collect()
}

pub(super) fn cases() -> Vec<Case> {
    let mut cases = Vec::new();
    let s3 = 3f64.sqrt();

    let exact: [(&str, &str, f64, Complex64); 6] = [
        ("4.1", "at-one", 1.0, c(PI * 2f64.sqrt() / 4.0)),
        ("3.1", "at-one", 1.0, c(2.0 * PI / (3.0 * s3))),
        ("3.1", "half", 0.5, c(2.0 / s3)),
        ("6.1", "at-one", 1.0, c(PI / 3.0)),
        ("6.1", "half", 0.5, c(2.0 * (2.0 - s3).sqrt())),
        ("4.1", "half", 0.5, c(2.0 * 2f64.sqrt() * (PI / 8.0).sin())),
    ];
    for (id, label, z, expected) in exact {
        cases.push(Case::new(format!("products.value.{id}.{label}"), "char-closed-vs-exact", 1e-12, move || {
            Ok(Outcome::abs(char_product(&chi(id)?, c(z))?, expected))
        }));
        cases.push(Case::new(format!("products.oracle.{id}.{label}"), "char-closed-vs-partial", 1e-4, move || {
            let ch = chi(id)?;
            Ok(Outcome::abs(char_product(&ch, c(z))?, partial(&ch, c(z))?))
        }));
    }

    cases.push(Case::new("products.value.5-real.at-one", "char-closed-vs-exact", 1e-12, || {
        let g35 = cgamma(c(0.6))?.re;
        let g45 = cgamma(c(0.8))?.re;
        let expected = 4.0 * PI * PI / (5.0 * 5f64.sqrt() * g35 * g35 * g45);
        Ok(Outcome::abs(char_product_at_one(&real_even_mod5()?)?, c(expected)))
    }));
    cases.push(Case::new("products.oracle.5-real.at-one", "char-closed-vs-partial", 1e-4, || {
        let ch = real_even_mod5()?;
        Ok(Outcome::abs(char_product_at_one(&ch)?, partial(&ch, c(1.0))?))
    }));

    cases.push(Case::new("products.value.5-complex.at-one", "char-closed-vs-exact", 1e-12, || {
        let expected = 4.0 * PI / (5.0 * 5f64.sqrt()) * csin_pi(Complex64::new(2.0, -1.0) / 5.0);
        Ok(Outcome::abs(char_product_at_one(&complex_mod5()?)?, expected))
    }));
    cases.push(Case::new("products.value.5-complex.decomposition", "sine-real-imaginary-parts", 1e-10, || {
        let k = 4.0 * PI / (5.0 * 5f64.sqrt());
        let re = k * (2.0 * PI / 5.0).sin() * (PI / 5.0).cosh();
        let im = -k * (2.0 * PI / 5.0).cos() * (PI / 5.0).sinh();
        Ok(Outcome::abs(char_product_at_one_sine(&complex_mod5()?)?, Complex64::new(re, im)))
    }));
    cases.push(Case::new("products.oracle.5-complex.at-one", "char-closed-vs-partial", 1e-4, || {
        let ch = complex_mod5()?;
        Ok(Outcome::abs(char_product_at_one(&ch)?, partial(&ch, c(1.0))?))
    }));

    for ch in odd_primitive(30) {
        let label = ch.label();
        let ch2 = ch.clone();
        cases.push(Case::new(format!("products.gamma-vs-sine.{label}"), "char-gamma-vs-sine", 1e-9, move || {
            let mut out = Vec::new();
            for z in z_grid() {
                let g = char_product_gamma(&ch, z)?;
                let s = char_product_sine(&ch, z)?;
                out.push(Outcome::scaled(s, g));
            }
            Ok(Outcome::worst(out))
        }));
        cases.push(Case::new(format!("products.yamasaki.{label}"), "yamasaki-vs-sine", 1e-10, move || {
            let mut out = Vec::new();
            for z in z_grid() {
                let y = yamasaki_product(&ch2, z)?;
                let s = (1.0 - z) * char_product_sine(&ch2, z)?;
                out.push(Outcome::scaled(y, s));
            }
            Ok(Outcome::worst(out))
        }));
    }

    for q in 3..=12u64 {
        for ch in enumerate_characters(q).unwrap_or_default() {
            if ch.is_principal() || ch.conductor() != q {
                continue;
            }
            for (zl, z) in [("half", 0.5), ("one", 1.0)] {
                let ch = ch.clone();
                cases.push(Case::new(
                    format!("products.oracle-sweep.{}.{zl}", ch.label()),
                    "char-closed-vs-partial",
                    1e-4,
                    move || Ok(Outcome::abs(char_product(&ch, c(z))?, partial(&ch, c(z))?)),
                ));
            }
        }
    }

    for q in [5u64, 7, 13] {
        for ch in enumerate_characters(q).unwrap_or_default().into_iter().filter(|ch| !ch.is_real()) {
            cases.push(Case::new(format!("products.conjugation.{}", ch.label()), "conjugate-character", 1e-12, move || {
                let mut out = Vec::new();
                for z in [0.5, -0.7, 1.0] {
                    out.push(Outcome::abs(char_product(&ch.conjugate(), c(z))?, char_product(&ch, c(z))?.conj()));
                }
                Ok(Outcome::worst(out))
            }));
        }
    }

    cases.push(Case::new("products.general.pair", "general-gamma-vs-direct", 1e-12, || {
        let f = [c(1.0), c(-1.0)];
        let zs = [Complex64::new(0.7, 0.2), c(1.3)];
        let a = c(0.4);
        let direct = cgamma(zs[0])? * cgamma(zs[1])? / (cgamma(zs[0] - a)? * cgamma(zs[1] + a)?);
        Ok(Outcome::abs(general_product_gamma(&f, a, &zs)?, direct))
    }));
    cases.push(Case::new("products.general.cube-roots", "general-gamma-vs-truncated", 1e-6, || {
        let w = expi_pi(2.0 / 3.0);
        let f = [c(1.0), w, w * w];
        let zs = [c(1.0); 3];
        let a = c(0.2);
        let t = general_product_truncated(&f, a, &zs, cap_terms(100_000));
        Ok(Outcome::abs(general_product_gamma(&f, a, &zs)?, t))
    }));

    cases
}
