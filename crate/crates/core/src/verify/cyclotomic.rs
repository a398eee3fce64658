use std::f64::consts::PI;

use num_complex::Complex64;

use super::{Case, Outcome};
use crate::arith::{gcd, is_square_free, s1, s2};
use crate::characters::RootOfUnity;
use crate::oracle::{cap_terms, s1_brute, s2_brute};
use crate::products::{
    cyclotomic, cyclotomic_product_gamma, cyclotomic_product_partial, cyclotomic_product_sine, delta_m,
    roots_of_unity_partial, roots_of_unity_product, roots_of_unity_product_from_two, PolyZ,
    CYCLOTOMIC_FACTORS,
};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn factors() -> u64 {
    cap_terms(CYCLOTOMIC_FACTORS)
}

/// `(sin²(½√3πz) + sinh²(½πz)) / (π²z²)`.
fn twelve_closed(z: f64) -> f64 {
    let a = (0.5 * 3f64.sqrt() * PI * z).sin();
    let b = (0.5 * PI * z).sinh();
    (a * a + b * b) / (PI * PI * z * z)
}

fn real_samples() -> Vec<f64> {
    (0..20).map(|k| -0.95 + 1.9 * k as f64 / 19.0).collect()
}

pub(super) fn cases() -> Vec<Case> {
    let mut cases = Vec::new();
    let sinh_pi = (PI.exp() - (-PI).exp()) / (2.0 * PI);

    cases.push(Case::new("cyclotomic.polynomials.small", "exact-polynomial", 0.0, || {
        let expected = [(1u64, vec![-1, 1]), (4, vec![1, 0, 1]), (12, vec![1, 0, -1, 0, 1]), (6, vec![1, -1, 1])];
        let bad = expected
            .iter()
            .filter(|(m, coeffs)| cyclotomic(*m).map(|p| p != PolyZ::from_i64(coeffs)).unwrap_or(true))
            .count();
        Ok(Outcome::mismatches(bad, expected.len()))
    }));

    cases.push(Case::new("cyclotomic.four.gamma.z1", "cyclotomic-gamma-vs-exact", 1e-10, move || {
        Ok(Outcome::abs(cyclotomic_product_gamma(4, c(1.0))?, c(sinh_pi)))
    }));
    cases.push(Case::new("cyclotomic.four.sine.z1", "cyclotomic-sine-vs-exact", 1e-10, move || {
        Ok(Outcome::abs(cyclotomic_product_sine(4, c(1.0))?, c(sinh_pi)))
    }));
    cases.push(Case::new("cyclotomic.four.partial.z1", "cyclotomic-partial-vs-exact", 1e-4, move || {
        Ok(Outcome::abs(cyclotomic_product_partial(4, c(1.0), factors())?, c(sinh_pi)))
    }));

    cases.push(Case::new("cyclotomic.twelve.grid.gamma", "cyclotomic-gamma-vs-exact", 1e-10, || {
        let mut out = Vec::new();
        for k in 0..20 {
            let z = -1.0 + 2.0 * k as f64 / 19.0;
            out.push(Outcome::abs(cyclotomic_product_gamma(12, c(z))?, c(twelve_closed(z))));
        }
        Ok(Outcome::worst(out))
    }));
    cases.push(Case::new("cyclotomic.twelve.grid.sine", "cyclotomic-sine-vs-exact", 1e-10, || {
        let mut out = Vec::new();
        for k in 0..20 {
            let z = -1.0 + 2.0 * k as f64 / 19.0;
            out.push(Outcome::abs(cyclotomic_product_sine(12, c(z))?, c(twelve_closed(z))));
        }
        Ok(Outcome::worst(out))
    }));
    let z17 = 1.0 / (2.0 * 3f64.sqrt());
    let v17 = 6.0 / (PI * PI) * (PI / (2.0 * 3f64.sqrt())).cosh();
    cases.push(Case::new("cyclotomic.twelve.special-point.gamma", "cyclotomic-gamma-vs-exact", 1e-10, move || {
        Ok(Outcome::abs(cyclotomic_product_gamma(12, c(z17))?, c(v17)))
    }));
    cases.push(Case::new("cyclotomic.twelve.special-point.partial", "cyclotomic-partial-vs-exact", 1e-4, move || {
        Ok(Outcome::abs(cyclotomic_product_partial(12, c(z17), factors())?, c(v17)))
    }));

    for m in (4..=36u64).step_by(4) {
        cases.push(Case::new(format!("cyclotomic.gamma-vs-sine.m{m:02}"), "cyclotomic-gamma-vs-sine", 1e-9, move || {
            let mut out = Vec::new();
            for z in real_samples() {
                out.push(Outcome::scaled(cyclotomic_product_sine(m, c(z))?, cyclotomic_product_gamma(m, c(z))?));
            }
            Ok(Outcome::worst(out))
        }));
    }
    for m in (4..=36u64).filter(|&m| !is_square_free(m)) {
        cases.push(Case::new(format!("cyclotomic.oracle.m{m:02}"), "cyclotomic-gamma-vs-partial", 1e-4, move || {
            let mut out = Vec::new();
            for z in [0.5, -0.8, 1.0] {
                out.push(Outcome::abs(cyclotomic_product_gamma(m, c(z))?, cyclotomic_product_partial(m, c(z), factors())?));
            }
            Ok(Outcome::worst(out))
        }));
    }

    cases.push(Case::new("cyclotomic.delta-table.m2000", "case-table-vs-s2", 0.0, || {
        let mut bad = 0;
        let mut checked = 0;
        for m in (4..=2000u64).step_by(4) {
            checked += 1;
            let e = 4 * s2_brute(m);
            let expected = if !e.is_multiple_of(m) {
                None
            } else {
                Some(match (e / m) % 4 {
                    0 => c(1.0),
                    1 => Complex64::new(0.0, 1.0),
                    2 => c(-1.0),
                    _ => Complex64::new(0.0, -1.0),
                })
            };
            if expected != Some(delta_m(m)?) {
                bad += 1;
            }
        }
        Ok(Outcome::mismatches(bad, checked))
    }));

    cases.push(Case::new("cyclotomic.s-sums.m10000", "closed-vs-brute", 0.0, || {
        let mut bad = 0;
        for m in 2..=10_000u64 {
            if s1(m)? != s1_brute(m) || s2(m)? != s2_brute(m) {
                bad += 1;
            }
        }
        Ok(Outcome::mismatches(bad, 9_999))
    }));

    cases.push(Case::new("cyclotomic.prefactor.m100", "root-of-unity-tags", 0.0, || {
        let mut bad = 0;
        let mut checked = 0;
        for m in (4..=100u64).step_by(2).filter(|&m| !is_square_free(m)) {
            checked += 1;
            let direct = (1..m / 2)
                .filter(|&j| gcd(j, m) == 1)
                .fold(RootOfUnity::ONE, |acc, j| acc * RootOfUnity::new(m, j));
            if direct != RootOfUnity::new(m, s2(m)? % m) {
                bad += 1;
            }
        }
        Ok(Outcome::mismatches(bad, checked))
    }));

    cases.push(Case::new("cyclotomic.roots-of-unity.m2", "roots-gamma-vs-sine", 1e-10, || {
        let mut out = Vec::new();
        for z in real_samples().into_iter().chain([0.3, -0.45, 0.7]) {
            let zc = c(z);
            let expected = if z == 0.0 { c(1.0) } else { (PI * zc).sin() / (PI * zc) };
            out.push(Outcome::abs(roots_of_unity_product(2, zc)?, expected));
        }
        for (a, b) in [(0.3, 0.4), (-0.5, 0.2), (0.1, -0.8)] {
            let zc = Complex64::new(a, b);
            out.push(Outcome::abs(roots_of_unity_product(2, zc)?, (PI * zc).sin() / (PI * zc)));
        }
        Ok(Outcome::worst(out))
    }));
    cases.push(Case::new("cyclotomic.roots-of-unity.m2.limit", "roots-from-two", 1e-12, || {
        Ok(Outcome::abs(roots_of_unity_product_from_two(2, c(1.0))?, c(0.5)))
    }));
    cases.push(Case::new("cyclotomic.roots-of-unity.m3", "roots-gamma-vs-partial", 1e-8, || {
        Ok(Outcome::abs(roots_of_unity_product(3, c(0.4))?, roots_of_unity_partial(3, c(0.4), cap_terms(10_000))?))
    }));

    cases
}
