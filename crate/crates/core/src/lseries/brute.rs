//! Reference values from the truncated generating function
//! `Π_{k=1}^{K} (1 − χ(k)z/k) mod z^{n+1}`, averaged over the last `q`
//! values of `K`. Its coefficients are `(−1)ⁿ L_n`; the reciprocal series
//! gives `L_n*`.

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::characters::DirichletCharacter;
use crate::error::{invalid, Result};

/// Default truncation per unit of modulus: `K = q·10⁵`.
pub const BRUTE_TERMS_PER_MODULUS: u64 = 100_000;

/// Estimates of `L_m` and `L_m*` for `m = 0..=n` (index 0 holds 1).
#[derive(Debug, Clone)]
pub struct BruteExpansion {
    pub terms: u64,
    pub plain: Vec<Complex64>,
    pub star: Vec<Complex64>,
}

impl BruteExpansion {
    pub fn new(chi: &DirichletCharacter, n: usize, terms: u64) -> Result<Self> {
        let q = chi.modulus();
        if terms < q * n as u64 {
            return Err(invalid(format!("ln_brute needs K >= q*n = {}, got {terms}", q * n as u64)));
        }
        let k_max = terms.div_ceil(q) * q;
        let table: Vec<Complex64> = (0..q as i64).map(|j| chi.evaluate(j)).collect();
        let mut poly = vec![Complex64::zero(); n + 1];
        poly[0] = Complex64::one();
        let mut window = vec![Complex64::zero(); n + 1];
        let window_start = k_max - q + 1;
        for k in 1..=k_max {
            let c = table[(k % q) as usize];
            if !c.is_zero() {
                let a = c / k as f64;
                for i in (1..=n).rev() {
                    let prev = poly[i - 1];
                    poly[i] -= a * prev;
                }
            }
            if k >= window_start {
                for (w, p) in window.iter_mut().zip(&poly) {
                    *w += p;
                }
            }
        }
        let product: Vec<Complex64> = window.iter().map(|w| w / q as f64).collect();

        let plain = product
            .iter()
            .enumerate()
            .map(|(m, &c)| if m % 2 == 1 { -c } else { c })
            .collect();
        let mut star = vec![Complex64::one()];
        for m in 1..=n {
            let s: Complex64 = (1..=m).map(|i| product[i] * star[m - i]).sum();
            star.push(-s);
        }
        Ok(BruteExpansion { terms: k_max, plain, star })
    }

    pub fn value(&self, n: usize, star: bool) -> Complex64 {
        if star {
            self.star[n]
        } else {
            self.plain[n]
        }
    }
}

pub fn ln_brute(chi: &DirichletCharacter, n: usize, terms: u64) -> Result<Complex64> {
    Ok(BruteExpansion::new(chi, n, terms)?.plain[n])
}

pub fn lstar_brute(chi: &DirichletCharacter, n: usize, terms: u64) -> Result<Complex64> {
    Ok(BruteExpansion::new(chi, n, terms)?.star[n])
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;

    fn chi(id: &str) -> DirichletCharacter {
        DirichletCharacter::parse(id).unwrap()
    }

    #[test]
    fn mod_four_targets() {
        let e = BruteExpansion::new(&chi("chi-4"), 2, 400_000).unwrap();
        assert!((e.plain[1] - PI / 4.0).norm() < 1e-5);
        assert!((e.plain[2] + PI * PI / 32.0).norm() < 1e-5);
        assert!((e.star[2] - 3.0 * PI * PI / 32.0).norm() < 1e-5);
        assert_eq!(e.terms, 400_000);
    }

    #[test]
    fn constant_term_is_exactly_one() {
        for id in ["chi3", "5.1", "12.3"] {
            let e = BruteExpansion::new(&chi(id), 3, 10_000).unwrap();
            assert_eq!(e.plain[0], Complex64::one());
            assert_eq!(e.star[0], Complex64::one());
        }
    }

    #[test]
    fn rounding_and_preconditions() {
        let e = BruteExpansion::new(&chi("chi3"), 1, 100).unwrap();
        assert_eq!(e.terms, 102);
        assert!(ln_brute(&chi("chi3"), 4, 11).is_err());
        assert!(lstar_brute(&chi("chi3"), 4, 12).is_ok());
    }
}
