//! Infinite products of cyclotomic polynomials `Π_{k≥1} Φ_m(z/k)` and of
//! `1 − (z/k)^m`.
//!
//! For `m ≥ 3` the primitive `m`-th roots `ζ^j` multiply to `1`, so
//! `Φ_m(x) = Π_{gcd(j,m)=1} (1 − xζ^j)`. Their sum is `μ(m)`, and when it
//! vanishes the Weierstrass exponentials cancel:
//!
//! ```text
//! Π_{k≥1} Φ_m(z/k) = Π_{gcd(j,m)=1} 1/Γ(1 − zζ^j)          (μ(m) = 0)
//! ```
//!
//! When `4 | m` the primitive roots are closed under `ζ^j ↦ −ζ^j`
//! (`j ↦ j + m/2`), and pairing through `Γ(y)Γ(−y) = −π/(y sin πy)` gives
//!
//! ```text
//! Π_{k≥1} Φ_m(z/k) = δ(m) / (−πz)^{φ(m)/2} · Π_{gcd(j,m)=1, j<m/2} sin(πzζ^j)
//! ```
//!
//! with `δ(m) = e^{2πi·S₂(m)/m}`. For `m ≡ 2 (mod 4)` that pairing is not
//! available (`j + m/2` shares the factor 2 with `m`) and the sine form does
//! not hold; it is rejected.
//!
//! The sine and gamma forms are validated for `|z| ≤ 1`.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::report::{EvalReport, MethodTag};
use crate::arith::{divisors, euler_phi, gcd, moebius, prime_power, ramanujan_sum};
use crate::error::{invalid, Error, Result};
use crate::oracle::cap_terms;
use crate::specfun::gamma::rgamma;
use crate::specfun::trig::{csin_pi, expi_pi};
use crate::specfun::zeta::hurwitz_zeta;

/// Default number of factors in the truncated products.
pub const CYCLOTOMIC_FACTORS: u64 = 100_000;

/// Integer polynomial, coefficients in ascending degree, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyZ {
    coeffs: Vec<BigInt>,
}

impl PolyZ {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyZ { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x^d − 1`.
    pub fn x_pow_minus_one(d: usize) -> Self {
        let mut c = vec![BigInt::zero(); d + 1];
        c[0] = -BigInt::one();
        c[d] = BigInt::one();
        PolyZ { coeffs: c }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &PolyZ) -> PolyZ {
        if self.is_zero() || other.is_zero() {
            return PolyZ { coeffs: Vec::new() };
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyZ::new(out)
    }

    /// Quotient by a monic divisor; fails when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &PolyZ) -> Result<PolyZ> {
        let dd = divisor
            .degree()
            .filter(|&d| divisor.coeffs[d].is_one())
            .ok_or_else(|| invalid("div_exact needs a monic divisor"))?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() {
                Ok(self.clone())
            } else {
                Err(invalid("div_exact: nonzero remainder"))
            };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let lead = rem[i + dd].clone();
            if lead.is_zero() {
                continue;
            }
            for (k, dk) in divisor.coeffs.iter().enumerate() {
                rem[i + k] -= &lead * dk;
            }
            quot[i] = lead;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(invalid("div_exact: nonzero remainder"));
        }
        Ok(PolyZ::new(quot))
    }

    /// Coefficients as `f64` for numeric evaluation.
    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }

    pub fn eval(&self, x: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Display for PolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = d == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match d {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{d}")?,
            }
        }
        Ok(())
    }
}

/// Coefficients as JSON integers (strings if beyond `i64`).
impl Serialize for PolyZ {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

/// `Φ_m(x) = Π_{d|m} (x^d − 1)^{μ(m/d)}`: multiply the `μ = 1` factors, then
/// divide out the `μ = −1` factors one at a time (each division is exact).
pub fn cyclotomic(m: u64) -> Result<PolyZ> {
    if m == 0 {
        return Err(invalid("cyclotomic needs m >= 1"));
    }
    let ds = divisors(m);
    let mut p = PolyZ::from_i64(&[1]);
    for &d in &ds {
        if moebius(m / d) == 1 {
            p = p.mul(&PolyZ::x_pow_minus_one(d as usize));
        }
    }
    for &d in &ds {
        if moebius(m / d) == -1 {
            p = p.div_exact(&PolyZ::x_pow_minus_one(d as usize))?;
        }
    }
    Ok(p)
}

fn require_square_factor(m: u64, what: &str) -> Result<()> {
    if m < 3 || moebius(m) != 0 {
        return Err(Error::Hypothesis(format!(
            "{what} needs m >= 3 containing a square (mu(m) = 0), got m = {m}"
        )));
    }
    Ok(())
}

/// `Π_{k≥1} Φ_m(z/k) = Π_{gcd(j,m)=1} 1/Γ(1 − z e^{2πij/m})` for `μ(m) = 0`.
pub fn cyclotomic_product_gamma(m: u64, z: Complex64) -> Result<Complex64> {
    require_square_factor(m, "cyclotomic_product_gamma")?;
    if z == Complex64::zero() {
        return Ok(Complex64::one());
    }
    let prod: Complex64 = (1..m)
        .filter(|&j| gcd(j, m) == 1)
        .map(|j| rgamma(1.0 - z * expi_pi(2.0 * j as f64 / m as f64)))
        .product();
    Ok(real_if_real_arg(prod, z))
}

/// `Φ_m` has real coefficients, so the product is real on the real axis.
fn real_if_real_arg(v: Complex64, z: Complex64) -> Complex64 {
    if z.im == 0.0 {
        Complex64::new(v.re, 0.0)
    } else {
        v
    }
}

/// `δ(m) = e^{2πi·S₂(m)/m}` for `4 | m`: `i` at `m = 4`, `−1` at `m = 8` and
/// `m = 4p^α` with `p ≡ 3 (mod 4)`, otherwise `1`.
pub fn delta_m(m: u64) -> Result<Complex64> {
    if m == 0 || !m.is_multiple_of(4) {
        return Err(invalid(format!("delta_m needs 4 | m, got {m}")));
    }
    let rest = m / 4;
    let minus = m == 8
        || (rest % 2 == 1 && rest > 1 && prime_power(rest)?.is_some_and(|pp| pp.p % 4 == 3));
    Ok(if m == 4 {
        Complex64::new(0.0, 1.0)
    } else if minus {
        Complex64::new(-1.0, 0.0)
    } else {
        Complex64::new(1.0, 0.0)
    })
}

/// Sine form for `4 | m` and `μ(m) = 0`; `z = 0` gives the limit `1`.
pub fn cyclotomic_product_sine(m: u64, z: Complex64) -> Result<Complex64> {
    if m < 4 || !m.is_multiple_of(4) {
        return Err(Error::Hypothesis(format!(
            "cyclotomic_product_sine needs 4 | m (for m = 2 mod 4 the roots j and j + m/2 \
             cannot be paired), got m = {m}"
        )));
    }
    require_square_factor(m, "cyclotomic_product_sine")?;
    if z == Complex64::zero() {
        return Ok(Complex64::one());
    }
    let half_phi = (euler_phi(m) / 2) as i32;
    let prod: Complex64 = (1..m / 2)
        .filter(|&j| gcd(j, m) == 1)
        .map(|j| csin_pi(z * expi_pi(2.0 * j as f64 / m as f64)))
        .product();
    Ok(real_if_real_arg(delta_m(m)? * prod / (-std::f64::consts::PI * z).powi(half_phi), z))
}

/// `Π_{k=1}^{N} Φ_m(z/k)`. For `μ(m) = 0` the omitted tail is restored by
/// `exp(Σ_{r=2}^{6} ℓ_r z^r ζ(r, N+1))`, where `ln Φ_m(x) = Σ ℓ_r x^r` with
/// `ℓ_r = −c_m(r)/r` (`c_m` the Ramanujan sum). Otherwise the product
/// diverges and the plain truncation is returned.
pub fn cyclotomic_product_partial(m: u64, z: Complex64, factors: u64) -> Result<Complex64> {
    if m < 2 || factors == 0 {
        return Err(invalid(format!("cyclotomic_product_partial needs m >= 2 and N >= 1, got m = {m}, N = {factors}")));
    }
    let coeffs = cyclotomic(m)?.to_f64();
    let mut prod = Complex64::one();
    for k in 1..=factors {
        let x = z / k as f64;
        prod *= coeffs.iter().rev().fold(Complex64::zero(), |acc, &c| acc * x + c);
    }
    if moebius(m) == 0 && z != Complex64::zero() {
        let n1 = (factors + 1) as f64;
        let mut log_tail = Complex64::zero();
        for r in 2..=6u32 {
            let ell = -(ramanujan_sum(m, r as u64) as f64) / r as f64;
            if ell != 0.0 {
                log_tail += ell * z.powu(r) * hurwitz_zeta(r as f64, n1)?;
            }
        }
        prod *= log_tail.exp();
    }
    Ok(prod)
}

/// `Π_{k≥1} (1 − (z/k)^m) = Π_{j=1}^{m} 1/Γ(1 − z e^{2πij/m})` for `m ≥ 2`.
pub fn roots_of_unity_product(m: u64, z: Complex64) -> Result<Complex64> {
    if m < 2 {
        return Err(invalid(format!("roots_of_unity_product needs m >= 2, got {m}")));
    }
    if z == Complex64::zero() {
        return Ok(Complex64::one());
    }
    Ok((1..=m)
        .map(|j| rgamma(1.0 - z * expi_pi(2.0 * j as f64 / m as f64)))
        .product())
}

/// `Π_{k≥2} (1 − (z/k)^m) = Π_{j=1}^{m} 1/Γ(2 − z e^{2πij/m})`, the product
/// with its `k = 1` factor divided out; finite at `z = 1`.
pub fn roots_of_unity_product_from_two(m: u64, z: Complex64) -> Result<Complex64> {
    if m < 2 {
        return Err(invalid(format!("roots_of_unity_product needs m >= 2, got {m}")));
    }
    Ok((1..=m)
        .map(|j| rgamma(2.0 - z * expi_pi(2.0 * j as f64 / m as f64)))
        .product())
}

/// `Π_{k=1}^{N} (1 − (z/k)^m)` with tail `exp(−z^m ζ(m, N+1) − z^{2m} ζ(2m, N+1)/2)`.
pub fn roots_of_unity_partial(m: u64, z: Complex64, factors: u64) -> Result<Complex64> {
    if m < 2 || factors == 0 {
        return Err(invalid("roots_of_unity_partial needs m >= 2 and N >= 1"));
    }
    let mut prod = Complex64::one();
    for k in 1..=factors {
        prod *= 1.0 - (z / k as f64).powu(m as u32);
    }
    let n1 = (factors + 1) as f64;
    let zm = z.powu(m as u32);
    let tail = -zm * hurwitz_zeta(m as f64, n1)? - zm * zm * hurwitz_zeta(2.0 * m as f64, n1)? / 2.0;
    Ok(prod * tail.exp())
}

/// Which value [`evaluate_cyclotomic_product`] reports as primary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CyclotomicMethod {
    Gamma,
    Sine,
    Partial,
}

/// Closed form next to the truncated product (`N = 10⁵` by default), or the
/// other way round for [`CyclotomicMethod::Partial`].
pub fn evaluate_cyclotomic_product(
    m: u64,
    z: Complex64,
    method: CyclotomicMethod,
    factors: Option<u64>,
) -> Result<EvalReport> {
    let n = cap_terms(factors.unwrap_or(CYCLOTOMIC_FACTORS)).max(1);
    let partial = cyclotomic_product_partial(m, z, n)?;
    Ok(match method {
        CyclotomicMethod::Gamma => {
            EvalReport::new(cyclotomic_product_gamma(m, z)?, partial, n, MethodTag::CyclotomicGamma)
        }
        CyclotomicMethod::Sine => {
            EvalReport::new(cyclotomic_product_sine(m, z)?, partial, n, MethodTag::CyclotomicSine)
        }
        CyclotomicMethod::Partial => {
            EvalReport::new(partial, cyclotomic_product_gamma(m, z)?, n, MethodTag::CyclotomicPartial)
        }
    })
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::arith::s2;
    use crate::characters::RootOfUnity;
    use crate::oracle::s2_brute;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(cyclotomic(1).unwrap(), PolyZ::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic(4).unwrap(), PolyZ::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic(12).unwrap(), PolyZ::from_i64(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic(6).unwrap().to_string(), "1 - x + x^2");
        assert_eq!(cyclotomic(105).unwrap().coefficients()[7], BigInt::from(-2));
    }

    #[test]
    fn cyclotomic_structure() {
        for m in 2..=120u64 {
            let p = cyclotomic(m).unwrap();
            assert_eq!(p.degree(), Some(euler_phi(m) as usize), "m = {m}");
            assert!(p.coefficients()[0].is_one());
            assert!(p.coefficients().last().unwrap().is_one());
        }
        // x^n − 1 = Π_{d|n} Φ_d
        for n in [12u64, 30, 64] {
            let prod = divisors(n).iter().fold(PolyZ::from_i64(&[1]), |acc, &d| acc.mul(&cyclotomic(d).unwrap()));
            assert_eq!(prod, PolyZ::x_pow_minus_one(n as usize));
        }
        assert!(PolyZ::from_i64(&[1, 1]).div_exact(&PolyZ::from_i64(&[-1, 1])).is_err());
    }

    #[test]
    fn mod_four_products() {
        let target = (PI.exp() - (-PI).exp()) / (2.0 * PI);
        assert!((cyclotomic_product_gamma(4, c(1.0)).unwrap() - c(target)).norm() < 1e-13);
        assert!((cyclotomic_product_sine(4, c(1.0)).unwrap() - c(target)).norm() < 1e-13);
        for k in 1..=10 {
            let z = k as f64 / 10.0;
            let v = cyclotomic_product_sine(4, c(z)).unwrap();
            assert!((v - c((PI * z).sinh() / (PI * z))).norm() < 1e-13);
        }
    }

    #[test]
    fn mod_twelve_products() {
        for k in -10..=10 {
            let z = k as f64 / 10.0;
            let v = cyclotomic_product_gamma(12, c(z)).unwrap();
            let expect = if z == 0.0 {
                1.0
            } else {
                ((0.5 * 3f64.sqrt() * PI * z).sin().powi(2) + (0.5 * PI * z).sinh().powi(2)) / (PI * z).powi(2)
            };
            assert!((v - c(expect)).norm() < 1e-12, "z = {z}");
        }
        let z = 1.0 / (2.0 * 3f64.sqrt());
        let v = cyclotomic_product_sine(12, c(z)).unwrap();
        assert!((v - c(6.0 / (PI * PI) * (PI / (2.0 * 3f64.sqrt())).cosh())).norm() < 1e-12);
    }

    #[test]
    fn gamma_and_sine_forms_agree_when_four_divides() {
        for m in (4..=36u64).step_by(4).filter(|&m| moebius(m) == 0) {
            for k in -10..=10 {
                let z = c(k as f64 / 10.0);
                let g = cyclotomic_product_gamma(m, z).unwrap();
                let s = cyclotomic_product_sine(m, z).unwrap();
                assert!((g - s).norm() < 1e-9, "m = {m}, z = {z}");
            }
        }
    }

    #[test]
    fn sine_form_rejects_twice_odd() {
        assert!(matches!(cyclotomic_product_sine(18, c(0.5)), Err(Error::Hypothesis(_))));
        assert!(matches!(cyclotomic_product_sine(9, c(0.5)), Err(Error::Hypothesis(_))));
        assert!(matches!(cyclotomic_product_gamma(6, c(0.5)), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn zero_gives_one() {
        for m in [4u64, 8, 9, 12, 18, 25] {
            assert_eq!(cyclotomic_product_gamma(m, c(0.0)).unwrap(), c(1.0));
            assert_eq!(cyclotomic_product_partial(m, c(0.0), 10).unwrap(), c(1.0));
        }
        assert_eq!(cyclotomic_product_sine(8, c(0.0)).unwrap(), c(1.0));
    }

    #[test]
    fn delta_table() {
        assert_eq!(delta_m(4).unwrap(), Complex64::new(0.0, 1.0));
        assert_eq!(delta_m(12).unwrap(), c(-1.0));
        assert_eq!(delta_m(20).unwrap(), c(1.0));
        assert!(delta_m(6).is_err());
        for m in (4..=2000u64).step_by(4) {
            let four_s2_over_m = 4 * s2_brute(m) / m;
            let expect = RootOfUnity::new(4, four_s2_over_m % 4).to_complex();
            assert_eq!(delta_m(m).unwrap(), expect, "m = {m}");
        }
    }

    #[test]
    fn prefactor_equals_root_product() {
        for m in (4..=100u64).step_by(2).filter(|&m| moebius(m) == 0) {
            let direct = (1..m / 2)
                .filter(|&j| gcd(j, m) == 1)
                .fold(RootOfUnity::ONE, |acc, j| acc * RootOfUnity::new(m, j));
            assert_eq!(direct, RootOfUnity::new(m, s2(m).unwrap()), "m = {m}");
        }
    }

    #[test]
    fn partial_products_match() {
        let target = (PI.exp() - (-PI).exp()) / (2.0 * PI);
        assert!((cyclotomic_product_partial(4, c(1.0), 100_000).unwrap() - c(target)).norm() < 1e-4);
        let g9 = cyclotomic_product_gamma(9, c(0.5)).unwrap();
        assert!((cyclotomic_product_partial(9, c(0.5), 100_000).unwrap() - g9).norm() < 1e-4);
        let g18 = cyclotomic_product_gamma(18, c(0.7)).unwrap();
        assert!((cyclotomic_product_partial(18, c(0.7), 10_000).unwrap() - g18).norm() < 1e-8);
    }

    #[test]
    fn roots_of_unity() {
        for k in -9..=9 {
            let z = c(k as f64 / 10.0 + 0.001);
            let v = roots_of_unity_product(2, z).unwrap();
            assert!((v - csin_pi(z) / (PI * z)).norm() < 1e-10);
        }
        assert!((roots_of_unity_product(2, c(0.5)).unwrap() - c(2.0 / PI)).norm() < 1e-15);
        let z = c(0.4);
        let t = roots_of_unity_partial(3, z, 10_000).unwrap();
        assert!((roots_of_unity_product(3, z).unwrap() - t).norm() < 1e-8);
        assert!((roots_of_unity_product_from_two(2, c(1.0)).unwrap() - c(0.5)).norm() < 1e-15);
        assert_eq!(roots_of_unity_product(3, c(0.0)).unwrap(), c(1.0));
    }
}
