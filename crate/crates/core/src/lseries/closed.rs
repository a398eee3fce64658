//! Digamma and cotangent forms for `L₁`, `L₂`, `L₂*`, the quadratic sums
//! `Σ χ(k)²/k²`, and the exact values of `L_n`, `L_n*` for the three
//! characters of conductor 3 (moduli 3 and 6) and 4.

use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::arith::{gcd, Rational};
use crate::characters::DirichletCharacter;
use crate::error::{invalid, Result};
use crate::oracle::rational_to_f64;
use crate::specfun::trig::{cos_pi, sin_pi};
use crate::specfun::{
    bernoulli_number, bernoulli_poly, digamma_rational, euler_number, euler_poly, polygamma,
};

fn units(q: u64) -> impl Iterator<Item = u64> {
    (1..q).filter(move |&j| gcd(j, q) == 1)
}

/// `Σ_j χ(j) ψ(j/q)` over the units.
fn digamma_sum(chi: &DirichletCharacter) -> Result<Complex64> {
    let q = chi.modulus();
    units(q).try_fold(Complex64::zero(), |acc, j| {
        Ok(acc + chi.evaluate(j as i64) * digamma_rational(j, q)?)
    })
}

/// `Σ_j χ(j)² ψ₁(j/q)` over the units.
fn trigamma_sum(chi: &DirichletCharacter) -> Result<Complex64> {
    let q = chi.modulus();
    units(q).try_fold(Complex64::zero(), |acc, j| {
        Ok(acc + chi.evaluate(j as i64).powi(2) * polygamma(1, j as f64 / q as f64)?)
    })
}

/// `Σ_{j ≤ (q−1)/2} χ(j)·cot(πj/q)`.
fn cot_sum(chi: &DirichletCharacter) -> Complex64 {
    let q = chi.modulus();
    (1..=(q - 1) / 2)
        .map(|j| {
            let x = j as f64 / q as f64;
            chi.evaluate(j as i64) * (cos_pi(x) / sin_pi(x))
        })
        .sum()
}

/// `Σ_{j ≤ (q−1)/2} (χ(j)/sin(πj/q))²`.
fn csc_sum(chi: &DirichletCharacter) -> Complex64 {
    let q = chi.modulus();
    (1..=(q - 1) / 2)
        .map(|j| (chi.evaluate(j as i64) / sin_pi(j as f64 / q as f64)).powi(2))
        .sum()
}

/// `L₁(χ) = −(1/q) Σ χ(j) ψ(j/q)`.
pub fn l1(chi: &DirichletCharacter) -> Result<Complex64> {
    chi.require_nonprincipal("l1")?;
    Ok(-digamma_sum(chi)? / chi.modulus() as f64)
}

/// `L₁(χ) = (π/q) Σ_{j ≤ (q−1)/2} χ(j) cot(πj/q)` for odd `χ`.
pub fn l1_cot(chi: &DirichletCharacter) -> Result<Complex64> {
    chi.require_odd("l1_cot")?;
    Ok(PI / chi.modulus() as f64 * cot_sum(chi))
}

/// `L₂(χ) = (1/2q²)[(Σ χ(j)ψ(j/q))² − Σ χ(j)²ψ₁(j/q)]`.
pub fn l2_closed(chi: &DirichletCharacter) -> Result<Complex64> {
    chi.require_nonprincipal("l2_closed")?;
    let q2 = (chi.modulus() as f64).powi(2);
    Ok((digamma_sum(chi)?.powi(2) - trigamma_sum(chi)?) / (2.0 * q2))
}

/// `L₂(χ) = (π²/2q²)[(Σ χ(j)cot(πj/q))² − Σ (χ(j)/sin(πj/q))²]`, both sums
/// over `j ≤ (q−1)/2`, for odd `χ`.
pub fn l2_cot(chi: &DirichletCharacter) -> Result<Complex64> {
    chi.require_odd("l2_cot")?;
    let q2 = (chi.modulus() as f64).powi(2);
    Ok(PI * PI / (2.0 * q2) * (cot_sum(chi).powi(2) - csc_sum(chi)))
}

/// `L₂*(χ) = (1/2q²)[(Σ χ(j)ψ(j/q))² + Σ χ(j)²ψ₁(j/q)]`.
pub fn lstar2_closed(chi: &DirichletCharacter) -> Result<Complex64> {
    chi.require_nonprincipal("lstar2_closed")?;
    let q2 = (chi.modulus() as f64).powi(2);
    Ok((digamma_sum(chi)?.powi(2) + trigamma_sum(chi)?) / (2.0 * q2))
}

/// `Σ_{k≥1} χ(k)²/k² = (π²/q²) Σ_{j ≤ (q−1)/2} (χ(j)/sin(πj/q))²`.
pub fn quadratic_sum(chi: &DirichletCharacter) -> Complex64 {
    let q2 = (chi.modulus() as f64).powi(2);
    PI * PI / q2 * csc_sum(chi)
}

/// `Σ csc²(πj/q)` over units `j ≤ (q−1)/2`; equals `(q²−1)/6` for odd primes.
pub fn csc_squared_sum(q: u64) -> Result<f64> {
    if q < 3 {
        return Err(invalid(format!("csc_squared_sum needs q >= 3, got {q}")));
    }
    Ok(units(q)
        .take_while(|&j| 2 * j < q)
        .map(|j| sin_pi(j as f64 / q as f64).powi(-2))
        .sum())
}

/// An exact value `c · (√3)^s · πⁿ` with rational `c` and `s ∈ {0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiMultiple {
    pub coeff: Rational,
    pub sqrt3: bool,
    pub pi_power: u32,
}

impl PiMultiple {
    pub fn to_f64(&self) -> f64 {
        let s = if self.sqrt3 { 3f64.sqrt() } else { 1.0 };
        rational_to_f64(&self.coeff) * s * PI.powi(self.pi_power as i32)
    }
}

impl fmt::Display for PiMultiple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::specfun::bernoulli::format_rational(&self.coeff))?;
        if self.sqrt3 {
            f.write_str("*sqrt(3)")?;
        }
        match self.pi_power {
            0 => Ok(()),
            1 => f.write_str("*pi"),
            p => write!(f, "*pi^{p}"),
        }
    }
}

fn int(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn pow(b: u64, e: usize) -> Rational {
    Rational::from_integer(BigInt::from(b).pow(e as u32))
}

fn factorial(n: usize) -> Rational {
    Rational::from_integer((1..=n as u64).map(BigInt::from).product())
}

fn sign(odd: bool) -> Rational {
    if odd {
        -Rational::one()
    } else {
        Rational::one()
    }
}

fn check_small(q: u64, n: usize, what: &str) -> Result<()> {
    if !matches!(q, 3 | 4 | 6) {
        return Err(invalid(format!("{what} needs q in {{3, 4, 6}}, got {q}")));
    }
    if n == 0 {
        return Err(invalid(format!("{what} needs n >= 1")));
    }
    Ok(())
}

/// Exact `L_n(χ)` for the nonprincipal character mod `q ∈ {3, 4, 6}`.
pub fn ln_small_conductor_exact(q: u64, n: usize) -> Result<PiMultiple> {
    check_small(q, n, "ln_small_conductor")?;
    let m = n / 2;
    let odd_n = n % 2 == 1;
    let base = sign(m % 2 == 1) / factorial(n);
    let (coeff, sqrt3) = match q {
        // (−1)^m (π/3)^{2m+1} / ((2m+1)! √3) = (−1)^m √3 π^n / (3^{n+1} n!)
        3 if odd_n => (base / pow(3, n + 1), true),
        3 => (base / pow(3, n), false),
        4 => (base / pow(4, n), false),
        _ => (base / pow(6, n), odd_n),
    };
    Ok(PiMultiple { coeff, sqrt3, pi_power: n as u32 })
}

/// Exact `L_n*(χ)` for the nonprincipal character mod `q ∈ {3, 4, 6}`,
/// from Bernoulli and Euler numbers and polynomials.
pub fn lstar_small_conductor_exact(q: u64, n: usize) -> Result<PiMultiple> {
    check_small(q, n, "lstar_small_conductor")?;
    let m = n / 2;
    let odd_n = n % 2 == 1;
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let (coeff, sqrt3) = match q {
        3 if odd_n => {
            // (−1)^m (√3/2)(2ⁿ−1)(3^{n+1}−1) B_{n+1}/(n+1)! (π/3)ⁿ
            let c = sign(m % 2 == 1)
                * &half
                * (pow(2, n) - int(1))
                * (pow(3, n + 1) - int(1))
                * bernoulli_number(n + 1)
                / factorial(n + 1)
                / pow(3, n);
            (c, true)
        }
        3 => {
            // (−1)^{m+1} 3(4^m+1) B_{2m+1}(⅓)/(2m+1)! π^{2m}
            let third = Rational::new(BigInt::one(), BigInt::from(3));
            let c = sign(m.is_multiple_of(2)) * int(3) * (pow(4, m) + int(1)) * bernoulli_poly(n + 1, &third)
                / factorial(n + 1);
            (c, false)
        }
        4 => {
            let quarter = Rational::new(BigInt::one(), BigInt::from(4));
            let c = sign(n.div_ceil(2) % 2 == 1) * euler_poly(n, &quarter) / factorial(n);
            (c, false)
        }
        _ if odd_n => {
            // (−1)^{m+1} (√3/2) E_n(⅙)/n! πⁿ
            let sixth = Rational::new(BigInt::one(), BigInt::from(6));
            let c = sign(m.is_multiple_of(2)) * &half * euler_poly(n, &sixth) / factorial(n);
            (c, true)
        }
        _ => {
            // (−1)^m ¼(3^{n+1}+1) E_n/n! (π/6)ⁿ
            let c = sign(m % 2 == 1) * (pow(3, n + 1) + int(1)) * Rational::from_integer(euler_number(n))
                / int(4)
                / factorial(n)
                / pow(6, n);
            (c, false)
        }
    };
    Ok(PiMultiple { coeff, sqrt3, pi_power: n as u32 })
}

pub fn ln_small_conductor(q: u64, n: usize) -> Result<f64> {
    Ok(ln_small_conductor_exact(q, n)?.to_f64())
}

pub fn lstar_small_conductor(q: u64, n: usize) -> Result<f64> {
    Ok(lstar_small_conductor_exact(q, n)?.to_f64())
}

/// The modulus when `χ` is the nonprincipal character mod 3, 4 or 6.
pub(crate) fn small_conductor_modulus(chi: &DirichletCharacter) -> Option<u64> {
    let q = chi.modulus();
    (matches!(q, 3 | 4 | 6) && !chi.is_principal()).then_some(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::enumerate_characters;
    use num_traits::Signed;

    fn chi(id: &str) -> DirichletCharacter {
        DirichletCharacter::parse(id).unwrap()
    }

    fn close(a: Complex64, b: f64, tol: f64) -> bool {
        (a - b).norm() < tol
    }

    #[test]
    fn l1_known_values() {
        assert!(close(l1(&chi("chi3")).unwrap(), PI / (3.0 * 3f64.sqrt()), 1e-13));
        assert!(close(l1(&chi("chi-4")).unwrap(), PI / 4.0, 1e-13));
        assert!(close(l1_cot(&chi("chi-4")).unwrap(), PI / 4.0, 1e-13));
        assert!(close(l1(&chi("chi6")).unwrap(), PI / (2.0 * 3f64.sqrt()), 1e-13));
    }

    #[test]
    fn digamma_and_cot_forms_agree() {
        for q in 3..=40 {
            for c in enumerate_characters(q).unwrap().into_iter().filter(|c| c.is_odd()) {
                let a = l1(&c).unwrap();
                let b = l1_cot(&c).unwrap();
                assert!((a - b).norm() < 1e-11, "{}: {a} vs {b}", c.label());
                let a = l2_closed(&c).unwrap();
                let b = l2_cot(&c).unwrap();
                assert!((a - b).norm() < 1e-10, "{}: {a} vs {b}", c.label());
            }
        }
    }

    #[test]
    fn l2_known_values() {
        assert!(close(l2_closed(&chi("chi-4")).unwrap(), -PI * PI / 32.0, 1e-13));
        assert!(close(l2_closed(&chi("chi3")).unwrap(), -PI * PI / 18.0, 1e-13));
        assert!(close(lstar2_closed(&chi("chi-4")).unwrap(), 3.0 * PI * PI / 32.0, 1e-13));
        assert!(close(lstar2_closed(&chi("chi3")).unwrap(), 5.0 * PI * PI / 54.0, 1e-13));
    }

    #[test]
    fn star_plus_plain_is_square() {
        for q in 3..=30 {
            for c in enumerate_characters(q).unwrap().into_iter().skip(1) {
                let l1v = l1(&c).unwrap();
                let lhs = l2_closed(&c).unwrap() + lstar2_closed(&c).unwrap();
                assert!((lhs - l1v * l1v).norm() < 1e-10, "{}", c.label());
            }
        }
    }

    #[test]
    fn principal_rejected() {
        assert!(l1(&chi("5.0")).is_err());
        let even = enumerate_characters(5).unwrap().into_iter().find(|c| !c.is_principal() && !c.is_odd()).unwrap();
        assert!(l1_cot(&even).is_err());
        assert!(l2_cot(&even).is_err());
    }

    #[test]
    fn csc_squared_examples() {
        assert!((csc_squared_sum(5).unwrap() - 4.0).abs() < 1e-13);
        assert!((csc_squared_sum(7).unwrap() - 8.0).abs() < 1e-13);
        for q in [3u64, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
            let expected = (q * q - 1) as f64 / 6.0;
            assert!((csc_squared_sum(q).unwrap() - expected).abs() < 1e-10);
        }
        assert!(csc_squared_sum(2).is_err());
    }

    #[test]
    fn quadratic_sum_mod_four() {
        let v = quadratic_sum(&chi("chi-4"));
        assert!(close(v, PI * PI / 8.0, 1e-14));
    }

    #[test]
    fn small_conductor_examples() {
        let s3 = 3f64.sqrt();
        assert!((ln_small_conductor(3, 1).unwrap() - PI / (3.0 * s3)).abs() < 1e-15);
        assert!((ln_small_conductor(3, 2).unwrap() + 0.5 * (PI / 3.0).powi(2)).abs() < 1e-15);
        assert!((ln_small_conductor(6, 1).unwrap() - PI / (2.0 * s3)).abs() < 1e-15);
        assert!((ln_small_conductor(6, 3).unwrap() + s3 / 6.0 * (PI / 6.0).powi(3)).abs() < 1e-15);
        assert!((ln_small_conductor(4, 3).unwrap() + PI.powi(3) / 384.0).abs() < 1e-15);

        assert!((lstar_small_conductor(4, 1).unwrap() - PI / 4.0).abs() < 1e-15);
        assert!((lstar_small_conductor(4, 2).unwrap() - 3.0 * PI * PI / 32.0).abs() < 1e-15);
        assert!((lstar_small_conductor(3, 2).unwrap() - 5.0 * PI * PI / 54.0).abs() < 1e-15);
        assert!((lstar_small_conductor(6, 2).unwrap() - 7.0 * PI * PI / 72.0).abs() < 1e-15);
        // −(√3/2)(2³−1)(3⁴−1)B₄/4!·(π/3)³ with B₄ = −1/30
        let expected = -(s3 / 2.0) * 7.0 * 80.0 * (-1.0 / 30.0) / 24.0 * (PI / 3.0).powi(3);
        assert!((lstar_small_conductor(3, 3).unwrap() - expected).abs() < 1e-15);
    }

    #[test]
    fn star_one_equals_plain_one() {
        for q in [3, 4, 6] {
            assert_eq!(
                ln_small_conductor_exact(q, 1).unwrap(),
                lstar_small_conductor_exact(q, 1).unwrap()
            );
        }
    }

    #[test]
    fn small_conductor_rejects() {
        assert!(ln_small_conductor(5, 1).is_err());
        assert!(lstar_small_conductor(4, 0).is_err());
        assert!(small_conductor_modulus(&chi("4.0")).is_none());
        assert_eq!(small_conductor_modulus(&chi("chi6")), Some(6));
    }

    #[test]
    fn display_exact() {
        assert_eq!(lstar_small_conductor_exact(3, 2).unwrap().to_string(), "5/54*pi^2");
        assert_eq!(ln_small_conductor_exact(3, 1).unwrap().to_string(), "1/9*sqrt(3)*pi");
        assert!(ln_small_conductor_exact(4, 2).unwrap().coeff.is_negative());
    }
}
