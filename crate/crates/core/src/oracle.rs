//! Independent reference computations used to check the closed forms:
//! contour-integral and finite-difference derivatives, exact power-series
//! division, brute-force index sums, and truncated products and series.
//!
//! Nothing here is on a hot path; clarity wins over speed.

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::arith::{gcd, Rational};
use crate::characters::DirichletCharacter;
use crate::error::{invalid, Result};
use crate::specfun::trig::expi_pi;

/// Upper bound on oracle sizes, overridable by `CHARPROD_MAX_TERMS`.
pub fn max_terms() -> u64 {
    std::env::var("CHARPROD_MAX_TERMS")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&n: &u64| n > 0)
        .unwrap_or(u64::MAX)
}

/// `requested` capped by [`max_terms`].
pub fn cap_terms(requested: u64) -> u64 {
    requested.min(max_terms())
}

/// `f^{(k)}(c)` for `k = 0..=n` from the trapezoidal rule on the circle
/// `|z − c| = r` with `points` nodes. Converges geometrically when `f` is
/// analytic on a disc larger than `r`.
pub fn cauchy_derivatives(
    f: impl Fn(Complex64) -> Complex64,
    center: Complex64,
    radius: f64,
    points: usize,
    n: usize,
) -> Vec<Complex64> {
    let samples: Vec<Complex64> = (0..points)
        .map(|m| f(center + radius * expi_pi(2.0 * m as f64 / points as f64)))
        .collect();
    let mut fact = 1.0;
    (0..=n)
        .map(|k| {
            if k > 0 {
                fact *= k as f64;
            }
            let s: Complex64 = samples
                .iter()
                .enumerate()
                .map(|(m, &v)| v * expi_pi(-2.0 * (k * m) as f64 / points as f64))
                .sum();
            s * fact / (points as f64 * radius.powi(k as i32))
        })
        .collect()
}

/// Step used by [`chained_difference_check`].
pub const DIFF_STEP: f64 = 1e-4;

/// Compares each entry `k+1` of a derivative tower with the central
/// difference of entry `k` (step `10⁻⁴`, one Richardson step), for
/// `k < n`. Returns the largest mismatch relative to `max(1, |entry|)`.
///
/// `tower(n, y)` must return `[f(y), f′(y), …, f^{(n)}(y)]`.
pub fn chained_difference_check(
    y: &Rational,
    n: usize,
    tower: impl Fn(usize, &Rational) -> Result<Vec<f64>>,
) -> Result<f64> {
    let h = Rational::new(1.into(), 10_000.into());
    let h2 = Rational::new(1.into(), 20_000.into());
    let at = |p: Rational| tower(n, &p);
    let center = at(y.clone())?;
    let (plus, minus) = (at(y + &h)?, at(y - &h)?);
    let (plus2, minus2) = (at(y + &h2)?, at(y - &h2)?);
    let mut worst = 0.0f64;
    for k in 0..n {
        let d1 = (plus[k] - minus[k]) / (2.0 * DIFF_STEP);
        let d2 = (plus2[k] - minus2[k]) / DIFF_STEP;
        let richardson = (4.0 * d2 - d1) / 3.0;
        let target = center[k + 1];
        worst = worst.max((richardson - target).abs() / target.abs().max(1.0));
    }
    Ok(worst)
}

/// Quotient `num / den` of exact power series, truncated to `len` terms.
/// `den[0]` must be nonzero.
pub fn series_div(num: &[Rational], den: &[Rational], len: usize) -> Result<Vec<Rational>> {
    let d0 = den
        .first()
        .filter(|d| !d.is_zero())
        .ok_or_else(|| invalid("series_div needs a nonzero constant term"))?;
    let mut out: Vec<Rational> = Vec::with_capacity(len);
    for n in 0..len {
        let mut acc = num.get(n).cloned().unwrap_or_else(Rational::zero);
        for k in 1..=n.min(den.len().saturating_sub(1)) {
            acc -= &den[k] * &out[n - k];
        }
        out.push(acc / d0);
    }
    Ok(out)
}

/// Maclaurin coefficients `c^n/n!` of `e^{cx}` for `n < len`.
pub fn exp_series(c: i64, len: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(len);
    let mut term = Rational::from_integer(1.into());
    for n in 0..len {
        out.push(term.clone());
        term = term * Rational::from_integer(c.into()) / Rational::from_integer(((n + 1) as i64).into());
    }
    out
}

/// Maclaurin coefficients of `cos x − sin x` for `n < len`.
pub fn cos_minus_sin_series(len: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(len);
    let mut fact = Rational::from_integer(1.into());
    for n in 0..len {
        if n > 0 {
            fact *= Rational::from_integer((n as i64).into());
        }
        // derivatives of cos − sin at 0 cycle through 1, −1, −1, 1
        let sign: i64 = match n % 4 {
            0 | 3 => 1,
            _ => -1,
        };
        out.push(Rational::from_integer(sign.into()) / &fact);
    }
    out
}

pub fn s1_brute(m: u64) -> u64 {
    (1..m).filter(|&j| gcd(j, m) == 1).sum()
}

pub fn s2_brute(m: u64) -> u64 {
    (1..=m / 2).filter(|&j| gcd(j, m) == 1).sum()
}

/// `Π_{k=0}^{K−1} Π_j (1 − fⱼa/(zⱼ + k))`, corrected for the tail by
/// `exp((aΣfⱼzⱼ − a²Σfⱼ²/2) / (K − ½))`.
///
/// With `Σfⱼ = 0` the infinite product equals `Π Γ(zⱼ)/Γ(zⱼ − fⱼa)`.
pub fn general_product_truncated(
    f: &[Complex64],
    a: Complex64,
    zs: &[Complex64],
    terms: u64,
) -> Complex64 {
    let mut prod = Complex64::new(1.0, 0.0);
    for k in 0..terms {
        for (&fj, &zj) in f.iter().zip(zs) {
            prod *= 1.0 - fj * a / (zj + k as f64);
        }
    }
    let linear: Complex64 = f.iter().zip(zs).map(|(&fj, &zj)| fj * zj).sum();
    let quad: Complex64 = f.iter().map(|&fj| fj * fj).sum();
    let tail = (a * linear - a * a * quad / 2.0) / (terms as f64 - 0.5);
    prod * tail.exp()
}

/// `Σ_{k≥1} χ(k)²/k²` from the first `terms` (rounded up to a multiple of
/// `q`) plus the tail estimate `(1/q)·Σ_{j} χ(j)² / (N + ½)`.
pub fn quadratic_sum_direct(chi: &DirichletCharacter, terms: u64) -> Complex64 {
    let q = chi.modulus();
    let n = terms.div_ceil(q) * q;
    let sq: Vec<Complex64> = (0..q as i64).map(|j| chi.evaluate(j).powi(2)).collect();
    let mut acc = Complex64::zero();
    for k in (1..=n).rev() {
        acc += sq[(k % q) as usize] / (k as f64 * k as f64);
    }
    let mean: Complex64 = sq.iter().sum::<Complex64>() / q as f64;
    acc + mean / (n as f64 + 0.5)
}

/// Rational to `f64`, `NaN` if out of range.
pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
