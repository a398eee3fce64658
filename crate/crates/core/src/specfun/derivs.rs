//! Derivatives of `Γ` and `1/Γ` at rational points in `(0, 1]`.
//!
//! Writing `Γ = exp(ln Γ)` and applying Faà di Bruno's formula with
//! `(ln Γ)^{(i)} = ψ_{i−1}` gives
//!
//! ```text
//! Γ^{(n)}(y)     = Γ(y)  · Σ_{k=1}^{n}        B_{n,k}(ψ(y), ψ₁(y), …, ψ_{n−k}(y))
//! (1/Γ)^{(n)}(y) = 1/Γ(y) · Σ_{k=1}^{n} (−1)^k · B_{n,k}(ψ(y), ψ₁(y), …, ψ_{n−k}(y))
//! ```

use num_traits::{Signed, ToPrimitive, Zero};

use super::bell::bell_table;
use super::gamma::gamma_real;
use super::zeta::{digamma_rational, polygamma};
use crate::arith::Rational;
use crate::error::{invalid, Result};

/// Values `f(y), f′(y), …, f^{(order)}(y)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivTower {
    pub order: usize,
    pub point: Rational,
    pub values: Vec<f64>,
}

fn unit_interval_parts(y: &Rational) -> Result<(u64, u64)> {
    let one = Rational::from_integer(1.into());
    if !y.is_positive() || *y > one {
        return Err(invalid(format!("derivative towers need y in (0, 1], got {y}")));
    }
    let j = y.numer().to_u64();
    let q = y.denom().to_u64();
    match (j, q) {
        (Some(j), Some(q)) => Ok((j, q)),
        _ => Err(invalid(format!("denominator of {y} too large"))),
    }
}

/// `[ψ(y), ψ₁(y), …, ψ_{count−1}(y)]`, the Bell arguments `x₁, x₂, …`.
pub fn polygamma_values(y: &Rational, count: usize) -> Result<Vec<f64>> {
    let (j, q) = unit_interval_parts(y)?;
    let x = j as f64 / q as f64;
    let mut out = Vec::with_capacity(count);
    if count > 0 {
        out.push(digamma_rational(j, q)?);
    }
    for m in 1..count {
        out.push(polygamma(m as u32, x)?);
    }
    Ok(out)
}

/// `s_m = Σ_{k=1}^{m} σ^k B_{m,k}(xs)` for `m = 0..=n`, with `σ = −1` when
/// `signed`, else `+1`, and `s₀ = 1`.
pub fn bell_sums(xs: &[f64], n: usize, signed: bool) -> Result<Vec<f64>> {
    let table = bell_table(n, xs)?;
    Ok(table
        .iter()
        .enumerate()
        .map(|(m, row)| {
            if m == 0 {
                return 1.0;
            }
            row.iter()
                .enumerate()
                .skip(1)
                .map(|(k, &b)| if signed && k % 2 == 1 { -b } else { b })
                .sum()
        })
        .collect())
}

fn tower(n: usize, y: &Rational, recip: bool) -> Result<DerivTower> {
    let (j, q) = unit_interval_parts(y)?;
    let gamma = gamma_real(j as f64 / q as f64)?;
    let xs = polygamma_values(y, n)?;
    let sums = bell_sums(&xs, n, recip)?;
    let scale = if recip { 1.0 / gamma } else { gamma };
    Ok(DerivTower {
        order: n,
        point: y.clone(),
        values: sums.into_iter().map(|s| scale * s).collect(),
    })
}

/// `Γ(y), Γ′(y), …, Γ^{(n)}(y)`.
pub fn gamma_derivs(n: usize, y: &Rational) -> Result<DerivTower> {
    tower(n, y, false)
}

/// `1/Γ(y), (1/Γ)′(y), …, (1/Γ)^{(n)}(y)`.
pub fn recip_gamma_derivs(n: usize, y: &Rational) -> Result<DerivTower> {
    tower(n, y, true)
}

impl DerivTower {
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self) -> f64 {
        self.values.first().copied().unwrap_or_else(f64::zero)
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use num_bigint::BigInt;
    use num_complex::Complex64;

    use super::*;
    use crate::oracle::{cauchy_derivatives, chained_difference_check};
    use crate::specfun::gamma::{cgamma, rgamma};
    use crate::specfun::zeta::EULER_GAMMA;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn low_orders() {
        let t = recip_gamma_derivs(1, &r(1, 2)).unwrap();
        assert!((t.values[0] - 1.0 / PI.sqrt()).abs() < 1e-15);
        let psi = digamma_rational(1, 2).unwrap();
        assert!((t.values[1] + psi / PI.sqrt()).abs() < 1e-14);
        let g = gamma_derivs(1, &r(1, 1)).unwrap();
        assert!((g.values[1] + EULER_GAMMA).abs() < 1e-14);
        assert!((gamma_derivs(0, &r(1, 2)).unwrap().value() - PI.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn second_derivative_at_one() {
        // Γ″(1) = γ² + π²/6
        let g = gamma_derivs(2, &r(1, 1)).unwrap();
        assert!((g.values[2] - (EULER_GAMMA.powi(2) + PI * PI / 6.0)).abs() < 1e-13);
    }

    #[test]
    fn domain() {
        assert!(gamma_derivs(2, &r(0, 1)).is_err());
        assert!(gamma_derivs(2, &r(3, 2)).is_err());
        assert!(recip_gamma_derivs(2, &r(-1, 3)).is_err());
    }

    #[test]
    fn recip_third_derivative_by_differences() {
        let y = r(1, 3);
        let t = recip_gamma_derivs(3, &y).unwrap();
        let worst = chained_difference_check(&y, 3, |n, y| Ok(recip_gamma_derivs(n, y)?.values))
            .unwrap();
        assert!(worst < 1e-6, "worst relative mismatch {worst}");
        assert!(t.values[3].is_finite());
    }

    #[test]
    fn towers_match_finite_differences() {
        for y in [r(1, 3), r(1, 4), r(2, 5)] {
            let wg = chained_difference_check(&y, 5, |n, y| Ok(gamma_derivs(n, y)?.values)).unwrap();
            let wr =
                chained_difference_check(&y, 5, |n, y| Ok(recip_gamma_derivs(n, y)?.values)).unwrap();
            assert!(wg < 1e-5 && wr < 1e-5, "y = {y}: {wg} {wr}");
        }
    }

    #[test]
    fn towers_match_contour_integrals() {
        for y in [r(1, 3), r(1, 4), r(2, 5), r(1, 1)] {
            let yf = y.to_f64().unwrap();
            let center = Complex64::new(yf, 0.0);
            // Stay inside the disc free of the pole at 0.
            let radius = 0.8 * yf;
            let g = cauchy_derivatives(|z| cgamma(z).unwrap(), center, radius, 256, 5);
            let rg = cauchy_derivatives(rgamma, center, 0.5, 128, 5);
            let tg = gamma_derivs(5, &y).unwrap();
            let tr = recip_gamma_derivs(5, &y).unwrap();
            for n in 0..=5 {
                let eg = (g[n].re - tg.values[n]).abs() / tg.values[n].abs().max(1.0);
                let er = (rg[n].re - tr.values[n]).abs() / tr.values[n].abs().max(1.0);
                assert!(eg < 1e-5, "Gamma^({n})({y}): {} vs {}", g[n].re, tg.values[n]);
                assert!(er < 1e-5, "(1/Gamma)^({n})({y}): {} vs {}", rg[n].re, tr.values[n]);
            }
        }
    }
}
