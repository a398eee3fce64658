//! Hurwitz zeta, polygamma and digamma at rational points.
//!
//! `ζ(s, a) = Σ_{k≥0} (k + a)^{−s}` is evaluated by summing the first `N`
//! terms directly, with `N` chosen so that `A = a + N ≥ max(10, s + 10)`,
//! and then applying Euler–Maclaurin to the tail:
//!
//! ```text
//! Σ_{k≥N} (k+a)^{−s} = A^{1−s}/(s−1) + A^{−s}/2
//!                    + Σ_{j=1}^{M} B_{2j}/(2j)! · s(s+1)⋯(s+2j−2) · A^{−s−2j+1} + R_M
//! ```
//!
//! Since every derivative of `x^{−s}` has constant sign on `x > 0`, the
//! remainder `R_M` is bounded in absolute value by the first omitted term.
//! The loop stops once that term falls below `2⁻⁵⁵` of the running sum, or
//! after `M = 30` corrections (never reached for `s ≤ 40`); with
//! `A ≥ s + 10` consecutive terms shrink by at least `((s+2j)/(2πA))² < ¼`.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_traits::ToPrimitive;

use super::bernoulli::bernoulli_number;
use super::trig::{cos_pi, sin_pi};
use crate::error::{invalid, Result};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const EM_TERMS: usize = 30;

/// `B_{2j}/(2j)!` for `j = 1..=EM_TERMS`.
fn em_coefficients() -> &'static [f64] {
    static COEFFS: OnceLock<Vec<f64>> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let mut fact = 1.0f64;
        (1..=EM_TERMS)
            .map(|j| {
                fact *= (2 * j - 1) as f64 * (2 * j) as f64;
                bernoulli_number(2 * j).to_f64().expect("finite Bernoulli number") / fact
            })
            .collect()
    })
}

/// `ζ(s, a)` for `s > 1`, `a > 0`.
pub fn hurwitz_zeta(s: f64, a: f64) -> Result<f64> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(invalid(format!("hurwitz_zeta needs s > 1, got {s}")));
    }
    if !(a > 0.0) || !a.is_finite() {
        return Err(invalid(format!("hurwitz_zeta needs a > 0, got {a}")));
    }
    let target = 10.0f64.max(s + 10.0);
    let shift = if a >= target { 0 } else { (target - a).ceil() as usize };

    // Direct terms, smallest first.
    let mut sum = 0.0;
    for k in (0..shift).rev() {
        sum += (k as f64 + a).powf(-s);
    }

    let big_a = a + shift as f64;
    let mut tail = big_a.powf(1.0 - s) / (s - 1.0) + 0.5 * big_a.powf(-s);
    // s(s+1)⋯(s+2j−2) · A^{−s−2j+1}, built incrementally
    let mut factor = s * big_a.powf(-s - 1.0);
    for (j, &coeff) in em_coefficients().iter().enumerate() {
        let term = coeff * factor;
        tail += term;
        if term.abs() < f64::EPSILON * 0.125 * (sum + tail).abs() {
            break;
        }
        let j = (j + 1) as f64;
        factor *= (s + 2.0 * j - 1.0) * (s + 2.0 * j) / (big_a * big_a);
    }
    Ok(sum + tail)
}

/// `ψ_m(x) = (−1)^{m+1} m! ζ(m+1, x)` for `m ≥ 1`, `x > 0`.
pub fn polygamma(m: u32, x: f64) -> Result<f64> {
    if m == 0 {
        return Err(invalid("polygamma order must be >= 1; use digamma_rational for m = 0"));
    }
    if !(x > 0.0) {
        return Err(invalid(format!("polygamma needs x > 0, got {x}")));
    }
    let fact: f64 = (1..=m).map(|k| k as f64).product();
    let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
    Ok(sign * fact * hurwitz_zeta(m as f64 + 1.0, x)?)
}

/// `ψ(j/q)` for `0 < j ≤ q`, by Gauss's digamma theorem:
///
/// ```text
/// ψ(j/q) = −γ − ln(2q) − (π/2)·cot(πj/q) + 2 Σ_{n=1}^{⌊(q−1)/2⌋} cos(2πnj/q)·ln sin(πn/q)
/// ```
pub fn digamma_rational(j: u64, q: u64) -> Result<f64> {
    if q == 0 || j == 0 || j > q {
        return Err(invalid(format!("digamma_rational needs 0 < j <= q, got {j}/{q}")));
    }
    let g = crate::arith::gcd(j, q);
    let (j, q) = (j / g, q / g);
    if j == q {
        return Ok(-EULER_GAMMA);
    }
    let qf = q as f64;
    let x = j as f64 / qf;
    let cot = cos_pi(x) / sin_pi(x);
    let mut sum = 0.0;
    for n in 1..=(q - 1) / 2 {
        let angle = 2.0 * ((n * j) % q) as f64 / qf;
        sum += cos_pi(angle) * sin_pi(n as f64 / qf).ln();
    }
    Ok(-EULER_GAMMA - (2.0 * qf).ln() - 0.5 * PI * cot + 2.0 * sum)
}
