//! `sin(πx)` and `cos(πx)` with exact argument reduction, so that values at
//! multiples of ½ come out exact and large real parts lose no digits.

use num_complex::Complex64;
use std::f64::consts::PI;

/// Quadrant `n = round(2x)` and remainder `r = x − n/2 ∈ [−¼, ¼]`.
fn reduce(x: f64) -> (i64, f64) {
    let n = (2.0 * x).round();
    let r = x - 0.5 * n;
    ((n as i64).rem_euclid(4), r)
}

pub fn sin_pi(x: f64) -> f64 {
    let (quadrant, r) = reduce(x);
    let (s, c) = (PI * r).sin_cos();
    match quadrant {
        0 => s,
        1 => c,
        2 => -s,
        _ => -c,
    }
}

pub fn cos_pi(x: f64) -> f64 {
    let (quadrant, r) = reduce(x);
    let (s, c) = (PI * r).sin_cos();
    match quadrant {
        0 => c,
        1 => -s,
        2 => -c,
        _ => s,
    }
}

/// `sin(πz)` for complex `z`.
pub fn csin_pi(z: Complex64) -> Complex64 {
    let y = PI * z.im;
    Complex64::new(sin_pi(z.re) * y.cosh(), cos_pi(z.re) * y.sinh())
}

/// `e^{iπx}` for real `x`.
pub fn expi_pi(x: f64) -> Complex64 {
    Complex64::new(cos_pi(x), sin_pi(x))
}
