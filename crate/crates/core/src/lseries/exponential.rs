//! `L_n(χ)` for odd `χ` as an exponential sum over sign vectors:
//!
//! ```text
//! L_n(χ) = i^{n−ℓ}/(ε(q)·n!) · (π/q)ⁿ · Σ_δ P(δ) e^{iπ j(δ)/q} (δ₁χ(j₁) + ⋯ + δ_ℓχ(j_ℓ))ⁿ
//! ```
//!
//! with `j₁ < ⋯ < j_ℓ` the units below `q/2`. The `2^ℓ` vectors are visited in
//! Gray-code order so each step flips one sign and updates the sums in `O(1)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Zero;

use crate::arith::{epsilon_q, gcd};
use crate::characters::DirichletCharacter;
use crate::error::{invalid, Error, Result};
use crate::specfun::trig::expi_pi;

/// Largest supported `ℓ = φ(q)/2`.
pub const MAX_SIGN_SLOTS: usize = 24;

/// A vector `δ ∈ {−1, +1}^ℓ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignVector {
    pub deltas: Vec<i8>,
}

impl SignVector {
    pub fn len(&self) -> usize {
        self.deltas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.deltas.is_empty()
    }

    /// `P(δ) = Π δ_λ`.
    pub fn product(&self) -> i64 {
        self.deltas.iter().map(|&d| d as i64).product()
    }

    /// `j(δ) = Σ δ_λ j_λ`.
    pub fn j_sum(&self, js: &[u64]) -> i64 {
        self.deltas.iter().zip(js).map(|(&d, &j)| d as i64 * j as i64).sum()
    }

    /// `Σ δ_λ χ(j_λ)`.
    pub fn char_sum(&self, values: &[Complex64]) -> Complex64 {
        self.deltas.iter().zip(values).map(|(&d, &v)| v * d as f64).sum()
    }

    /// All `2^ℓ` vectors in Gray-code order, starting from all `+1`.
    pub fn gray_sequence(len: usize) -> impl Iterator<Item = SignVector> {
        let mut current = SignVector { deltas: vec![1; len] };
        (0u64..1 << len).map(move |i| {
            if i > 0 {
                let b = i.trailing_zeros() as usize;
                current.deltas[b] = -current.deltas[b];
            }
            current.clone()
        })
    }
}

/// The units `j < q/2` in ascending order.
pub fn half_units(q: u64) -> Vec<u64> {
    (1..=(q - 1) / 2).filter(|&j| gcd(j, q) == 1).collect()
}

/// `Σ_δ P(δ) e^{iπ j(δ)/q} (Σ δ_λ χ(j_λ))ⁿ` with the units taken in the given order.
pub(crate) fn sign_sum(chi: &DirichletCharacter, n: usize, js: &[u64]) -> Complex64 {
    let q = chi.modulus();
    let two_q = 2 * q as i64;
    let phases: Vec<Complex64> = (0..two_q).map(|k| expi_pi(k as f64 / q as f64)).collect();
    let values: Vec<Complex64> = js.iter().map(|&j| chi.evaluate(j as i64)).collect();

    let mut deltas = vec![1i8; js.len()];
    let mut parity = 1.0;
    let mut j_total: i64 = js.iter().map(|&j| j as i64).sum();
    let mut char_total: Complex64 = values.iter().sum();
    let mut acc = Complex64::zero();
    for i in 0u64..1 << js.len() {
        if i > 0 {
            let b = i.trailing_zeros() as usize;
            let d = deltas[b] as i64;
            j_total -= 2 * d * js[b] as i64;
            char_total -= values[b] * (2 * d) as f64;
            deltas[b] = -deltas[b];
            parity = -parity;
        }
        acc += phases[j_total.rem_euclid(two_q) as usize] * char_total.powi(n as i32) * parity;
    }
    acc
}

pub fn ln_exponential(chi: &DirichletCharacter, n: usize) -> Result<Complex64> {
    chi.require_odd("ln_exponential")?;
    if n == 0 {
        return Err(invalid("L-series order must be >= 1"));
    }
    let q = chi.modulus();
    let js = half_units(q);
    if js.len() > MAX_SIGN_SLOTS {
        return Err(Error::TooLarge(format!(
            "2^{} sign vectors for q = {q}; the limit is 2^{MAX_SIGN_SLOTS}",
            js.len()
        )));
    }
    Ok(exponential_prefactor(q, n, js.len())? * sign_sum(chi, n, &js))
}

/// `i^{n−ℓ}/(ε(q)·n!) · (π/q)ⁿ`.
fn exponential_prefactor(q: u64, n: usize, ell: usize) -> Result<Complex64> {
    let i_pow = match (n as i64 - ell as i64).rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    };
    let mut scale = 1.0 / epsilon_q(q)?;
    for m in 1..=n {
        scale *= PI / (q as f64 * m as f64);
    }
    Ok(i_pow * scale)
}
