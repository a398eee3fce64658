//! Products of `Γ(j/n)` and `sin(πj/q)` over residues coprime to the modulus.

use std::f64::consts::PI;

use crate::arith::{coprime_residues, epsilon_q, euler_phi, gcd};
use crate::error::{invalid, Result};

use super::gamma::gamma_real;
use super::trig::sin_pi;

/// `Π_{gcd(j,n)=1} Γ(j/n)` by direct multiplication.
pub fn gamma_product_coprime(n: u64) -> Result<f64> {
    if n < 2 {
        return Err(invalid(format!("gamma_product_coprime needs n >= 2, got {n}")));
    }
    coprime_residues(n)
        .into_iter()
        .try_fold(1.0, |acc, j| Ok(acc * gamma_real(j as f64 / n as f64)?))
}

/// `(2π)^{φ(n)/2} / ε(n)`: the value of [`gamma_product_coprime`].
pub fn gamma_product_coprime_closed(n: u64) -> Result<f64> {
    Ok((2.0 * PI).powf(euler_phi(n) as f64 / 2.0) / epsilon_q(n)?)
}

/// `Π sin(πj/q)` over `1 ≤ j ≤ ⌊(q−1)/2⌋` coprime to `q`, directly.
pub fn sine_product_coprime(q: u64) -> Result<f64> {
    if q < 3 {
        return Err(invalid(format!("sine_product_coprime needs q >= 3, got {q}")));
    }
    Ok((1..=(q - 1) / 2)
        .filter(|&j| gcd(j, q) == 1)
        .map(|j| sin_pi(j as f64 / q as f64))
        .product())
}

/// `ε(q) / 2^{φ(q)/2}`: the value of [`sine_product_coprime`].
pub fn sine_product_coprime_closed(q: u64) -> Result<f64> {
    if q < 3 {
        return Err(invalid(format!("sine_product_coprime needs q >= 3, got {q}")));
    }
    Ok(epsilon_q(q)? / 2f64.powf(euler_phi(q) as f64 / 2.0))
}
