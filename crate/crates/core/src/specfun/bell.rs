//! Partial exponential Bell polynomials `B_{n,k}(x₁, …, x_{n−k+1})`.
//!
//! Evaluated by the recurrence
//! `B_{n,k} = Σ_{i=1}^{n−k+1} C(n−1, i−1) · xᵢ · B_{n−i,k−1}` with
//! `B_{0,0} = 1` and `B_{n,0} = B_{0,k} = 0` otherwise.

use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::error::{invalid, Result};

/// Scalars the recurrence can run over.
pub trait BellScalar: Clone + Zero + One + Add<Output = Self> + Mul<Output = Self> {
    fn from_count(c: u128) -> Self;
}

impl BellScalar for f64 {
    fn from_count(c: u128) -> Self {
        c as f64
    }
}

impl BellScalar for Complex64 {
    fn from_count(c: u128) -> Self {
        Complex64::new(c as f64, 0.0)
    }
}

impl BellScalar for Rational {
    fn from_count(c: u128) -> Self {
        Rational::from_integer(BigInt::from(c))
    }
}

fn binomial_rows(n: usize) -> Vec<Vec<u128>> {
    let mut rows: Vec<Vec<u128>> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut row = vec![1u128; m + 1];
        for k in 1..m {
            row[k] = rows[m - 1][k - 1] + rows[m - 1][k];
        }
        rows.push(row);
    }
    rows
}

/// Full triangle `table[m][k] = B_{m,k}(x₁, …)` for `0 ≤ k ≤ m ≤ n`.
///
/// Needs `xs.len() ≥ n` (entries past `x_n` are ignored).
pub fn bell_table<T: BellScalar>(n: usize, xs: &[T]) -> Result<Vec<Vec<T>>> {
    if xs.len() < n {
        return Err(invalid(format!(
            "bell_table({n}) needs {n} arguments, got {}",
            xs.len()
        )));
    }
    let binom = binomial_rows(n.max(1));
    let mut table: Vec<Vec<T>> = Vec::with_capacity(n + 1);
    table.push(vec![T::one()]);
    for m in 1..=n {
        let mut row = vec![T::zero(); m + 1];
        for k in 1..=m {
            let mut acc = T::zero();
            for i in 1..=m - k + 1 {
                let prev = &table[m - i];
                if k - 1 < prev.len() {
                    acc = acc
                        + T::from_count(binom[m - 1][i - 1]) * xs[i - 1].clone() * prev[k - 1].clone();
                }
            }
            row[k] = acc;
        }
        table.push(row);
    }
    Ok(table)
}

/// `B_{n,k}(x₁, …, x_{n−k+1})`.
pub fn bell_partial<T: BellScalar>(n: usize, k: usize, xs: &[T]) -> Result<T> {
    if k > n {
        return Err(invalid(format!("bell_partial needs k <= n, got n={n}, k={k}")));
    }
    if k == 0 {
        return Ok(if n == 0 { T::one() } else { T::zero() });
    }
    let need = n - k + 1;
    if xs.len() < need {
        return Err(invalid(format!(
            "B_{{{n},{k}}} needs {need} arguments, got {}",
            xs.len()
        )));
    }
    // Only x₁..x_{n−k+1} can appear; pad so the triangle recurrence can run.
    let mut padded: Vec<T> = xs[..need].to_vec();
    padded.resize(n, T::zero());
    Ok(bell_table(n, &padded)?[n][k].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn sample(n: usize) -> Vec<Rational> {
        (1..=n as i64).map(|i| r(2 * i + 1, i + 2)).collect()
    }

    #[test]
    fn degenerate_families() {
        for n in 1..=10 {
            let xs = sample(n);
            assert_eq!(bell_partial(n, 1, &xs).unwrap(), xs[n - 1]);
            let x1 = xs[0].clone();
            let pow = (0..n).fold(Rational::one(), |acc, _| acc * &x1);
            assert_eq!(bell_partial(n, n, &xs[..1]).unwrap(), pow);
        }
    }

    #[test]
    fn small_values() {
        let (x1, x2) = (r(2, 3), r(-5, 7));
        assert_eq!(bell_partial(3, 2, &[x1.clone(), x2.clone()]).unwrap(), r(3, 1) * x1 * x2);
        assert_eq!(bell_partial(0, 0, &[] as &[Rational]).unwrap(), r(1, 1));
        assert_eq!(bell_partial(4, 0, &sample(4)).unwrap(), r(0, 1));
        // B_{4,2} = 4x₁x₃ + 3x₂²
        let xs = sample(3);
        let expect = r(4, 1) * &xs[0] * &xs[2] + r(3, 1) * &xs[1] * &xs[1];
        assert_eq!(bell_partial(4, 2, &xs).unwrap(), expect);
    }

    #[test]
    fn counts_set_partitions() {
        // With all xᵢ = 1, B_{n,k} is the Stirling number of the second kind.
        let ones = vec![1.0f64; 10];
        let t = bell_table(10, &ones).unwrap();
        assert_eq!(t[5][2], 15.0);
        assert_eq!(t[10][3], 9330.0);
        let bell10: f64 = t[10].iter().sum();
        assert_eq!(bell10, 115_975.0);
    }

    #[test]
    fn short_argument_list_rejected() {
        assert!(bell_partial(5, 2, &sample(3)).is_err());
        assert!(bell_partial(2, 3, &sample(3)).is_err());
        assert!(bell_table(4, &sample(2)).is_err());
    }

    #[test]
    fn complex_matches_real() {
        let xs: Vec<Complex64> = (1..=6).map(|i| Complex64::new(i as f64 * 0.3, 0.0)).collect();
        let xr: Vec<f64> = xs.iter().map(|c| c.re).collect();
        for k in 1..=6 {
            let a = bell_partial(6, k, &xs).unwrap();
            let b = bell_partial(6, k, &xr).unwrap();
            assert!((a.re - b).abs() < 1e-12 && a.im == 0.0);
        }
    }
}
