//! `L_n` and `L_n*` as sums over weak compositions of `n` indexed by the
//! units mod `q`:
//!
//! ```text
//! L_n  = (1/qⁿ)      Σ* Π_j χ(j)^{k_j}/k_j! · Σ_k (−1)^k B_{k_j,k}(ψ(j/q), ψ₁(j/q), …)
//! L_n* = ((−1)ⁿ/qⁿ)  Σ* Π_j χ(j)^{k_j}/k_j! · Σ_k        B_{k_j,k}(ψ(j/q), ψ₁(j/q), …)
//! ```
//!
//! A slot with `k_j = 0` contributes 1.

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::arith::{gcd, Rational};
use crate::characters::DirichletCharacter;
use crate::error::{invalid, Error, Result};
use crate::specfun::{bell_sums, polygamma_values};

/// Work limits for the composition sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BellLimits {
    pub max_order: usize,
    pub max_compositions: u128,
}

impl Default for BellLimits {
    fn default() -> Self {
        BellLimits { max_order: 12, max_compositions: 20_000_000 }
    }
}

/// Every tuple of `slots` nonnegative integers summing to `target`, in
/// reverse lexicographic order starting from `(target, 0, …, 0)`.
#[derive(Debug, Clone)]
pub struct CompositionIterator {
    current: Option<Vec<usize>>,
}

impl CompositionIterator {
    pub fn new(slots: usize, target: usize) -> Self {
        let current = match slots {
            0 if target > 0 => None,
            0 => Some(Vec::new()),
            _ => {
                let mut v = vec![0; slots];
                v[0] = target;
                Some(v)
            }
        };
        CompositionIterator { current }
    }

    fn advance(c: &mut [usize]) -> bool {
        let s = c.len();
        if s < 2 {
            return false;
        }
        let Some(i) = (0..s - 1).rev().find(|&i| c[i] > 0) else {
            return false;
        };
        c[i] -= 1;
        let carry = c[s - 1] + 1;
        c[s - 1] = 0;
        c[i + 1] = carry;
        true
    }
}

impl Iterator for CompositionIterator {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        if Self::advance(&mut next) {
            self.current = Some(next);
        }
        Some(out)
    }
}

/// `C(target + slots − 1, slots − 1)`, saturating.
pub fn composition_count(slots: usize, target: usize) -> u128 {
    if slots == 0 {
        return u128::from(target == 0);
    }
    let (n, k) = ((target + slots - 1) as u128, (slots - 1).min(target) as u128);
    let mut c: u128 = 1;
    for i in 0..k {
        c = match c.checked_mul(n - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    c
}

/// Per-unit factors `χ(j)^m/(m! qᵐ) · Σ_k σ^k B_{m,k}(…)` for `m = 0..=order`,
/// computed once and shared by every composition.
#[derive(Debug, Clone)]
pub struct BellExpansion {
    order: usize,
    limits: BellLimits,
    plain: Vec<Vec<Complex64>>,
    star: Vec<Vec<Complex64>>,
}

impl BellExpansion {
    pub fn new(chi: &DirichletCharacter, order: usize) -> Result<Self> {
        Self::with_limits(chi, order, BellLimits::default())
    }

    pub fn with_limits(chi: &DirichletCharacter, order: usize, limits: BellLimits) -> Result<Self> {
        chi.require_nonprincipal("Bell-polynomial L-series")?;
        if order == 0 {
            return Err(invalid("L-series order must be >= 1"));
        }
        if order > limits.max_order {
            return Err(Error::TooLarge(format!(
                "order {order} exceeds the configured maximum {}",
                limits.max_order
            )));
        }
        let q = chi.modulus();
        let mut plain = Vec::new();
        let mut star = Vec::new();
        for j in (1..q).filter(|&j| gcd(j, q) == 1) {
            let y = Rational::new(j.into(), q.into());
            let xs = polygamma_values(&y, order)?;
            let signed = bell_sums(&xs, order, true)?;
            let unsigned = bell_sums(&xs, order, false)?;
            let c = chi.evaluate(j as i64);
            let mut scale = Complex64::one();
            let mut p = Vec::with_capacity(order + 1);
            let mut s = Vec::with_capacity(order + 1);
            for m in 0..=order {
                if m > 0 {
                    scale *= c / (m as f64 * q as f64);
                }
                p.push(scale * signed[m]);
                s.push(scale * unsigned[m]);
            }
            plain.push(p);
            star.push(s);
        }
        Ok(BellExpansion { order, limits, plain, star })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `L_n` (or `L_n*` when `star`) for `1 ≤ n ≤ order`.
    pub fn value(&self, n: usize, star: bool) -> Result<Complex64> {
        if n == 0 || n > self.order {
            return Err(invalid(format!("order {n} outside 1..={}", self.order)));
        }
        let count = composition_count(self.plain.len(), n);
        if count > self.limits.max_compositions {
            return Err(Error::TooLarge(format!(
                "{count} compositions of {n} into {} parts exceed the limit {}",
                self.plain.len(),
                self.limits.max_compositions
            )));
        }
        let table = if star { &self.star } else { &self.plain };
        let sum = sweep(table, 0, n, Complex64::one());
        Ok(if star && n % 2 == 1 { -sum } else { sum })
    }

    /// The same sum taken literally over [`CompositionIterator`].
    pub fn value_by_iterator(&self, n: usize, star: bool) -> Complex64 {
        let table = if star { &self.star } else { &self.plain };
        let sum: Complex64 = CompositionIterator::new(table.len(), n)
            .map(|ks| ks.iter().zip(table).map(|(&k, row)| row[k]).product::<Complex64>())
            .sum();
        if star && n % 2 == 1 {
            -sum
        } else {
            sum
        }
    }
}

/// Depth-first sum over compositions, carrying the partial product.
fn sweep(table: &[Vec<Complex64>], slot: usize, remaining: usize, acc: Complex64) -> Complex64 {
    let row = &table[slot];
    if slot + 1 == table.len() {
        return acc * row[remaining];
    }
    let mut total = Complex64::zero();
    for k in 0..=remaining {
        total += sweep(table, slot + 1, remaining - k, acc * row[k]);
    }
    total
}

pub fn ln_bell(chi: &DirichletCharacter, n: usize) -> Result<Complex64> {
    BellExpansion::new(chi, n)?.value(n, false)
}

pub fn lstar_n_bell(chi: &DirichletCharacter, n: usize) -> Result<Complex64> {
    BellExpansion::new(chi, n)?.value(n, true)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;
    use std::f64::consts::PI;

    use super::*;
    use crate::characters::enumerate_characters;
    use crate::lseries::closed::{l1, l2_closed, lstar2_closed};

    fn chi(id: &str) -> DirichletCharacter {
        DirichletCharacter::parse(id).unwrap()
    }

    #[test]
    fn compositions_are_exhaustive_and_distinct() {
        for slots in 0..6 {
            for target in 0..7 {
                let all: Vec<Vec<usize>> = CompositionIterator::new(slots, target).collect();
                let set: HashSet<Vec<usize>> = all.iter().cloned().collect();
                assert_eq!(all.len(), set.len());
                assert_eq!(all.len() as u128, composition_count(slots, target), "{slots} {target}");
                assert!(all.iter().all(|c| c.len() == slots && c.iter().sum::<usize>() == target));
            }
        }
        assert_eq!(composition_count(28, 12), 3_910_797_436);
    }

    #[test]
    fn small_examples() {
        let v = ln_bell(&chi("chi-4"), 1).unwrap();
        assert!((v - PI / 4.0).norm() < 1e-14);
        let v = ln_bell(&chi("chi3"), 2).unwrap();
        assert!((v + 0.5 * (PI / 3.0).powi(2)).norm() < 1e-14);
        let v = lstar_n_bell(&chi("chi-4"), 2).unwrap();
        assert!((v - 3.0 * PI * PI / 32.0).norm() < 1e-14);
        let v = lstar_n_bell(&chi("chi3"), 2).unwrap();
        assert!((v - 5.0 * PI * PI / 54.0).norm() < 1e-14);
    }

    #[test]
    fn first_two_orders_match_digamma_forms() {
        for q in 3..=16 {
            for c in enumerate_characters(q).unwrap().into_iter().skip(1) {
                let e = BellExpansion::new(&c, 2).unwrap();
                assert!((e.value(1, false).unwrap() - l1(&c).unwrap()).norm() < 1e-12);
                assert!((e.value(1, true).unwrap() - l1(&c).unwrap()).norm() < 1e-12);
                assert!((e.value(2, false).unwrap() - l2_closed(&c).unwrap()).norm() < 1e-10);
                assert!((e.value(2, true).unwrap() - lstar2_closed(&c).unwrap()).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn sweep_matches_literal_iteration() {
        let c = chi("7.1");
        let e = BellExpansion::new(&c, 5).unwrap();
        for n in 1..=5 {
            for star in [false, true] {
                let a = e.value(n, star).unwrap();
                let b = e.value_by_iterator(n, star);
                assert!((a - b).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn limits_enforced() {
        assert!(matches!(ln_bell(&chi("chi3"), 13), Err(Error::TooLarge(_))));
        let tight = BellLimits { max_order: 12, max_compositions: 10 };
        let e = BellExpansion::with_limits(&chi("13.1"), 4, tight).unwrap();
        assert!(matches!(e.value(4, false), Err(Error::TooLarge(_))));
        assert!(ln_bell(&chi("chi3"), 0).is_err());
        assert!(ln_bell(&chi("5.0"), 1).is_err());
    }
}
