//! Elementary number theory on machine integers: factorization by trial
//! division, totient, Möbius, prime-power detection, the normalizing constant
//! `ε(q)`, and closed forms for the coprime index sums `S₁(m)` and `S₂(m)`.
//!
//! Inputs are expected to stay at desk scale (`n ≤ 10⁶` or so); nothing here
//! goes beyond trial division.

use num_rational::BigRational;

use crate::error::{invalid, Result};

/// Exact rational number in lowest terms with positive denominator.
pub type Rational = BigRational;

/// A prime power `p^nu` with `nu ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimePower {
    pub p: u64,
    pub nu: u32,
}

impl PrimePower {
    pub fn value(&self) -> u64 {
        self.p.pow(self.nu)
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Prime factorization `n = Π p^e` with primes in ascending order.
/// `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorize expects a positive integer");
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && matches!(factorize(n).as_slice(), [(_, 1)])
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Möbius function; `0` exactly when `n` has a squared prime factor.
pub fn moebius(n: u64) -> i8 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn is_square_free(n: u64) -> bool {
    moebius(n) != 0
}

/// `Some(p^ν)` when `n` is a power of a single prime.
pub fn prime_power(n: u64) -> Result<Option<PrimePower>> {
    if n < 2 {
        return Err(invalid(format!("prime_power needs n >= 2, got {n}")));
    }
    let f = factorize(n);
    Ok(match f.as_slice() {
        [(p, nu)] => Some(PrimePower { p: *p, nu: *nu }),
        _ => None,
    })
}

/// `ε(q) = √p` when `q = p^ν`, otherwise `1`.
pub fn epsilon_q(q: u64) -> Result<f64> {
    if q < 2 {
        return Err(invalid(format!("epsilon_q needs q >= 2, got {q}")));
    }
    Ok(match prime_power(q)? {
        Some(pp) => (pp.p as f64).sqrt(),
        None => 1.0,
    })
}

/// All positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Residues `1 ≤ j ≤ m−1` coprime to `m`, ascending.
pub fn coprime_residues(m: u64) -> Vec<u64> {
    (1..m).filter(|&j| gcd(j, m) == 1).collect()
}

/// Sum of the residues in `[1, m−1]` coprime to `m`: `S₁(m) = m·φ(m)/2`.
pub fn s1(m: u64) -> Result<u64> {
    if m < 2 {
        return Err(invalid(format!("s1 needs m >= 2, got {m}")));
    }
    Ok(m * euler_phi(m) / 2)
}

/// Sum of the residues in `[1, ⌊m/2⌋]` coprime to `m`, by the closed forms:
///
/// * odd `m` with distinct primes `p₁…p_r`: `(m·φ(m) − Π(1−pᵢ)) / 8`;
/// * `4 | m`: `m·φ(m) / 8`;
/// * `m = 2m'` with `m'` odd: `m·φ(m)/4 − 2·S₂(m')` (and `S₂(2) = 1`).
pub fn s2(m: u64) -> Result<u64> {
    if m < 2 {
        return Err(invalid(format!("s2 needs m >= 2, got {m}")));
    }
    let m_phi = (m as i128) * (euler_phi(m) as i128);
    let value = if m % 2 == 1 {
        let radical_term: i128 = factorize(m)
            .iter()
            .map(|&(p, _)| 1 - p as i128)
            .product();
        (m_phi - radical_term) / 8
    } else if m.is_multiple_of(4) {
        m_phi / 8
    } else if m == 2 {
        // m' = 1 falls outside the recursion's range.
        1
    } else {
        m_phi / 4 - 2 * s2(m / 2)? as i128
    };
    Ok(value as u64)
}

/// Ramanujan sum `c_m(r) = Σ_{gcd(j,m)=1} cos(2πjr/m) = Σ_{d | gcd(m,r)} μ(m/d)·d`.
pub fn ramanujan_sum(m: u64, r: u64) -> i64 {
    divisors(gcd(m, r))
        .into_iter()
        .map(|d| moebius(m / d) as i64 * d as i64)
        .sum()
}

/// `a^e mod m` without overflow for `m < 2⁶³`.
pub fn pow_mod(a: u64, mut e: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut acc: u128 = 1 % m128;
    let mut base = (a % m) as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m128;
        }
        base = base * base % m128;
        e >>= 1;
    }
    acc as u64
}

/// Inverse of `a` modulo `m` when `gcd(a, m) = 1`.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s1_brute(m: u64) -> u64 {
        coprime_residues(m).iter().sum()
    }

    fn s2_brute(m: u64) -> u64 {
        (1..=m / 2).filter(|&j| gcd(j, m) == 1).sum()
    }

    #[test]
    fn totient_examples() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(4), 2);
        assert_eq!(euler_phi(12), 4);
        for n in 1..300u64 {
            assert_eq!(euler_phi(n), (1..=n).filter(|&j| gcd(j, n) == 1).count() as u64);
        }
    }

    #[test]
    fn moebius_examples() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(6), 1);
        assert_eq!(moebius(12), 0);
        assert_eq!(moebius(30), -1);
    }

    #[test]
    fn prime_power_examples() {
        assert_eq!(prime_power(8).unwrap(), Some(PrimePower { p: 2, nu: 3 }));
        assert_eq!(prime_power(6).unwrap(), None);
        assert_eq!(prime_power(49).unwrap(), Some(PrimePower { p: 7, nu: 2 }));
        assert!(prime_power(1).is_err());
        assert!(prime_power(0).is_err());
    }

    #[test]
    fn epsilon_examples() {
        assert!((epsilon_q(4).unwrap() - 2f64.sqrt()).abs() < 1e-15);
        assert!((epsilon_q(5).unwrap() - 5f64.sqrt()).abs() < 1e-15);
        assert_eq!(epsilon_q(6).unwrap(), 1.0);
        assert!(epsilon_q(1).is_err());
    }

    #[test]
    fn s1_examples() {
        assert_eq!(s1(4).unwrap(), 4);
        assert_eq!(s1(5).unwrap(), 10);
        assert_eq!(s1(9).unwrap(), 27);
        assert!(s1(1).is_err());
    }

    #[test]
    fn s2_examples() {
        assert_eq!(s2(4).unwrap(), 1);
        assert_eq!(s2(12).unwrap(), 6);
        // 1 + 2 + 4 + 7
        assert_eq!(s2(15).unwrap(), 14);
        assert_eq!(s2(2).unwrap(), 1);
        assert_eq!(s2(6).unwrap(), 1);
    }

    #[test]
    fn s1_s2_match_brute_force() {
        for m in 2..=10_000 {
            assert_eq!(s1(m).unwrap(), s1_brute(m), "s1({m})");
            assert_eq!(s2(m).unwrap(), s2_brute(m), "s2({m})");
        }
    }

    #[test]
    fn quarter_sum_residue_table() {
        for m in (4..=2000u64).step_by(4) {
            let r = (4 * s2(m).unwrap() / m) % 4;
            let rest = m / 4;
            let expected = if m == 4 {
                1
            } else if m == 8 {
                2
            } else if rest % 2 == 1
                && prime_power(rest)
                    .ok()
                    .flatten()
                    .is_some_and(|pp| pp.p % 4 == 3)
            {
                2
            } else {
                0
            };
            assert_eq!(4 * s2(m).unwrap() % m, 0);
            assert_eq!(r, expected, "m = {m}");
        }
    }

    #[test]
    fn ramanujan_sum_matches_cosines() {
        for m in 2..40u64 {
            for r in 0..12u64 {
                let direct: f64 = coprime_residues(m)
                    .iter()
                    .map(|&j| (2.0 * std::f64::consts::PI * (j * r) as f64 / m as f64).cos())
                    .sum();
                assert!((direct - ramanujan_sum(m, r) as f64).abs() < 1e-9, "c_{m}({r})");
            }
        }
    }

    #[test]
    fn modular_helpers() {
        assert_eq!(pow_mod(3, 4, 7), 4);
        assert_eq!(inv_mod(3, 7), Some(5));
        assert_eq!(inv_mod(2, 4), None);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn totient_multiplicative(m in 1u64..5000, n in 1u64..5000) {
                prop_assume!(gcd(m, n) == 1);
                prop_assert_eq!(euler_phi(m * n), euler_phi(m) * euler_phi(n));
            }

            #[test]
            fn moebius_zero_iff_square_factor(n in 1u64..100_000) {
                let has_square = (2..).take_while(|d| d * d <= n).any(|d| n % (d * d) == 0);
                prop_assert_eq!(moebius(n) == 0, has_square);
            }
        }
    }
}
