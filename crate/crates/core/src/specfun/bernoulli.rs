//! Exact Bernoulli and Euler numbers and polynomials.
//!
//! Conventions follow the generating functions
//! `x·e^{zx}/(e^x − 1) = Σ Bₙ(z) xⁿ/n!` (so `B₁ = −½`) and
//! `2e^{zx}/(e^x + 1) = Σ Eₙ(z) xⁿ/n!`, with Euler numbers `Eₙ = 2ⁿ Eₙ(½)`.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::Rational;

const CACHE_SIZE: usize = 64;

/// Binomial coefficients `C(n, 0..=n)`.
pub(crate) fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one(); n + 1];
    for k in 1..n {
        row[k] = &row[k - 1] * BigInt::from(n - k + 1) / BigInt::from(k);
    }
    row
}

/// Bernoulli numbers `B₀..B_N` and Euler numbers `E₀..E_N`.
#[derive(Debug, Clone)]
pub struct BernoulliEulerCache {
    bernoulli: Vec<Rational>,
    euler: Vec<BigInt>,
}

impl BernoulliEulerCache {
    /// Builds both tables through index `n` by their convolution recurrences:
    /// `Σ_{k=0}^{m} C(m+1, k) B_k = 0` and `Σ_{k=0}^{m} C(2m, 2k) E_{2k} = 0`.
    pub fn new(n: usize) -> Self {
        let mut bernoulli: Vec<Rational> = Vec::with_capacity(n + 1);
        bernoulli.push(Rational::one());
        for m in 1..=n {
            let row = binomial_row(m + 1);
            let s: Rational = (0..m)
                .map(|k| Rational::from_integer(row[k].clone()) * &bernoulli[k])
                .sum();
            bernoulli.push(-s / Rational::from_integer(BigInt::from(m + 1)));
        }

        let mut euler = vec![BigInt::zero(); n + 1];
        euler[0] = BigInt::one();
        for m in 1..=n / 2 {
            let row = binomial_row(2 * m);
            let s: BigInt = (0..m).map(|k| &row[2 * k] * &euler[2 * k]).sum();
            euler[2 * m] = -s;
        }
        BernoulliEulerCache { bernoulli, euler }
    }

    pub fn len(&self) -> usize {
        self.bernoulli.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bernoulli.is_empty()
    }

    pub fn bernoulli(&self) -> &[Rational] {
        &self.bernoulli
    }

    pub fn euler(&self) -> &[BigInt] {
        &self.euler
    }
}

fn global() -> &'static BernoulliEulerCache {
    static CACHE: OnceLock<BernoulliEulerCache> = OnceLock::new();
    CACHE.get_or_init(|| BernoulliEulerCache::new(CACHE_SIZE))
}

fn with_cache<T>(n: usize, f: impl FnOnce(&BernoulliEulerCache) -> T) -> T {
    if n <= CACHE_SIZE {
        f(global())
    } else {
        f(&BernoulliEulerCache::new(n))
    }
}

pub fn bernoulli_number(n: usize) -> Rational {
    with_cache(n, |c| c.bernoulli[n].clone())
}

pub fn euler_number(n: usize) -> BigInt {
    with_cache(n, |c| c.euler[n].clone())
}

/// `Bₙ(x) = Σ_k C(n,k) B_k x^{n−k}`.
pub fn bernoulli_poly(n: usize, x: &Rational) -> Rational {
    with_cache(n, |c| {
        let row = binomial_row(n);
        let mut acc = Rational::zero();
        // Horner in x over descending k
        for k in 0..=n {
            acc = acc * x + Rational::from_integer(row[k].clone()) * &c.bernoulli[k];
        }
        acc
    })
}

/// `Eₙ(x)` from `Eₙ(x+1) + Eₙ(x) = 2xⁿ` expanded by Taylor's theorem:
/// `2Eₙ(x) = 2xⁿ − Σ_{k<n} C(n,k) E_k(x)`.
pub fn euler_poly(n: usize, x: &Rational) -> Rational {
    let two = Rational::from_integer(BigInt::from(2));
    let mut values: Vec<Rational> = Vec::with_capacity(n + 1);
    let mut x_pow = Rational::one();
    for m in 0..=n {
        let row = binomial_row(m);
        let s: Rational = (0..m)
            .map(|k| Rational::from_integer(row[k].clone()) * &values[k])
            .sum();
        values.push((&two * &x_pow - s) / &two);
        x_pow *= x;
    }
    values.pop().expect("at least E_0")
}

/// Springer number `Qₙ(1) = (−1)^{⌊(n+1)/2⌋} 4ⁿ Eₙ(¼)`, the n-th Maclaurin
/// coefficient of `1/(cos x − sin x)` times `n!`.
pub fn springer_number(n: usize) -> BigInt {
    let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
    let v = euler_poly(n, &quarter) * Rational::from_integer(BigInt::from(4).pow(n as u32));
    debug_assert!(v.is_integer());
    let v = v.to_integer();
    if n.div_ceil(2) % 2 == 1 {
        -v
    } else {
        v
    }
}

/// Coefficients `c_n` of `csc x = Σ_{n≥0} c_n x^{2n−1}`:
/// `c_n = (−1)^{n−1} · 2(2^{2n−1} − 1) · B_{2n} / (2n)!`.
pub fn csc_series_coefficients(terms: usize) -> Vec<Rational> {
    let mut fact = BigInt::one();
    (0..terms)
        .map(|n| {
            if n > 0 {
                fact *= BigInt::from((2 * n - 1) * (2 * n));
            }
            // 2(2^{2n−1} − 1) = 2^{2n} − 2
            let scale = BigInt::from(2).pow(2 * n as u32) - 2;
            let c = Rational::from_integer(scale) * bernoulli_number(2 * n)
                / Rational::from_integer(fact.clone());
            if n % 2 == 1 {
                c
            } else {
                -c
            }
        })
        .collect()
}

/// Partial sum of the Laurent series of `csc x` with `terms` coefficients.
pub fn csc_series(x: f64, terms: usize) -> f64 {
    let x2 = x * x;
    csc_series_coefficients(terms)
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * x2 + c.to_f64().unwrap_or(0.0))
        / x
}

/// Maclaurin coefficients through `x^max_order` of `(3/2)/(1 + eˣ + e⁻ˣ)`,
/// obtained as `−Σ 3^{2n+1}/(2n+1) · B_{2n+1}(⅓) · x^{2n}/(2n)!`.
pub fn glaisher_coefficients(max_order: usize) -> Vec<Rational> {
    let third = BigRational::new(BigInt::one(), BigInt::from(3));
    let mut out = vec![Rational::zero(); max_order + 1];
    let mut fact = BigInt::one();
    for n in 0..=max_order / 2 {
        if n > 0 {
            fact *= BigInt::from((2 * n - 1) * (2 * n));
        }
        let three_pow = Rational::from_integer(BigInt::from(3).pow(2 * n as u32 + 1));
        let c = three_pow * bernoulli_poly(2 * n + 1, &third)
            / Rational::from_integer(BigInt::from(2 * n + 1) * &fact);
        out[2 * n] = -c;
    }
    out
}

/// One row of the special values used by the small-conductor `L_n*` formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialValuesRow {
    pub n: usize,
    /// `B_{2n+1}(⅓)`
    pub b_odd_third: Rational,
    /// `B_{2n+2}`
    pub b_even: Rational,
    /// `E_n(¼)`
    pub e_quarter: Rational,
    /// `E_{2n}`
    pub e_even: BigInt,
    /// `E_{2n+1}(⅙)`
    pub e_odd_sixth: Rational,
}

impl SpecialValuesRow {
    pub const HEADER: [&'static str; 6] = ["n", "B_{2n+1}(1/3)", "B_{2n+2}", "E_n(1/4)", "E_{2n}", "E_{2n+1}(1/6)"];

    /// The five values as `"num/den"` strings, in [`Self::HEADER`] order after `n`.
    pub fn formatted(&self) -> [String; 5] {
        [
            format_rational(&self.b_odd_third),
            format_rational(&self.b_even),
            format_rational(&self.e_quarter),
            self.e_even.to_string(),
            format_rational(&self.e_odd_sixth),
        ]
    }
}

/// Rows `n = 0..rows` of the special values.
pub fn special_values_table(rows: usize) -> Vec<SpecialValuesRow> {
    let third = BigRational::new(BigInt::one(), BigInt::from(3));
    let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
    let sixth = BigRational::new(BigInt::one(), BigInt::from(6));
    (0..rows)
        .map(|n| SpecialValuesRow {
            n,
            b_odd_third: bernoulli_poly(2 * n + 1, &third),
            b_even: bernoulli_number(2 * n + 2),
            e_quarter: euler_poly(n, &quarter),
            e_even: euler_number(2 * n),
            e_odd_sixth: euler_poly(2 * n + 1, &sixth),
        })
        .collect()
}

/// Rational as `"num/den"` (or just `"num"` for integers).
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
