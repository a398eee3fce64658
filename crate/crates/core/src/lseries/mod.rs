//! Multiple L-series `L_n(χ) = Σ_{k₁<⋯<k_n} Π χ(k_i)/k_i` and the star
//! variant `L_n*(χ)` over `k₁ ≤ ⋯ ≤ k_n`. They are the coefficients of
//!
//! ```text
//! Π_{k≥1} (1 − χ(k)z/k)      = 1 + Σ (−1)ⁿ L_n(χ) zⁿ
//! Π_{k≥1} (1 − χ(k)z/k)^{−1} = 1 + Σ L_n*(χ) zⁿ
//! ```
//!
//! so `L_n* + Σ_{j=1}^{n−1} (−1)^j L_j L_{n−j}* + (−1)ⁿ L_n = 0`.

pub mod bell;
pub mod brute;
pub mod closed;
pub mod exponential;

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::characters::DirichletCharacter;
use crate::error::{invalid, Error, Result};
use crate::oracle::cap_terms;

pub use bell::{composition_count, ln_bell, lstar_n_bell, BellExpansion, BellLimits, CompositionIterator};
pub use brute::{ln_brute, lstar_brute, BruteExpansion, BRUTE_TERMS_PER_MODULUS};
pub use closed::{
    csc_squared_sum, l1, l1_cot, l2_closed, l2_cot, ln_small_conductor, ln_small_conductor_exact,
    lstar2_closed, lstar_small_conductor, lstar_small_conductor_exact, quadratic_sum, PiMultiple,
};
pub use exponential::{half_units, ln_exponential, SignVector, MAX_SIGN_SLOTS};

/// Imaginary residue below which values for real characters are set to zero.
pub const REAL_RESIDUE: f64 = 1e-10;

/// How an L-series value was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MethodTag {
    /// Composition sum of Bell polynomials in polygamma values.
    Bell,
    /// Sign-vector exponential sum (odd characters).
    Exp,
    /// Exact values for moduli 3, 4, 6.
    Smallq,
    /// Truncated generating function.
    Brute,
    /// Digamma/trigamma sums (`n ≤ 2`).
    Digamma,
    /// Cotangent/cosecant sums (`n ≤ 2`, odd characters).
    Cot,
}

impl MethodTag {
    pub const ALL: [MethodTag; 6] = [
        MethodTag::Bell,
        MethodTag::Exp,
        MethodTag::Smallq,
        MethodTag::Brute,
        MethodTag::Digamma,
        MethodTag::Cot,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MethodTag::Bell => "bell",
            MethodTag::Exp => "exp",
            MethodTag::Smallq => "smallq",
            MethodTag::Brute => "brute",
            MethodTag::Digamma => "digamma",
            MethodTag::Cot => "cot",
        }
    }
}

impl fmt::Display for MethodTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MethodTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MethodTag::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| invalid(format!("unknown L-series method `{s}`")))
    }
}

/// One computed value of `L_n(χ)` or `L_n*(χ)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LSeriesValue {
    pub n: usize,
    pub chi_id: String,
    pub star: bool,
    #[serde(with = "crate::complex_serde")]
    pub value: Complex64,
    pub method_tag: MethodTag,
}

impl LSeriesValue {
    /// Wraps `value`, zeroing a residual imaginary part when `χ` is real.
    pub fn new(chi: &DirichletCharacter, n: usize, star: bool, value: Complex64, method_tag: MethodTag) -> Self {
        LSeriesValue {
            n,
            chi_id: chi.label(),
            star,
            value: realify(chi, value),
            method_tag,
        }
    }
}

pub(crate) fn realify(chi: &DirichletCharacter, z: Complex64) -> Complex64 {
    if chi.is_real() && z.im.abs() < REAL_RESIDUE {
        Complex64::new(z.re, 0.0)
    } else {
        z
    }
}

/// `L₁*, …, L_n*` from `L₁, …, L_n` by the recurrence in the module docs.
pub fn star_from_plain(plain: &[Complex64]) -> Vec<Complex64> {
    let mut star: Vec<Complex64> = Vec::with_capacity(plain.len());
    for n in 1..=plain.len() {
        let mut s = if n % 2 == 0 { plain[n - 1] } else { -plain[n - 1] };
        for j in 1..n {
            let term = plain[j - 1] * star[n - j - 1];
            s += if j % 2 == 0 { term } else { -term };
        }
        star.push(-s);
    }
    star
}

/// `L_n* + Σ_{j=1}^{n−1} (−1)^j L_j L_{n−j}* + (−1)ⁿ L_n` from the Bell sums.
pub fn star_recurrence_residual(chi: &DirichletCharacter, n: usize) -> Result<Complex64> {
    let e = BellExpansion::new(chi, n)?;
    let plain: Vec<Complex64> = (1..=n).map(|m| e.value(m, false)).collect::<Result<_>>()?;
    let star: Vec<Complex64> = (1..=n).map(|m| e.value(m, true)).collect::<Result<_>>()?;
    let mut r = star[n - 1] + if n.is_multiple_of(2) { plain[n - 1] } else { -plain[n - 1] };
    for j in 1..n {
        let term = plain[j - 1] * star[n - j - 1];
        r += if j % 2 == 0 { term } else { -term };
    }
    Ok(r)
}

/// Whether `method` applies to `(χ, n)`, with the reason when it does not.
pub fn check_applicable(chi: &DirichletCharacter, n: usize, method: MethodTag) -> Result<()> {
    chi.require_nonprincipal("L-series")?;
    if n == 0 {
        return Err(invalid("L-series order must be >= 1"));
    }
    match method {
        MethodTag::Bell | MethodTag::Brute => Ok(()),
        MethodTag::Exp => chi.require_odd("the exponential-sum method"),
        MethodTag::Smallq => match closed::small_conductor_modulus(chi) {
            Some(_) => Ok(()),
            None => Err(Error::Hypothesis(format!(
                "the small-conductor method needs the nonprincipal character mod 3, 4 or 6, got {}",
                chi.label()
            ))),
        },
        MethodTag::Digamma | MethodTag::Cot if n > 2 => Err(Error::Hypothesis(format!(
            "the {method} method covers n = 1, 2 only, got n = {n}"
        ))),
        MethodTag::Digamma => Ok(()),
        MethodTag::Cot => chi.require_odd("the cotangent method"),
    }
}

/// `L_n(χ)` or `L_n*(χ)` by one method. `terms` overrides `K` for [`MethodTag::Brute`].
pub fn evaluate(
    chi: &DirichletCharacter,
    n: usize,
    star: bool,
    method: MethodTag,
    terms: Option<u64>,
) -> Result<LSeriesValue> {
    check_applicable(chi, n, method)?;
    let value = match method {
        MethodTag::Bell => BellExpansion::new(chi, n)?.value(n, star)?,
        MethodTag::Exp => {
            let plain: Vec<Complex64> = (1..=n).map(|m| ln_exponential(chi, m)).collect::<Result<_>>()?;
            if star {
                star_from_plain(&plain)[n - 1]
            } else {
                plain[n - 1]
            }
        }
        MethodTag::Smallq => {
            let q = chi.modulus();
            let v = if star { lstar_small_conductor(q, n)? } else { ln_small_conductor(q, n)? };
            Complex64::new(v, 0.0)
        }
        MethodTag::Brute => {
            let k = cap_terms(terms.unwrap_or(chi.modulus() * BRUTE_TERMS_PER_MODULUS));
            BruteExpansion::new(chi, n, k)?.value(n, star)
        }
        MethodTag::Digamma => match (n, star) {
            (1, _) => l1(chi)?,
            (_, false) => l2_closed(chi)?,
            (_, true) => lstar2_closed(chi)?,
        },
        MethodTag::Cot => {
            let a = l1_cot(chi)?;
            match (n, star) {
                (1, _) => a,
                (_, false) => l2_cot(chi)?,
                (_, true) => a * a - l2_cot(chi)?,
            }
        }
    };
    Ok(LSeriesValue::new(chi, n, star, value, method))
}

/// Every applicable method, in [`MethodTag::ALL`] order.
pub fn evaluate_all(
    chi: &DirichletCharacter,
    n: usize,
    star: bool,
    terms: Option<u64>,
) -> Result<Vec<LSeriesValue>> {
    chi.require_nonprincipal("L-series")?;
    MethodTag::ALL
        .into_iter()
        .filter(|&m| check_applicable(chi, n, m).is_ok())
        .map(|m| evaluate(chi, n, star, m, terms))
        .collect()
}

/// Largest `|a − b|` over all pairs.
pub fn max_pairwise_discrepancy(values: &[LSeriesValue]) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, a) in values.iter().enumerate() {
        for b in &values[i + 1..] {
            worst = worst.max((a.value - b.value).norm());
        }
    }
    worst
}
