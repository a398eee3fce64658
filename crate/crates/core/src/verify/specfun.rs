use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::One;

use super::{Case, Outcome};
use crate::arith::Rational;
use crate::oracle::{chained_difference_check, cos_minus_sin_series, exp_series, series_div};
use crate::specfun::trig::{cos_pi, sin_pi};
use crate::specfun::{
    bell_partial, cgamma, csc_series, digamma_rational, gamma_derivs, gamma_product_coprime,
    gamma_product_coprime_closed, glaisher_coefficients, hurwitz_zeta, polygamma, recip_gamma_derivs,
    sine_product_coprime, sine_product_coprime_closed, special_values_table, springer_number,
};

const COLUMNS: [&str; 5] = ["b-odd-third", "b-even", "e-quarter", "e-even", "e-odd-sixth"];

/// Reference values for rows `n = 0..=5`, columns as in [`COLUMNS`].
const SPECIAL_VALUES: [[&str; 5]; 6] = [
    ["-1/6", "1/6", "1", "1", "-1/3"],
    ["1/27", "-1/30", "-1/4", "-1", "23/108"],
    ["-5/243", "1/42", "-3/16", "5", "-1681/3888"],
    ["49/2187", "-1/30", "11/64", "-61", "257543/139968"],
    ["-809/19683", "5/66", "57/256", "1385", "-67637281/5038848"],
    ["20317/177147", "-691/2730", "-361/1024", "-50521", "27138236663/181398528"],
];

fn parse_rational(s: &str) -> Rational {
    s.parse().expect("well-formed reference rational")
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Sample points with `|z| ≤ 10` and non-integer real part.
fn gamma_samples() -> Vec<Complex64> {
    let mut out = Vec::new();
    for a in -8..=8 {
        for b in -6..=6 {
            let z = Complex64::new(1.2 * a as f64 + 0.37, 1.3 * b as f64);
            if z.norm() <= 10.0 {
                out.push(z);
            }
        }
    }
    out
}

pub(super) fn cases() -> Vec<Case> {
    let mut cases = Vec::new();

    for (n, row) in SPECIAL_VALUES.iter().enumerate() {
        for (col, expected) in COLUMNS.iter().zip(row) {
            let expected = parse_rational(expected);
            cases.push(Case::new(format!("specfun.special-values.{col}.n{n}"), "exact-rational", 0.0, move || {
                let t = &special_values_table(6)[n];
                let computed = match *col {
                    "b-odd-third" => t.b_odd_third.clone(),
                    "b-even" => t.b_even.clone(),
                    "e-quarter" => t.e_quarter.clone(),
                    "e-even" => Rational::from_integer(t.e_even.clone()),
                    _ => t.e_odd_sixth.clone(),
                };
                Ok(Outcome::exact(&computed, &expected))
            }));
        }
    }

    for n in 0..=10usize {
        cases.push(Case::new(format!("specfun.springer.n{n:02}"), "euler-poly-vs-series-division", 0.0, move || {
            let one = vec![Rational::one()];
            let series = series_div(&one, &cos_minus_sin_series(n + 1), n + 1)?;
            let fact: BigInt = (1..=n as u64).map(BigInt::from).product();
            let expected = &series[n] * Rational::from_integer(fact);
            Ok(Outcome::exact(&Rational::from_integer(springer_number(n)), &expected))
        }));
    }

    cases.push(Case::new("specfun.glaisher.order10", "bernoulli-poly-vs-series-division", 0.0, || {
        let len = 11;
        let mut den = exp_series(1, len);
        for (d, e) in den.iter_mut().zip(exp_series(-1, len)) {
            *d += e;
        }
        den[0] += Rational::one();
        let series = series_div(&[r(3, 2)], &den, len)?;
        let coeffs = glaisher_coefficients(len - 1);
        Ok(Outcome::worst(coeffs.iter().zip(&series).map(|(a, b)| Outcome::exact(a, b))))
    }));

    for n in 2..=60u64 {
        cases.push(Case::new(format!("specfun.gamma-product-coprime.n{n:02}"), "direct-vs-closed", 1e-10, move || {
            Ok(Outcome::rel(c(gamma_product_coprime(n)?), c(gamma_product_coprime_closed(n)?)))
        }));
    }
    for q in 3..=60u64 {
        cases.push(Case::new(format!("specfun.sine-product-coprime.q{q:02}"), "direct-vs-closed", 1e-10, move || {
            Ok(Outcome::rel(c(sine_product_coprime(q)?), c(sine_product_coprime_closed(q)?)))
        }));
    }

    cases.push(Case::new("specfun.gamma.reflection", "gamma-reflection", 1e-10, || {
        let mut out = Vec::new();
        for z in gamma_samples() {
            let lhs = cgamma(z)? * cgamma(1.0 - z)? * (PI * z).sin();
            out.push(Outcome::abs(lhs, c(PI)));
        }
        Ok(Outcome::worst(out))
    }));
    cases.push(Case::new("specfun.gamma.recurrence", "gamma-recurrence", 1e-12, || {
        let mut out = Vec::new();
        for z in gamma_samples() {
            out.push(Outcome::rel(cgamma(z + 1.0)?, z * cgamma(z)?));
        }
        Ok(Outcome::worst(out))
    }));
    cases.push(Case::new("specfun.gamma.i-times-minus-i", "gamma-vs-sinh", 1e-12, || {
        let i = Complex64::new(0.0, 1.0);
        let lhs = (cgamma(i)? * cgamma(-i)?).inv();
        Ok(Outcome::rel(lhs, c((PI.exp() - (-PI).exp()) / (2.0 * PI))))
    }));

    cases.push(Case::new("specfun.hurwitz.special-values", "hurwitz-zeta", 1e-12, || {
        Ok(Outcome::worst([
            Outcome::real(hurwitz_zeta(2.0, 1.0)?, PI * PI / 6.0),
            Outcome::real(hurwitz_zeta(4.0, 1.0)?, PI.powi(4) / 90.0),
            Outcome::real(hurwitz_zeta(2.0, 0.5)?, PI * PI / 2.0),
        ]))
    }));

    for q in 2..=50u64 {
        cases.push(Case::new(format!("specfun.digamma-reflection.q{q:02}"), "digamma-reflection", 1e-10, move || {
            let mut out = Vec::new();
            for j in 1..q {
                let x = j as f64 / q as f64;
                let lhs = digamma_rational(j, q)? - digamma_rational(q - j, q)?;
                out.push(Outcome::real(lhs, -PI * cos_pi(x) / sin_pi(x)));
            }
            Ok(Outcome::worst(out))
        }));
    }
    for q in 2..=20u64 {
        cases.push(Case::new(format!("specfun.trigamma-reflection.q{q:02}"), "trigamma-reflection", 1e-10, move || {
            let mut out = Vec::new();
            for j in 1..q {
                let x = j as f64 / q as f64;
                let lhs = polygamma(1, x)? + polygamma(1, 1.0 - x)?;
                out.push(Outcome::rel(c(lhs), c(PI * PI / sin_pi(x).powi(2))));
            }
            Ok(Outcome::worst(out))
        }));
    }

    for (name, y) in [("1-3", r(1, 3)), ("1-4", r(1, 4)), ("2-5", r(2, 5))] {
        let y2 = y.clone();
        cases.push(Case::new(format!("specfun.gamma-derivs.y{name}"), "faa-di-bruno-vs-differences", 1e-5, move || {
            let worst = chained_difference_check(&y, 5, |n, p| Ok(gamma_derivs(n, p)?.values))?;
            Ok(Outcome::real(worst, 0.0))
        }));
        cases.push(Case::new(format!("specfun.recip-gamma-derivs.y{name}"), "faa-di-bruno-vs-differences", 1e-5, move || {
            let worst = chained_difference_check(&y2, 5, |n, p| Ok(recip_gamma_derivs(n, p)?.values))?;
            Ok(Outcome::real(worst, 0.0))
        }));
    }

    cases.push(Case::new("specfun.bell.degenerate-families", "bell-recurrence", 0.0, || {
        let xs: Vec<Rational> = (1..=10).map(|i| r(i * i + 1, i + 2)).collect();
        let mut bad = 0;
        let mut checked = 0;
        for n in 1..=10usize {
            checked += 2;
            if bell_partial(n, 1, &xs[..n])? != xs[n - 1] {
                bad += 1;
            }
            let pow = (0..n).fold(Rational::one(), |acc, _| acc * &xs[0]);
            if bell_partial(n, n, &xs[..1])? != pow {
                bad += 1;
            }
        }
        checked += 1;
        if bell_partial(3, 2, &xs[..2])? != r(3, 1) * &xs[0] * &xs[1] {
            bad += 1;
        }
        Ok(Outcome::mismatches(bad, checked))
    }));

    cases.push(Case::new("specfun.csc-series.terms20", "laurent-vs-direct", 1e-8, || {
        Ok(Outcome::worst((-100..=100).filter(|&k| k != 0).map(|k| {
            let x = k as f64 / 100.0;
            Outcome::real(csc_series(x, 20), 1.0 / x.sin())
        })))
    }));

    cases
}
