use std::f64::consts::PI;

use num_complex::Complex64;

use super::{Case, Outcome};
use crate::arith::is_prime;
use crate::characters::{enumerate_characters, DirichletCharacter};
use crate::lseries::exponential::{half_units, sign_sum};
use crate::lseries::{
    csc_squared_sum, l1, l2_closed, ln_exponential, ln_small_conductor, lstar2_closed,
    lstar_small_conductor, quadratic_sum, star_recurrence_residual, BellExpansion, BruteExpansion,
    BRUTE_TERMS_PER_MODULUS, REAL_RESIDUE,
};
use crate::oracle::{cap_terms, quadratic_sum_direct};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn nonprincipal(q: u64) -> Vec<DirichletCharacter> {
    enumerate_characters(q)
        .unwrap_or_default()
        .into_iter()
        .filter(|ch| !ch.is_principal())
        .collect()
}

pub(super) fn cases() -> Vec<Case> {
    let mut cases = Vec::new();

    let spots: [(&str, usize, bool, f64); 6] = [
        ("4.1", 1, false, PI / 4.0),
        ("3.1", 1, false, PI / (3.0 * 3f64.sqrt())),
        ("4.1", 2, false, -PI * PI / 32.0),
        ("3.1", 2, true, 5.0 * PI * PI / 54.0),
        ("4.1", 2, true, 3.0 * PI * PI / 32.0),
        ("4.1", 3, false, -PI.powi(3) / 384.0),
    ];
    for (id, n, star, expected) in spots {
        let kind = if star { "star" } else { "plain" };
        cases.push(Case::new(format!("lseries.value.{id}.{kind}.n{n}"), "bell-vs-exact", 1e-12, move || {
            let ch = DirichletCharacter::parse(id)?;
            Ok(Outcome::abs(BellExpansion::new(&ch, n)?.value(n, star)?, c(expected)))
        }));
    }

    for q in 3..=12u64 {
        for ch in nonprincipal(q).into_iter().filter(|ch| ch.is_odd() && ch.conductor() == q) {
            cases.push(Case::new(format!("lseries.triangle.{}", ch.label()), "bell-vs-exp", 1e-9, move || {
                let e = BellExpansion::new(&ch, 6)?;
                let mut out = Vec::new();
                for n in 1..=6 {
                    out.push(Outcome::scaled(ln_exponential(&ch, n)?, e.value(n, false)?));
                }
                Ok(Outcome::worst(out))
            }));
        }
    }

    for q in [3u64, 4, 5, 6, 7, 8, 12] {
        for ch in nonprincipal(q) {
            cases.push(Case::new(format!("lseries.oracle.{}", ch.label()), "bell-vs-brute", 1e-4, move || {
                let e = BellExpansion::new(&ch, 4)?;
                let brute = BruteExpansion::new(&ch, 4, cap_terms(ch.modulus() * BRUTE_TERMS_PER_MODULUS))?;
                let mut out = Vec::new();
                for n in 1..=4 {
                    for star in [false, true] {
                        out.push(Outcome::abs(e.value(n, star)?, brute.value(n, star)));
                    }
                }
                Ok(Outcome::worst(out))
            }));
        }
    }

    for q in [3u64, 4, 6] {
        for star in [false, true] {
            let kind = if star { "star" } else { "plain" };
            cases.push(Case::new(format!("lseries.small-conductor.q{q}.{kind}"), "smallq-vs-bell", 1e-10, move || {
                let ch = nonprincipal(q).remove(0);
                let e = BellExpansion::new(&ch, 10)?;
                let mut out = Vec::new();
                for n in 1..=10 {
                    let exact = if star { lstar_small_conductor(q, n)? } else { ln_small_conductor(q, n)? };
                    out.push(Outcome::abs(e.value(n, star)?, c(exact)));
                }
                Ok(Outcome::worst(out))
            }));
        }
    }

    for q in 3..=12u64 {
        for ch in nonprincipal(q) {
            cases.push(Case::new(format!("lseries.recurrence.{}", ch.label()), "star-recurrence", 1e-9, move || {
                let mut out = Vec::new();
                for n in 1..=8 {
                    out.push(Outcome::abs(star_recurrence_residual(&ch, n)?, c(0.0)));
                }
                Ok(Outcome::worst(out))
            }));
        }
    }

    for q in 3..=30u64 {
        cases.push(Case::new(format!("lseries.square-identity.q{q:02}"), "digamma-closed", 1e-10, move || {
            let mut out = Vec::new();
            for ch in nonprincipal(q) {
                let a = l1(&ch)?;
                out.push(Outcome::abs(l2_closed(&ch)? + lstar2_closed(&ch)?, a * a));
            }
            Ok(Outcome::worst(out))
        }));
    }

    for q in (3..=50u64).filter(|&q| is_prime(q)) {
        cases.push(Case::new(format!("lseries.csc-squared.q{q:02}"), "csc-squared-sum", 1e-10, move || {
            Ok(Outcome::real(csc_squared_sum(q)?, (q * q - 1) as f64 / 6.0))
        }));
    }

    for q in 3..=12u64 {
        for ch in nonprincipal(q).into_iter().filter(|ch| ch.conductor() == q) {
            cases.push(Case::new(format!("lseries.quadratic-sum.{}", ch.label()), "csc-vs-direct-sum", 1e-6, move || {
                Ok(Outcome::abs(quadratic_sum(&ch), quadratic_sum_direct(&ch, cap_terms(1_000_000))))
            }));
        }
    }

    for q in 3..=12u64 {
        for ch in nonprincipal(q).into_iter().filter(|ch| ch.is_real()) {
            cases.push(Case::new(format!("lseries.real-values.{}", ch.label()), "imaginary-residue", REAL_RESIDUE, move || {
                let e = BellExpansion::new(&ch, 6)?;
                let mut out = Vec::new();
                for n in 1..=6 {
                    for star in [false, true] {
                        out.push(Outcome::real(e.value(n, star)?.im, 0.0));
                    }
                }
                Ok(Outcome::worst(out))
            }));
        }
    }

    for q in [5u64, 7, 13] {
        for ch in nonprincipal(q).into_iter().filter(|ch| !ch.is_real()) {
            cases.push(Case::new(format!("lseries.conjugation.{}", ch.label()), "conjugate-character", 1e-12, move || {
                let e = BellExpansion::new(&ch, 4)?;
                let f = BellExpansion::new(&ch.conjugate(), 4)?;
                let mut out = Vec::new();
                for n in 1..=4 {
                    out.push(Outcome::abs(f.value(n, false)?, e.value(n, false)?.conj()));
                }
                Ok(Outcome::worst(out))
            }));
        }
    }

    for q in [7u64, 11, 13] {
        for ch in nonprincipal(q).into_iter().filter(|ch| ch.is_odd()) {
            cases.push(Case::new(format!("lseries.unit-order.{}", ch.label()), "exp-order-independence", 1e-9, move || {
                let mut js = half_units(ch.modulus());
                let a = sign_sum(&ch, 5, &js);
                js.reverse();
                js.rotate_left(1);
                Ok(Outcome::scaled(sign_sum(&ch, 5, &js), a))
            }));
        }
    }

    cases
}
