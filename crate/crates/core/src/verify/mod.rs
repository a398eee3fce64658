//! The verification battery: every closed form checked against an
//! independent reference, grouped into suites.
//!
//! Cases run in parallel and are sorted by `case_id`, so the report is
//! deterministic apart from `summary.wall_time_ms`.

mod cyclotomic;
mod lseries;
mod products;
mod specfun;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::error::{invalid, Error, Result};
use crate::oracle::rational_to_f64;

/// A group of verification cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Specfun,
    Products,
    Lseries,
    Cyclotomic,
}

impl Suite {
    pub const NAMES: [&'static str; 5] = ["all", "specfun", "products", "lseries", "cyclotomic"];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Specfun => "specfun",
            Suite::Products => "products",
            Suite::Lseries => "lseries",
            Suite::Cyclotomic => "cyclotomic",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "specfun" => Ok(Suite::Specfun),
            "products" => Ok(Suite::Products),
            "lseries" => Ok(Suite::Lseries),
            "cyclotomic" => Ok(Suite::Cyclotomic),
            _ => Err(invalid(format!("unknown suite `{s}`; expected one of {}", Suite::NAMES.join(", ")))),
        }
    }
}

/// Outcome of one case. `pass` holds exactly when `discrepancy <= tolerance`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseResult {
    pub case_id: String,
    pub method_tag: String,
    #[serde(with = "crate::complex_serde")]
    pub closed_form: Complex64,
    #[serde(with = "crate::complex_serde")]
    pub oracle: Complex64,
    pub discrepancy: f64,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub wall_time_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub cases: Vec<CaseResult>,
    pub summary: Summary,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.pass)
    }
}

/// What a case computed: the value under test, the reference, and the
/// discrepancy between them.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Outcome {
    closed: Complex64,
    oracle: Complex64,
    discrepancy: f64,
}

impl Outcome {
    pub(crate) fn abs(closed: Complex64, oracle: Complex64) -> Self {
        Outcome { closed, oracle, discrepancy: (closed - oracle).norm() }
    }

    pub(crate) fn real(closed: f64, oracle: f64) -> Self {
        Self::abs(Complex64::new(closed, 0.0), Complex64::new(oracle, 0.0))
    }

    /// `|closed − oracle| / |oracle|`.
    pub(crate) fn rel(closed: Complex64, oracle: Complex64) -> Self {
        let d = (closed - oracle).norm() / oracle.norm().max(f64::MIN_POSITIVE);
        Outcome { closed, oracle, discrepancy: d }
    }

    /// `|closed − oracle| / max(1, |oracle|)`.
    pub(crate) fn scaled(closed: Complex64, oracle: Complex64) -> Self {
        let d = (closed - oracle).norm() / oracle.norm().max(1.0);
        Outcome { closed, oracle, discrepancy: d }
    }

    /// Exact comparison; any difference counts as at least the smallest positive double.
    pub(crate) fn exact(computed: &Rational, expected: &Rational) -> Self {
        let d = if computed == expected {
            0.0
        } else {
            rational_to_f64(&(computed - expected)).abs().max(f64::MIN_POSITIVE)
        };
        Outcome {
            closed: Complex64::new(rational_to_f64(computed), 0.0),
            oracle: Complex64::new(rational_to_f64(expected), 0.0),
            discrepancy: d,
        }
    }

    /// A count of mismatches found by an exhaustive comparison.
    pub(crate) fn mismatches(count: usize, checked: usize) -> Self {
        Outcome {
            closed: Complex64::new((checked - count) as f64, 0.0),
            oracle: Complex64::new(checked as f64, 0.0),
            discrepancy: count as f64,
        }
    }

    /// The worst of several outcomes.
    pub(crate) fn worst(items: impl IntoIterator<Item = Outcome>) -> Self {
        items
            .into_iter()
            .fold(None::<Outcome>, |acc, o| match acc {
                Some(a) if !(o.discrepancy > a.discrepancy) && !o.discrepancy.is_nan() => Some(a),
                _ => Some(o),
            })
            .unwrap_or(Outcome { closed: Complex64::new(0.0, 0.0), oracle: Complex64::new(0.0, 0.0), discrepancy: 0.0 })
    }
}

type Eval = Box<dyn Fn() -> Result<Outcome> + Send + Sync>;

pub(crate) struct Case {
    id: String,
    tag: &'static str,
    tolerance: f64,
    eval: Eval,
}

impl Case {
    pub(crate) fn new(
        id: impl Into<String>,
        tag: &'static str,
        tolerance: f64,
        eval: impl Fn() -> Result<Outcome> + Send + Sync + 'static,
    ) -> Self {
        Case { id: id.into(), tag, tolerance, eval: Box::new(eval) }
    }

    fn run(&self) -> CaseResult {
        let (outcome, error) = match (self.eval)() {
            Ok(o) => (o, None),
            Err(e) => (
                Outcome { closed: Complex64::new(0.0, 0.0), oracle: Complex64::new(0.0, 0.0), discrepancy: f64::MAX },
                Some(e.to_string()),
            ),
        };
        let finite = |z: Complex64| z.re.is_finite() && z.im.is_finite();
        let (closed, oracle, discrepancy, error) =
            if finite(outcome.closed) && finite(outcome.oracle) && outcome.discrepancy.is_finite() {
                (outcome.closed, outcome.oracle, outcome.discrepancy, error)
            } else {
                let zero = Complex64::new(0.0, 0.0);
                (zero, zero, f64::MAX, error.or_else(|| Some("non-finite value".to_string())))
            };
        CaseResult {
            case_id: self.id.clone(),
            method_tag: self.tag.to_string(),
            closed_form: closed,
            oracle,
            discrepancy,
            tolerance: self.tolerance,
            pass: error.is_none() && discrepancy <= self.tolerance,
            error,
        }
    }
}

fn cases(suite: Suite) -> Vec<Case> {
    match suite {
        Suite::All => [Suite::Specfun, Suite::Products, Suite::Lseries, Suite::Cyclotomic]
            .into_iter()
            .flat_map(cases)
            .collect(),
        Suite::Specfun => specfun::cases(),
        Suite::Products => products::cases(),
        Suite::Lseries => lseries::cases(),
        Suite::Cyclotomic => cyclotomic::cases(),
    }
}

/// Ids of the cases in `suite`, sorted.
pub fn case_ids(suite: Suite) -> Vec<String> {
    let mut ids: Vec<String> = cases(suite).into_iter().map(|c| c.id).collect();
    ids.sort();
    ids
}

/// Runs `suite`, optionally restricted to case ids starting with `filter`.
pub fn run_filtered(suite: Suite, filter: Option<&str>) -> VerifyReport {
    let start = Instant::now();
    let selected: Vec<Case> = cases(suite)
        .into_iter()
        .filter(|c| filter.is_none_or(|f| c.id.starts_with(f)))
        .collect();
    let mut results: Vec<CaseResult> = selected.par_iter().map(Case::run).collect();
    results.sort_by(|a, b| a.case_id.cmp(&b.case_id));
    let passed = results.iter().filter(|r| r.pass).count();
    VerifyReport {
        suite,
        summary: Summary {
            total: results.len(),
            passed,
            failed: results.len() - passed,
            wall_time_ms: start.elapsed().as_millis() as u64,
        },
        cases: results,
    }
}

pub fn run(suite: Suite) -> VerifyReport {
    run_filtered(suite, None)
}
