//! `charprod`: characters, twisted products, multiple L-series and the
//! verification battery from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

mod format;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use charprod_core::arith::{is_square_free, s1, s2};
use charprod_core::lseries::{self, max_pairwise_discrepancy, LSeriesValue};
use charprod_core::products::{
    cyclotomic, cyclotomic_product_partial, evaluate_char_product, evaluate_cyclotomic_product, CyclotomicMethod,
    ProductMethod, CYCLOTOMIC_FACTORS,
};
use charprod_core::specfun::{special_values_table, SpecialValuesRow};
use charprod_core::verify::{run_filtered, Suite};
use charprod_core::{CharacterGroup, Complex, DirichletCharacter, LSeriesMethod};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use format::{format_complex, parse_complex, round_json};

/// `println!` that exits quietly once stdout is closed (e.g. piped into `head`).
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        if writeln!(std::io::stdout().lock(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

/// Largest modulus accepted by `characters`.
const MAX_MODULUS: u64 = 1_000_000;
/// Value tables are printed for moduli up to this size.
const VALUE_TABLE_MAX: u64 = 30;

#[derive(Parser)]
#[command(name = "charprod", version, about = "Closed forms for character-twisted and cyclotomic infinite products")]
struct Cli {
    /// Significant digits for reported floating-point values.
    #[arg(long, global = true, default_value_t = 15, value_parser = clap::value_parser!(u16).range(1..=17))]
    precision: u16,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the Dirichlet characters mod q in canonical order.
    ///
    /// Characters are addressed as "q.N" (N = index in this listing); the
    /// aliases chi3, chi-4 and chi6 stand for 3.1, 4.1 and 6.1.
    Characters {
        q: u64,
        /// Emit JSON instead of a text table.
        #[arg(long)]
        json: bool,
        /// Print at most this many characters.
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Evaluate prod_{k>=2} (1 - chi(k) z/k) as closed form and partial product.
    Product {
        /// Character id, "q.N" or chi3 / chi-4 / chi6.
        chi: String,
        /// Complex argument "a+bi".
        #[arg(allow_hyphen_values = true)]
        z: String,
        #[arg(long, value_enum, default_value_t = ProductArg::Gamma)]
        method: ProductArg,
        /// Partial-product length (default q * 10^5).
        #[arg(long)]
        terms: Option<u64>,
    },
    /// Multiple L-series L_n(chi), or L_n*(chi) with --star.
    Lseries {
        chi: String,
        n: usize,
        #[arg(long)]
        star: bool,
        #[arg(long, value_enum, default_value_t = LseriesArg::Bell, conflicts_with = "all")]
        method: LseriesArg,
        /// Every applicable method plus their largest pairwise discrepancy.
        #[arg(long)]
        all: bool,
        /// Truncation length for the brute-force method (default q * 10^5).
        #[arg(long)]
        terms: Option<u64>,
    },
    /// Evaluate prod_k Phi_m(z/k) as closed form and truncated product.
    Cyclotomic {
        m: u64,
        #[arg(allow_hyphen_values = true)]
        z: String,
        #[arg(long, value_enum, default_value_t = CyclotomicArg::Gamma)]
        method: CyclotomicArg,
        /// Number of factors in the truncated product (default 10^5).
        #[arg(long)]
        factors: Option<u64>,
    },
    /// Run the verification battery; exit 1 if any case fails.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Only run cases whose id starts with this prefix.
        #[arg(long)]
        filter: Option<String>,
        /// Write the full report as JSON to this path.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Dump the special-values table and the S1/S2 tables as CSV.
    Tables {
        #[arg(long, value_enum, default_value_t = TableArg::All)]
        which: TableArg,
        /// Emit JSON instead of CSV.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductArg {
    Gamma,
    Sine,
    Partial,
}

#[derive(Clone, Copy, ValueEnum)]
enum LseriesArg {
    Bell,
    Exp,
    Smallq,
    Brute,
    Digamma,
    Cot,
}

#[derive(Clone, Copy, ValueEnum)]
enum CyclotomicArg {
    Gamma,
    Sine,
    Partial,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Specfun,
    Products,
    Lseries,
    Cyclotomic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableArg {
    All,
    Special,
    Sums,
}

/// A failure and the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure { code: 2, message: message.to_string() }
    }
}

impl From<charprod_core::Error> for Failure {
    fn from(e: charprod_core::Error) -> Self {
        Failure::usage(e)
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let digits = cli.precision as usize;
    let result = match cli.command {
        Command::Characters { q, json, limit } => cmd_characters(q, json, limit, digits),
        Command::Product { chi, z, method, terms } => cmd_product(&chi, &z, method, terms, digits),
        Command::Lseries { chi, n, star, method, all, terms } => cmd_lseries(&chi, n, star, method, all, terms, digits),
        Command::Cyclotomic { m, z, method, factors } => cmd_cyclotomic(m, &z, method, factors, digits),
        Command::Verify { suite, filter, json } => cmd_verify(suite, filter.as_deref(), json, digits),
        Command::Tables { which, json } => cmd_tables(which, json),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn print_json(mut v: Value, digits: usize) {
    round_json(&mut v, digits);
    out!("{}", serde_json::to_string_pretty(&v).expect("JSON values serialize"));
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn complex_json(z: Complex) -> Value {
    json!({ "re": z.re, "im": z.im })
}

fn parse_chi(id: &str) -> Result<DirichletCharacter, Failure> {
    DirichletCharacter::parse(id).map_err(Failure::from)
}

fn parse_z(s: &str) -> Result<Complex, Failure> {
    parse_complex(s).map_err(Failure::usage)
}

fn cmd_characters(q: u64, json: bool, limit: Option<u64>, digits: usize) -> CmdResult {
    if !(2..=MAX_MODULUS).contains(&q) {
        return Err(Failure::usage(format!("modulus must satisfy 2 <= q <= {MAX_MODULUS}, got {q}")));
    }
    let group = CharacterGroup::new(q)?;
    let shown = limit.map_or(group.len(), |l| l.min(group.len()));
    let with_values = q <= VALUE_TABLE_MAX;
    let chars = (0..shown).map(|i| group.character(i));

    if json {
        let mut rows = Vec::new();
        for ch in chars {
            let ch = ch?;
            let cls = ch.classify();
            let mut row = json!({
                "id": ch.label(),
                "index": ch.index(),
                "principal": cls.is_principal,
                "parity": cls.parity,
                "conductor": cls.conductor,
                "primitive": cls.is_primitive,
                "real": cls.is_real,
                "generator_exponents": ch.generator_exponents().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            });
            if with_values {
                row["values"] = ch.value_table().iter().map(|v| v.map_or(Value::Null, |r| r.to_string().into())).collect();
            }
            rows.push(row);
        }
        print_json(
            json!({ "modulus": q, "count": group.len(), "generators": group.unit_group().generators(), "characters": rows }),
            digits,
        );
        return Ok(());
    }

    out!("characters mod {q}: {} (generators {:?})", group.len(), group.unit_group().generators());
    let mut header = format!("{:<12} {:<6} {:>9} {:<9} {:<5}", "id", "parity", "conductor", "primitive", "real");
    if with_values {
        for k in 0..q {
            let _ = write!(header, " {:>9}", format!("chi({k})"));
        }
    }
    out!("{header}");
    for ch in chars {
        let ch = ch?;
        let cls = ch.classify();
        let mut line = format!(
            "{:<12} {:<6} {:>9} {:<9} {:<5}",
            ch.label(),
            cls.parity.to_string(),
            cls.conductor,
            if cls.is_primitive { "yes" } else { "no" },
            if cls.is_real { "yes" } else { "no" },
        );
        if with_values {
            for v in ch.value_table() {
                let _ = write!(line, " {:>9}", v.map_or("0".to_string(), |r| r.to_string()));
            }
        }
        out!("{line}");
    }
    if shown < group.len() {
        out!("... {} more not shown", group.len() - shown);
    }
    Ok(())
}

fn cmd_product(id: &str, z: &str, method: ProductArg, terms: Option<u64>, digits: usize) -> CmdResult {
    let chi = parse_chi(id)?;
    let z = parse_z(z)?;
    let method = match method {
        ProductArg::Gamma => ProductMethod::Gamma,
        ProductArg::Sine => ProductMethod::Sine,
        ProductArg::Partial => ProductMethod::Partial,
    };
    let report = evaluate_char_product(&chi, z, method, terms)?;
    let mut out = json!({ "character": chi.label(), "z": complex_json(z) });
    merge(&mut out, to_value(&report));
    print_json(out, digits);
    Ok(())
}

fn lseries_method(m: LseriesArg) -> LSeriesMethod {
    match m {
        LseriesArg::Bell => LSeriesMethod::Bell,
        LseriesArg::Exp => LSeriesMethod::Exp,
        LseriesArg::Smallq => LSeriesMethod::Smallq,
        LseriesArg::Brute => LSeriesMethod::Brute,
        LseriesArg::Digamma => LSeriesMethod::Digamma,
        LseriesArg::Cot => LSeriesMethod::Cot,
    }
}

fn cmd_lseries(
    id: &str,
    n: usize,
    star: bool,
    method: LseriesArg,
    all: bool,
    terms: Option<u64>,
    digits: usize,
) -> CmdResult {
    let chi = parse_chi(id)?;
    if !all {
        let value = lseries::evaluate(&chi, n, star, lseries_method(method), terms)?;
        print_json(to_value(&value), digits);
        return Ok(());
    }
    let values = lseries::evaluate_all(&chi, n, star, terms)?;
    let (brute, closed): (Vec<LSeriesValue>, Vec<LSeriesValue>) =
        values.iter().cloned().partition(|v| v.method_tag == LSeriesMethod::Brute);
    let oracle_discrepancy = brute
        .first()
        .map(|b| closed.iter().map(|v| (v.value - b.value).norm()).fold(0.0, f64::max));
    print_json(
        json!({
            "chi_id": chi.label(),
            "n": n,
            "star": star,
            "values": to_value(&values),
            "max_pairwise_discrepancy": max_pairwise_discrepancy(&closed),
            "oracle_discrepancy": oracle_discrepancy,
        }),
        digits,
    );
    Ok(())
}

fn cmd_cyclotomic(m: u64, z: &str, method: CyclotomicArg, factors: Option<u64>, digits: usize) -> CmdResult {
    let z = parse_z(z)?;
    let phi = cyclotomic(m)?;
    let coefficients: Vec<Value> = phi
        .coefficients()
        .iter()
        .map(|c| c.to_string().parse::<i64>().map_or_else(|_| c.to_string().into(), Value::from))
        .collect();
    let mut out = json!({
        "m": m,
        "z": complex_json(z),
        "polynomial": phi.to_string(),
        "coefficients": coefficients,
    });
    let method = match method {
        CyclotomicArg::Gamma => CyclotomicMethod::Gamma,
        CyclotomicArg::Sine => CyclotomicMethod::Sine,
        CyclotomicArg::Partial => CyclotomicMethod::Partial,
    };
    if method == CyclotomicMethod::Partial && m >= 2 && is_square_free(m) {
        // No closed form to compare against; the truncation alone is reported.
        let n = charprod_core::oracle::cap_terms(factors.unwrap_or(CYCLOTOMIC_FACTORS)).max(1);
        let value = cyclotomic_product_partial(m, z, n)?;
        merge(&mut out, json!({ "closed_form": complex_json(value), "oracle": null, "oracle_terms": n, "method_tag": "cyclotomic-partial" }));
    } else {
        merge(&mut out, to_value(&evaluate_cyclotomic_product(m, z, method, factors)?));
    }
    print_json(out, digits);
    Ok(())
}

fn cmd_verify(suite: SuiteArg, filter: Option<&str>, json: Option<PathBuf>, digits: usize) -> CmdResult {
    let suite = match suite {
        SuiteArg::All => Suite::All,
        SuiteArg::Specfun => Suite::Specfun,
        SuiteArg::Products => Suite::Products,
        SuiteArg::Lseries => Suite::Lseries,
        SuiteArg::Cyclotomic => Suite::Cyclotomic,
    };
    let report = run_filtered(suite, filter);
    for case in report.failures() {
        let detail = case.error.as_deref().map(|e| format!(" ({e})")).unwrap_or_default();
        out!(
            "FAIL {} [{}]: closed {} oracle {} discrepancy {:.3e} > {:.0e}{detail}",
            case.case_id,
            case.method_tag,
            format_complex(case.closed_form, digits),
            format_complex(case.oracle, digits),
            case.discrepancy,
            case.tolerance,
        );
    }
    let s = &report.summary;
    out!("{suite}: {} cases, {} passed, {} failed in {} ms", s.total, s.passed, s.failed, s.wall_time_ms);
    if let Some(path) = json {
        let mut v = to_value(&report);
        round_json(&mut v, digits);
        let text = serde_json::to_string_pretty(&v).expect("report serializes");
        std::fs::write(&path, text + "\n")
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure { code: 1, message: String::new() })
    }
}

const SPECIAL_ROWS: usize = 6;
const SUMS_MAX: u64 = 100;

fn cmd_tables(which: TableArg, json: bool) -> CmdResult {
    let special = special_values_table(SPECIAL_ROWS);
    let sums: Vec<(u64, u64, u64)> = (2..=SUMS_MAX).map(|m| Ok((m, s1(m)?, s2(m)?))).collect::<Result<_, Failure>>()?;
    let show_special = which != TableArg::Sums;
    let show_sums = which != TableArg::Special;

    if json {
        let mut out = json!({});
        if show_special {
            let rows: Vec<Value> = special
                .iter()
                .map(|r| {
                    let mut row = json!({ "n": r.n });
                    for (h, v) in SpecialValuesRow::HEADER[1..].iter().zip(r.formatted()) {
                        row[*h] = v.into();
                    }
                    row
                })
                .collect();
            out["special_values"] = rows.into();
        }
        if show_sums {
            out["sums"] = sums.iter().map(|&(m, a, b)| json!({ "m": m, "S1": a, "S2": b })).collect();
        }
        out!("{}", serde_json::to_string_pretty(&out).expect("JSON values serialize"));
        return Ok(());
    }

    if show_special {
        out!("{}", SpecialValuesRow::HEADER.join(","));
        for r in &special {
            out!("{},{}", r.n, r.formatted().join(","));
        }
    }
    if show_special && show_sums {
        out!();
    }
    if show_sums {
        out!("m,S1,S2");
        for (m, a, b) in sums {
            out!("{m},{a},{b}");
        }
    }
    Ok(())
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        a.extend(b);
    }
}
