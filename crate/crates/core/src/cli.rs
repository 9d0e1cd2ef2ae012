//! Command-line front end. Every subcommand produces a serializable report
//! that is printed either as `key: value` text or as JSON.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{pascal_rows, sqrt_rationality, SqrtRationality};
use crate::error::{Error, Result};
use crate::numbers::{
    format_rational, lower_decimal, parse_rational, serde_str, to_decimal, upper_decimal, Integer, RationalInterval,
};
use crate::pi_engine::{archimedes_table, continued_fraction, pi_by_cos_root, MAX_DOUBLINGS};
use crate::polynomials::{niven_derivative_at_zero_closed_form, niven_endpoint_derivatives, niven_poly};
use crate::series::{e_enclosure, squeeze_check, SqueezeReport};
use crate::witness::{
    build_g_truncated, check_ode_identity, e_witness, pi_candidate_to_pi2, pi_witness, verify_ode_identity,
    EWitnessReport, Limits, PiWitnessReport, DEFAULT_MAX_DIGITS,
};

pub const MAX_DIGITS_ENV: &str = "IRRATIO_MAX_DIGITS";

#[derive(Parser, Debug)]
#[command(
    name = "irratio",
    version,
    about = "Certified digits of π and e, classical tables, and contradiction certificates for rational candidates"
)]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Precision cap in decimal digits [default: $IRRATIO_MAX_DIGITS or 4096].
    #[arg(long, global = true, value_name = "DIGITS")]
    digit_cap: Option<u32>,
    /// Cap on the degree parameter n and on table sizes.
    #[arg(long, global = true, value_name = "N")]
    n_cap: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Certified decimal digits of e or π.
    Digits {
        constant: Constant,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        digits: u32,
        /// Method for π.
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// Contradiction certificates for rational candidates.
    Witness {
        #[command(subcommand)]
        kind: WitnessKind,
    },
    /// Polygon bounds from the hexagon through 6·2^D sides.
    Archimedes {
        #[arg(long)]
        doublings: u32,
        /// Decimal places shown for each bound.
        #[arg(long, default_value_t = 7)]
        digits: u32,
    },
    /// The first R rows of Pascal's triangle.
    Pascal {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        rows: u32,
    },
    /// Certified continued-fraction quotients and convergents.
    Cf {
        constant: Constant,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        depth: u32,
    },
    /// Exact self-checks.
    Check {
        #[command(subcommand)]
        kind: CheckKind,
    },
}

#[derive(Subcommand, Debug)]
enum WitnessKind {
    /// Refute π² = A/B.
    Pi2 {
        candidate: String,
        /// Degree parameter; must satisfy (22/7)·Aⁿ/n! < 1.
        #[arg(long)]
        n: Option<u32>,
    },
    /// Refute π = P/Q through π² = P²/Q².
    Pi { candidate: String },
    /// Refute e = A/B.
    E { candidate: String },
    /// Decide whether √M is rational.
    Sqrt { m: String },
}

#[derive(Subcommand, Debug)]
enum CheckKind {
    /// Differential identities and endpoint integrality for n = 1..=N.
    Identities {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
    },
    /// cos h < sin h/h < 1 and 0 ≤ (1 - cos h)/h ≤ h/2 at h = P/Q.
    Squeeze {
        #[arg(long)]
        h: String,
        #[arg(long, default_value_t = 30)]
        digits: u32,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Constant {
    E,
    Pi,
}

impl Constant {
    fn name(self) -> &'static str {
        match self {
            Constant::E => "e",
            Constant::Pi => "pi",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Method {
    CosRoot,
    Archimedes,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigitsReport {
    pub constant: String,
    pub digits: u32,
    pub method: String,
    pub decimal: String,
    pub enclosure: RationalInterval,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonRow {
    pub sides: u64,
    pub lower: String,
    pub upper: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArchimedesReport {
    pub doublings: u32,
    pub digits: u32,
    pub rows: Vec<PolygonRow>,
    /// `[inscribed, circumscribed]` of the last polygon.
    pub enclosure: RationalInterval,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PascalReport {
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CfReport {
    pub constant: String,
    pub certified_depth: usize,
    pub partial_quotients: Vec<String>,
    pub convergents: Vec<String>,
    pub enclosure: RationalInterval,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityRow {
    pub n: u32,
    pub identities: bool,
    pub first_mismatch: Option<String>,
    pub integrality: bool,
    pub negative_control_fails: bool,
}

impl IdentityRow {
    fn passed(&self) -> bool {
        self.identities && self.integrality && self.negative_control_fails
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentitiesReport {
    pub rows: Vec<IdentityRow>,
    pub all_passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiCandidateReport {
    #[serde(with = "serde_str::integer")]
    pub p: Integer,
    #[serde(with = "serde_str::integer")]
    pub q: Integer,
    pub pi2: PiWitnessReport,
}

/// Runs one invocation with the process environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env = std::env::var(MAX_DIGITS_ENV).ok();
    run_with_env(args, env.as_deref(), out, err)
}

/// Runs one invocation. `env_max_digits` stands in for `IRRATIO_MAX_DIGITS`.
///
/// Exit codes: 0 success, 1 invalid input or failed check, 2 resource or
/// precision cap reached.
pub fn run_with_env<I, T>(args: I, env_max_digits: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    1
                }
            };
        }
    };
    let limits = match limits(&cli, env_max_digits) {
        Ok(l) => l,
        Err(e) => return report_error(&e, err),
    };
    match dispatch(&cli, &limits) {
        Ok((text, passed)) => {
            let _ = out.write_all(text.as_bytes());
            if passed {
                0
            } else {
                let _ = writeln!(err, "error: self-check failed");
                1
            }
        }
        Err(e) => report_error(&e, err),
    }
}

fn report_error(e: &Error, err: &mut dyn Write) -> i32 {
    let _ = writeln!(err, "error: {e}");
    if e.is_resource() {
        2
    } else {
        1
    }
}

fn limits(cli: &Cli, env_max_digits: Option<&str>) -> Result<Limits> {
    let max_digits = match (cli.digit_cap, env_max_digits) {
        (Some(d), _) => d,
        (None, Some(v)) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("{MAX_DIGITS_ENV} must be a positive integer, got {v:?}")))?,
        (None, None) => DEFAULT_MAX_DIGITS,
    };
    if max_digits == 0 {
        return Err(Error::InvalidInput("the digit cap must be positive".into()));
    }
    let mut limits = Limits {
        max_digits,
        ..Limits::default()
    };
    if let Some(n) = cli.n_cap {
        limits.max_n = n;
    }
    Ok(limits)
}

fn parse_candidate(s: &str) -> Result<(Integer, Integer)> {
    let q = parse_rational(s)?;
    if !q.is_positive() {
        return Err(Error::InvalidInput(format!("candidate must be positive, got {s}")));
    }
    Ok((q.numer().clone(), q.denom().clone()))
}

fn parse_integer(s: &str) -> Result<Integer> {
    let q = parse_rational(s)?;
    if !q.is_integer() {
        return Err(Error::InvalidInput(format!("expected an integer, got {s}")));
    }
    Ok(q.to_integer())
}

fn check_digits(digits: u32, limits: &Limits) -> Result<()> {
    if digits > limits.max_digits {
        return Err(Error::PrecisionExhausted {
            cap: limits.max_digits,
            what: format!("{digits} digits requested"),
        });
    }
    Ok(())
}

fn emit<T: Serialize>(json: bool, report: &T, text: impl FnOnce(&T) -> String) -> Result<String> {
    if json {
        let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
        s.push('\n');
        Ok(s)
    } else {
        Ok(text(report))
    }
}

/// Returns the rendered output and whether every self-check passed.
fn dispatch(cli: &Cli, limits: &Limits) -> Result<(String, bool)> {
    let json = cli.json;
    let ok = |s: String| Ok((s, true));
    match &cli.command {
        Command::Digits { constant, digits, method } => {
            check_digits(*digits, limits)?;
            let report = digits_report(*constant, *digits, *method)?;
            ok(emit(json, &report, |r| format!("{}\n", r.decimal))?)
        }
        Command::Witness { kind } => match kind {
            WitnessKind::Pi2 { candidate, n } => {
                let (a, b) = parse_candidate(candidate)?;
                let report = pi_witness(&a, &b, *n, limits)?;
                ok(emit(json, &report, pi_witness_text)?)
            }
            WitnessKind::Pi { candidate } => {
                let (p, q) = parse_candidate(candidate)?;
                let (a, b) = pi_candidate_to_pi2(&p, &q);
                let report = PiCandidateReport {
                    pi2: pi_witness(&a, &b, None, limits)?,
                    p,
                    q,
                };
                ok(emit(json, &report, |r| {
                    format!("p: {}\nq: {}\n{}", r.p, r.q, pi_witness_text(&r.pi2))
                })?)
            }
            WitnessKind::E { candidate } => {
                let (a, b) = parse_candidate(candidate)?;
                let report = e_witness(&a, &b, limits)?;
                ok(emit(json, &report, e_witness_text)?)
            }
            WitnessKind::Sqrt { m } => {
                let report = sqrt_rationality(&parse_integer(m)?)?;
                ok(emit(json, &report, sqrt_text)?)
            }
        },
        Command::Archimedes { doublings, digits } => {
            check_digits(*digits, limits)?;
            let report = archimedes_report(*doublings, *digits)?;
            ok(emit(json, &report, archimedes_text)?)
        }
        Command::Pascal { rows } => {
            if *rows - 1 > limits.max_n {
                return Err(Error::ResourceCap(format!("{rows} rows exceed the cap {}", limits.max_n)));
            }
            let triangle = pascal_rows(rows - 1);
            let report = PascalReport {
                rows: triangle
                    .rows
                    .iter()
                    .map(|r| r.iter().map(Integer::to_string).collect())
                    .collect(),
            };
            ok(emit(json, &report, |r| {
                r.rows.iter().map(|row| row.join(" ") + "\n").collect()
            })?)
        }
        Command::Cf { constant, depth } => {
            let report = cf_report(*constant, *depth as usize, limits)?;
            ok(emit(json, &report, cf_text)?)
        }
        Command::Check { kind } => match kind {
            CheckKind::Identities { max_n } => {
                if *max_n > limits.max_n {
                    return Err(Error::ResourceCap(format!(
                        "n = {max_n} exceeds the cap {}",
                        limits.max_n
                    )));
                }
                let report = identities_report(*max_n);
                let passed = report.all_passed;
                Ok((emit(json, &report, identities_text)?, passed))
            }
            CheckKind::Squeeze { h, digits } => {
                check_digits(*digits, limits)?;
                let report = squeeze_check(&parse_rational(h)?, (*digits).max(1))?;
                let passed = report.certified();
                Ok((emit(json, &report, squeeze_text)?, passed))
            }
        },
    }
}

fn digits_report(constant: Constant, digits: u32, method: Option<Method>) -> Result<DigitsReport> {
    let (method_name, enclosure) = match (constant, method) {
        (Constant::E, None) => ("series", e_enclosure(digits).value),
        (Constant::E, Some(_)) => {
            return Err(Error::InvalidInput("--method applies to pi only".into()));
        }
        (Constant::Pi, None | Some(Method::CosRoot)) => ("cos-root", pi_by_cos_root(digits)?.value),
        (Constant::Pi, Some(Method::Archimedes)) => ("archimedes", archimedes_to_digits(digits)?),
    };
    Ok(DigitsReport {
        constant: constant.name().into(),
        digits,
        method: method_name.into(),
        decimal: to_decimal(&enclosure, digits).to_string(),
        enclosure,
    })
}

/// The first polygon in the doubling sequence whose bounds are closer
/// than `10^-digits`.
fn archimedes_to_digits(digits: u32) -> Result<RationalInterval> {
    let target = crate::numbers::ten_to_minus(digits);
    archimedes_table(MAX_DOUBLINGS, digits)?
        .into_iter()
        .map(|step| RationalInterval::new(step.inscribed.lo().clone(), step.circumscribed.hi().clone()))
        .find(|iv| iv.as_ref().is_ok_and(|iv| iv.width() < target))
        .unwrap_or_else(|| {
            Err(Error::ResourceCap(format!(
                "{MAX_DOUBLINGS} polygon doublings do not reach {digits} digits"
            )))
        })
}

fn archimedes_report(doublings: u32, digits: u32) -> Result<ArchimedesReport> {
    let table = archimedes_table(doublings, digits)?;
    let last = table.last().expect("table has the hexagon at least");
    let enclosure = RationalInterval::new(last.inscribed.lo().clone(), last.circumscribed.hi().clone())?;
    let rows = table
        .iter()
        .map(|s| PolygonRow {
            sides: s.sides,
            lower: lower_decimal(s.inscribed.lo(), digits),
            upper: upper_decimal(s.circumscribed.hi(), digits),
        })
        .collect();
    Ok(ArchimedesReport {
        doublings,
        digits,
        rows,
        enclosure,
    })
}

fn cf_report(constant: Constant, depth: usize, limits: &Limits) -> Result<CfReport> {
    let max = limits.max_digits;
    let mut digits = (depth as u32).saturating_add(10).min(max);
    loop {
        let enclosure = match constant {
            Constant::E => e_enclosure(digits).value,
            Constant::Pi => pi_by_cos_root(digits)?.value,
        };
        let cf = continued_fraction(&enclosure, depth);
        if cf.certified_depth >= depth {
            return Ok(CfReport {
                constant: constant.name().into(),
                certified_depth: cf.certified_depth,
                partial_quotients: cf.partial_quotients.iter().map(Integer::to_string).collect(),
                convergents: cf.convergents.iter().map(format_rational).collect(),
                enclosure,
            });
        }
        if digits >= max {
            return Err(Error::PrecisionExhausted {
                cap: max,
                what: format!("{depth} certified quotients"),
            });
        }
        digits = digits.saturating_mul(2).min(max);
    }
}

fn identities_report(max_n: u32) -> IdentitiesReport {
    let one = Integer::from(1);
    let rows: Vec<IdentityRow> = (1..=max_n)
        .map(|n| {
            let check = verify_ode_identity(&one, &one, n);
            let table = niven_endpoint_derivatives(n);
            let integrality = (0..=2 * n).all(|l| {
                let l_us = l as usize;
                let mirrored = if l % 2 == 0 { table.at0[l_us].clone() } else { -table.at0[l_us].clone() };
                (l < n || table.at0[l_us] == niven_derivative_at_zero_closed_form(n, l)) && table.at1[l_us] == mirrored
            });
            let f = niven_poly(n);
            let control = check_ode_identity(&build_g_truncated(&one, n), &f, &one, n);
            IdentityRow {
                n,
                identities: check.passed(),
                first_mismatch: check.first_mismatch.map(|m| m.to_string()),
                integrality,
                negative_control_fails: !control.passed(),
            }
        })
        .collect();
    let all_passed = rows.iter().all(IdentityRow::passed);
    IdentitiesReport { rows, all_passed }
}

fn pi_witness_text(r: &PiWitnessReport) -> String {
    format!(
        "a: {}\nb: {}\nn: {}\nN: {}\nI_exact: {}\nI_enclosure: {}\nupper_bound: {}\nverdict: {}\n",
        r.a,
        r.b,
        r.n,
        r.proof_integer,
        r.i_exact,
        r.i_enclosure,
        format_rational(&r.upper_bound),
        r.verdict
    )
}

fn e_witness_text(r: &EWitnessReport) -> String {
    format!(
        "a: {}\nb: {}\nn: {}\nM: {}\ntail_enclosure: {}\nverdict: {}\n",
        r.a, r.b, r.n, r.m, r.tail_enclosure, r.verdict
    )
}

fn sqrt_text(r: &SqrtRationality) -> String {
    match r {
        SqrtRationality::PerfectSquare { m, root } => format!("√{m} = {root}, rational\n"),
        SqrtRationality::Irrational { m, floor } => {
            let next: Integer = floor + 1u32;
            format!("√{m} is irrational: {floor}² < {m} < {next}²\n")
        }
    }
}

fn archimedes_text(r: &ArchimedesReport) -> String {
    let mut s = String::new();
    let sides_w = r.rows.iter().map(|row| row.sides.to_string().len()).max().unwrap_or(0).max(5);
    let bound_w = r.rows.first().map_or(0, |row| row.lower.len()).max(5);
    let _ = writeln!(s, "{:>sides_w$}  {:<bound_w$}  upper", "sides", "lower");
    for row in &r.rows {
        let _ = writeln!(s, "{:>sides_w$}  {:<bound_w$}  {}", row.sides, row.lower, row.upper);
    }
    if let Some(last) = r.rows.last() {
        let _ = writeln!(s, "{} < π < {}", last.lower, last.upper);
    }
    s
}

fn cf_text(r: &CfReport) -> String {
    let mut s = String::new();
    let (head, tail) = r.partial_quotients.split_first().expect("depth ≥ 1");
    let _ = writeln!(s, "[{head}; {}]", tail.join(", "));
    for (k, c) in r.convergents.iter().enumerate() {
        let _ = writeln!(s, "{k}: {c}");
    }
    s
}

fn identities_text(r: &IdentitiesReport) -> String {
    let mut s = String::new();
    let word = |b: bool| if b { "ok" } else { "FAILED" };
    for row in &r.rows {
        let _ = write!(
            s,
            "n={}: identities {}, integrality {}, negative control {}",
            row.n,
            word(row.identities),
            word(row.integrality),
            if row.negative_control_fails { "rejected" } else { "NOT REJECTED" }
        );
        if let Some(m) = &row.first_mismatch {
            let _ = write!(s, " ({m})");
        }
        s.push('\n');
    }
    let _ = writeln!(s, "{}", if r.all_passed { "all checks passed" } else { "some checks FAILED" });
    s
}

fn squeeze_text(r: &SqueezeReport) -> String {
    let status = |c| serde_json::to_value(c).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
    format!(
        "h: {}\ncos: {}\nsin_over_h: {}\none_minus_cos_over_h: {}\nratio_chain: {}\nchord_chain: {}\n",
        format_rational(&r.h),
        r.cos,
        r.sin_over_h,
        r.one_minus_cos_over_h,
        status(r.ratio_chain),
        status(r.chord_chain)
    )
}
