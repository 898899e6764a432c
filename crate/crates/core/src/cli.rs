//! Command-line front end: tables, single polynomials, identity verification and the self-test.
//!
//! Exit codes: `0` success, `1` a verification or self-test failure,
//! `2` a usage or parameter error, `3` an unwritable report path.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::stirling::{s1, s2};
use crate::families::{
    bernoulli2_all, bernoulli_all, frobenius_euler_all, higher_cauchy_all, mixed_a_all, narumi_all,
    poly_cauchy_all,
};
use crate::identities::{
    verify_with, GridSpec, IdentityId, IntRange, SuiteReport, VerificationReport, VerifyOptions,
    DEFAULT_TRUNCATION, STANDARD_N_MAX,
};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::selftest;
use crate::umbral::required_order;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNWRITABLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "cauchy-umbral",
    version,
    about = "Exact tables and identity checks for mixed Cauchy/poly-Cauchy polynomials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate a family for n = 0..=n-max.
    ///
    /// CSV columns: `n` then `value` for number families, or `c0, c1, ...`
    /// (coefficient of x^i, blank beyond the degree) for polynomial families
    /// and Stirling triangle rows (`c_m` = S(n, m)).
    Table {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Write to this file instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Print one member of a family, ascending powers of x.
    Poly {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: usize,
    },
    /// Verify an identity (or `all`) on a parameter grid.
    Verify {
        /// Identity name such as `thm8` or `eq36`, or `all`.
        identity: String,
        #[arg(long, default_value_t = STANDARD_N_MAX)]
        n_max: usize,
        /// Inclusive range `a..b` or a single value.
        #[arg(long, allow_hyphen_values = true)]
        r: Option<IntRange>,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<IntRange>,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<IntRange>,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<IntRange>,
        /// Comma-separated rationals.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Option<Vec<Rational>>,
        /// Comma-separated rationals at which two-variable identities are evaluated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        y: Option<Vec<Rational>>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
        trunc: usize,
    },
    /// Run the invariant checks of every module.
    Selftest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Cauchy,
    HigherCauchy,
    PolyCauchy,
    Mixed,
    Stirling1,
    Stirling2,
    Bernoulli,
    FrobeniusEuler,
    Narumi,
    Bernoulli2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Latex,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Cauchy order (higher-cauchy, mixed, narumi).
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub r: i64,
    /// Poly-Cauchy index (poly-cauchy, mixed).
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub k: i64,
    /// Order of the Frobenius-Euler polynomials.
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub s: i64,
    /// Order of the Bernoulli polynomials.
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub alpha: i64,
    /// Frobenius-Euler parameter, any rational except 1.
    #[arg(long, default_value = "-1", allow_hyphen_values = true)]
    pub lambda: Rational,
    #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
    pub trunc: usize,
}

/// Rows of a tabulated family.
#[derive(Debug, Clone, PartialEq)]
pub enum Table {
    Numbers(Vec<Rational>),
    Coefficients(Vec<Vec<Rational>>),
}

impl Table {
    fn len(&self) -> usize {
        match self {
            Table::Numbers(v) => v.len(),
            Table::Coefficients(v) => v.len(),
        }
    }

    fn header(&self) -> Vec<String> {
        let mut h = vec!["n".to_string()];
        match self {
            Table::Numbers(_) => h.push("value".into()),
            Table::Coefficients(rows) => {
                let width = rows.iter().map(Vec::len).max().unwrap_or(1);
                h.extend((0..width).map(|i| format!("c{i}")));
            }
        }
        h
    }

    fn cells(&self, n: usize) -> Vec<String> {
        match self {
            Table::Numbers(v) => vec![v[n].to_string()],
            Table::Coefficients(rows) => rows[n].iter().map(Rational::to_string).collect(),
        }
    }
}

fn coefficient_rows(polys: Vec<Polynomial>) -> Table {
    Table::Coefficients(
        polys
            .into_iter()
            .map(|p| {
                let c = p.into_coeffs();
                if c.is_empty() {
                    vec![Rational::zero()]
                } else {
                    c
                }
            })
            .collect(),
    )
}

fn check_trunc(n_max: usize, trunc: usize) -> Result<()> {
    let required = required_order(n_max);
    if required > trunc {
        return Err(Error::TruncationExceeded {
            required,
            available: trunc,
        });
    }
    Ok(())
}

/// Tabulates `family` for `n = 0..=n_max`.
pub fn table(args: &FamilyArgs, n_max: usize) -> Result<Table> {
    check_trunc(n_max, args.trunc)?;
    let triangle = |f: fn(i64, i64) -> Rational| {
        Table::Coefficients(
            (0..=n_max as i64)
                .map(|n| (0..=n).map(|m| f(n, m)).collect())
                .collect(),
        )
    };
    Ok(match args.family {
        Family::Cauchy => Table::Numbers(higher_cauchy_all(n_max, 1)),
        Family::HigherCauchy => Table::Numbers(higher_cauchy_all(n_max, args.r)),
        Family::PolyCauchy => coefficient_rows(poly_cauchy_all(n_max, args.k)),
        Family::Mixed => coefficient_rows(mixed_a_all(n_max, args.r, args.k)),
        Family::Stirling1 => triangle(s1),
        Family::Stirling2 => triangle(s2),
        Family::Bernoulli => coefficient_rows(bernoulli_all(n_max, args.alpha)),
        Family::FrobeniusEuler => {
            coefficient_rows(frobenius_euler_all(n_max, args.s, &args.lambda)?)
        }
        Family::Narumi => coefficient_rows(narumi_all(n_max, args.r)),
        Family::Bernoulli2 => coefficient_rows(bernoulli2_all(n_max)),
    })
}

/// Member `n` of `family` rendered as text.
pub fn poly(args: &FamilyArgs, n: usize) -> Result<String> {
    Ok(match table(args, n)? {
        Table::Numbers(v) => v[n].to_string(),
        Table::Coefficients(rows) => Polynomial::new(rows[n].clone()).to_string(),
    })
}

pub fn render_csv(t: &Table) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .flexible(true)
        .from_writer(Vec::new());
    let header = t.header();
    let width = header.len();
    w.write_record(&header)
        .map_err(|e| Error::Parse(e.to_string()))?;
    for n in 0..t.len() {
        let mut rec = vec![n.to_string()];
        rec.extend(t.cells(n));
        rec.resize(width, String::new());
        w.write_record(&rec)
            .map_err(|e| Error::Parse(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

#[derive(Serialize)]
struct JsonRow<'a> {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<&'a Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coeffs: Option<&'a [Rational]>,
}

#[derive(Serialize)]
struct JsonTable<'a> {
    family: Family,
    rows: Vec<JsonRow<'a>>,
}

pub fn render_json(family: Family, t: &Table) -> Result<String> {
    let rows = match t {
        Table::Numbers(v) => v
            .iter()
            .enumerate()
            .map(|(n, value)| JsonRow {
                n,
                value: Some(value),
                coeffs: None,
            })
            .collect(),
        Table::Coefficients(rows) => rows
            .iter()
            .enumerate()
            .map(|(n, c)| JsonRow {
                n,
                value: None,
                coeffs: Some(c),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&JsonTable { family, rows })
        .map_err(|e| Error::Parse(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn latex_number(q: &Rational) -> String {
    if q.is_integer() {
        format!("${q}$")
    } else {
        let sign = if q.is_negative() { "-" } else { "" };
        format!(
            "${sign}\\frac{{{}}}{{{}}}$",
            q.numer().magnitude(),
            q.denom()
        )
    }
}

pub fn render_latex(t: &Table) -> String {
    let header = t.header();
    let mut s = format!("\\begin{{tabular}}{{r|{}}}\n", "l".repeat(header.len() - 1));
    let head: Vec<String> = header
        .iter()
        .map(|h| match h.strip_prefix('c') {
            Some(i) => format!("$c_{{{i}}}$"),
            None => format!("${h}$"),
        })
        .collect();
    s.push_str(&head.join(" & "));
    s.push_str(" \\\\\n\\hline\n");
    for n in 0..t.len() {
        let mut cells = vec![n.to_string()];
        match t {
            Table::Numbers(v) => cells.push(latex_number(&v[n])),
            Table::Coefficients(rows) => cells.extend(rows[n].iter().map(latex_number)),
        }
        cells.resize(header.len(), String::new());
        s.push_str(&cells.join(" & "));
        s.push_str(" \\\\\n");
    }
    s.push_str("\\end{tabular}\n");
    s
}

/// Identities selected by a `verify` argument. A theorem with a variant
/// reading always brings its partner along.
pub fn select_identities(arg: &str) -> Result<Vec<IdentityId>> {
    if arg.eq_ignore_ascii_case("all") {
        return Ok(IdentityId::ALL.to_vec());
    }
    let id: IdentityId = arg.parse()?;
    Ok(match id.readings() {
        Some(pair) => pair.to_vec(),
        None => vec![id],
    })
}

/// Writes `args` as if from the command line; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let io = |e: std::io::Error| Error::Domain(e.to_string());
    match cmd {
        Command::Table {
            family,
            n_max,
            format,
            output,
        } => {
            let t = table(&family, n_max)?;
            let text = match format {
                Format::Csv => render_csv(&t)?,
                Format::Json => render_json(family.family, &t)?,
                Format::Latex => render_latex(&t),
            };
            match output {
                Some(path) => {
                    if let Err(e) = fs::write(&path, text) {
                        writeln!(err, "error: cannot write {}: {e}", path.display()).map_err(io)?;
                        return Ok(EXIT_UNWRITABLE);
                    }
                }
                None => out.write_all(text.as_bytes()).map_err(io)?,
            }
            Ok(EXIT_OK)
        }
        Command::Poly { family, n } => {
            writeln!(out, "{}", poly(&family, n)?).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            identity,
            n_max,
            r,
            k,
            s,
            m,
            lambda,
            y,
            jobs,
            report,
            trunc,
        } => {
            let ids = select_identities(&identity)?;
            let opts = VerifyOptions {
                jobs: jobs.max(1),
                truncation: trunc,
            };
            let mut reports = Vec::with_capacity(ids.len());
            for id in &ids {
                let mut grid = GridSpec::standard(*id, n_max);
                if let Some(r) = r {
                    grid.r = r;
                }
                if let Some(k) = k {
                    grid.k = k;
                }
                if let Some(s) = s {
                    grid.s = s;
                }
                if m.is_some() {
                    grid.m = m;
                }
                if let Some(l) = &lambda {
                    grid.lambda = l.clone();
                }
                if let Some(y) = &y {
                    grid.y = y.clone();
                }
                reports.push(verify_with(*id, &grid, &opts)?);
            }
            for rep in &reports {
                summarize(rep, out).map_err(io)?;
                writeln!(err, "{}: {:.3}s", rep.identity, rep.elapsed.as_secs_f64()).map_err(io)?;
            }
            let suite = SuiteReport::assemble(reports[0].engine.clone(), reports);
            for reading in &suite.readings {
                writeln!(
                    out,
                    "{} readings: printed {}, variant {}",
                    reading.printed,
                    verdict_word(reading.printed_passed),
                    verdict_word(reading.variant_passed)
                )
                .map_err(io)?;
            }
            if let Some(path) = report {
                let doc = if suite.reports.len() == 1 {
                    serde_json::to_string_pretty(&suite.reports[0])
                } else {
                    serde_json::to_string_pretty(&suite)
                }
                .map_err(|e| Error::Parse(e.to_string()))?;
                if let Err(e) = fs::write(&path, doc + "\n") {
                    writeln!(err, "error: cannot write report {}: {e}", path.display())
                        .map_err(io)?;
                    return Ok(EXIT_UNWRITABLE);
                }
            }
            Ok(if suite.passed { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Selftest => {
            let checks = selftest::run();
            for c in &checks {
                writeln!(out, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name)
                    .map_err(io)?;
                if !c.passed {
                    writeln!(out, "     {}", c.detail).map_err(io)?;
                }
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            writeln!(out, "{} checks, {failed} failed", checks.len()).map_err(io)?;
            Ok(if failed == 0 { EXIT_OK } else { EXIT_FAIL })
        }
    }
}

fn verdict_word(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "fail"
    }
}

fn summarize(rep: &VerificationReport, out: &mut dyn Write) -> std::io::Result<()> {
    let t = rep.totals;
    writeln!(
        out,
        "{:<18} {}  pass {} fail {} skipped {}",
        rep.identity.name(),
        if rep.passed() { "PASS" } else { "FAIL" },
        t.pass,
        t.fail,
        t.skipped
    )?;
    if let Some(first) = rep.failures().next() {
        writeln!(out, "  first failure at {}", first.point)?;
    }
    Ok(())
}
