//! Check and suite reports with JSON, CSV and text emitters.

use std::io::Write;

use bilinear_core::Cx;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// One identity evaluated at one parameter point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    pub lhs_re: f64,
    pub lhs_im: f64,
    pub rhs_re: f64,
    pub rhs_im: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub tol: f64,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

fn finite_or_max(x: f64) -> f64 {
    if x.is_finite() {
        x
    } else {
        f64::MAX
    }
}

impl CheckReport {
    /// lhs against rhs; passes when abs_err ≤ tol or rel_err ≤ tol.
    pub fn compare(id: impl Into<String>, lhs: Cx, rhs: Cx, tol: f64) -> Self {
        let abs_err = (lhs - rhs).norm();
        let rel_err = if rhs.norm() > 0.0 {
            abs_err / rhs.norm()
        } else {
            abs_err
        };
        let ok =
            lhs.re.is_finite() && lhs.im.is_finite() && rhs.re.is_finite() && rhs.im.is_finite();
        let (abs_err, rel_err) = if ok {
            (finite_or_max(abs_err), finite_or_max(rel_err))
        } else {
            (f64::MAX, f64::MAX)
        };
        Self {
            id: id.into(),
            lhs_re: finite_or_max(lhs.re),
            lhs_im: finite_or_max(lhs.im),
            rhs_re: finite_or_max(rhs.re),
            rhs_im: finite_or_max(rhs.im),
            abs_err,
            rel_err,
            tol,
            pass: ok && (abs_err <= tol || rel_err <= tol),
            error: None,
        }
    }

    pub fn real(id: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        Self::compare(id, Cx::new(lhs, 0.0), Cx::new(rhs, 0.0), tol)
    }

    /// A nonnegative residual that must not exceed `tol`.
    pub fn residual(id: impl Into<String>, value: f64, tol: f64) -> Self {
        Self::real(id, value, 0.0, tol)
    }

    /// value ≤ bound, reported with rhs = min(value, bound) and zero tolerance.
    pub fn at_most(id: impl Into<String>, value: f64, bound: f64) -> Self {
        Self::real(id, value, value.min(bound), 0.0)
    }

    /// value ≥ bound, reported with rhs = max(value, bound) and zero tolerance.
    pub fn at_least(id: impl Into<String>, value: f64, bound: f64) -> Self {
        Self::real(id, value, value.max(bound), 0.0)
    }

    /// A check whose computation itself failed.
    pub fn failed(id: impl Into<String>, err: impl std::fmt::Display) -> Self {
        Self {
            id: id.into(),
            lhs_re: 0.0,
            lhs_im: 0.0,
            rhs_re: 0.0,
            rhs_im: 0.0,
            abs_err: f64::MAX,
            rel_err: f64::MAX,
            tol: 0.0,
            pass: false,
            error: Some(err.to_string()),
        }
    }

    /// Replaces a positive tolerance and re-evaluates `pass`.
    pub fn with_tol(mut self, tol: f64) -> Self {
        if self.tol > 0.0 && self.error.is_none() {
            self.tol = tol;
            self.pass = self.abs_err <= tol || self.rel_err <= tol;
        }
        self
    }
}

/// Parameter overrides in effect for a run; `None` means the suite default grid.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ParamsUsed {
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub q: Option<f64>,
    pub terms: Option<usize>,
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub params: ParamsUsed,
    pub checks: Vec<CheckReport>,
    pub pass: bool,
    pub runtime_ms: u64,
}

impl SuiteReport {
    pub fn new(
        suite: impl Into<String>,
        params: ParamsUsed,
        checks: Vec<CheckReport>,
        runtime_ms: u64,
    ) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        Self {
            suite: suite.into(),
            params,
            checks,
            pass,
            runtime_ms,
        }
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.pass).count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => Err(CliError::Usage(format!("unknown format '{other}'"))),
        }
    }
}

pub const CSV_HEADER: [&str; 9] = [
    "id", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_err", "rel_err", "tol", "pass",
];

pub fn to_json(report: &SuiteReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

pub fn from_json(s: &str) -> Result<SuiteReport, serde_json::Error> {
    serde_json::from_str(s)
}

pub fn to_csv(report: &SuiteReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for c in &report.checks {
        w.write_record([
            c.id.clone(),
            c.lhs_re.to_string(),
            c.lhs_im.to_string(),
            c.rhs_re.to_string(),
            c.rhs_im.to_string(),
            c.abs_err.to_string(),
            c.rel_err.to_string(),
            c.tol.to_string(),
            c.pass.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn to_text(report: &SuiteReport) -> String {
    let width = report
        .checks
        .iter()
        .map(|c| c.id.len())
        .max()
        .unwrap_or(2)
        .max(2);
    let mut out = format!(
        "{:<width$}  {:>24}  {:>24}  {:>10}  {:>10}  {:>8}  {}\n",
        "id", "lhs", "rhs", "abs_err", "rel_err", "tol", "pass"
    );
    for c in &report.checks {
        let lhs = format!("{:.12e}{:+.3e}i", c.lhs_re, c.lhs_im);
        let rhs = format!("{:.12e}{:+.3e}i", c.rhs_re, c.rhs_im);
        out.push_str(&format!(
            "{:<width$}  {:>24}  {:>24}  {:>10.3e}  {:>10.3e}  {:>8.1e}  {}",
            c.id,
            lhs,
            rhs,
            c.abs_err,
            c.rel_err,
            c.tol,
            if c.pass { "ok" } else { "FAIL" }
        ));
        if let Some(e) = &c.error {
            out.push_str(&format!("  ({e})"));
        }
        out.push('\n');
    }
    out.push_str(&format!(
        "{}: {}/{} passed\n",
        report.suite,
        report.checks.len() - report.failures(),
        report.checks.len()
    ));
    out
}

pub fn render(report: &SuiteReport, format: Format) -> String {
    match format {
        Format::Json => to_json(report) + "\n",
        Format::Csv => to_csv(report),
        Format::Text => to_text(report),
    }
}

/// Writes to `out`, or stdout when `None`.
pub fn emit(
    report: &SuiteReport,
    format: Format,
    out: Option<&std::path::Path>,
) -> Result<(), CliError> {
    let body = render(report, format);
    match out {
        Some(path) => {
            std::fs::write(path, body).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        }
        None => {
            let mut s = std::io::stdout().lock();
            s.write_all(body.as_bytes())
                .and_then(|_| s.flush())
                .map_err(|e| CliError::Io(e.to_string()))
        }
    }
}
