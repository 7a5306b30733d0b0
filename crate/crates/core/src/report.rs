//! Verification outcomes and their machine-readable renderings.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Numeric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Numeric => "numeric",
        }
    }
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

/// Outcome of one verification.
///
/// An exact pass never carries a residual; a failure always carries a
/// witness describing the first offending entry.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub mode: Mode,
    pub status: Status,
    pub residual: Option<f64>,
    pub witness: Option<String>,
    #[serde(skip)]
    pub duration_ms: f64,
    pub convention_notes: Option<String>,
}

impl CheckReport {
    /// Exact check: passes iff no witness was recorded.
    pub fn exact(name: impl Into<String>, witness: Option<String>) -> Self {
        CheckReport {
            name: name.into(),
            mode: Mode::Exact,
            status: if witness.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            residual: None,
            witness,
            duration_ms: 0.0,
            convention_notes: None,
        }
    }

    /// Numeric check: passes iff `residual <= tolerance`.
    pub fn numeric(
        name: impl Into<String>,
        residual: f64,
        tolerance: f64,
        witness: Option<String>,
    ) -> Self {
        let pass = residual.is_finite() && residual <= tolerance;
        CheckReport {
            name: name.into(),
            mode: Mode::Numeric,
            status: if pass { Status::Pass } else { Status::Fail },
            residual: Some(residual),
            witness: if pass {
                None
            } else {
                Some(witness.unwrap_or_else(|| {
                    format!("residual {residual:e} exceeds tolerance {tolerance:e}")
                }))
            },
            duration_ms: 0.0,
            convention_notes: None,
        }
    }

    pub fn error(name: impl Into<String>, mode: Mode, err: &Error) -> Self {
        CheckReport {
            name: name.into(),
            mode,
            status: Status::Error,
            residual: None,
            witness: Some(err.to_string()),
            duration_ms: 0.0,
            convention_notes: None,
        }
    }

    pub fn with_notes(mut self, notes: impl Into<String>) -> Self {
        self.convention_notes = Some(notes.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Merges a second report into this one: the result passes only if both
    /// do, keeps the first witness and the larger residual.
    pub fn and(mut self, other: CheckReport) -> Self {
        if self.status == Status::Pass && other.status != Status::Pass {
            self.status = other.status;
            self.witness = other.witness;
        }
        if self.mode == Mode::Numeric || other.mode == Mode::Numeric {
            self.mode = Mode::Numeric;
            self.residual = match (self.residual, other.residual) {
                (Some(a), Some(b)) => Some(a.max(b)),
                (a, b) => a.or(b),
            };
        }
        self.convention_notes = match (self.convention_notes, other.convention_notes) {
            (Some(a), Some(b)) => Some(format!("{a}; {b}")),
            (a, b) => a.or(b),
        };
        self
    }

    /// One text line: `<name> <mode> <status> [residual] [witness]`.
    pub fn text_line(&self) -> String {
        let mut line = format!(
            "{} {} {}",
            self.name,
            self.mode.as_str(),
            self.status.as_str()
        );
        if let Some(r) = self.residual {
            let _ = write!(line, " {r:e}");
        }
        if let Some(w) = &self.witness {
            let _ = write!(line, " {w}");
        }
        line
    }
}

/// Runs `f` and stamps the elapsed wall time into its report.
pub fn timed(f: impl FnOnce() -> CheckReport) -> CheckReport {
    let start = Instant::now();
    let mut report = f();
    report.duration_ms = start.elapsed().as_secs_f64() * 1e3;
    report
}

/// Collects the first failure among a sequence of exact assertions.
#[derive(Debug, Default)]
pub struct Witness {
    first: Option<String>,
    checked: usize,
}

impl Witness {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `describe()` as the witness if `ok` is false and no earlier
    /// failure was seen.
    pub fn expect(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.first.is_none() {
            self.first = Some(describe());
        }
    }

    pub fn failed(&self) -> bool {
        self.first.is_some()
    }

    pub fn checked(&self) -> usize {
        self.checked
    }

    pub fn into_option(self) -> Option<String> {
        self.first
    }
}

/// Ordered reports of a suite run.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub suite: String,
    pub checks: Vec<CheckReport>,
}

#[derive(Serialize)]
struct SuiteJson<'a> {
    suite: &'a str,
    status: Status,
    convention_notes: Vec<ConventionNote<'a>>,
    checks: &'a [CheckReport],
    timings_ms: Vec<Timing<'a>>,
}

#[derive(Serialize)]
struct ConventionNote<'a> {
    check: &'a str,
    note: &'a str,
}

#[derive(Serialize)]
struct Timing<'a> {
    check: &'a str,
    duration_ms: f64,
}

impl SuiteResult {
    pub fn new(suite: impl Into<String>, mut checks: Vec<CheckReport>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        SuiteResult {
            suite: suite.into(),
            checks,
        }
    }

    pub fn status(&self) -> Status {
        if self.checks.iter().all(CheckReport::passed) {
            Status::Pass
        } else if self.checks.iter().any(|c| c.status == Status::Error) {
            Status::Error
        } else {
            Status::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.status() == Status::Pass
    }

    /// JSON document. Everything before the trailing `timings_ms` array is
    /// deterministic across runs.
    pub fn to_json(&self) -> String {
        let doc = SuiteJson {
            suite: &self.suite,
            status: self.status(),
            convention_notes: self
                .checks
                .iter()
                .filter_map(|c| {
                    c.convention_notes.as_deref().map(|note| ConventionNote {
                        check: &c.name,
                        note,
                    })
                })
                .collect(),
            checks: &self.checks,
            timings_ms: self
                .checks
                .iter()
                .map(|c| Timing {
                    check: &c.name,
                    duration_ms: c.duration_ms,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("report serialisation") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&c.text_line());
            out.push('\n');
        }
        let _ = writeln!(out, "suite {} {}", self.suite, self.status().as_str());
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,mode,status,residual,witness\n");
        for c in &self.checks {
            let residual = c.residual.map(|r| format!("{r:e}")).unwrap_or_default();
            let witness = c.witness.as_deref().unwrap_or("");
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                c.name,
                c.mode.as_str(),
                c.status.as_str(),
                residual,
                csv_field(witness)
            );
        }
        out
    }
}

pub(crate) fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
