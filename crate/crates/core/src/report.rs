//! Verification reports: one entry per named check, kept sorted by name.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub witnesses: Vec<String>,
    pub measured: BTreeMap<String, i64>,
    /// Only populated when timing is requested; absent by default so that
    /// structured output is reproducible byte for byte.
    pub wall_time_us: Option<u64>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Pass,
            witnesses: Vec::new(),
            measured: BTreeMap::new(),
            wall_time_us: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        let mut c = Check::pass(name);
        c.status = Status::Fail;
        c.witnesses.push(witness.into());
        c
    }

    pub fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Self {
        let mut c = Check::pass(name);
        c.status = Status::Skipped;
        c.witnesses.push(reason.into());
        c
    }

    /// Pass when `witness` is `None`, otherwise fail with it.
    pub fn from_witness(name: impl Into<String>, witness: Option<String>) -> Self {
        match witness {
            None => Check::pass(name),
            Some(w) => Check::fail(name, w),
        }
    }

    pub fn with(mut self, key: impl Into<String>, value: impl TryInto<i64>) -> Self {
        let v = value.try_into().unwrap_or(i64::MAX);
        self.measured.insert(key.into(), v);
        self
    }

    /// Adds a failure witness (and marks the check failed).
    pub fn fail_with(mut self, witness: impl Into<String>) -> Self {
        self.status = Status::Fail;
        self.witnesses.push(witness.into());
        self
    }

    /// Adds an informational note without changing the status.
    pub fn note(mut self, text: impl Into<String>) -> Self {
        self.witnesses.push(text.into());
        self
    }

    /// Fails unless `cond` holds.
    pub fn require(self, cond: bool, witness: impl FnOnce() -> String) -> Self {
        if cond {
            self
        } else {
            self.fail_with(witness())
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn get(&self, key: &str) -> Option<i64> {
        self.measured.get(key).copied()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
    /// Scenario-level quantities (dimensions, ranks) compared against expectations.
    pub measured: BTreeMap<String, i64>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), ..Default::default() }
    }

    pub fn push(&mut self, check: Check) {
        let pos = self.checks.partition_point(|c| c.name <= check.name);
        self.checks.insert(pos, check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        for c in checks {
            self.push(c);
        }
    }

    pub fn record(&mut self, key: impl Into<String>, value: impl TryInto<i64>) {
        self.measured.insert(key.into(), value.try_into().unwrap_or(i64::MAX));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Structured,
}

/// Renders a report. The text form is a fixed-width table; the structured
/// form is JSON with every object's keys sorted.
pub fn emit_report(report: &Report, format: ReportFormat) -> Vec<u8> {
    match format {
        ReportFormat::Text => render_text(report).into_bytes(),
        ReportFormat::Structured => {
            // serde_json::Value keeps object keys in a BTreeMap, which sorts them
            let value = serde_json::to_value(report).expect("report serializes");
            let mut out = serde_json::to_string_pretty(&value).expect("value serializes");
            out.push('\n');
            out.into_bytes()
        }
    }
}

/// Parses the structured form back into a [`Report`].
pub fn parse_structured(bytes: &[u8]) -> serde_json::Result<Report> {
    serde_json::from_slice(bytes)
}

fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let width = report.checks.iter().map(|c| c.name.len()).max().unwrap_or(5).max(5);
    writeln!(out, "report: {}", report.title).unwrap();
    writeln!(out, "{:<width$}  {:<7}  details", "check", "status").unwrap();
    for c in &report.checks {
        let details: Vec<String> = c.measured.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut line = format!("{:<width$}  {:<7}  {}", c.name, c.status.as_str(), details.join(" "));
        if let Some(t) = c.wall_time_us {
            write!(line, " time_us={t}").unwrap();
        }
        writeln!(out, "{}", line.trim_end()).unwrap();
        for w in &c.witnesses {
            writeln!(out, "    - {w}").unwrap();
        }
    }
    if !report.measured.is_empty() {
        let m: Vec<String> = report.measured.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(out, "measured: {}", m.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_is_header_only() {
        let text = String::from_utf8(emit_report(&Report::new("empty"), ReportFormat::Text)).unwrap();
        assert_eq!(text, "report: empty\ncheck  status   details\n");
    }

    #[test]
    fn checks_stay_sorted() {
        let mut r = Report::new("t");
        r.push(Check::pass("b"));
        r.push(Check::fail("a", "boom"));
        r.push(Check::pass("c"));
        let names: Vec<&str> = r.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["a", "b", "c"]);
        assert!(!r.passed());
    }

    #[test]
    fn structured_roundtrip_and_sorted_keys() {
        let mut r = Report::new("t");
        r.push(Check::pass("x").with("dim", 3).with("alpha", 1));
        r.push(Check::skipped("y", "not selected"));
        r.record("dim_skew", 3);
        let bytes = emit_report(&r, ReportFormat::Structured);
        assert_eq!(parse_structured(&bytes).unwrap(), r);
        let text = String::from_utf8(bytes).unwrap();
        assert!(text.find("\"checks\"").unwrap() < text.find("\"measured\"").unwrap());
        assert!(text.find("\"alpha\"").unwrap() < text.find("\"dim\"").unwrap());
    }
}
