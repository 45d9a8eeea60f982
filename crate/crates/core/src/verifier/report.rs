use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

use super::{Budget, Check, Scenario};

/// Version of the JSON layout; bumped on any field change.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct ScenarioReport {
    pub name: String,
    pub claim: String,
    pub inputs: Vec<String>,
    pub budget: Budget,
    pub passed: bool,
    pub error: Option<String>,
    pub checks: Vec<Check>,
    /// Wall-clock time; kept out of the emitted report so runs compare equal.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl ScenarioReport {
    pub(super) fn new(s: &Scenario, checks: Vec<Check>, error: Option<String>, elapsed: Duration) -> Self {
        ScenarioReport {
            name: s.name.to_string(),
            claim: s.claim.to_string(),
            inputs: s.inputs.iter().map(|i| i.to_string()).collect(),
            budget: s.budget,
            passed: error.is_none() && !checks.is_empty() && checks.iter().all(|c| c.passed),
            error,
            checks,
            elapsed,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub passed: bool,
    pub scenarios: Vec<ScenarioReport>,
}

impl RunReport {
    pub fn new(mut scenarios: Vec<ScenarioReport>) -> Self {
        scenarios.sort_by(|a, b| a.name.cmp(&b.name));
        RunReport {
            schema_version: SCHEMA_VERSION,
            passed: scenarios.iter().all(|s| s.passed),
            scenarios,
        }
    }

    /// Process exit code: 0 when every scenario passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

fn text(r: &RunReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "schema_version: {}", r.schema_version);
    let _ = writeln!(out, "passed: {}", r.passed);
    for s in &r.scenarios {
        let _ = writeln!(out, "scenario {} [{}]: {}", s.name, s.budget, verdict(s.passed));
        let _ = writeln!(out, "  claim: {}", s.claim);
        let _ = writeln!(out, "  inputs: {}", s.inputs.join(", "));
        if let Some(e) = &s.error {
            let _ = writeln!(out, "  error: {e}");
        }
        for c in &s.checks {
            let _ = writeln!(out, "  check {}: {}", c.name, verdict(c.passed));
            let _ = writeln!(out, "    expected: {}", c.expected);
            let _ = writeln!(out, "    computed: {}", c.computed);
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "    witness: {w}");
            }
        }
    }
    let passed = r.scenarios.iter().filter(|s| s.passed).count();
    let _ = writeln!(out, "summary: {passed}/{} scenarios passed", r.scenarios.len());
    out
}

pub fn emit_report(r: &RunReport, format: Format) -> String {
    match format {
        Format::Text => text(r),
        Format::Json => serde_json::to_string_pretty(r).expect("report serializes") + "\n",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> RunReport {
        let s = ScenarioReport {
            name: "demo".into(),
            claim: "two is even".into(),
            inputs: vec!["C2".into()],
            budget: Budget::Fast,
            passed: true,
            error: None,
            checks: vec![Check::equal("parity", 0, 0).with_witness("2 = 2·1")],
            elapsed: Duration::from_millis(3),
        };
        RunReport::new(vec![s])
    }

    #[test]
    fn text_and_json_agree() {
        let r = sample();
        let json: serde_json::Value = serde_json::from_str(&emit_report(&r, Format::Json)).unwrap();
        let text = emit_report(&r, Format::Text);
        let s = &json["scenarios"][0];
        assert!(text.contains(&format!("schema_version: {}", json["schema_version"])));
        assert!(text.contains(&format!("scenario {} [{}]: PASS", s["name"].as_str().unwrap(), s["budget"].as_str().unwrap())));
        let c = &s["checks"][0];
        for field in ["expected", "computed", "witness"] {
            assert!(text.contains(&format!("{field}: {}", c[field].as_str().unwrap())));
        }
        assert!(json.get("elapsed").is_none());
    }

    #[test]
    fn exit_codes() {
        let mut r = sample();
        assert_eq!(r.exit_code(), 0);
        r.scenarios[0].checks[0].passed = false;
        r.scenarios[0].passed = false;
        assert_eq!(RunReport::new(r.scenarios).exit_code(), 1);
        assert_eq!(RunReport::new(Vec::new()).exit_code(), 0);
    }
}
