//! Machine-diffable run reports: JSON with sorted keys or RFC-4180 CSV.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Informational,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Informational => "informational",
        }
    }
}

/// One verification row. `equation` carries the identity's display tag, or
/// the literal `plumbing` for harness-internal checks; `expected_from` says
/// where the expected value came from: a printed `table`, an independent
/// `oracle` computation, or the `definition` itself.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub equation: String,
    pub status: Status,
    pub measured: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    pub expected_from: String,
}

impl CheckRecord {
    pub fn asserted(
        id: &str,
        equation: &str,
        expected_from: &str,
        tolerance: Option<f64>,
        measured: Value,
        ok: bool,
    ) -> Self {
        Self {
            id: id.to_string(),
            equation: equation.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            measured,
            tolerance,
            expected_from: expected_from.to_string(),
        }
    }

    pub fn informational(id: &str, equation: &str, expected_from: &str, measured: Value) -> Self {
        Self {
            id: id.to_string(),
            equation: equation.to_string(),
            status: Status::Informational,
            measured,
            tolerance: None,
            expected_from: expected_from.to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckRecord>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub spec_version: String,
    pub seed: u64,
    pub units: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at_unix: Option<u64>,
    pub suites: Vec<SuiteReport>,
}

impl RunReport {
    pub fn new(seed: u64, units: &str, fixed_clock: bool) -> Self {
        let generated_at_unix = if fixed_clock {
            None
        } else {
            std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .ok()
                .map(|d| d.as_secs())
        };
        Self {
            spec_version: "1.0".to_string(),
            seed,
            units: units.to_string(),
            generated_at_unix,
            suites: Vec::new(),
        }
    }

    pub fn any_failed(&self) -> bool {
        self.suites
            .iter()
            .flat_map(|s| &s.checks)
            .any(|c| c.status == Status::Fail)
    }

    /// Pretty JSON with keys sorted (serde_json's default map is ordered).
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut out = serde_json::to_string_pretty(&value).expect("value serializes");
        out.push('\n');
        out
    }

    /// Flat CSV, one row per check.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("suite,id,equation,status,measured,tolerance,expected_from\n");
        for suite in &self.suites {
            for check in &suite.checks {
                let measured = serde_json::to_string(&check.measured).expect("value serializes");
                let tolerance = check.tolerance.map(|t| t.to_string()).unwrap_or_default();
                let row = [
                    suite.suite.as_str(),
                    check.id.as_str(),
                    check.equation.as_str(),
                    check.status.label(),
                    measured.as_str(),
                    tolerance.as_str(),
                    check.expected_from.as_str(),
                ];
                let quoted: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
                out.push_str(&quoted.join(","));
                out.push('\n');
            }
        }
        out
    }
}

/// RFC-4180 quoting: wrap and double quotes when the field carries a comma,
/// quote or newline.
pub fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
