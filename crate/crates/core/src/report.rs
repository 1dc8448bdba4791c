//! Check results and the verification report.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Result;

pub const SUITE_VERSION: &str = "1.0";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    pub trials: usize,
    pub counterexample: Option<Value>,
}

impl CheckResult {
    pub fn pass(name: &str, trials: usize) -> Self {
        CheckResult {
            name: name.to_string(),
            status: CheckStatus::Pass,
            trials,
            counterexample: None,
        }
    }

    pub fn fail(name: &str, trials: usize, counterexample: Value) -> Self {
        CheckResult {
            name: name.to_string(),
            status: CheckStatus::Fail,
            trials,
            counterexample: Some(counterexample),
        }
    }

    pub fn skipped(name: &str) -> Self {
        CheckResult {
            name: name.to_string(),
            status: CheckStatus::Skipped,
            trials: 0,
            counterexample: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != CheckStatus::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite_version: String,
    pub ranks: Vec<usize>,
    pub seed: u64,
    pub trials: usize,
    /// Sorted by name.
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

impl VerificationReport {
    pub fn new(ranks: Vec<usize>, seed: u64, trials: usize, mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let passed = checks.iter().all(CheckResult::passed);
        VerificationReport {
            suite_version: SUITE_VERSION.to_string(),
            ranks,
            seed,
            trials,
            checks,
            passed,
        }
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Human-readable table, one row per check.
    pub fn render_table(&self) -> String {
        let width = self
            .checks
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(5)
            .max(5);
        let mut out = String::new();
        let ranks = match (self.ranks.first(), self.ranks.last()) {
            (Some(a), Some(b)) if a != b => format!("{a}..{b}"),
            (Some(a), _) => a.to_string(),
            _ => "-".into(),
        };
        let _ = writeln!(
            out,
            "suite {}  ranks {}  seed {}  trials {}",
            self.suite_version, ranks, self.seed, self.trials
        );
        let _ = writeln!(out, "{:<width$}  {:<7}  {:>7}", "check", "status", "trials");
        for c in &self.checks {
            let status = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "skipped",
            };
            let _ = writeln!(out, "{:<width$}  {:<7}  {:>7}", c.name, status, c.trials);
            if let Some(ce) = &c.counterexample {
                let _ = writeln!(out, "    counterexample: {ce}");
            }
        }
        let _ = writeln!(
            out,
            "{}",
            if self.passed { "all checks passed" } else { "some checks FAILED" }
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn report_sorts_and_round_trips() {
        let report = VerificationReport::new(
            vec![2, 3],
            7,
            1,
            vec![
                CheckResult::pass("zeta", 2),
                CheckResult::fail("alpha", 1, json!({"rank": 2})),
                CheckResult::skipped("mid"),
            ],
        );
        assert_eq!(report.checks[0].name, "alpha");
        assert!(!report.passed);
        assert_eq!(report.failures().count(), 1);
        let text = report.to_json_pretty();
        assert!(text.contains("\"status\": \"fail\""));
        assert_eq!(VerificationReport::from_json(&text).unwrap(), report);
        assert!(report.render_table().contains("FAIL"));
    }
}
