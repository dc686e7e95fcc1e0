//! Pass/fail records shared by every verifier.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
    /// First failing index tuple, when there is one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    /// Informational checks (e.g. commutativity) do not affect `passed()`.
    pub required: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub subject: String,
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        ValidationReport { subject: subject.into(), checks: vec![] }
    }

    pub fn pass(&mut self, name: &str) {
        self.push(name, Status::Pass, String::new(), None, true);
    }

    pub fn fail(&mut self, name: &str, detail: impl Into<String>, witness: Option<Vec<usize>>) {
        self.push(name, Status::Fail, detail.into(), witness, true);
    }

    pub fn skip(&mut self, name: &str, detail: impl Into<String>) {
        self.push(name, Status::Skipped, detail.into(), None, true);
    }

    /// Record a check from an optional failure witness.
    pub fn record(&mut self, name: &str, failure: Option<(String, Vec<usize>)>) {
        match failure {
            None => self.pass(name),
            Some((d, w)) => self.fail(name, d, Some(w)),
        }
    }

    pub fn info(&mut self, name: &str, holds: bool, detail: impl Into<String>) {
        let status = if holds { Status::Pass } else { Status::Fail };
        self.push(name, status, detail.into(), None, false);
    }

    fn push(&mut self, name: &str, status: Status, detail: String, witness: Option<Vec<usize>>, required: bool) {
        self.checks.push(CheckResult { name: name.to_string(), status, detail, witness, required });
    }

    /// No required check failed (skipped checks do not count as failures).
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| !c.required || c.status != Status::Fail)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.required && c.status == Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn status(&self, name: &str) -> Option<Status> {
        self.check(name).map(|c| c.status)
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skip",
            };
            write!(f, "  [{tag}] {}", c.name)?;
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            if let Some(w) = &c.witness {
                write!(f, " at {w:?}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
