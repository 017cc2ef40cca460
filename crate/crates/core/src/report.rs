//! Pass/fail bookkeeping shared by the identity checkers and the `verify`
//! command.

use std::fmt;

use serde_json::{json, Value};

/// One named identity or invariant, checked over a number of cases. Only the
/// first counterexample is kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub failure: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            cases: 0,
            failure: None,
        }
    }

    /// Records one case; `detail` is only evaluated for the first failure.
    pub fn case(&mut self, ok: bool, detail: impl FnOnce() -> String) -> &mut Self {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "passed": self.passed(),
            "cases": self.cases,
            "failure": self.failure,
        })
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {} ({} cases)", self.name, self.cases),
            Some(why) => write!(f, "FAIL {} ({} cases): {}", self.name, self.cases, why),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }
}

impl From<Vec<Check>> for Report {
    fn from(checks: Vec<Check>) -> Self {
        Report { checks }
    }
}
