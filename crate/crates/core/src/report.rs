//! Machine-readable check results and the report emitted by the CLI.

use crate::matrix::Mat;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Check {
        Check { name: name.into(), pass: true, witness: None }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Check {
        Check { name: name.into(), pass: false, witness: Some(witness.into()) }
    }

    pub fn of(name: impl Into<String>, ok: bool, witness: impl Into<String>) -> Check {
        if ok {
            Check::pass(name)
        } else {
            Check::fail(name, witness)
        }
    }

    /// Compare two matrices; the witness names the first differing entry.
    pub fn eq_mats(name: impl Into<String>, lhs: &Mat, rhs: &Mat) -> Check {
        match lhs.first_diff(rhs) {
            None => Check::pass(name),
            Some(w) => Check::fail(name, w),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub instance: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimensions: Option<Vec<usize>>,
    /// Diagonal transposition solutions: per solution, degree -> coefficient.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solutions: Option<Vec<BTreeMap<String, String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrices: Option<BTreeMap<String, Vec<Vec<String>>>>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub findings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Report {
    pub fn new(command: &str, instance: &str) -> Report {
        Report {
            command: command.into(),
            instance: instance.into(),
            checks: Vec::new(),
            dimensions: None,
            solutions: None,
            matrices: None,
            findings: Vec::new(),
            error: None,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Deterministic serialization: checks sorted by name, pretty JSON,
    /// trailing newline.
    pub fn render(&mut self) -> String {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
