use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::coeffring::ScalarExpr;
use crate::extalg::{DiffForm, ExtError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// Outcome of one scenario run.
#[derive(Clone, Debug)]
pub struct VerificationResult {
    pub scenario: String,
    pub params: Vec<(String, String)>,
    pub status: Status,
    /// Residuals of the failed checks, rendered; empty on pass.
    pub witness: Option<String>,
    /// Facts assumed rather than computed.
    pub axioms_used: Vec<String>,
    /// Extra computed facts reported alongside the verdict.
    pub details: Vec<String>,
    pub elapsed: Duration,
}

impl VerificationResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn param(&self, key: &str) -> Option<&str> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScenarioError {
    #[error("parameter {name} = {value} outside [{min}, {max}]")]
    OutOfRange { name: String, value: i64, min: i64, max: i64 },
    #[error(transparent)]
    Ext(#[from] ExtError),
}

/// Upper bounds on scenario sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    pub top_power: usize,
    pub liouville: usize,
    pub lagrange: usize,
    pub embedding: usize,
    pub weinstein: usize,
    pub handlebody: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            top_power: 4,
            liouville: 4,
            lagrange: 5,
            embedding: 6,
            weinstein: 4,
            handlebody: 6,
        }
    }
}

impl Limits {
    /// Caps large enough to be effectively absent.
    pub fn unbounded() -> Self {
        Limits {
            top_power: 11,
            liouville: 11,
            lagrange: 11,
            embedding: 11,
            weinstein: 8,
            handlebody: 16,
        }
    }
}

pub(crate) fn check_range(name: &str, value: usize, min: usize, max: usize) -> Result<(), ScenarioError> {
    if value < min || value > max {
        return Err(ScenarioError::OutOfRange {
            name: name.to_string(),
            value: value as i64,
            min: min as i64,
            max: max as i64,
        });
    }
    Ok(())
}

const WITNESS_LIMIT: usize = 4000;

fn clip(s: String) -> String {
    if s.len() <= WITNESS_LIMIT {
        return s;
    }
    let mut cut = WITNESS_LIMIT;
    while !s.is_char_boundary(cut) {
        cut -= 1;
    }
    format!("{} ... ({} chars total)", &s[..cut], s.len())
}

/// Accumulates named checks for one scenario run.
pub(crate) struct Checks {
    scenario: String,
    params: Vec<(String, String)>,
    failures: Vec<String>,
    axioms: Vec<String>,
    details: Vec<String>,
    start: Instant,
}

impl Checks {
    pub fn new(scenario: &str, params: &[(&str, String)]) -> Self {
        Checks {
            scenario: scenario.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            failures: Vec::new(),
            axioms: Vec::new(),
            details: Vec::new(),
            start: Instant::now(),
        }
    }

    pub fn form(&mut self, label: &str, residual: &DiffForm) {
        if !residual.is_zero() {
            self.failures.push(format!("{label}: residual {residual}"));
        }
    }

    pub fn scalar(&mut self, label: &str, residual: &ScalarExpr) {
        if !residual.is_zero() {
            self.failures.push(format!("{label}: residual {residual}"));
        }
    }

    pub fn fact(&mut self, label: &str, ok: bool, witness: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(format!("{label}: {}", witness()));
        }
    }

    pub fn fail(&mut self, label: &str, why: impl fmt::Display) {
        self.failures.push(format!("{label}: {why}"));
    }

    pub fn detail(&mut self, s: impl Into<String>) {
        self.details.push(s.into());
    }

    pub fn axiom(&mut self, s: impl Into<String>) {
        self.axioms.push(s.into());
    }

    pub fn finish(self) -> VerificationResult {
        let status = if self.failures.is_empty() { Status::Pass } else { Status::Fail };
        VerificationResult {
            scenario: self.scenario,
            params: self.params,
            status,
            witness: (!self.failures.is_empty()).then(|| clip(self.failures.join("; "))),
            axioms_used: self.axioms,
            details: self.details,
            elapsed: self.start.elapsed(),
        }
    }
}
