//! Machine-readable reports emitted by the CLI.

use crate::frontend::print::print_expression;
use crate::poly::SuperPoly;
use crate::space::Bidegree;
use crate::structures::{CheckReport, Classification};
use serde::Serialize;
use std::collections::BTreeMap;

/// JSON-serializable outcome of one CLI invocation. Residual expressions are
/// printed canonically so downstream tools can re-parse them exactly.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<String>,
    pub residuals: BTreeMap<String, String>,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn new(command: impl Into<String>, verdict: bool) -> Self {
        Report {
            command: command.into(),
            verdict,
            classification: None,
            residuals: BTreeMap::new(),
            elapsed_ms: 0,
        }
    }

    pub fn with_classification(mut self, c: Classification) -> Self {
        self.classification = Some(c.as_str().to_string());
        self
    }

    pub fn with_residual(mut self, d: Bidegree, p: &SuperPoly) -> Self {
        self.residuals.insert(d.to_string(), print_expression(p));
        self
    }

    pub fn from_check(command: impl Into<String>, check: &CheckReport) -> Self {
        let mut report = Report::new(command, check.verdict)
            .with_classification(check.classification);
        for (d, p) in &check.residuals {
            report = report.with_residual(*d, p);
        }
        report
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("verdict: {}\n", self.verdict));
        if let Some(c) = &self.classification {
            out.push_str(&format!("classification: {c}\n"));
        }
        if self.residuals.is_empty() {
            out.push_str("residuals: none\n");
        } else {
            out.push_str("residuals:\n");
            for (d, expr) in &self.residuals {
                out.push_str(&format!("  {d}: {expr}\n"));
            }
        }
        out.push_str(&format!("elapsed_ms: {}\n", self.elapsed_ms));
        out
    }
}
