use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::decomp::PolarReport;
use crate::linalg::{Residual, ToleranceConfig};

/// One line of a report: a named measurement against its bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportCheck {
    pub name: String,
    pub value: f64,
    pub bound: f64,
    pub pass: bool,
    /// Set for checks aggregated over randomized trials.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failures: Option<usize>,
}

impl ReportCheck {
    pub fn residual(name: impl Into<String>, r: Residual) -> Self {
        Self {
            name: name.into(),
            value: r.value,
            bound: r.bound,
            pass: r.passes(),
            trials: None,
            failures: None,
        }
    }

    pub fn flag(name: impl Into<String>, holds: bool) -> Self {
        Self::residual(name, Residual::new(if holds { 0.0 } else { 1.0 }, 0.0))
    }
}

/// Outcome of one command: the invocation, tolerances, every check and the
/// overall verdict, which is the conjunction of the checks.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub args: Map<String, Value>,
    pub tolerances: ToleranceConfig,
    pub checks: Vec<ReportCheck>,
    pub summary: Map<String, Value>,
    /// `σ_r / σ_1` of the rank decision on the input, when there was one.
    pub rank_margin: Option<f64>,
    pub outputs: Vec<String>,
}

impl RunReport {
    pub fn new(command: &str, tolerances: ToleranceConfig) -> Self {
        Self {
            command: command.to_string(),
            args: Map::new(),
            tolerances,
            checks: Vec::new(),
            summary: Map::new(),
            rank_margin: None,
            outputs: Vec::new(),
        }
    }

    pub fn arg(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.args.insert(key.to_string(), value.into());
        self
    }

    pub fn note(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.summary.insert(key.to_string(), value.into());
        self
    }

    pub fn push(&mut self, check: ReportCheck) -> &mut Self {
        self.checks.push(check);
        self
    }

    pub fn push_polar(&mut self, prefix: &str, report: &PolarReport) -> &mut Self {
        for c in &report.checks {
            self.checks.push(ReportCheck::residual(format!("{prefix}{}", c.name), c.residual));
        }
        self
    }

    pub fn verdict(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// One JSON object per line: the run header, each check, the summary and
    /// the verdict.
    pub fn to_json_lines(&self) -> String {
        let mut lines = vec![json!({
            "record": "run",
            "command": self.command,
            "args": self.args,
            "tolerances": self.tolerances,
        })];
        for check in &self.checks {
            let mut record = Map::new();
            record.insert("record".into(), "check".into());
            if let Value::Object(fields) = serde_json::to_value(check).expect("checks serialize") {
                record.extend(fields);
            }
            lines.push(Value::Object(record));
        }
        if !self.summary.is_empty() {
            lines.push(json!({ "record": "summary", "summary": self.summary }));
        }
        let failed = self.checks.iter().filter(|c| !c.pass).count();
        lines.push(json!({
            "record": "verdict",
            "pass": self.verdict(),
            "checks": self.checks.len(),
            "failed": failed,
            "rank_margin": self.rank_margin,
            "outputs": self.outputs,
        }));
        let mut out = String::new();
        for line in lines {
            out.push_str(&line.to_string());
            out.push('\n');
        }
        out
    }
}
