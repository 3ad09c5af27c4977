//! Pass/fail records produced by checks, serialised as one JSON object per line.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    /// First counterexample or failure reason.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub details: BTreeMap<String, Value>,
    pub elapsed_ms: f64,
}

impl CheckReport {
    pub fn new(name: &str) -> Self {
        CheckReport { name: name.to_string(), passed: true, witness: None, details: BTreeMap::new(), elapsed_ms: 0.0 }
    }

    /// Records a failure; only the first witness is kept.
    pub fn fail(&mut self, witness: impl Into<String>) {
        if self.passed {
            self.witness = Some(witness.into());
        }
        self.passed = false;
    }

    /// Fails with `witness()` unless `cond` holds.
    pub fn require(&mut self, cond: bool, witness: impl FnOnce() -> String) -> bool {
        if !cond {
            self.fail(witness());
        }
        cond
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) {
        self.details.insert(key.to_string(), serde_json::to_value(value).unwrap_or(Value::Null));
    }

    pub fn with_detail(mut self, key: &str, value: impl Serialize) -> Self {
        self.detail(key, value);
        self
    }

    /// Converts an error into a failed report.
    pub fn from_error(name: &str, e: impl std::fmt::Display) -> Self {
        let mut r = CheckReport::new(name);
        r.fail(format!("error: {e}"));
        r
    }

    /// JSON without the timing field, for determinism comparisons.
    pub fn stable_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("serialisable");
        if let Value::Object(m) = &mut v {
            m.remove("elapsed_ms");
        }
        v.to_string()
    }

    pub fn json_line(&self) -> String {
        serde_json::to_string(self).expect("serialisable")
    }
}

/// Runs `f` and stamps the elapsed time on its report.
pub fn timed(f: impl FnOnce() -> CheckReport) -> CheckReport {
    let start = Instant::now();
    let mut r = f();
    r.elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
    r
}
