use std::fmt::Write as _;
use std::time::Duration;

use idemdrazin::{Field, Matrix, MatrixJson};
use serde::Serialize;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Offending matrix or coefficient vector, present only on failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip)]
    witness_text: Option<String>,
}

enum Item {
    Line(String, Value, String),
    Matrix(String, MatrixJson, String),
}

pub struct Report {
    command: String,
    items: Vec<Item>,
    checks: Vec<Check>,
    timing: Option<Duration>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            items: Vec::new(),
            checks: Vec::new(),
            timing: None,
        }
    }

    pub fn field(&mut self, key: &str, value: impl Serialize + ToString) {
        let text = value.to_string();
        self.items.push(Item::Line(key.into(), json!(value), text));
    }

    pub fn list(&mut self, key: &str, values: &[String]) {
        let text = if values.is_empty() { "(none)".into() } else { values.join(", ") };
        self.items.push(Item::Line(key.into(), json!(values), text));
    }

    pub fn matrix<T: Field>(&mut self, key: &str, m: &Matrix<T>) {
        self.items.push(Item::Matrix(key.into(), MatrixJson::encode(m), m.to_string()));
    }

    pub fn check(&mut self, name: &str, passed: bool) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            witness: None,
            witness_text: None,
        });
    }

    pub fn check_matrix<T: Field>(&mut self, name: &str, passed: bool, witness: &Matrix<T>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            witness: (!passed).then(|| json!(MatrixJson::encode(witness))),
            witness_text: (!passed).then(|| witness.to_string()),
        });
    }

    pub fn check_vector(&mut self, name: &str, passed: bool, witness: Option<&[String]>) {
        let witness = witness.filter(|_| !passed);
        self.checks.push(Check {
            name: name.into(),
            passed,
            witness: witness.map(|w| json!(w)),
            witness_text: witness.map(|w| format!("[{}]", w.join(", "))),
        });
    }

    pub fn set_timing(&mut self, elapsed: Duration) {
        self.timing = Some(elapsed);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        for item in &self.items {
            match item {
                Item::Line(key, _, text) => {
                    let _ = writeln!(out, "{key}: {text}");
                }
                Item::Matrix(key, _, text) => {
                    let _ = writeln!(out, "{key}:");
                    for line in text.lines() {
                        let _ = writeln!(out, "  {line}");
                    }
                }
            }
        }
        for check in &self.checks {
            let verdict = if check.passed { "pass" } else { "FAIL" };
            let _ = writeln!(out, "check {}: {verdict}", check.name);
            if let Some(w) = &check.witness_text {
                for line in w.lines() {
                    let _ = writeln!(out, "  {line}");
                }
            }
        }
        if let Some(t) = self.timing {
            let _ = writeln!(out, "time: {:.3} ms", t.as_secs_f64() * 1e3);
        }
        if !self.checks.is_empty() {
            let _ = writeln!(out, "result: {}", if self.passed() { "pass" } else { "fail" });
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut map = Map::new();
        map.insert("command".into(), json!(self.command));
        for item in &self.items {
            match item {
                Item::Line(key, value, _) => map.insert(key.clone(), value.clone()),
                Item::Matrix(key, m, _) => map.insert(key.clone(), json!(m)),
            };
        }
        map.insert("checks".into(), json!(self.checks));
        map.insert("passed".into(), json!(self.passed()));
        if let Some(t) = self.timing {
            map.insert("timing_ms".into(), json!(t.as_secs_f64() * 1e3));
        }
        serde_json::to_string_pretty(&Value::Object(map)).expect("report is valid JSON")
    }
}
