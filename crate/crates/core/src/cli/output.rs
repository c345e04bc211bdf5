//! Result records and their text and line-delimited JSON renderings.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Definite,
    Indeterminate,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub line: usize,
    pub command: String,
    pub outcome: Outcome,
    pub fields: Map<String, Value>,
}

impl Record {
    pub fn new(line: usize, command: impl Into<String>) -> Self {
        Record { line, command: command.into(), outcome: Outcome::Definite, fields: Map::new() }
    }

    pub fn put(&mut self, key: &str, v: impl Into<Value>) {
        self.fields.insert(key.to_string(), v.into());
    }

    /// Marks the record indeterminate unless it already failed.
    pub fn indeterminate(&mut self) {
        if self.outcome == Outcome::Definite {
            self.outcome = Outcome::Indeterminate;
        }
    }

    pub fn fail(&mut self, msg: impl Into<String>) {
        self.outcome = Outcome::Error;
        self.put("error", msg.into());
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Text,
    Machine,
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) => format!("{{{}}}", a.iter().map(text_value).collect::<Vec<_>>().join(", ")),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

fn outcome_name(o: Outcome) -> &'static str {
    match o {
        Outcome::Definite => "definite",
        Outcome::Indeterminate => "indeterminate",
        Outcome::Error => "error",
    }
}

pub fn format_record(r: &Record, mode: Mode) -> String {
    match mode {
        Mode::Machine => serde_json::to_string(r).expect("records serialize"),
        Mode::Text => {
            let mut s = format!("[{}] {} ({})", r.line, r.command, outcome_name(r.outcome));
            for (k, v) in &r.fields {
                s.push_str(&format!("\n  {k}: {}", text_value(v)));
            }
            s
        }
    }
}

pub fn format_output(records: &[Record], mode: Mode) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&format_record(r, mode));
        out.push('\n');
    }
    out
}

/// 0 when every answer is definite, 3 if any is indeterminate, 1 on errors.
pub fn exit_code(records: &[Record]) -> i32 {
    match records.iter().map(|r| r.outcome).max() {
        Some(Outcome::Error) => 1,
        Some(Outcome::Indeterminate) => 3,
        _ => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Record {
        let mut r = Record::new(3, "gb F");
        r.put("basis", vec!["X1^2 + X3".to_string(), "X2 - X3".to_string()]);
        r.put("complete", true);
        r.put("empty", Vec::<String>::new());
        r
    }

    #[test]
    fn text_rendering() {
        let t = format_record(&sample(), Mode::Text);
        assert_eq!(t, "[3] gb F (definite)\n  basis: {X1^2 + X3, X2 - X3}\n  complete: true\n  empty: {}");
    }

    #[test]
    fn machine_round_trip() {
        let r = sample();
        let line = format_record(&r, Mode::Machine);
        assert!(!line.contains('\n'));
        let back: Record = serde_json::from_str(&line).unwrap();
        assert_eq!(back, r);
        assert!(line.find("basis").unwrap() < line.find("complete").unwrap());
    }

    #[test]
    fn exit_codes() {
        let mut r = sample();
        assert_eq!(exit_code(&[r.clone()]), 0);
        r.indeterminate();
        assert_eq!(exit_code(&[sample(), r.clone()]), 3);
        r.fail("boom");
        r.indeterminate();
        assert_eq!(r.outcome, Outcome::Error);
        assert_eq!(exit_code(&[r]), 1);
        assert_eq!(exit_code(&[]), 0);
    }
}
