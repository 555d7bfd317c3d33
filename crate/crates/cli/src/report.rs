use matchdist::graph::Graph;
use matchdist::reconfig::ReconfigSequence;
use serde::Serialize;
use serde_json::{json, Value};
use std::fmt::{Display, Write as _};
use std::io::Write as _;

#[derive(Serialize)]
pub struct Step {
    pub remove: [usize; 2],
    pub add: [usize; 2],
}

/// Result of one command. Field order is fixed so identical runs print
/// identical JSON.
#[derive(Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: &'static str,
    pub input: String,
    pub method: &'static str,
    pub answer: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Step>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
    /// Printed verbatim in text mode instead of the summary.
    #[serde(skip)]
    pub raw: Option<String>,
    #[serde(skip)]
    pub exit: u8,
}

fn pair(g: &Graph, e: usize) -> [usize; 2] {
    let (u, v) = g.edge(e);
    [u + 1, v + 1]
}

fn text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => xs.iter().map(text).collect::<Vec<_>>().join(" "),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

impl Report {
    pub fn new(command: &'static str, input: impl Display, method: &'static str, answer: Value) -> Self {
        Report { schema: 1, command, input: input.to_string(), method, answer, detail: None, witness: None, seconds: None, raw: None, exit: 0 }
    }

    pub fn detail(mut self, d: Value) -> Self {
        self.detail = Some(d);
        self
    }

    pub fn witness(mut self, g: &Graph, seq: &ReconfigSequence) -> Self {
        self.witness = Some(seq.steps.iter().map(|x| Step { remove: pair(g, x.remove), add: pair(g, x.add) }).collect());
        self
    }

    pub fn print(&self, as_json: bool) {
        // A closed pipe (e.g. `| head`) is not an error worth a panic.
        let _ = std::io::stdout().write_all(self.render(as_json).as_bytes());
    }

    fn render(&self, as_json: bool) -> String {
        if as_json {
            return serde_json::to_string(self).expect("reports serialise") + "\n";
        }
        if let Some(raw) = &self.raw {
            return raw.clone();
        }
        let mut out = String::new();
        match &self.answer {
            Value::Object(fields) => {
                for (k, v) in fields {
                    let _ = writeln!(out, "{k}: {}", text(v));
                }
            }
            v => {
                let _ = writeln!(out, "{}: {}", self.command, text(v));
            }
        }
        let _ = writeln!(out, "method: {}", self.method);
        if let Some(Value::Object(fields)) = &self.detail {
            for (k, v) in fields {
                let _ = writeln!(out, "{k}: {}", text(v));
            }
        }
        if let Some(steps) = &self.witness {
            out.push_str("witness:\n");
            for (i, s) in steps.iter().enumerate() {
                let _ = writeln!(out, "  {:>3}  -{}-{} +{}-{}", i + 1, s.remove[0], s.remove[1], s.add[0], s.add[1]);
            }
        }
        if let Some(t) = self.seconds {
            let _ = writeln!(out, "seconds: {t:.3}");
        }
        out
    }
}

pub enum Failure {
    Parse(String),
    Io(String),
    Budget(String),
    Capability(String),
    Internal(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) | Failure::Io(_) => 2,
            Failure::Budget(_) => 3,
            Failure::Capability(_) => 4,
            Failure::Internal(_) => 5,
        }
    }

    fn parts(&self) -> (&'static str, &str) {
        match self {
            Failure::Parse(m) => ("parse", m),
            Failure::Io(m) => ("io", m),
            Failure::Budget(m) => ("budget", m),
            Failure::Capability(m) => ("capability", m),
            Failure::Internal(m) => ("internal", m),
        }
    }

    pub fn print(&self, as_json: bool) {
        let (kind, message) = self.parts();
        if as_json {
            let _ = writeln!(std::io::stdout(), "{}", json!({ "schema": 1, "error": { "kind": kind, "message": message } }));
        } else {
            eprintln!("error ({kind}): {message}");
        }
    }
}
