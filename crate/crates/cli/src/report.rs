use std::io::Write;

use serde::Serialize;
use serde_json::{Map, Value};

/// Outcome of one invocation. `verdict` is `Some(false)` for refutations
/// (exit 1); computations without a yes/no answer carry `None` (exit 0).
pub struct Report {
    pub verb: &'static str,
    pub verdict: Option<bool>,
    pub routes: Vec<String>,
    pub fields: Map<String, Value>,
    pub lines: Vec<String>,
}

impl Report {
    pub fn new(verb: &'static str, route: &str) -> Report {
        Report {
            verb,
            verdict: None,
            routes: vec![route.to_string()],
            fields: Map::new(),
            lines: Vec::new(),
        }
    }

    pub fn verdict(mut self, v: bool) -> Report {
        self.verdict = Some(v);
        self
    }

    pub fn field(mut self, key: &str, value: impl Serialize) -> Report {
        self.fields.insert(
            key.to_string(),
            serde_json::to_value(value).expect("serializable"),
        );
        self
    }

    pub fn line(mut self, text: impl Into<String>) -> Report {
        self.lines.push(text.into());
        self
    }

    pub fn exit_code(&self) -> u8 {
        match self.verdict {
            Some(false) => 1,
            _ => 0,
        }
    }

    /// Write errors (a closed pipe, say) are ignored.
    pub fn print(&self, json: bool) {
        let mut out = std::io::stdout().lock();
        let _ = writeln!(out, "{}", self.render(json));
    }

    fn render(&self, json: bool) -> String {
        if json {
            let mut out = Map::new();
            out.insert("verb".into(), Value::from(self.verb));
            if let Some(v) = self.verdict {
                out.insert("result".into(), Value::from(v));
            }
            out.insert("routes".into(), Value::from(self.routes.clone()));
            out.extend(self.fields.clone());
            serde_json::to_string_pretty(&Value::Object(out)).expect("json")
        } else {
            self.lines.join("\n")
        }
    }
}
