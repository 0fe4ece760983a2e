use serde_json::{json, Value};

/// Usage or input error; always exit code 1.
#[derive(Debug)]
pub struct CliError {
    pub message: String,
}

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError { message: e.to_string() }
    }
}

/// Output of one command: text lines, the same content as JSON items, and
/// the exit code.
pub struct Report {
    pub command: &'static str,
    pub lines: Vec<String>,
    pub items: Vec<Value>,
    pub pass: bool,
    pub code: u8,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            lines: Vec::new(),
            items: Vec::new(),
            pass: true,
            code: 0,
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn item(&mut self, v: Value) {
        self.items.push(v);
    }

    pub fn fail(&mut self, code: u8) {
        self.pass = false;
        self.code = code;
    }

    pub fn text(&self) -> String {
        self.lines.iter().map(|l| format!("{l}\n")).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "items": self.items,
            "pass": self.pass,
        })
    }
}
