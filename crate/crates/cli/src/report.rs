use serde::Serialize;
use serde_json::{Map, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: String,
}

impl Check {
    pub fn new(name: &str, passed: bool, witness: impl Into<String>) -> Self {
        Check { name: name.to_string(), passed, witness: witness.into() }
    }
}

/// Everything a command prints. `payload` holds the command-specific
/// documents and is emitted between `inputs` and `checks`.
#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub command: &'static str,
    pub inputs: Value,
    #[serde(flatten)]
    pub payload: Map<String, Value>,
    pub checks: Vec<Check>,
    pub version: &'static str,
}

impl Certificate {
    pub fn new(command: &'static str, inputs: Value) -> Self {
        Certificate { command, inputs, payload: Map::new(), checks: Vec::new(), version: VERSION }
    }

    pub fn with(mut self, key: &str, value: impl Serialize) -> Self {
        let value = serde_json::to_value(value).expect("payloads are plain data");
        self.payload.insert(key.to_string(), value);
        self
    }

    pub fn check(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates are plain data")
    }

    pub fn checks_as_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            out.push_str(&format!("  [{mark}] {}: {}\n", c.name, c.witness));
        }
        out
    }
}
