use std::time::Duration;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, Serialize)]
pub struct Assertion {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub actual: Option<String>,
    pub pass: bool,
}

impl Assertion {
    pub fn holds(name: impl Into<String>, pass: bool) -> Self {
        Assertion { name: name.into(), expected: None, actual: None, pass }
    }

    pub fn compare(name: impl Into<String>, expected: String, actual: String) -> Self {
        let pass = expected == actual;
        Assertion { name: name.into(), expected: Some(expected), actual: Some(actual), pass }
    }
}

/// What a subcommand produced, before it is wrapped into a [`RunReport`].
#[derive(Debug, Default)]
pub struct Outcome {
    pub results: Value,
    pub assertions: Vec<Assertion>,
    pub lines: Vec<String>,
    /// Text output printed verbatim instead of the usual summary.
    pub raw_text: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: u128,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs_digest: String,
    pub results: Value,
    pub assertions: Vec<Assertion>,
    pub pass: bool,
    pub timing: Timing,
}

impl RunReport {
    pub fn new(command: String, inputs_digest: String, outcome: &Outcome, elapsed: Duration) -> Self {
        RunReport {
            command,
            inputs_digest,
            results: outcome.results.clone(),
            assertions: outcome.assertions.clone(),
            pass: outcome.assertions.iter().all(|a| a.pass),
            timing: Timing { elapsed_ms: elapsed.as_millis() },
        }
    }

    pub fn text(&self, outcome: &Outcome) -> String {
        if let Some(raw) = &outcome.raw_text {
            return raw.clone();
        }
        let mut out = String::new();
        for l in &outcome.lines {
            out.push_str(l);
            out.push('\n');
        }
        for a in &self.assertions {
            let verdict = if a.pass { "PASS" } else { "FAIL" };
            match (&a.expected, &a.actual) {
                (Some(e), Some(x)) if !a.pass => out.push_str(&format!("{verdict} {}: expected {e}, got {x}\n", a.name)),
                (_, Some(x)) => out.push_str(&format!("{verdict} {}: {x}\n", a.name)),
                _ => out.push_str(&format!("{verdict} {}\n", a.name)),
            }
        }
        out.push_str(if self.pass { "pass\n" } else { "fail\n" });
        out
    }
}

/// SHA-256 over the parsed command and the bytes of every input file.
pub fn digest(args: &[String], inputs: &[Vec<u8>]) -> String {
    let mut h = Sha256::new();
    for a in args {
        h.update(a.as_bytes());
        h.update([0u8]);
    }
    for i in inputs {
        h.update((i.len() as u64).to_le_bytes());
        h.update(i);
    }
    hex::encode(h.finalize())
}
