//! Run reports and the exit-status convention.

use std::fs;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};
use sigdom::report::Record;

pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Negative,
    InputError,
    BudgetExhausted,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> Self {
        ExitCode::from(match s {
            Status::Ok => 0,
            Status::Negative => 1,
            Status::InputError => 2,
            Status::BudgetExhausted => 3,
        })
    }
}

/// Everything a run reports. Identical inputs and seed give an identical
/// report apart from `elapsed_ms`.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    /// SHA-256 over the input files, each prefixed by its length.
    pub input_digest: String,
    pub seed: u64,
    pub results: Map<String, Value>,
    pub elapsed_ms: f64,
}

/// Collects results as both ordered text lines and JSON fields.
pub struct Reporter {
    started: Instant,
    hasher: Sha256,
    seed: u64,
    lines: Vec<(String, String)>,
    results: Map<String, Value>,
}

impl Reporter {
    pub fn new(seed: u64) -> Self {
        Reporter {
            started: Instant::now(),
            hasher: Sha256::new(),
            seed,
            lines: Vec::new(),
            results: Map::new(),
        }
    }

    /// Reads an input file and folds it into the digest.
    pub fn read_input(&mut self, path: &Path) -> Result<String> {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        self.hasher.update((text.len() as u64).to_le_bytes());
        self.hasher.update(text.as_bytes());
        Ok(text)
    }

    pub fn put(&mut self, key: &str, text: impl Into<String>, json: impl Serialize) {
        self.lines.push((key.to_string(), text.into()));
        self.results.insert(
            key.to_string(),
            serde_json::to_value(json).expect("report values serialize"),
        );
    }

    /// A scalar whose text and JSON forms agree.
    pub fn value<T: Serialize + ToString>(&mut self, key: &str, v: T) {
        let text = v.to_string();
        self.put(key, text, v);
    }

    pub fn record<R: Record + Serialize>(&mut self, record: &R) {
        let json = serde_json::to_value(record).expect("records serialize");
        for (key, text) in record.lines() {
            self.lines.push((key.to_string(), text));
            self.results.insert(key.to_string(), json[key].clone());
        }
    }

    pub fn finish(self) -> (RunReport, Vec<(String, String)>) {
        let report = RunReport {
            command: std::env::args().skip(1).collect(),
            input_digest: hex::encode(self.hasher.finalize()),
            seed: self.seed,
            results: self.results,
            elapsed_ms: self.started.elapsed().as_secs_f64() * 1e3,
        };
        (report, self.lines)
    }
}

/// Renders the report as JSON or as `key: value` lines. The text form
/// leaves out the timing so that it is fully reproducible.
pub fn render(report: &RunReport, lines: &[(String, String)], json: bool) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(report).expect("report serializes");
        s.push('\n');
        return s;
    }
    let mut s = format!(
        "command: {}\ninput_digest: {}\nseed: {}\n",
        report.command.join(" "),
        report.input_digest,
        report.seed
    );
    for (k, v) in lines {
        s.push_str(&format!("{k}: {v}\n"));
    }
    s
}
