//! Report envelope and the three output formats.

use serde::Serialize;
use serde_json::{json, Value};

use crate::config::{Format, RunConfig};

pub const TOOL: &str = "apnkit";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// A verification the command performs did not hold.
    Fail,
}

pub struct Report {
    pub command: String,
    /// `published`, `derived`, `property` or `computed`.
    pub basis: &'static str,
    pub result: Value,
    pub csv_header: Vec<&'static str>,
    pub csv_rows: Vec<Vec<String>>,
    pub text: Vec<String>,
    /// Printed to stdout when the report goes to a file.
    pub summary: String,
    pub outcome: Outcome,
}

impl Report {
    pub fn new(command: impl Into<String>, basis: &'static str, result: impl Serialize) -> Report {
        Report {
            command: command.into(),
            basis,
            result: serde_json::to_value(result).expect("report values serialize"),
            csv_header: Vec::new(),
            csv_rows: Vec::new(),
            text: Vec::new(),
            summary: String::new(),
            outcome: Outcome::Pass,
        }
    }

    pub fn csv(mut self, header: &[&'static str], rows: Vec<Vec<String>>) -> Report {
        self.csv_header = header.to_vec();
        self.csv_rows = rows;
        self
    }

    pub fn text(mut self, lines: Vec<String>) -> Report {
        self.text = lines;
        self
    }

    pub fn summary(mut self, s: impl Into<String>) -> Report {
        self.summary = s.into();
        self
    }

    pub fn outcome(mut self, o: Outcome) -> Report {
        self.outcome = o;
        self
    }

    pub fn render(&self, cfg: &RunConfig) -> String {
        let head = format!("{TOOL} {VERSION} command={} basis={} config={}", self.command, self.basis, cfg.header());
        match cfg.format {
            Format::Json => {
                let doc = json!({
                    "tool": TOOL,
                    "version": VERSION,
                    "command": self.command,
                    "config": cfg,
                    "basis": self.basis,
                    "pass": self.outcome == Outcome::Pass,
                    "result": self.result,
                });
                let mut s = serde_json::to_string_pretty(&doc).expect("json");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.csv_header).expect("csv");
                for r in &self.csv_rows {
                    w.write_record(r).expect("csv");
                }
                let body = String::from_utf8(w.into_inner().expect("csv")).expect("utf8");
                format!("# {head}\n{body}")
            }
            Format::Text => {
                let mut s = format!("# {head}\n");
                for l in &self.text {
                    s.push_str(l);
                    s.push('\n');
                }
                s
            }
        }
    }
}
