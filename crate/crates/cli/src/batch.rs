//! `egdiff batch`: one analysis per input line, failures reported inline.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use clap::ValueEnum;
use egdiff_core::DegreeSequence;
use serde_json::{json, Value};

use crate::output::{self, Report};
use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Analysis {
    Delta,
    Classify,
    Sigma,
    Complement,
    Shared,
    Realize,
    Forcible,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Jsonl,
}

fn analyze(line: &str, analysis: Analysis, limit: usize) -> Result<Report, Failure> {
    let d: DegreeSequence = line.parse()?;
    match analysis {
        Analysis::Delta => Ok(output::delta(&d)),
        Analysis::Classify => output::classify(&d),
        Analysis::Sigma => output::sigma(&d),
        Analysis::Complement => output::complement(&d),
        Analysis::Shared => output::shared(&d),
        Analysis::Realize => output::realize(&d),
        Analysis::Forcible => output::forcible(&d, limit),
    }
}

fn io_failure(e: io::Error) -> Failure {
    Failure::Parse(e.to_string())
}

pub fn run(path: &Path, analysis: Analysis, format: Format, limit: usize) -> Result<(), Failure> {
    let input: Box<dyn BufRead> = if path.as_os_str() == "-" {
        Box::new(io::stdin().lock())
    } else {
        let file = File::open(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
        Box::new(BufReader::new(file))
    };
    let stdout = io::stdout().lock();
    match format {
        Format::Jsonl => jsonl(input, stdout, analysis, limit),
        Format::Csv => csv(input, stdout, analysis, limit),
    }
}

fn jsonl(input: impl BufRead, mut out: impl Write, analysis: Analysis, limit: usize) -> Result<(), Failure> {
    for (i, line) in input.lines().enumerate() {
        let line = line.map_err(io_failure)?;
        let mut row = json!({ "line": i + 1, "input": line.trim() });
        match analyze(&line, analysis, limit) {
            Ok(report) => {
                row["ok"] = Value::Bool(true);
                row["result"] = report.json().clone();
            }
            Err(f) => {
                row["ok"] = Value::Bool(false);
                row["code"] = json!(f.code());
                row["error"] = json!(f.to_string());
            }
        }
        writeln!(out, "{row}").map_err(io_failure)?;
    }
    out.flush().map_err(io_failure)
}

/// Columns: line, input, status (`ok` or `error <code>`), result. No header
/// row, so output lines match input lines one to one.
fn csv(input: impl BufRead, out: impl Write, analysis: Analysis, limit: usize) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    let csv_failure = |e: csv::Error| Failure::Parse(e.to_string());
    for (i, line) in input.lines().enumerate() {
        let line = line.map_err(io_failure)?;
        let (status, result) = match analyze(&line, analysis, limit) {
            Ok(report) => ("ok".to_string(), report.text().trim_end().replace('\n', "; ")),
            Err(f) => (format!("error {}", f.code()), f.to_string()),
        };
        let n = (i + 1).to_string();
        w.write_record([n.as_str(), line.trim(), &status, &result]).map_err(csv_failure)?;
    }
    w.flush().map_err(io_failure)
}
