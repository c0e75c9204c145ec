//! JSON-lines batch processing.
//!
//! One series object per line, one report (or error object) per line,
//! in input order. Lines are independent and processed in parallel.

use rayon::prelude::*;
use serde_json::json;

use crate::input::SeriesInput;
use crate::report::{curve_report, surface_report};
use crate::{Axis, CliError, ReportOptions};

fn process_line(line: &str, opts: &ReportOptions) -> Result<serde_json::Value, CliError> {
    let input: SeriesInput = serde_json::from_str(line)
        .map_err(|e| CliError::Syntax(format!("invalid input JSON: {e}")))?;
    match input {
        SeriesInput::Curve { .. } => {
            let series = input.into_curve()?;
            curve_report(line.trim(), &series, opts)?.to_json()
        }
        SeriesInput::Surface { .. } => {
            let series = input.into_surface()?;
            surface_report(line.trim(), &series, Axis::X, opts)?.to_json()
        }
    }
}

/// Process the whole input text; the result is one JSON document per
/// line. Per-line failures become `{"error": …, "line": n}` objects and
/// do not fail the batch.
pub fn run_batch(text: &str, opts: &ReportOptions) -> String {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .collect();
    let reports: Vec<String> = lines
        .par_iter()
        .map(|(index, line)| match process_line(line, opts) {
            Ok(value) => value.to_string(),
            Err(e) => json!({ "error": e.to_string(), "line": index + 1 }).to_string(),
        })
        .collect();
    let mut out = reports.join("\n");
    if !out.is_empty() {
        out.push('\n');
    }
    out
}
