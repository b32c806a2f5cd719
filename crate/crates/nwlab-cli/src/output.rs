//! Result artifacts: CSV tables and the plain-text run summary.
//!
//! Floating-point cells are printed with 17 significant digits so values
//! round-trip exactly; identical configurations therefore produce
//! byte-identical CSV files.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::experiments::{Check, RunOutcome};

/// A float cell in round-trip-exact scientific notation.
pub fn float_cell(x: f64) -> String {
    format!("{x:.16e}")
}

/// An integer cell.
pub fn int_cell(x: usize) -> String {
    x.to_string()
}

/// Writes one CSV artifact and returns its path.
pub fn write_csv(out_dir: &Path, outcome: &RunOutcome) -> std::io::Result<PathBuf> {
    let path = out_dir.join(format!("{}.csv", outcome.csv_name));
    let mut writer = csv::WriterBuilder::new().from_path(&path)?;
    writer.write_record(&outcome.header)?;
    for row in &outcome.rows {
        writer.write_record(row)?;
    }
    writer.flush()?;
    Ok(path)
}

/// Renders the run summary: parameters, per-check verdicts, warnings, and
/// the final verdict. The same text goes to stdout and to the summary
/// file, and contains nothing run-dependent (no timings, no paths), so it
/// is as reproducible as the CSV.
pub fn render_summary(
    experiment: &str,
    parameters: &[(String, String)],
    outcome: &RunOutcome,
    strict: bool,
) -> String {
    let mut text = String::new();
    let _ = writeln!(text, "experiment: {experiment}");
    let _ = writeln!(text, "parameters:");
    for (key, value) in parameters {
        let _ = writeln!(text, "  {key} = {value}");
    }
    if !outcome.notes.is_empty() {
        let _ = writeln!(text, "results:");
        for note in &outcome.notes {
            let _ = writeln!(text, "  {note}");
        }
    }
    let _ = writeln!(text, "checks:");
    for check in &outcome.checks {
        let verdict = if check.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(text, "  [{verdict}] {}: {}", check.name, check.detail);
    }
    if !outcome.warnings.is_empty() {
        let _ = writeln!(text, "warnings:");
        for warning in &outcome.warnings {
            let _ = writeln!(text, "  {warning}");
        }
    }
    let failed = outcome.checks.iter().filter(|c| !c.passed).count();
    let strict_failure = strict && !outcome.warnings.is_empty();
    let verdict = if failed == 0 && !strict_failure {
        "pass".to_string()
    } else if failed > 0 {
        format!("FAIL ({failed} check(s))")
    } else {
        "FAIL (warnings present under --strict)".to_string()
    };
    let _ = writeln!(text, "verdict: {verdict}");
    text
}

/// Writes the summary file and returns its path.
pub fn write_summary(out_dir: &Path, csv_name: &str, text: &str) -> std::io::Result<PathBuf> {
    let path = out_dir.join(format!("{csv_name}-summary.txt"));
    std::fs::write(&path, text)?;
    Ok(path)
}

/// True when the outcome counts as failed under the given strictness.
pub fn failed(outcome: &RunOutcome, strict: bool) -> bool {
    outcome.checks.iter().any(|c: &Check| !c.passed) || (strict && !outcome.warnings.is_empty())
}
