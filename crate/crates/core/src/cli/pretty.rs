//! Plain-text tables for `--pretty`.

use std::fmt::Write;

use serde_json::Value;

use super::registry::{AggregateReport, CheckReport};

/// Two left-aligned columns under a header row.
pub fn table(headers: (&str, &str), rows: &[(String, String)]) -> String {
    let w = rows.iter().map(|(a, _)| a.chars().count()).chain([headers.0.len()]).max().unwrap_or(0);
    let mut out = String::new();
    let _ = writeln!(out, "{:<w$}  {}", headers.0, headers.1);
    let _ = writeln!(out, "{}  {}", "-".repeat(w), "-".repeat(headers.1.len().max(5)));
    for (a, b) in rows {
        let _ = writeln!(out, "{a:<w$}  {b}");
    }
    out
}

fn params_line(r: &CheckReport) -> String {
    r.parameters.iter().map(|(k, v)| format!("{k}={}", compact(v))).collect::<Vec<_>>().join(" ")
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Header, scalar witness fields, and the statement.
pub fn report(r: &CheckReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} [{}]  {}  ({:.1} ms)", r.check, params_line(r), r.verdict, r.wall_time_ms);
    let _ = writeln!(out, "  {}", r.citation);
    if let Value::Object(map) = &r.witness {
        let rows: Vec<(String, String)> = map
            .iter()
            .filter(|(_, v)| !matches!(v, Value::Array(_) | Value::Object(_)))
            .map(|(k, v)| (format!("  {k}"), compact(v)))
            .collect();
        out.push_str(&table(("  field", "value"), &rows));
    }
    out
}

/// One line per report, then the verdict counts.
pub fn aggregate(a: &AggregateReport) -> String {
    let rows: Vec<(String, String)> = a
        .reports
        .iter()
        .map(|r| (format!("{} [{}]", r.check, params_line(r)), r.verdict.to_string()))
        .collect();
    let mut out = table(("check", "verdict"), &rows);
    let counts = a.counts.iter().map(|(k, v)| format!("{k}: {v}")).collect::<Vec<_>>().join(", ");
    let _ = writeln!(out, "\n{} ({counts})", if a.passed { "PASS" } else { "FAIL" });
    out
}
