use std::fmt::Write as _;

use serde::Serialize;

use crate::claims::{ClaimVerdict, Evidence, Value};
use crate::{fmt_num, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Md,
    Json,
    Csv,
}

pub fn render(verdicts: &[ClaimVerdict], format: Format) -> CliResult<String> {
    match format {
        Format::Md => Ok(render_markdown(verdicts)),
        Format::Json => render_json(verdicts),
        Format::Csv => render_csv(verdicts),
    }
}

pub fn render_json(verdicts: &[ClaimVerdict]) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(verdicts)?;
    s.push('\n');
    Ok(s)
}

fn value_text(v: &Value) -> String {
    match v {
        Value::Number { value } => fmt_num(value.0),
        Value::Count { value } => value.to_string(),
        Value::Interval { lo, hi } => format!("[{}, {}]", fmt_num(lo.0), fmt_num(hi.0)),
        Value::Rational { value } => value.clone(),
        Value::Separation { gap, width } => format!("gap {} (width {})", fmt_num(gap.0), fmt_num(width.0)),
        Value::Identity { computed, printed, equal } => {
            format!("{computed} {} {printed}", if *equal { "==" } else { "!=" })
        }
    }
}

fn kind(v: &Value) -> &'static str {
    match v {
        Value::Number { .. } => "number",
        Value::Count { .. } => "count",
        Value::Interval { .. } => "interval",
        Value::Rational { .. } => "rational",
        Value::Separation { .. } => "separation",
        Value::Identity { .. } => "identity",
    }
}

fn flatten(verdicts: &[ClaimVerdict]) -> Vec<&ClaimVerdict> {
    let mut out = Vec::new();
    for v in verdicts {
        out.push(v);
        out.extend(flatten(&v.subclaims));
    }
    out
}

pub fn render_markdown(verdicts: &[ClaimVerdict]) -> String {
    let mut out = String::from("# Claims report\n\n| id | claim | status | basis |\n|---|---|---|---|\n");
    let all = flatten(verdicts);
    for v in &all {
        writeln!(out, "| {} | {} | {} | {} |", v.id, v.statement, v.status.as_str(), v.basis).unwrap();
    }
    for v in &all {
        writeln!(out, "\n## {}: {}\n\n{}\n", v.id, v.reference, v.statement).unwrap();
        for Evidence { key, description, value } in &v.evidence {
            writeln!(out, "- `{key}` {description}: {}", value_text(value)).unwrap();
        }
    }
    out
}

#[derive(Serialize)]
struct CsvRow<'a> {
    id: &'a str,
    status: &'a str,
    basis: &'a str,
    key: &'a str,
    kind: &'static str,
    description: &'a str,
    value: String,
}

pub fn render_csv(verdicts: &[ClaimVerdict]) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for v in flatten(verdicts) {
        for e in &v.evidence {
            w.serialize(CsvRow {
                id: &v.id,
                status: v.status.as_str(),
                basis: &v.basis,
                key: &e.key,
                kind: kind(&e.value),
                description: &e.description,
                value: value_text(&e.value),
            })?;
        }
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
