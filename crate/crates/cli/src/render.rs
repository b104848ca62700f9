//! Text rendering. Every number printed here is read from the same JSON
//! value that JSON mode emits.

use std::fmt::Write;

use serde_json::Value;

use crate::report::Report;

/// Flattens a JSON value into `path = value` pairs.
pub fn flatten(value: &Value) -> Vec<(String, String)> {
    let mut out = Vec::new();
    walk(value, String::new(), &mut out);
    out
}

fn walk(value: &Value, path: String, out: &mut Vec<(String, String)>) {
    match value {
        Value::Object(map) if !map.is_empty() => {
            for (k, v) in map {
                let p = if path.is_empty() {
                    k.clone()
                } else {
                    format!("{path}.{k}")
                };
                walk(v, p, out);
            }
        }
        Value::Array(items) if !items.is_empty() => {
            for (i, v) in items.iter().enumerate() {
                walk(v, format!("{path}[{i}]"), out);
            }
        }
        Value::String(s) => out.push((path, s.clone())),
        other => out.push((path, other.to_string())),
    }
}

pub fn report_text(r: &Report) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} {}", r.schema, r.command);
    let _ = writeln!(s, "inputs: {}", r.inputs);
    let _ = writeln!(s, "results:");
    for (k, v) in flatten(&r.results) {
        let _ = writeln!(s, "  {k} = {v}");
    }
    if !r.verdicts.is_empty() {
        let _ = writeln!(s, "verdicts:");
        for (name, v) in &r.verdicts {
            let _ = writeln!(s, "  {name}: {}", v.status);
            for (i, step) in v.trace.iter().enumerate() {
                let _ = writeln!(s, "    {}. {} [{}]", i + 1, step.statement, step.cite);
            }
        }
    }
    if !r.citations.is_empty() {
        let _ = writeln!(s, "citations:");
        for c in &r.citations {
            let _ = writeln!(s, "  [{}] {}", c.key, c.label);
            let _ = writeln!(s, "      {}", c.statement);
        }
    }
    if !r.warnings.is_empty() {
        let _ = writeln!(s, "warnings:");
        for w in &r.warnings {
            let _ = writeln!(s, "  - {w}");
        }
    }
    s
}
