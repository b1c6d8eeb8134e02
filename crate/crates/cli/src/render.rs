//! Plain-text rendering of summaries.

use serde_json::{Map, Value};

const MAX_INLINE: usize = 100;

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Scalars verbatim, nested values inline when short and as a size otherwise.
fn cell(v: &Value) -> String {
    let text = scalar(v);
    if text.len() <= MAX_INLINE {
        return text;
    }
    match v {
        Value::Array(a) => format!("[{} entries]", a.len()),
        Value::Object(m) => format!("{{{}}}", m.keys().cloned().collect::<Vec<_>>().join(", ")),
        _ => text,
    }
}

pub fn summary(m: &Map<String, Value>) -> String {
    let width = m.keys().map(String::len).max().unwrap_or(0);
    m.iter().map(|(k, v)| format!("{k:<width$}  {}\n", cell(v))).collect()
}

pub fn recipe(report: &Value) -> String {
    let mut out = format!("recipe {}\n", scalar(&report["name"]));
    if let Some(src) = report["source"].as_str().filter(|s| !s.is_empty()) {
        out += &format!("  claim: {src}\n");
    }
    for s in report["steps"].as_array().into_iter().flatten() {
        match s.get("error") {
            Some(e) => out += &format!("  step {}: error (exit {}): {}\n", scalar(&s["id"]), s["status"], scalar(e)),
            None => out += &format!("  step {}: done (status {})\n", scalar(&s["id"]), s["status"]),
        }
    }
    for c in report["expectations"].as_array().into_iter().flatten() {
        let name = format!("{}.{}", scalar(&c["step"]), scalar(&c["quantity"]));
        if c["ok"].as_bool() == Some(true) {
            out += &format!("  ok    {name} = {}\n", scalar(&c["actual"]));
        } else {
            out += &format!("  FAIL  {name}: {}\n", scalar(&c["diff"]));
        }
    }
    let verdict = if report["passed"].as_bool() == Some(true) { "passed" } else { "failed" };
    out += &format!("{verdict} (exit {})\n", report["exit_code"]);
    out
}
