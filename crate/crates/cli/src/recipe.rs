//! Experiment recipes: a list of operations plus expected values for their outputs.
//!
//! ```json
//! {
//!   "name": "circ-even",
//!   "source": "the circular chromatic number of SG(6,2) is 4",
//!   "steps": [{"id": "c", "op": "solve", "invariant": "chic", "graph": "schrijver:6,2"}],
//!   "expected": [{"step": "c", "quantity": "value", "equals": 4}]
//! }
//! ```
//!
//! Steps run in order and may read earlier artifacts as `@id`. With `"parallel": true`
//! they run concurrently and may not refer to each other.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Deserialize;
use serde_json::{json, Value};
use topochrom::Fraction;

use crate::error::{CliError, CliResult, EXIT_EXPECTATION, EXIT_INEXACT, EXIT_OK};
use crate::graphs::Ctx;
use crate::ops::{Artifact, Op, Output};

const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct Recipe {
    pub name: String,
    /// The claim the recipe checks, in plain words.
    #[serde(default)]
    pub source: String,
    #[serde(default)]
    pub parallel: bool,
    pub steps: Vec<Step>,
    #[serde(default)]
    pub expected: Vec<Expectation>,
}

#[derive(Deserialize, Debug)]
pub struct Step {
    pub id: String,
    #[serde(flatten)]
    pub op: Op,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct Expectation {
    pub step: String,
    /// Dotted path into the step output, e.g. `value` or `sizes.0`.
    pub quantity: String,
    #[serde(default)]
    pub equals: Option<Value>,
    #[serde(default)]
    pub min: Option<Value>,
    #[serde(default)]
    pub max: Option<Value>,
    #[serde(default)]
    pub tolerance: Option<f64>,
}

pub struct RecipeRun {
    pub report: Value,
    pub code: u8,
}

impl Recipe {
    pub fn load(path: &Path) -> CliResult<Recipe> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        let recipe: Recipe =
            serde_json::from_str(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        recipe.check()?;
        Ok(recipe)
    }

    fn check(&self) -> CliResult<()> {
        let mut seen = HashMap::new();
        for (i, s) in self.steps.iter().enumerate() {
            if seen.insert(s.id.as_str(), i).is_some() {
                return Err(CliError::input(format!("duplicate step id {:?}", s.id)));
            }
        }
        for e in &self.expected {
            if !seen.contains_key(e.step.as_str()) {
                return Err(CliError::input(format!("expectation refers to unknown step {:?}", e.step)));
            }
            if e.equals.is_none() && e.min.is_none() && e.max.is_none() {
                return Err(CliError::input(format!("expectation on {}.{} has no equals, min or max", e.step, e.quantity)));
            }
        }
        Ok(())
    }

    /// Runs all steps, writes artifacts and `summary.json` into `out` (when given), and
    /// checks the expectations.
    pub fn run(&self, base: &Path, out: Option<&Path>) -> CliResult<RecipeRun> {
        let results: Vec<CliResult<Output>> = if self.parallel {
            let ctx = Ctx {
                base: base.to_path_buf(),
                ..Ctx::default()
            };
            std::thread::scope(|scope| {
                let handles: Vec<_> = self.steps.iter().map(|s| scope.spawn(|| s.op.run(&ctx))).collect();
                handles
                    .into_iter()
                    .map(|h| h.join().unwrap_or_else(|_| Err(CliError::failed("step panicked"))))
                    .collect()
            })
        } else {
            let mut ctx = Ctx {
                base: base.to_path_buf(),
                ..Ctx::default()
            };
            let mut results = Vec::new();
            for s in &self.steps {
                let r = s.op.run(&ctx);
                if let Ok(o) = &r {
                    let text = match o.artifact() {
                        Artifact::Json(v) => v.to_string(),
                        Artifact::Text(t) => t,
                    };
                    ctx.artifacts.insert(s.id.clone(), text);
                }
                results.push(r);
            }
            results
        };

        if let Some(dir) = out {
            std::fs::create_dir_all(dir)?;
        }
        let mut code = EXIT_OK;
        let mut step_error = EXIT_OK;
        let mut steps = Vec::new();
        let mut outputs: HashMap<&str, Value> = HashMap::new();
        for (s, r) in self.steps.iter().zip(&results) {
            match r {
                Ok(o) => {
                    if o.status == EXIT_INEXACT {
                        code = code.max(EXIT_INEXACT);
                    }
                    if let Some(dir) = out {
                        write_artifact(&dir.join(&s.id), &o.artifact())?;
                    }
                    let mut all = o.summary.clone();
                    all.extend(o.extra.clone());
                    outputs.insert(&s.id, Value::Object(all));
                    steps.push(json!({"id": s.id, "status": o.status, "summary": o.summary}));
                }
                Err(e) => {
                    step_error = step_error.max(e.code);
                    steps.push(json!({"id": s.id, "status": e.code, "error": e.msg}));
                }
            }
        }

        let mut checks = Vec::new();
        let mut all_ok = true;
        for e in &self.expected {
            let actual = outputs.get(e.step.as_str()).and_then(|v| lookup(v, &e.quantity));
            let (ok, detail) = match actual {
                Some(a) => e.check(a),
                None => (false, format!("{}.{} is missing", e.step, e.quantity)),
            };
            all_ok &= ok;
            let mut c = json!({
                "step": e.step,
                "quantity": e.quantity,
                "actual": actual.cloned().unwrap_or(Value::Null),
                "ok": ok,
            });
            for (key, v) in [("equals", &e.equals), ("min", &e.min), ("max", &e.max)] {
                if let Some(v) = v {
                    c[key] = v.clone();
                }
            }
            if !ok {
                c["diff"] = json!(detail);
            }
            checks.push(c);
        }
        if step_error != EXIT_OK {
            code = step_error;
        } else if !all_ok {
            code = EXIT_EXPECTATION;
        }

        let report = json!({
            "name": self.name,
            "source": self.source,
            "passed": code == EXIT_OK,
            "exit_code": code,
            "steps": steps,
            "expectations": checks,
        });
        if let Some(dir) = out {
            std::fs::write(dir.join("summary.json"), serde_json::to_string_pretty(&report)? + "\n")?;
        }
        Ok(RecipeRun { report, code })
    }
}

fn write_artifact(stem: &Path, artifact: &Artifact) -> CliResult<()> {
    let mut path = PathBuf::from(stem);
    match artifact {
        Artifact::Json(v) => {
            path.set_extension("json");
            std::fs::write(path, serde_json::to_string_pretty(v)? + "\n")?;
        }
        Artifact::Text(t) => {
            path.set_extension("txt");
            std::fs::write(path, t)?;
        }
    }
    Ok(())
}

pub fn lookup<'a>(v: &'a Value, path: &str) -> Option<&'a Value> {
    path.split('.').try_fold(v, |cur, key| match cur {
        Value::Object(m) => m.get(key),
        Value::Array(a) => key.parse::<usize>().ok().and_then(|i| a.get(i)),
        _ => None,
    })
}

fn as_fraction(v: &Value) -> Option<Fraction> {
    match v {
        Value::Number(n) => n.as_i64().map(Fraction::from_integer),
        Value::String(s) => Fraction::from_str(s).ok(),
        _ => None,
    }
}

fn as_f64(v: &Value) -> Option<f64> {
    match v {
        Value::Number(n) => n.as_f64(),
        Value::String(s) => Fraction::from_str(s).ok().map(|f| f.to_f64()).or_else(|| s.parse().ok()),
        _ => None,
    }
}

#[derive(Clone, Copy)]
enum Bound {
    Equals,
    Min,
    Max,
}

impl Expectation {
    fn check(&self, actual: &Value) -> (bool, String) {
        let tol = self.tolerance.unwrap_or(DEFAULT_TOLERANCE);
        let mut notes = Vec::new();
        for (bound, expected) in [(Bound::Equals, &self.equals), (Bound::Min, &self.min), (Bound::Max, &self.max)] {
            let Some(expected) = expected else { continue };
            if !compare(bound, actual, expected, tol) {
                let what = match bound {
                    Bound::Equals => "expected",
                    Bound::Min => "expected at least",
                    Bound::Max => "expected at most",
                };
                notes.push(format!("{what} {expected}, got {actual}"));
            }
        }
        (notes.is_empty(), notes.join("; "))
    }
}

fn compare(bound: Bound, actual: &Value, expected: &Value, tol: f64) -> bool {
    // Exact rational comparison when both sides are integers or fractions.
    if let (Some(a), Some(e)) = (as_fraction(actual), as_fraction(expected)) {
        return match bound {
            Bound::Equals => a == e,
            Bound::Min => a >= e,
            Bound::Max => a <= e,
        };
    }
    if let (Some(a), Some(e)) = (as_f64(actual), as_f64(expected)) {
        return match bound {
            Bound::Equals => (a - e).abs() <= tol,
            Bound::Min => a >= e - tol,
            Bound::Max => a <= e + tol,
        };
    }
    matches!(bound, Bound::Equals) && actual == expected
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paths_and_comparisons() {
        let v = json!({"value": "29/10", "sizes": [9, 9, 5], "proper": true, "x": 0.5});
        assert_eq!(lookup(&v, "sizes.2"), Some(&json!(5)));
        assert_eq!(lookup(&v, "sizes.7"), None);
        assert!(compare(Bound::Equals, &v["value"], &json!("29/10"), 0.0));
        assert!(!compare(Bound::Equals, &v["value"], &json!(3), 0.0));
        assert!(compare(Bound::Max, &v["value"], &json!(3), 0.0));
        assert!(compare(Bound::Equals, &v["x"], &json!(0.5000001), 1e-6));
        assert!(!compare(Bound::Equals, &v["x"], &json!(0.51), 1e-6));
        assert!(compare(Bound::Equals, &v["proper"], &json!(true), 0.0));
        assert!(compare(Bound::Equals, &v["sizes"], &json!([9, 9, 5]), 0.0));
    }

    #[test]
    fn parse_steps() {
        let r: Recipe = serde_json::from_value(json!({
            "name": "t",
            "steps": [
                {"id": "a", "op": "solve", "invariant": "chi", "graph": "cycle:5"},
                {"id": "b", "op": "color", "method": "interval", "n": 9, "k": 4},
                {"id": "c", "op": "geom", "check": "thresholds", "n": 2},
                {"id": "d", "op": "verify", "kind": "coloring", "graph": "@b", "coloring": "@b"},
            ],
            "expected": [{"step": "a", "quantity": "value", "equals": 3}]
        }))
        .unwrap();
        r.check().unwrap();
        assert_eq!(r.steps.len(), 4);
        let bad = serde_json::from_value::<Recipe>(json!({
            "name": "t",
            "steps": [{"id": "a", "op": "solve", "invariant": "chi", "graph": "cycle:5", "bogus": 1}]
        }));
        assert!(bad.is_err());
    }
}
