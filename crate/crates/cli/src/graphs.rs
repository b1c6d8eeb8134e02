//! Graph arguments: a file (graph JSON, DIMACS, or a document with a `"graph"` key) or a
//! family spec such as `schrijver:6,2` or `mycielski:2:cycle:5`.

use std::collections::HashMap;
use std::path::{Path, PathBuf};

use serde_json::Value;
use topochrom::families::{borsuk_sample, circular_complete, complete, cycle, gen_mycielski, kneser, schrijver, wide_universal};
use topochrom::geometry::sphere_samples;
use topochrom::io::{from_dimacs, graph_from_json};
use topochrom::Graph;

use crate::error::{CliError, CliResult};

pub const SPEC_HELP: &str = "complete:N, cycle:N, kneser:N,K, schrijver:N,K, circular:P,Q, wide-universal:S,T, \
mycielski:R:SPEC, borsuk:N,ALPHA,SAMPLES,SEED, or a graph file";

/// Where relative paths are resolved. Inside a recipe, `@id` names the artifact of an earlier step.
#[derive(Clone, Debug, Default)]
pub struct Ctx {
    pub base: PathBuf,
    pub artifacts: HashMap<String, String>,
}

impl Ctx {
    pub fn path(&self, p: &str) -> PathBuf {
        let p = Path::new(p);
        if p.is_absolute() {
            p.to_path_buf()
        } else {
            self.base.join(p)
        }
    }

    pub fn read(&self, p: &str) -> CliResult<String> {
        if let Some(id) = p.strip_prefix('@') {
            return self
                .artifacts
                .get(id)
                .cloned()
                .ok_or_else(|| CliError::input(format!("no earlier step named {id:?}")));
        }
        let path = self.path(p);
        std::fs::read_to_string(&path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
    }

    /// A graph from a file if `arg` names one, otherwise from a family spec.
    pub fn graph(&self, arg: &str) -> CliResult<Graph> {
        let path = self.path(arg);
        if arg.starts_with('@') || path.is_file() {
            let text = self.read(arg)?;
            return parse_graph_text(&text);
        }
        parse_spec(arg)
    }
}

pub fn parse_graph_text(text: &str) -> CliResult<Graph> {
    let trimmed = text.trim_start();
    if !trimmed.starts_with('{') {
        return Ok(from_dimacs(text)?);
    }
    let value: Value = serde_json::from_str(text)?;
    match value.get("graph") {
        Some(inner) => Ok(graph_from_json(&inner.to_string())?),
        None => Ok(graph_from_json(text)?),
    }
}

fn numbers<T: std::str::FromStr>(args: &str, count: usize, spec: &str) -> CliResult<Vec<T>> {
    let parts: Vec<&str> = args.split(',').map(str::trim).collect();
    if parts.len() != count {
        return Err(CliError::input(format!("{spec:?}: expected {count} comma-separated parameters")));
    }
    parts
        .iter()
        .map(|p| p.parse().map_err(|_| CliError::input(format!("{spec:?}: invalid parameter {p:?}"))))
        .collect()
}

pub fn parse_spec(spec: &str) -> CliResult<Graph> {
    let (family, args) = spec
        .split_once(':')
        .ok_or_else(|| CliError::input(format!("{spec:?} is neither a file nor a graph spec ({SPEC_HELP})")))?;
    let g = match family {
        "complete" => complete(numbers::<usize>(args, 1, spec)?[0]),
        "cycle" => cycle(numbers::<usize>(args, 1, spec)?[0])?,
        "kneser" => {
            let v = numbers::<usize>(args, 2, spec)?;
            kneser(v[0], v[1])?
        }
        "schrijver" => {
            let v = numbers::<usize>(args, 2, spec)?;
            schrijver(v[0], v[1])?
        }
        "circular" => {
            let v = numbers::<usize>(args, 2, spec)?;
            circular_complete(v[0], v[1])?
        }
        "wide-universal" => {
            let v = numbers::<usize>(args, 2, spec)?;
            wide_universal(v[0], v[1])?.0
        }
        "mycielski" => {
            let (r, inner) = args
                .split_once(':')
                .ok_or_else(|| CliError::input(format!("{spec:?}: expected mycielski:R:SPEC")))?;
            let r = numbers::<usize>(r, 1, spec)?[0];
            gen_mycielski(&parse_spec(inner)?, r)?
        }
        "borsuk" => {
            let v = numbers::<f64>(args, 4, spec)?;
            let n = v[0] as usize;
            let pts: Vec<Vec<f64>> = sphere_samples(n, v[2] as usize, v[3] as u64)?
                .into_iter()
                .map(|p| p.into_coords())
                .collect();
            borsuk_sample(n, v[1], &pts)?
        }
        other => return Err(CliError::input(format!("unknown graph family {other:?} ({SPEC_HELP})"))),
    };
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs() {
        assert_eq!(parse_spec("schrijver:6,2").unwrap().order(), 9);
        assert_eq!(parse_spec("mycielski:2:cycle:5").unwrap().size(), 20);
        assert_eq!(parse_spec("circular:7,3").unwrap().order(), 7);
        assert!(parse_spec("kneser:5").is_err());
        assert!(parse_spec("petersen:1").is_err());
        assert!(parse_spec("nonsense").is_err());
    }

    #[test]
    fn text_formats() {
        let g = parse_graph_text("p edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!((g.order(), g.size()), (3, 2));
        let g = parse_graph_text(r#"{"graph": {"vertices": ["a", "b"], "edges": [[0, 1]]}, "coloring": {}}"#).unwrap();
        assert_eq!(g.size(), 1);
    }
}
