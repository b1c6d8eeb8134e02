//! DIMACS `.col` and JSON file formats for graphs, colorings and homomorphisms.
//!
//! * DIMACS: `c` comment lines, one `p edge <n> <m>` line, then `e <u> <v>` lines with
//!   1-based vertex numbers. Labels are not stored; reading yields labels `1..=n`.
//! * Graph JSON: `{"vertices": [labels], "edges": [[i, j], ...]}` with 0-based indices.
//! * Coloring JSON: `{"colors": {label: color}}`.
//! * Homomorphism JSON: `{"map": {source label: target label}}`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.order(), g.size()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn from_dimacs(text: &str) -> Result<Graph> {
    let mut order: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("p") => {
                if order.is_some() {
                    return Err(parse_err(lineno, "second problem line"));
                }
                let kind = parts.next().ok_or_else(|| parse_err(lineno, "missing problem kind"))?;
                if kind != "edge" && kind != "col" {
                    return Err(parse_err(lineno, format!("unsupported problem kind {kind:?}")));
                }
                let n = parse_num(parts.next(), lineno, "vertex count")?;
                parse_num(parts.next(), lineno, "edge count")?;
                order = Some(n);
            }
            Some("e") => {
                let n = order.ok_or_else(|| parse_err(lineno, "edge line before problem line"))?;
                let u = parse_num(parts.next(), lineno, "edge endpoint")?;
                let v = parse_num(parts.next(), lineno, "edge endpoint")?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(parse_err(lineno, format!("endpoint out of range 1..={n}")));
                }
                if u == v {
                    return Err(parse_err(lineno, "loops are not allowed"));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(parse_err(lineno, format!("unknown line type {other:?}"))),
            None => {}
        }
        if parts.next().is_some() {
            return Err(parse_err(lineno, "trailing tokens"));
        }
    }
    let n = order.ok_or_else(|| parse_err(text.lines().count().max(1), "missing problem line"))?;
    Graph::with_indices(n, edges)
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} {tok:?}")))
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    vertices: Vec<String>,
    edges: Vec<[usize; 2]>,
}

pub fn graph_to_json(g: &Graph) -> Value {
    serde_json::to_value(GraphFile {
        vertices: g.labels().to_vec(),
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
    })
    .expect("graph serializes")
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    let file: GraphFile = serde_json::from_str(text).map_err(json_err)?;
    Graph::from_edges(file.vertices, file.edges.into_iter().map(|[u, v]| (u, v)))
}

fn json_err(e: serde_json::Error) -> Error {
    parse_err(e.line(), e.to_string())
}

pub fn coloring_to_json(g: &Graph, c: &Coloring) -> Result<Value> {
    c.check_len(g)?;
    let colors: Map<String, Value> = g
        .labels()
        .iter()
        .zip(c.colors())
        .map(|(l, &col)| (l.clone(), Value::from(col)))
        .collect();
    let mut root = Map::new();
    root.insert("colors".into(), Value::Object(colors));
    Ok(Value::Object(root))
}

/// Reads `{"colors": {label: int}}`; every vertex must be colored and every label known.
pub fn coloring_from_json(g: &Graph, text: &str) -> Result<Coloring> {
    let value: Value = serde_json::from_str(text).map_err(json_err)?;
    let colors = value
        .get("colors")
        .and_then(Value::as_object)
        .ok_or_else(|| parse_err(1, "expected an object with a \"colors\" map"))?;
    labelled_values(g, colors, "color", |v| v.as_i64()).map(Coloring::new)
}

pub fn hom_to_json(source: &Graph, target: &Graph, map: &[usize]) -> Value {
    let m: Map<String, Value> = source
        .labels()
        .iter()
        .zip(map)
        .map(|(l, &w)| (l.clone(), Value::from(target.label(w))))
        .collect();
    let mut root = Map::new();
    root.insert("map".into(), Value::Object(m));
    Value::Object(root)
}

pub fn hom_from_json(source: &Graph, target: &Graph, text: &str) -> Result<Vec<usize>> {
    let value: Value = serde_json::from_str(text).map_err(json_err)?;
    let map = value
        .get("map")
        .and_then(Value::as_object)
        .ok_or_else(|| parse_err(1, "expected an object with a \"map\" map"))?;
    labelled_values(source, map, "image", |v| v.as_str().and_then(|l| target.index_of(l)))
}

fn labelled_values<T>(
    g: &Graph,
    entries: &Map<String, Value>,
    what: &str,
    conv: impl Fn(&Value) -> Option<T>,
) -> Result<Vec<T>> {
    for key in entries.keys() {
        if g.index_of(key).is_none() {
            return Err(Error::GraphMismatch(format!("unknown vertex label {key:?}")));
        }
    }
    g.labels()
        .iter()
        .map(|l| {
            let v = entries
                .get(l)
                .ok_or_else(|| Error::GraphMismatch(format!("vertex {l:?} has no {what}")))?;
            conv(v).ok_or_else(|| Error::GraphMismatch(format!("vertex {l:?} has an invalid {what}: {v}")))
        })
        .collect()
}
