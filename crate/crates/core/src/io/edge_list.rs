use std::collections::HashMap;
use std::fmt::Write;

use super::{parse_err, LabeledGraph};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses a whitespace-separated edge list with string labels.
///
/// * `u w` adds the edge `{u, w}`; repeats collapse.
/// * `v x` declares vertex `x`, so isolated vertices can be written down.
///   The keyword means a vertex literally named `v` cannot open an edge line.
/// * `#` starts a comment; blank lines are skipped.
///
/// Ids are assigned in order of first appearance.
pub fn parse_edge_list(text: &str) -> Result<LabeledGraph> {
    let mut labels: Vec<String> = Vec::new();
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut edges = Vec::new();
    let mut intern = |label: &str| -> usize {
        if let Some(&id) = ids.get(label) {
            return id;
        }
        let id = labels.len();
        labels.push(label.to_string());
        ids.insert(label.to_string(), id);
        id
    };
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            ["v", label] => {
                intern(label);
            }
            [a, b] => {
                if a == b {
                    return Err(parse_err(line_no, format!("self-loop on '{a}'")));
                }
                let u = intern(a);
                let w = intern(b);
                edges.push((u, w));
            }
            _ => {
                return Err(parse_err(
                    line_no,
                    format!(
                        "expected 'u v' or 'v <label>', found {} tokens",
                        tokens.len()
                    ),
                ))
            }
        }
    }
    let graph = Graph::from_edges(labels.len(), edges).map_err(|e| Error::Parse {
        line: 0,
        msg: e.to_string(),
    })?;
    Ok(LabeledGraph { graph, labels })
}

/// Writes every vertex as a `v` declaration, in id order, then every edge,
/// so that parsing the output reproduces the same ids.
pub fn emit_edge_list(g: &LabeledGraph) -> String {
    let mut out = String::new();
    for label in &g.labels {
        writeln!(out, "v {label}").unwrap();
    }
    for (u, v) in g.graph.edges() {
        writeln!(out, "{} {}", g.labels[u], g.labels[v]).unwrap();
    }
    out
}
