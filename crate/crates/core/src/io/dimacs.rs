use std::fmt::Write;

use super::{parse_err, LabeledGraph};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses the DIMACS edge format: `c` comments, one `p edge <n> <m>` line,
/// then `e <u> <v>` lines with 1-based ids. Duplicate edges collapse.
pub fn parse_dimacs(text: &str) -> Result<LabeledGraph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let mut tokens = raw.split_whitespace();
        let Some(tag) = tokens.next() else { continue };
        let rest: Vec<&str> = tokens.collect();
        match tag {
            "c" => {}
            "p" => {
                if n.is_some() {
                    return Err(parse_err(line_no, "duplicate p-line"));
                }
                if rest.len() != 3 || !matches!(rest[0], "edge" | "col") {
                    return Err(parse_err(line_no, "expected 'p edge <n> <m>'"));
                }
                n = Some(int(rest[1], line_no)?);
                // m is advisory; duplicate edge lines make it unreliable.
                int(rest[2], line_no)?;
            }
            "e" => {
                let n = n.ok_or_else(|| parse_err(line_no, "edge before p-line"))?;
                if rest.len() != 2 {
                    return Err(parse_err(line_no, "expected 'e <u> <v>'"));
                }
                let u = int(rest[0], line_no)?;
                let v = int(rest[1], line_no)?;
                for id in [u, v] {
                    if id == 0 || id > n {
                        return Err(parse_err(
                            line_no,
                            format!("vertex id {id} outside 1..={n}"),
                        ));
                    }
                }
                if u == v {
                    return Err(parse_err(line_no, "self-loop"));
                }
                edges.push((u - 1, v - 1));
            }
            other => return Err(parse_err(line_no, format!("unknown line tag '{other}'"))),
        }
    }
    let n = n.ok_or_else(|| parse_err(text.lines().count().max(1), "missing p-line"))?;
    let graph = Graph::from_edges(n, edges).map_err(|e| Error::Parse {
        line: 0,
        msg: e.to_string(),
    })?;
    Ok(LabeledGraph::numbered(graph))
}

fn int(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| {
        parse_err(
            line,
            format!("expected a non-negative integer, found '{token}'"),
        )
    })
}

pub fn emit_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}
