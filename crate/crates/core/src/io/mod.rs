//! Graph ingestion, generators and bound reports.

mod dimacs;
mod edge_list;
mod generate;
mod report;

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracles::OracleLimits;

pub use dimacs::{emit_dimacs, parse_dimacs};
pub use edge_list::{emit_edge_list, parse_edge_list};
pub use generate::{generate, turan_parts, Generator};
pub use report::{
    render_csv, render_json_lines, render_table, run_report, sweep, BoundRecord, OutputFormat,
    ReportOptions, SweepStats, CSV_HEADER,
};

/// Environment variable overriding the φ oracle cap.
pub const PHI_CAP_ENV: &str = "CLIQUE_BOUNDS_PHI_CAP";

/// Default limits, with the φ cap taken from [`PHI_CAP_ENV`] when set.
pub fn limits_from_env() -> Result<OracleLimits> {
    match std::env::var(PHI_CAP_ENV) {
        Ok(v) => {
            let cap = v
                .trim()
                .parse()
                .map_err(|_| Error::Usage(format!("{PHI_CAP_ENV}='{v}' is not a vertex count")))?;
            OracleLimits::default().with_phi_cap(cap)
        }
        Err(_) => Ok(OracleLimits::default()),
    }
}

/// A graph together with the external name of every vertex.
///
/// `labels[i]` is the name of internal vertex `i`; names are unique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl LabeledGraph {
    /// Labels `1..=n`, the DIMACS convention.
    pub fn numbered(graph: Graph) -> Self {
        let labels = (1..=graph.n()).map(|i| i.to_string()).collect();
        Self { graph, labels }
    }

    pub fn id_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dimacs,
    EdgeList,
}

impl GraphFormat {
    /// Guesses the format from the extension, then from a DIMACS `p` line.
    pub fn detect(path: &Path, text: &str) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("dimacs" | "col" | "clq") => GraphFormat::Dimacs,
            Some("edges" | "el" | "txt") => GraphFormat::EdgeList,
            _ if text.lines().any(|l| l.trim_start().starts_with("p ")) => GraphFormat::Dimacs,
            _ => GraphFormat::EdgeList,
        }
    }

    pub fn parse(self, text: &str) -> Result<LabeledGraph> {
        match self {
            GraphFormat::Dimacs => parse_dimacs(text),
            GraphFormat::EdgeList => parse_edge_list(text),
        }
    }
}

impl FromStr for GraphFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dimacs" => Ok(GraphFormat::Dimacs),
            "edgelist" | "edge-list" | "edges" => Ok(GraphFormat::EdgeList),
            other => Err(Error::Usage(format!("unknown graph format '{other}'"))),
        }
    }
}

/// Where a graph comes from.
#[derive(Clone, Debug, PartialEq)]
pub enum GraphSource {
    File {
        path: PathBuf,
        format: Option<GraphFormat>,
    },
    Generator(Generator),
}

impl GraphSource {
    pub fn name(&self) -> String {
        match self {
            GraphSource::File { path, .. } => path.display().to_string(),
            GraphSource::Generator(g) => g.to_string(),
        }
    }

    pub fn load(&self) -> Result<LabeledGraph> {
        match self {
            GraphSource::File { path, format } => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                let format = format.unwrap_or_else(|| GraphFormat::detect(path, &text));
                format.parse(&text)
            }
            GraphSource::Generator(g) => Ok(LabeledGraph::numbered(generate(g)?)),
        }
    }
}

impl fmt::Display for GraphSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}
