//! Text formats: graphs as DIMACS-style edge lists, certificates and reports
//! as JSON.
//!
//! A graph file looks like
//!
//! ```text
//! c format pseudoramsey-graph 1
//! c provenance cycle(n=4)
//! p edge 4 4
//! e 1 2
//! e 1 4
//! e 2 3
//! e 3 4
//! ```
//!
//! Vertices are 1-indexed and edges are written sorted. Optional
//! `c bipartition M N` comments mark the first `M` vertices as side `U`, and
//! `l V LABEL` records attach vertex labels.

use std::fmt::Write as _;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph, GraphBuilder};

pub const GRAPH_FORMAT_TAG: &str = "pseudoramsey-graph 1";

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

/// FNV-1a (64-bit) over the lines `"u v\n"` of the sorted, 1-indexed edge
/// list.
pub fn edge_hash(g: &Graph) -> u64 {
    let mut h = FNV_OFFSET;
    let mut line = String::new();
    for (u, v) in g.edges() {
        line.clear();
        let _ = writeln!(line, "{} {}", u + 1, v + 1);
        for &b in line.as_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(FNV_PRIME);
        }
    }
    h
}

pub fn edge_hash_hex(g: &Graph) -> String {
    format!("{:016x}", edge_hash(g))
}

/// A parsed graph file.
#[derive(Clone, Debug, PartialEq)]
pub struct GraphFile {
    pub graph: Graph,
    /// Size of side `U` when the file declares a bipartition.
    pub bipartition: Option<usize>,
}

impl GraphFile {
    pub fn bipartite(&self) -> Result<BipartiteGraph> {
        match self.bipartition {
            Some(m) => BipartiteGraph::from_graph(&self.graph, m),
            None => Err(Error::InvalidArgument("graph file declares no bipartition".into())),
        }
    }
}

pub fn format_graph(g: &Graph, bipartition: Option<usize>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "c format {GRAPH_FORMAT_TAG}");
    let _ = writeln!(out, "c provenance {}", g.provenance());
    if let Some(m) = bipartition {
        let _ = writeln!(out, "c bipartition {m} {}", g.n() - m);
    }
    let _ = writeln!(out, "p edge {} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    if let Some(labels) = g.labels() {
        for (v, l) in labels.iter().enumerate() {
            let _ = writeln!(out, "l {} {l}", v + 1);
        }
    }
    out
}

pub fn format_bipartite(b: &BipartiteGraph) -> String {
    format_graph(&b.to_graph(), Some(b.m()))
}

pub fn parse_graph(text: &str, path: &str) -> Result<GraphFile> {
    let err = |line: usize, message: String| Error::Parse { path: path.to_string(), line, message };
    let mut provenance = None;
    let mut bipartition = None;
    let mut header: Option<(usize, usize)> = None;
    let mut builder: Option<GraphBuilder> = None;
    let mut edges = 0usize;
    let mut labels: Vec<Option<String>> = Vec::new();
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = raw.trim_end();
        if line.trim().is_empty() {
            continue;
        }
        let (kind, rest) = line.split_once(' ').unwrap_or((line, ""));
        match kind {
            "c" => {
                if let Some(p) = rest.strip_prefix("provenance ") {
                    provenance = Some(p.trim().to_string());
                } else if let Some(f) = rest.strip_prefix("format ") {
                    if f.trim() != GRAPH_FORMAT_TAG {
                        return Err(err(line_no, format!("unsupported format {:?}", f.trim())));
                    }
                } else if let Some(b) = rest.strip_prefix("bipartition ") {
                    let nums: Vec<usize> = b
                        .split_whitespace()
                        .map(|x| x.parse().map_err(|_| err(line_no, format!("bad bipartition size {x:?}"))))
                        .collect::<Result<_>>()?;
                    if nums.len() != 2 {
                        return Err(err(line_no, "bipartition needs two sizes".into()));
                    }
                    bipartition = Some((nums[0], nums[1], line_no));
                }
            }
            "p" => {
                if header.is_some() {
                    return Err(err(line_no, "second problem line".into()));
                }
                let f: Vec<&str> = rest.split_whitespace().collect();
                if f.len() != 3 || f[0] != "edge" {
                    return Err(err(line_no, format!("malformed problem line {line:?}")));
                }
                let n: usize = f[1].parse().map_err(|_| err(line_no, format!("bad vertex count {:?}", f[1])))?;
                let m: usize = f[2].parse().map_err(|_| err(line_no, format!("bad edge count {:?}", f[2])))?;
                header = Some((n, m));
                builder = Some(GraphBuilder::new(n));
                labels = vec![None; n];
            }
            "e" => {
                let b = builder.as_mut().ok_or_else(|| err(line_no, "edge before problem line".into()))?;
                let f: Vec<&str> = rest.split_whitespace().collect();
                if f.len() != 2 {
                    return Err(err(line_no, format!("malformed edge {line:?}")));
                }
                let mut ends = [0usize; 2];
                for (slot, s) in ends.iter_mut().zip(&f) {
                    let v: usize = s.parse().map_err(|_| err(line_no, format!("bad endpoint {s:?}")))?;
                    if v == 0 || v > b.n() {
                        return Err(err(line_no, format!("endpoint {v} outside 1..={}", b.n())));
                    }
                    *slot = v - 1;
                }
                let [u, v] = ends;
                if u == v {
                    return Err(err(line_no, format!("loop at vertex {}", u + 1)));
                }
                if b.has_edge(u, v) {
                    return Err(err(line_no, format!("duplicate edge {} {}", u + 1, v + 1)));
                }
                b.add_edge(u, v).map_err(|e| err(line_no, e.to_string()))?;
                edges += 1;
            }
            "l" => {
                if builder.is_none() {
                    return Err(err(line_no, "label before problem line".into()));
                }
                let (v, label) = rest
                    .split_once(' ')
                    .ok_or_else(|| err(line_no, format!("malformed label {line:?}")))?;
                let v: usize = v.parse().map_err(|_| err(line_no, format!("bad vertex {v:?}")))?;
                if v == 0 || v > labels.len() {
                    return Err(err(line_no, format!("label vertex {v} outside 1..={}", labels.len())));
                }
                if labels[v - 1].replace(label.trim().to_string()).is_some() {
                    return Err(err(line_no, format!("second label for vertex {v}")));
                }
            }
            other => return Err(err(line_no, format!("unknown record type {other:?}"))),
        }
    }

    let (n, m) = header.ok_or_else(|| err(last_line.max(1), "missing problem line".into()))?;
    if edges != m {
        return Err(err(last_line, format!("header announces {m} edges, found {edges}")));
    }
    let provenance = provenance.unwrap_or_else(|| "unknown()".to_string());
    let mut graph = builder.expect("header seen").build(provenance);
    if labels.iter().any(Option::is_some) {
        if labels.iter().any(Option::is_none) {
            return Err(err(last_line, "labels must cover every vertex".into()));
        }
        graph = graph
            .with_labels(labels.into_iter().flatten().collect())
            .map_err(|e| err(last_line, e.to_string()))?;
    }
    let bipartition = match bipartition {
        Some((a, b, line)) => {
            if a + b != n {
                return Err(err(line, format!("bipartition {a} + {b} does not match {n} vertices")));
            }
            BipartiteGraph::from_graph(&graph, a).map_err(|e| err(line, e.to_string()))?;
            Some(a)
        }
        None => None,
    };
    Ok(GraphFile { graph, bipartition })
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<GraphFile> {
    let path = path.as_ref();
    parse_graph(&std::fs::read_to_string(path)?, &path.display().to_string())
}

pub fn write_graph(path: impl AsRef<Path>, g: &Graph, bipartition: Option<usize>) -> Result<()> {
    std::fs::write(path, format_graph(g, bipartition))?;
    Ok(())
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    Ok(serde_json::from_str(text)?)
}

pub fn write_json<T: Serialize>(path: impl AsRef<Path>, value: &T) -> Result<()> {
    std::fs::write(path, to_json(value)?)?;
    Ok(())
}

pub fn read_json<T: DeserializeOwned>(path: impl AsRef<Path>) -> Result<T> {
    from_json(&std::fs::read_to_string(path)?)
}
