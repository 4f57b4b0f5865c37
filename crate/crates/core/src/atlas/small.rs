use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::provenance::Family;

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)), Family::Cycle { n: n as u64 }.to_string())
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument("a path needs at least one vertex".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)), Family::Path { n: n as u64 }.to_string())
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument("a complete graph needs at least one vertex".into()));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges, Family::Complete { n: n as u64 }.to_string())
}

/// Outer 5-cycle on `0..5`, inner pentagram on `5..10`, spokes `i -- i + 5`.
pub fn petersen() -> Graph {
    let edges = (0..5).flat_map(|i| [(i, (i + 1) % 5), (5 + i, 5 + (i + 2) % 5), (i, i + 5)]);
    Graph::from_edges(10, edges, Family::Petersen.to_string()).expect("valid edge list")
}
