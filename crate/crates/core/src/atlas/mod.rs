//! Named graph families: Paley graphs, orthogonal polarity graphs,
//! incidence graphs of `PG(2, q)` and `W(3, q)`, the graphs `D(k, q)`, and a
//! few small classics.

mod dkq;
mod geometry;
mod paley;
mod polarity;
mod small;

pub use dkq::{dkq, dkq_adjacent, dkq_line_through, dkq_point_on, MAX_DKQ_K, MAX_DKQ_SIDE};
pub use geometry::{
    er_polarity, gq_incidence, pg_incidence, GeometryKind, IncidenceStructure, MAX_GQ_POINTS,
    MAX_PLANE_POINTS, MAX_POLARITY_VERTICES,
};
pub use paley::{paley, MAX_PALEY_ORDER};
pub use polarity::{
    find_polarity, gq_polarity, pg_polarity, polarity_graph, Polarity, MAX_SEARCH_POINTS,
};
pub use small::{complete, cycle, path, petersen};

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph};
use crate::provenance::Family;

/// Node budget used when a family requires a polarity search.
pub const POLARITY_BUDGET: u64 = 50_000_000;

/// A freshly built family member.
#[derive(Clone, Debug)]
pub enum Built {
    Graph(Graph),
    Bipartite(BipartiteGraph),
}

impl Built {
    /// The underlying simple graph; bipartite hosts list side `U` first.
    pub fn into_graph(self) -> Graph {
        match self {
            Built::Graph(g) => g,
            Built::Bipartite(b) => b.to_graph(),
        }
    }
}

fn size(n: u64) -> Result<usize> {
    usize::try_from(n).map_err(|_| Error::SizeBound(format!("{n} vertices")))
}

pub fn build(family: &Family) -> Result<Built> {
    Ok(match *family {
        Family::Paley { q } => Built::Graph(paley(q)?),
        Family::ErPolarity { q } => Built::Graph(er_polarity(q)?),
        Family::PgIncidence { q } => Built::Bipartite(pg_incidence(q)?),
        Family::GqIncidence { q } => Built::Bipartite(gq_incidence(q)?),
        Family::Dkq { k, q } => Built::Bipartite(dkq(size(k)?, q)?),
        Family::PgPolarity { q } => Built::Graph(pg_polarity(q)?),
        Family::GqPolarity { q } => Built::Graph(gq_polarity(q, POLARITY_BUDGET)?),
        Family::Cycle { n } => Built::Graph(cycle(size(n)?)?),
        Family::Complete { n } => Built::Graph(complete(size(n)?)?),
        Family::Path { n } => Built::Graph(path(size(n)?)?),
        Family::Empty { n } => Built::Graph(Graph::empty(size(n)?)),
        Family::Petersen => Built::Graph(petersen()),
    })
}
