//! Immutable bit-matrix graphs and the exact combinatorial searches run on
//! them.

mod bipartite;
pub(crate) mod bits;
mod independence;
mod search;
mod simple;

pub use bipartite::BipartiteGraph;
pub use independence::{
    count_independent_sets, independence_number, is_independent, AlphaMode, IndependenceResult,
    ResultMode,
};
pub use search::{find_clique, find_cycle, girth, subgraph_embed, MAX_PATTERN_VERTICES};
pub use simple::{Graph, GraphBuilder};
