//! Construction and verification toolkit for Ramsey lower bounds built from
//! pseudorandom graphs.
//!
//! The crate is organised bottom-up:
//!
//! - [`algebra`]: finite fields and projective point sets.
//! - [`graph`]: bit-matrix graphs and the exact combinatorial searches
//!   (girth, cliques, cycles, subgraph embedding, independence number).
//! - [`spectra`]: dense symmetric eigensolver and `(n, d, λ)` reports.
//! - [`atlas`]: named algebraic constructions (Paley, polarity graphs,
//!   incidence graphs of geometries, `D(k, q)`).
//! - [`engine`]: counting bounds, the random induced-subgraph procedure, the
//!   random block construction, and Ramsey certificates.
//! - [`io`]: graph and certificate file formats.
//!
//! With the default `parallel` feature the data-parallel loops run on rayon;
//! without it every loop runs sequentially and produces identical results.

pub mod algebra;
pub mod atlas;
pub mod engine;
pub mod error;
pub mod graph;
pub mod io;
pub mod provenance;
pub mod spectra;

mod par;

pub use error::{Error, Result};
pub use graph::{BipartiteGraph, Graph};

/// Version string recorded in certificates.
pub const TOOL_VERSION: &str = concat!("pseudoramsey ", env!("CARGO_PKG_VERSION"));
