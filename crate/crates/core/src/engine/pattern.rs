use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{find_clique, find_cycle, subgraph_embed, Graph};

/// A forbidden subgraph `F`.
#[derive(Clone, Debug, PartialEq)]
pub enum Forbidden {
    Clique(usize),
    Cycle(usize),
    /// An explicit small graph, matched as a (not necessarily induced) subgraph.
    Pattern(Graph),
}

impl Forbidden {
    /// Whether `g` contains `F`, with the image of its vertices if so.
    pub fn find_in(&self, g: &Graph) -> Result<Option<Vec<usize>>> {
        match self {
            Forbidden::Clique(s) => Ok(find_clique(g, *s)),
            Forbidden::Cycle(l) => find_cycle(g, *l),
            Forbidden::Pattern(p) => subgraph_embed(p, g),
        }
    }

    pub fn method(&self) -> &'static str {
        match self {
            Forbidden::Clique(_) => "exhaustive clique search",
            Forbidden::Cycle(_) => "exhaustive cycle search",
            Forbidden::Pattern(_) => "exhaustive subgraph embedding",
        }
    }

    /// `F` as a graph.
    pub fn graph(&self) -> Result<Graph> {
        match self {
            Forbidden::Clique(s) => crate::atlas::complete(*s),
            Forbidden::Cycle(l) => crate::atlas::cycle(*l),
            Forbidden::Pattern(p) => Ok(p.clone()),
        }
    }

    /// Notation used in claims: `r(4, t)` for cliques, `r(C4, t)` otherwise.
    pub fn claim_symbol(&self) -> String {
        match self {
            Forbidden::Clique(s) => s.to_string(),
            other => other.to_string(),
        }
    }
}

impl fmt::Display for Forbidden {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Forbidden::Clique(s) => write!(f, "K{s}"),
            Forbidden::Cycle(l) => write!(f, "C{l}"),
            Forbidden::Pattern(p) => {
                let edges: Vec<String> = p.edges().map(|(u, v)| format!("{u}-{v}")).collect();
                write!(f, "G{}[{}]", p.n(), edges.join(","))
            }
        }
    }
}

impl FromStr for Forbidden {
    type Err = Error;

    /// Accepts `K<s>`, `C<l>`, or `G<n>[u-v,...]` with 0-indexed endpoints.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("unrecognized pattern {s:?}; expected K<s>, C<l> or G<n>[u-v,...]"));
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('K') {
            let k: usize = rest.parse().map_err(|_| bad())?;
            if k < 2 {
                return Err(Error::InvalidArgument(format!("clique size must be at least 2, got {k}")));
            }
            return Ok(Forbidden::Clique(k));
        }
        if let Some(rest) = s.strip_prefix('C') {
            let l: usize = rest.parse().map_err(|_| bad())?;
            if !(3..=16).contains(&l) {
                return Err(Error::InvalidArgument(format!("cycle length must lie in 3..=16, got {l}")));
            }
            return Ok(Forbidden::Cycle(l));
        }
        let rest = s.strip_prefix('G').ok_or_else(bad)?;
        let (n, edges) = rest.split_once('[').ok_or_else(bad)?;
        let n: usize = n.parse().map_err(|_| bad())?;
        let edges = edges.strip_suffix(']').ok_or_else(bad)?;
        let mut list = Vec::new();
        for e in edges.split(',').filter(|e| !e.is_empty()) {
            let (u, v) = e.split_once('-').ok_or_else(bad)?;
            list.push((u.parse().map_err(|_| bad())?, v.parse().map_err(|_| bad())?));
        }
        Ok(Forbidden::Pattern(Graph::from_edges(n, list, "pattern()")?))
    }
}
