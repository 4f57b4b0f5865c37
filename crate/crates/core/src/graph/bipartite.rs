use super::bits;
use super::simple::{Graph, GraphBuilder};
use crate::error::{Error, Result};

/// A bipartite graph with an explicit side `U` (size `m`) and side `V`
/// (size `n`). Rows of the biadjacency matrix are indexed by `U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    m: usize,
    n: usize,
    words: usize,
    biadj: Vec<u64>,
    u_nbrs: Vec<Vec<usize>>,
    v_nbrs: Vec<Vec<usize>>,
    provenance: String,
}

impl BipartiteGraph {
    /// `edges` are `(u, v)` pairs with `u < m`, `v < n`. Duplicates collapse.
    pub fn new<I>(m: usize, n: usize, edges: I, provenance: impl Into<String>) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if m == 0 || n == 0 {
            return Err(Error::InvalidArgument("both sides must be nonempty".into()));
        }
        let words = bits::words_for(n);
        let mut biadj = vec![0u64; m * words];
        for (u, v) in edges {
            if u >= m {
                return Err(Error::VertexOutOfRange { vertex: u, n: m });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            bits::set(&mut biadj[u * words..(u + 1) * words], v);
        }
        let u_nbrs: Vec<Vec<usize>> =
            (0..m).map(|u| bits::iter(&biadj[u * words..(u + 1) * words]).collect()).collect();
        let mut v_nbrs = vec![Vec::new(); n];
        for (u, l) in u_nbrs.iter().enumerate() {
            for &v in l {
                v_nbrs[v].push(u);
            }
        }
        Ok(BipartiteGraph { m, n, words, biadj, u_nbrs, v_nbrs, provenance: provenance.into() })
    }

    /// Reads a bipartite graph from a plain graph whose first `m` vertices
    /// form side `U`.
    pub fn from_graph(g: &Graph, m: usize) -> Result<Self> {
        if m > g.n() {
            return Err(Error::InvalidArgument(format!("side size {m} exceeds {}", g.n())));
        }
        let mut edges = Vec::with_capacity(g.edge_count());
        for (a, b) in g.edges() {
            if (a < m) == (b < m) {
                return Err(Error::InvalidArgument(format!(
                    "edge {{{a}, {b}}} does not cross the bipartition"
                )));
            }
            edges.push((a, b - m));
        }
        Self::new(m, g.n() - m, edges, g.provenance())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = provenance.into();
        self
    }

    pub fn edge_count(&self) -> usize {
        self.u_nbrs.iter().map(Vec::len).sum()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.m && v < self.n && bits::get(self.u_row(u), v)
    }

    /// Row of the biadjacency matrix for `u`, as a bitset over `V`.
    pub fn u_row(&self, u: usize) -> &[u64] {
        &self.biadj[u * self.words..(u + 1) * self.words]
    }

    /// `N(u)` as sorted indices into `V`.
    pub fn u_neighbors(&self, u: usize) -> &[usize] {
        &self.u_nbrs[u]
    }

    /// `N(v)` as sorted indices into `U`.
    pub fn v_neighbors(&self, v: usize) -> &[usize] {
        &self.v_nbrs[v]
    }

    pub fn u_degrees(&self) -> Vec<usize> {
        self.u_nbrs.iter().map(Vec::len).collect()
    }

    pub fn v_degrees(&self) -> Vec<usize> {
        self.v_nbrs.iter().map(Vec::len).collect()
    }

    pub fn min_v_degree(&self) -> usize {
        self.v_nbrs.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// `Some((du, dv))` when every `U` vertex has degree `du` and every `V`
    /// vertex has degree `dv`.
    pub fn biregular_degrees(&self) -> Option<(usize, usize)> {
        let du = self.u_nbrs[0].len();
        let dv = self.v_nbrs[0].len();
        (self.u_nbrs.iter().all(|l| l.len() == du) && self.v_nbrs.iter().all(|l| l.len() == dv))
            .then_some((du, dv))
    }

    /// The underlying graph on `m + n` vertices: `U` first, then `V`.
    pub fn to_graph(&self) -> Graph {
        let mut b = GraphBuilder::new(self.m + self.n);
        for (u, l) in self.u_nbrs.iter().enumerate() {
            for &v in l {
                b.add_edge(u, self.m + v).expect("in range");
            }
        }
        b.build(self.provenance.clone())
    }

    /// Biadjacency matrix as dense rows of 0/1 values.
    pub fn biadjacency_dense(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.m * self.n];
        for (u, l) in self.u_nbrs.iter().enumerate() {
            for &v in l {
                out[u * self.n + v] = 1.0;
            }
        }
        out
    }
}
