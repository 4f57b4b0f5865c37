use super::bits;
use crate::error::{Error, Result};

/// A simple undirected graph stored as a symmetric bit matrix plus sorted
/// adjacency lists. Immutable once built.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    nbrs: Vec<Vec<usize>>,
    edge_count: usize,
    labels: Option<Vec<String>>,
    provenance: String,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.adj == other.adj
            && self.labels == other.labels
            && self.provenance == other.provenance
    }
}

impl Eq for Graph {}

/// Mutable adjacency used while a graph is being assembled.
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        let words = bits::words_for(n);
        GraphBuilder { n, words, adj: vec![0; n * words] }
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphBuilder { n: g.n, words: g.words, adj: g.adj.clone() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bits::get(&self.adj[u * self.words..(u + 1) * self.words], v)
    }

    /// Adds `{u, v}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        bits::set(&mut self.adj[u * self.words..(u + 1) * self.words], v);
        bits::set(&mut self.adj[v * self.words..(v + 1) * self.words], u);
        Ok(())
    }

    pub fn build(self, provenance: impl Into<String>) -> Graph {
        let nbrs: Vec<Vec<usize>> = (0..self.n)
            .map(|v| bits::iter(&self.adj[v * self.words..(v + 1) * self.words]).collect())
            .collect();
        let edge_count = nbrs.iter().map(Vec::len).sum::<usize>() / 2;
        Graph {
            n: self.n,
            words: self.words,
            adj: self.adj,
            nbrs,
            edge_count,
            labels: None,
            provenance: provenance.into(),
        }
    }
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges collapse; loops and
    /// out-of-range endpoints are errors.
    pub fn from_edges<I>(n: usize, edges: I, provenance: impl Into<String>) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build(provenance))
    }

    pub fn empty(n: usize) -> Self {
        GraphBuilder::new(n).build(format!("empty(n={n})"))
    }

    /// Attaches vertex labels; they must be distinct and one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        let mut sorted: Vec<&String> = labels.iter().collect();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("vertex labels are not distinct".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = provenance.into();
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    /// Neighbourhood of `v` as a bitset row.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.nbrs.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.nbrs.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.nbrs.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.nbrs.first().map_or(0, Vec::len);
        self.nbrs.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bits::get(self.row(u), v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.nbrs
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let mut b = GraphBuilder::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    b.add_edge(u, v).expect("in range");
                }
            }
        }
        b.build(format!("complement of {}", self.provenance))
    }

    /// A proper 2-colouring if one exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        let mut stack = Vec::new();
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &v in &self.nbrs[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        stack.push(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// The subgraph induced by `vertices` (sorted and deduplicated first);
    /// vertex `i` of the result is the `i`-th smallest selected vertex.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        if let Some(&bad) = vs.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: bad, n: self.n });
        }
        let mut b = GraphBuilder::new(vs.len());
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    b.add_edge(i, j)?;
                }
            }
        }
        let list = vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(":");
        let mut g = b.build(format!("{} |> induced(vertices={list})", self.provenance));
        if let Some(labels) = &self.labels {
            g.labels = Some(vs.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok(g)
    }

    /// Adds every edge between `a` and `b`, which must be disjoint.
    pub fn complete_bipartite_overlay(&self, a: &[usize], b: &[usize]) -> Result<Graph> {
        if let Some(&x) = a.iter().find(|x| b.contains(x)) {
            return Err(Error::InvalidArgument(format!("vertex {x} is in both parts")));
        }
        let mut builder = GraphBuilder::from_graph(self);
        for &x in a {
            for &y in b {
                builder.add_edge(x, y)?;
            }
        }
        let mut g = builder.build(self.provenance.clone());
        g.labels = self.labels.clone();
        Ok(g)
    }
}
