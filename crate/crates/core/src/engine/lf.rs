use std::collections::{BTreeMap, HashSet};

use canonical_form::Canonize;

use crate::error::{Error, Result};
use crate::graph::{subgraph_embed, Graph};

/// Largest base graph, in edges, accepted by [`lf_family`].
pub const MAX_LF_EDGES: usize = 10;

/// One `F_P`: the graph, the path partition that produced it, and its
/// canonical edge list.
#[derive(Clone, Debug)]
pub struct PatternMember {
    pub graph: Graph,
    pub partition: Vec<Vec<(usize, usize)>>,
    pub canonical: Vec<(usize, usize)>,
}

/// All `F_P` over path partitions `P` of `E(F)`, one per isomorphism class.
#[derive(Clone, Debug)]
pub struct PatternFamily {
    pub base: Graph,
    pub members: Vec<PatternMember>,
    /// Number of path partitions enumerated before deduplication.
    pub partitions: usize,
}

fn normalize(e: (usize, usize)) -> (usize, usize) {
    (e.0.min(e.1), e.0.max(e.1))
}

/// Replaces each part `P_i` by a new apex `x_i` joined to every vertex of
/// `P_i`. Vertices of `F` keep their indices; apex `i` is `|V(F)| + i`.
/// Edges of `F` itself are not kept.
pub fn build_fp(f: &Graph, partition: &[Vec<(usize, usize)>]) -> Result<Graph> {
    let mut seen = HashSet::new();
    for part in partition {
        if part.is_empty() {
            return Err(Error::InvalidArgument("every part needs at least one edge".into()));
        }
        for &e in part {
            let e = normalize(e);
            if !f.has_edge(e.0, e.1) {
                return Err(Error::InvalidArgument(format!("{e:?} is not an edge of F")));
            }
            if !seen.insert(e) {
                return Err(Error::InvalidArgument(format!("edge {e:?} appears in two parts")));
            }
        }
    }
    if seen.len() != f.edge_count() {
        return Err(Error::InvalidArgument(format!(
            "parts cover {} of {} edges",
            seen.len(),
            f.edge_count()
        )));
    }
    let n = f.n();
    let mut edges = Vec::new();
    for (i, part) in partition.iter().enumerate() {
        let mut vs: Vec<usize> = part.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs.dedup();
        edges.extend(vs.into_iter().map(|y| (n + i, y)));
    }
    Graph::from_edges(n + partition.len(), edges, "lf_member()")
}

/// Adjacency lists in the form the canonical labelling expects.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Lists(Vec<Vec<usize>>);

impl Canonize for Lists {
    fn size(&self) -> usize {
        self.0.len()
    }

    fn apply_morphism(&self, perm: &[usize]) -> Self {
        let mut adj = vec![Vec::new(); self.0.len()];
        for (i, nbrs) in self.0.iter().enumerate() {
            adj[perm[i]] = nbrs.iter().map(|&u| perm[u]).collect();
            adj[perm[i]].sort_unstable();
        }
        Lists(adj)
    }

    fn invariant_neighborhood(&self, u: usize) -> impl Iterator<Item = (usize, u64)> {
        self.0[u].iter().map(|&v| (v, 0))
    }
}

/// Sorted edge list of a canonical relabelling of `g`; equal exactly for
/// isomorphic graphs.
pub fn canonical_edges(g: &Graph) -> Vec<(usize, usize)> {
    let lists = Lists((0..g.n()).map(|v| g.neighbors(v).to_vec()).collect()).canonical();
    let mut edges: Vec<(usize, usize)> = lists
        .0
        .iter()
        .enumerate()
        .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
        .collect();
    edges.sort_unstable();
    edges
}

/// Edge masks of all simple paths (at least one edge) inside `available`.
fn paths_within(edges: &[(usize, usize)], available: u32, n: usize) -> Vec<u32> {
    let mut adj = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        if available >> i & 1 == 1 {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
    }
    fn walk(adj: &[Vec<(usize, usize)>], at: usize, visited: u64, mask: u32, out: &mut HashSet<u32>) {
        for &(w, i) in &adj[at] {
            if visited >> w & 1 == 0 {
                let m = mask | 1 << i;
                out.insert(m);
                walk(adj, w, visited | 1 << w, m, out);
            }
        }
    }
    let mut out = HashSet::new();
    for s in 0..n {
        walk(&adj, s, 1 << s, 0, &mut out);
    }
    let mut v: Vec<u32> = out.into_iter().collect();
    v.sort_unstable();
    v
}

/// Every partition of the edge set into simple paths, as lists of edge masks.
fn path_partitions(edges: &[(usize, usize)], n: usize) -> Vec<Vec<u32>> {
    let all = if edges.is_empty() { 0 } else { u32::MAX >> (32 - edges.len()) };
    let paths = paths_within(edges, all, n);
    let mut out = Vec::new();
    fn rec(paths: &[u32], remaining: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(acc.clone());
            return;
        }
        let lowest = remaining & remaining.wrapping_neg();
        for &p in paths {
            if p & lowest != 0 && p & !remaining == 0 {
                acc.push(p);
                rec(paths, remaining & !p, acc, out);
                acc.pop();
            }
        }
    }
    rec(&paths, all, &mut Vec::new(), &mut out);
    out
}

/// The family `L(F)`, deduplicated up to isomorphism.
pub fn lf_family(f: &Graph) -> Result<PatternFamily> {
    let edges: Vec<(usize, usize)> = f.edges().collect();
    if edges.len() > MAX_LF_EDGES {
        return Err(Error::SizeBound(format!(
            "L(F) enumeration supports at most {MAX_LF_EDGES} edges, F has {}",
            edges.len()
        )));
    }
    if f.n() > 64 {
        return Err(Error::SizeBound(format!("F has {} vertices", f.n())));
    }
    let partitions = path_partitions(&edges, f.n());
    let mut classes: BTreeMap<Vec<(usize, usize)>, PatternMember> = BTreeMap::new();
    for masks in &partitions {
        let parts: Vec<Vec<(usize, usize)>> = masks
            .iter()
            .map(|&m| (0..edges.len()).filter(|&i| m >> i & 1 == 1).map(|i| edges[i]).collect())
            .collect();
        let graph = build_fp(f, &parts)?;
        let canonical = canonical_edges(&graph);
        classes.entry(canonical.clone()).or_insert(PatternMember { graph, partition: parts, canonical });
    }
    Ok(PatternFamily { base: f.clone(), members: classes.into_values().collect(), partitions: partitions.len() })
}

/// A member of `L(F)` found in a host, with the images of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LfViolation {
    pub member: usize,
    pub embedding: Vec<usize>,
}

/// `None` if no member of `family` is a subgraph of `g`; otherwise the first
/// member (in family order) that embeds.
pub fn is_lf_free(g: &Graph, family: &PatternFamily) -> Result<Option<LfViolation>> {
    for (member, m) in family.members.iter().enumerate() {
        if let Some(embedding) = subgraph_embed(&m.graph, g)? {
            return Ok(Some(LfViolation { member, embedding }));
        }
    }
    Ok(None)
}
