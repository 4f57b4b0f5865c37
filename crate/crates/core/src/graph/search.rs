use std::collections::VecDeque;

use super::bits;
use super::simple::Graph;
use crate::error::{Error, Result};
use crate::par;

/// Largest pattern accepted by [`subgraph_embed`].
pub const MAX_PATTERN_VERTICES: usize = 12;

/// Length of a shortest cycle, or `None` for a forest.
///
/// Runs a BFS from every root; a non-tree edge `{x, y}` met from root `r`
/// closes a closed walk of length `dist(x) + dist(y) + 1`, and the minimum of
/// these over all roots is exactly the girth.
pub fn girth(g: &Graph) -> Option<usize> {
    par::min_usize(g.n(), |root| shortest_cycle_through(g, root))
}

fn shortest_cycle_through(g: &Graph, root: usize) -> Option<usize> {
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    dist[root] = 0;
    queue.push_back(root);
    let mut best = usize::MAX;
    while let Some(x) = queue.pop_front() {
        // Any cycle found from here on is at least 2 * dist(x) long.
        if 2 * dist[x] >= best {
            break;
        }
        for &y in g.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            } else if parent[x] != y {
                best = best.min(dist[x] + dist[y] + 1);
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// A set of `s` pairwise adjacent vertices, or `None` if the graph is
/// `K_s`-free. The returned clique is the lexicographically first one found by
/// scanning its least vertex in increasing order.
pub fn find_clique(g: &Graph, s: usize) -> Option<Vec<usize>> {
    match s {
        0 => return Some(Vec::new()),
        1 => return (g.n() > 0).then(|| vec![0]),
        _ => {}
    }
    par::find_map_first(g.n(), |v| {
        let mut cand = bits::above(g.n(), v);
        bits::and_into(&mut cand, g.row(v));
        let mut clique = vec![v];
        extend_clique(g, s, &mut clique, &cand).then_some(clique)
    })
}

fn extend_clique(g: &Graph, s: usize, clique: &mut Vec<usize>, cand: &[u64]) -> bool {
    if clique.len() == s {
        return true;
    }
    if bits::count(cand) < s - clique.len() {
        return false;
    }
    for v in bits::iter(cand) {
        let mut next = cand.to_vec();
        bits::and_into(&mut next, g.row(v));
        bits::and_into(&mut next, &bits::above(g.n(), v));
        clique.push(v);
        if extend_clique(g, s, clique, &next) {
            return true;
        }
        clique.pop();
    }
    false
}

/// A cycle of length exactly `len` (as a subgraph, not necessarily induced),
/// returned as its vertex sequence starting at its least vertex.
pub fn find_cycle(g: &Graph, len: usize) -> Result<Option<Vec<usize>>> {
    if !(3..=16).contains(&len) {
        return Err(Error::InvalidArgument(format!("cycle length {len} outside 3..=16")));
    }
    Ok(par::find_map_first(g.n(), |start| cycle_from(g, len, start)))
}

/// Searches cycles whose least vertex is `start`.
fn cycle_from(g: &Graph, len: usize, start: usize) -> Option<Vec<usize>> {
    let n = g.n();
    // Vertices above `start` that can reach it within `len / 2` steps while
    // staying above it; nothing else lies on such a cycle.
    let mut dist = vec![usize::MAX; n];
    dist[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        if dist[x] == len / 2 {
            continue;
        }
        for &y in g.neighbors(x) {
            if y > start && dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![start];
    let mut on_path = vec![false; n];
    on_path[start] = true;
    extend_cycle(g, len, &dist, &mut path, &mut on_path).then_some(path)
}

fn extend_cycle(
    g: &Graph,
    len: usize,
    dist: &[usize],
    path: &mut Vec<usize>,
    on_path: &mut [bool],
) -> bool {
    let cur = *path.last().expect("path starts at the root");
    let start = path[0];
    if path.len() == len {
        // Orientation break: second vertex below the last one.
        return g.has_edge(cur, start) && path[1] < cur;
    }
    let remaining = len - path.len();
    for &w in g.neighbors(cur) {
        if w <= start || on_path[w] || dist[w] > remaining {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        if extend_cycle(g, len, dist, path, on_path) {
            return true;
        }
        on_path[w] = false;
        path.pop();
    }
    false
}

/// An injective map `pattern -> host` carrying every pattern edge onto a host
/// edge, or `None` if the pattern is not a subgraph of the host.
pub fn subgraph_embed(pattern: &Graph, host: &Graph) -> Result<Option<Vec<usize>>> {
    let k = pattern.n();
    if k > MAX_PATTERN_VERTICES {
        return Err(Error::PatternTooLarge(k));
    }
    if k == 0 {
        return Ok(Some(Vec::new()));
    }
    if k > host.n() || pattern.edge_count() > host.edge_count() {
        return Ok(None);
    }
    let order = embedding_order(pattern);
    // For each position, the earlier positions adjacent to it.
    let back: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &p)| (0..i).filter(|&j| pattern.has_edge(p, order[j])).collect())
        .collect();
    let need: Vec<usize> = order.iter().map(|&p| pattern.degree(p)).collect();
    let search = Embedding { host, order: &order, back: &back, need: &need };
    let found = par::find_map_first(host.n(), |first| {
        if host.degree(first) < need[0] {
            return None;
        }
        let mut images = vec![first];
        let mut used = vec![0u64; host.words()];
        bits::set(&mut used, first);
        search.extend(&mut images, &mut used).then_some(images)
    });
    Ok(found.map(|images| {
        let mut map = vec![0; k];
        for (pos, &p) in order.iter().enumerate() {
            map[p] = images[pos];
        }
        map
    }))
}

struct Embedding<'a> {
    host: &'a Graph,
    order: &'a [usize],
    back: &'a [Vec<usize>],
    need: &'a [usize],
}

impl Embedding<'_> {
    fn extend(&self, images: &mut Vec<usize>, used: &mut [u64]) -> bool {
        let pos = images.len();
        if pos == self.order.len() {
            return true;
        }
        let mut cand = match self.back[pos].first() {
            Some(&j) => self.host.row(images[j]).to_vec(),
            None => bits::full(self.host.n()),
        };
        for &j in self.back[pos].iter().skip(1) {
            bits::and_into(&mut cand, self.host.row(images[j]));
        }
        bits::and_not_into(&mut cand, used);
        for w in bits::iter(&cand) {
            if self.host.degree(w) < self.need[pos] {
                continue;
            }
            images.push(w);
            bits::set(used, w);
            if self.extend(images, used) {
                return true;
            }
            bits::clear(used, w);
            images.pop();
        }
        false
    }
}

/// Connected-first ordering: start at a maximum-degree vertex and repeatedly
/// take the vertex with the most already-ordered neighbours.
fn embedding_order(pattern: &Graph) -> Vec<usize> {
    let k = pattern.n();
    let mut placed = vec![false; k];
    let mut order = Vec::with_capacity(k);
    while order.len() < k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| pattern.has_edge(u, v)).count();
                (links, pattern.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    order
}
