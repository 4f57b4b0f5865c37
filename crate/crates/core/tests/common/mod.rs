#![allow(dead_code)]

use pseudoramsey::Graph;
use rand_core::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

/// G(n, p) with a fixed seed; `p` is in percent.
pub fn random_graph(n: usize, percent: u64, seed: u64) -> Graph {
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_u64() % 100 < percent {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges, format!("random(n={n},p={percent}%,seed={seed})")).unwrap()
}

/// Adjacency as one bitmask per vertex (n <= 64).
pub fn masks(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= 64);
    (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u)).collect()
}

/// Independence number by scanning every vertex subset.
pub fn brute_alpha(g: &Graph) -> usize {
    let adj = masks(g);
    let n = g.n();
    let mut best = 0;
    for s in 0u64..1 << n {
        let size = s.count_ones() as usize;
        if size > best && (0..n).all(|v| s >> v & 1 == 0 || adj[v] & s == 0) {
            best = size;
        }
    }
    best
}

/// Number of independent sets of each size, by a vertex-at-a-time transfer
/// over the subsets of the processed prefix.
pub fn independent_set_profile(g: &Graph) -> Vec<u128> {
    let adj = masks(g);
    let n = g.n();
    // states: (independent set as mask, count) grouped implicitly by mask
    let mut sets: Vec<u64> = vec![0];
    for v in 0..n {
        let extended: Vec<u64> = sets.iter().filter(|&&s| adj[v] & s == 0).map(|&s| s | 1 << v).collect();
        sets.extend(extended);
    }
    let mut profile = vec![0u128; n + 1];
    for s in sets {
        profile[s.count_ones() as usize] += 1;
    }
    profile
}

/// Every injective map of `pattern` into `host` that preserves edges.
pub fn brute_embeds(pattern: &Graph, host: &Graph) -> bool {
    fn go(p: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == p.n() {
            return true;
        }
        for x in 0..h.n() {
            if used[x] {
                continue;
            }
            if (0..i).all(|j| !p.has_edge(i, j) || h.has_edge(x, map[j])) {
                used[x] = true;
                map.push(x);
                if go(p, h, map, used) {
                    return true;
                }
                map.pop();
                used[x] = false;
            }
        }
        false
    }
    go(pattern, host, &mut Vec::new(), &mut vec![false; host.n()])
}

/// Length of a shortest cycle by removing each edge and running a BFS
/// between its endpoints.
pub fn brute_girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (a, b) in g.edges() {
        let mut dist = vec![usize::MAX; g.n()];
        dist[a] = 0;
        let mut queue = std::collections::VecDeque::from([a]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if (u == a && w == b) || (u == b && w == a) || dist[w] != usize::MAX {
                    continue;
                }
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
        if dist[b] != usize::MAX {
            let len = dist[b] + 1;
            best = Some(best.map_or(len, |x| x.min(len)));
        }
    }
    best
}

/// `(λ₁ ≥ ... ≥ λₙ)` from nalgebra's symmetric eigensolver.
pub fn nalgebra_spectrum(g: &Graph) -> Vec<f64> {
    let n = g.n();
    let m = nalgebra::DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
    let mut e: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    e.sort_by(|a, b| b.total_cmp(a));
    e
}

pub fn triangles(g: &Graph) -> u64 {
    let mut t = 0;
    for (u, v) in g.edges() {
        t += g.neighbors(u).iter().filter(|&&w| w > v && g.has_edge(v, w)).count() as u64;
    }
    t
}
