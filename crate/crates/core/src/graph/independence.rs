use std::sync::atomic::{AtomicU64, Ordering};

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;
use serde::{Deserialize, Serialize};

use super::bits;
use super::simple::Graph;
use crate::error::{Error, Result};
use crate::par;

/// Local-search restarts used to seed the exact search with a good solution.
const INITIAL_RESTARTS: u64 = 32;

/// How [`independence_number`] searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphaMode {
    /// Branch and bound; the result is the true independence number.
    Exact,
    /// Seeded randomized greedy plus (1,2)-swap local search; the result is a
    /// valid independent set, not necessarily maximum.
    LowerBound { seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ResultMode {
    Exact,
    LowerBound,
}

impl std::fmt::Display for ResultMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ResultMode::Exact => "exact",
            ResultMode::LowerBound => "lower-bound",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependenceResult {
    pub alpha: usize,
    /// Sorted vertices of an independent set of size `alpha`.
    pub witness: Vec<usize>,
    pub mode: ResultMode,
    /// Search nodes (exact) or restarts (lower bound) used.
    pub nodes: u64,
}

pub fn is_independent(g: &Graph, set: &[usize]) -> bool {
    set.iter().enumerate().all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !g.has_edge(u, v)))
}

/// Independence number of `g`.
///
/// In exact mode `budget` caps the number of branch-and-bound nodes; running
/// out yields [`Error::AlphaBudget`] with the bounds reached. In lower-bound
/// mode `budget` is the number of randomized restarts.
pub fn independence_number(g: &Graph, mode: AlphaMode, budget: u64) -> Result<IndependenceResult> {
    match mode {
        AlphaMode::Exact => {
            let initial = local_search(g, 0, INITIAL_RESTARTS).witness;
            MaxClique::on_complement(g, initial).solve(budget)
        }
        AlphaMode::LowerBound { seed } => Ok(local_search(g, seed, budget)),
    }
}

/// Greedy independent set: repeatedly take a minimum-degree vertex of what
/// remains and delete its closed neighbourhood.
fn greedy_min_degree(g: &Graph) -> Vec<usize> {
    let mut alive = bits::full(g.n());
    let mut out = Vec::new();
    while !bits::is_empty(&alive) {
        let v = bits::iter(&alive)
            .min_by_key(|&v| {
                let mut r = g.row(v).to_vec();
                bits::and_into(&mut r, &alive);
                (bits::count(&r), v)
            })
            .expect("nonempty");
        out.push(v);
        bits::clear(&mut alive, v);
        bits::and_not_into(&mut alive, g.row(v));
    }
    out.sort_unstable();
    out
}

/// Bitset branch and bound for maximum clique with greedy colouring bounds
/// and recolouring of high-colour vertices, applied to the complement graph.
struct MaxClique {
    n: usize,
    words: usize,
    /// `order[i]` is the original vertex at position `i`.
    order: Vec<usize>,
    /// Clique-graph adjacency in position labels.
    adj: Vec<u64>,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
    /// Scratch colour classes, reused across nodes.
    classes: Vec<u64>,
}

/// Minimum-width ordering of the complement: repeatedly move a vertex of
/// least remaining complement degree to the back.
fn min_width_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut alive = bits::full(n);
    // Complement degree among alive vertices = alive - 1 - g-degree among alive.
    let mut gdeg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut back = Vec::with_capacity(n);
    for remaining in (1..=n).rev() {
        let v = bits::iter(&alive)
            .min_by_key(|&v| (remaining - 1 - gdeg[v], std::cmp::Reverse(v)))
            .expect("nonempty");
        bits::clear(&mut alive, v);
        for &w in g.neighbors(v) {
            gdeg[w] -= 1;
        }
        back.push(v);
    }
    back.reverse();
    back
}

impl MaxClique {
    fn on_complement(g: &Graph, initial: Vec<usize>) -> Self {
        let n = g.n();
        let words = bits::words_for(n);
        let order = min_width_order(g);
        let mut adj = vec![0u64; n * words];
        for i in 0..n {
            for j in 0..n {
                if i != j && !g.has_edge(order[i], order[j]) {
                    bits::set(&mut adj[i * words..(i + 1) * words], j);
                }
            }
        }
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let best = initial.into_iter().map(|v| pos[v]).collect();
        MaxClique { n, words, order, adj, best, nodes: 0, budget: 0, exhausted: false, classes: Vec::new() }
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.adj[i * self.words..(i + 1) * self.words]
    }

    fn solve(mut self, budget: u64) -> Result<IndependenceResult> {
        self.budget = budget;
        let all = bits::full(self.n);
        let upper = self.color(&all, 1).last().map_or(0, |&(_, c)| c);
        let mut clique = Vec::new();
        if self.n > 0 {
            self.expand(&mut clique, all);
        }
        let mut witness: Vec<usize> = self.best.iter().map(|&i| self.order[i]).collect();
        witness.sort_unstable();
        if self.exhausted {
            return Err(Error::AlphaBudget { lower: witness.len(), upper, witness });
        }
        Ok(IndependenceResult { alpha: witness.len(), witness, mode: ResultMode::Exact, nodes: self.nodes })
    }

    /// Colours `p` and returns `(vertex, colour)` for the vertices whose
    /// colour is at least `min_color`, in colouring order. Classes below
    /// `min_color` are built greedily; a vertex that would overflow them is
    /// first offered a swap with its single conflict in a lower class.
    fn color(&mut self, p: &[u64], min_color: usize) -> Vec<(usize, usize)> {
        let w = self.words;
        let mut classes = std::mem::take(&mut self.classes);
        classes.clear();
        let mut uncolored = p.to_vec();
        let mut avail = vec![0u64; w];
        let mut count = 0;
        while count + 1 < min_color && !bits::is_empty(&uncolored) {
            avail.copy_from_slice(&uncolored);
            classes.resize((count + 1) * w, 0);
            while let Some(v) = bits::first(&avail) {
                bits::clear(&mut uncolored, v);
                bits::clear(&mut avail, v);
                bits::set(&mut classes[count * w..(count + 1) * w], v);
                bits::and_not_into(&mut avail, self.row(v));
            }
            count += 1;
        }
        if count > 0 && count + 1 == min_color {
            let mut it = uncolored.clone();
            while let Some(v) = bits::first(&it) {
                bits::clear(&mut it, v);
                if self.renumber(v, &mut classes) {
                    bits::clear(&mut uncolored, v);
                }
            }
        }
        self.classes = classes;
        let mut out = Vec::new();
        let mut k = count;
        while !bits::is_empty(&uncolored) {
            k += 1;
            avail.copy_from_slice(&uncolored);
            while let Some(v) = bits::first(&avail) {
                bits::clear(&mut uncolored, v);
                bits::clear(&mut avail, v);
                bits::and_not_into(&mut avail, self.row(v));
                out.push((v, k));
            }
        }
        out
    }

    /// Tries to place `v` in one of the colour classes (stored back to back
    /// in `classes`), possibly moving its single neighbour in that class to
    /// another class.
    fn renumber(&self, v: usize, classes: &mut [u64]) -> bool {
        let w = self.words;
        let row = self.row(v);
        let count = classes.len() / w;
        for k1 in 0..count {
            let class = &classes[k1 * w..(k1 + 1) * w];
            let mut conflict = None;
            let mut hits = 0;
            for (i, (a, b)) in row.iter().zip(class).enumerate() {
                let x = a & b;
                if x != 0 {
                    hits += x.count_ones();
                    if hits > 1 {
                        break;
                    }
                    conflict = Some(i * 64 + x.trailing_zeros() as usize);
                }
            }
            if hits == 0 {
                bits::set(&mut classes[k1 * w..(k1 + 1) * w], v);
                return true;
            }
            if let (1, Some(u)) = (hits, conflict) {
                let urow = self.row(u);
                let target = (0..count)
                    .filter(|&k2| k2 != k1)
                    .find(|&k2| urow.iter().zip(&classes[k2 * w..(k2 + 1) * w]).all(|(a, b)| a & b == 0));
                if let Some(k2) = target {
                    bits::clear(&mut classes[k1 * w..(k1 + 1) * w], u);
                    bits::set(&mut classes[k2 * w..(k2 + 1) * w], u);
                    bits::set(&mut classes[k1 * w..(k1 + 1) * w], v);
                    return true;
                }
            }
        }
        false
    }

    fn expand(&mut self, clique: &mut Vec<usize>, mut p: Vec<u64>) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        let min_color = (self.best.len() + 1).saturating_sub(clique.len()).max(1);
        let colored = self.color(&p, min_color);
        for &(v, k) in colored.iter().rev() {
            if clique.len() + k <= self.best.len() || self.exhausted {
                return;
            }
            clique.push(v);
            let mut next = p.clone();
            bits::and_into(&mut next, self.row(v));
            if bits::is_empty(&next) {
                if clique.len() > self.best.len() {
                    self.best = clique.clone();
                }
            } else {
                self.expand(clique, next);
            }
            clique.pop();
            bits::clear(&mut p, v);
        }
    }
}

fn local_search(g: &Graph, seed: u64, restarts: u64) -> IndependenceResult {
    let n = g.n();
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    let mut best = greedy_min_degree(g);
    let mut perm: Vec<usize> = (0..n).collect();
    for _ in 0..restarts {
        for i in (1..n).rev() {
            let j = (rng.next_u64() % (i as u64 + 1)) as usize;
            perm.swap(i, j);
        }
        let mut sol = vec![0u64; g.words()];
        let mut blocked = vec![0u64; g.words()];
        for &v in &perm {
            if !bits::get(&blocked, v) {
                bits::set(&mut sol, v);
                bits::set(&mut blocked, v);
                for (b, r) in blocked.iter_mut().zip(g.row(v)) {
                    *b |= r;
                }
            }
        }
        while two_for_one(g, &mut sol) {}
        let set: Vec<usize> = bits::iter(&sol).collect();
        if set.len() > best.len() {
            best = set;
        }
    }
    IndependenceResult { alpha: best.len(), witness: best, mode: ResultMode::LowerBound, nodes: restarts }
}

/// One improving (1,2)-swap: drop a solution vertex `x` and add two
/// non-adjacent vertices whose only solution neighbour is `x`; then fill any
/// free vertices greedily. Returns whether the solution grew.
fn two_for_one(g: &Graph, sol: &mut [u64]) -> bool {
    let n = g.n();
    let tight = |v: usize, s: &[u64]| {
        g.row(v).iter().zip(s).map(|(a, b)| (a & b).count_ones() as usize).sum::<usize>()
    };
    let members: Vec<usize> = bits::iter(sol).collect();
    for x in members {
        let cands: Vec<usize> =
            g.neighbors(x).iter().copied().filter(|&c| !bits::get(sol, c) && tight(c, sol) == 1).collect();
        for (i, &u) in cands.iter().enumerate() {
            if let Some(&w) = cands[i + 1..].iter().find(|&&w| !g.has_edge(u, w)) {
                bits::clear(sol, x);
                bits::set(sol, u);
                bits::set(sol, w);
                for v in 0..n {
                    if !bits::get(sol, v) && tight(v, sol) == 0 {
                        bits::set(sol, v);
                    }
                }
                return true;
            }
        }
    }
    false
}

/// Exact number of independent sets of size `t`, by depth-first extension
/// over increasing vertex order. `budget` caps the number of search nodes.
pub fn count_independent_sets(g: &Graph, t: usize, budget: u64) -> Result<u128> {
    if t == 0 {
        return Ok(1);
    }
    let n = g.n();
    let non_adj: Vec<Vec<u64>> = (0..n)
        .map(|v| {
            let mut r = bits::above(n, v);
            bits::and_not_into(&mut r, g.row(v));
            r
        })
        .collect();
    let nodes = AtomicU64::new(0);
    let counter = Counter { t, non_adj: &non_adj, nodes: &nodes, budget };
    let parts = par::map_collect(n, |v| counter.count(1, &non_adj[v]));
    let mut total: u128 = 0;
    for part in parts {
        total += part?;
    }
    Ok(total)
}

struct Counter<'a> {
    t: usize,
    non_adj: &'a [Vec<u64>],
    nodes: &'a AtomicU64,
    budget: u64,
}

impl Counter<'_> {
    fn count(&self, size: usize, cand: &[u64]) -> Result<u128> {
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            return Err(Error::BudgetExhausted { budget: self.budget });
        }
        if size == self.t {
            return Ok(1);
        }
        let avail = bits::count(cand);
        if size + avail < self.t {
            return Ok(0);
        }
        if size + 1 == self.t {
            return Ok(avail as u128);
        }
        let mut total = 0;
        for v in bits::iter(cand) {
            let mut next = cand.to_vec();
            bits::and_into(&mut next, &self.non_adj[v]);
            total += self.count(size + 1, &next)?;
        }
        Ok(total)
    }
}
