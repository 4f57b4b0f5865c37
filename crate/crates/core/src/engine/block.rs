use rand_core::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{is_independent, BipartiteGraph, Graph, GraphBuilder};
use crate::provenance::Step;

/// The random split `N(u) = A_u ∪ B_u` for every `u` on side `U`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockPartition {
    pub seed: u64,
    pub host_provenance: String,
    /// `sides[u] = (A_u, B_u)`, each sorted.
    pub sides: Vec<(Vec<usize>, Vec<usize>)>,
}

impl BlockPartition {
    /// Draws one fair bit per neighbour, in increasing order of `u` and then
    /// of the neighbour; bit 0 sends it to `A_u`, bit 1 to `B_u`.
    pub fn draw(g: &BipartiteGraph, seed: u64) -> Self {
        let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
        let sides = (0..g.m())
            .map(|u| {
                let (mut a, mut b) = (Vec::new(), Vec::new());
                for &v in g.u_neighbors(u) {
                    if rng.next_u64() >> 63 == 0 {
                        a.push(v);
                    } else {
                        b.push(v);
                    }
                }
                (a, b)
            })
            .collect();
        BlockPartition { seed, host_provenance: g.provenance().to_string(), sides }
    }

    /// Graph on side `V` with every `A_u × B_u` edge.
    pub fn overlay(&self, n: usize) -> Result<Graph> {
        let mut b = GraphBuilder::new(n);
        for (a_side, b_side) in &self.sides {
            for &x in a_side {
                for &y in b_side {
                    b.add_edge(x, y)?;
                }
            }
        }
        Ok(b.build(format!("{} |> {}", self.host_provenance, Step::Block { seed: self.seed })))
    }
}

/// Overlays a random complete bipartite graph inside every neighbourhood
/// `N(u)`, `u ∈ U`, and returns the resulting graph on `V`.
pub fn block_construct(g: &BipartiteGraph, seed: u64) -> (Graph, BlockPartition) {
    let partition = BlockPartition::draw(g, seed);
    let h = partition.overlay(g.n()).expect("partition parts are disjoint vertices of V");
    (h, partition)
}

/// `P(i independent)` as a power of one half.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DyadicProbability {
    /// Exact law: `Σ_{u : t_u ≥ 1} (t_u - 1)`.
    pub halvings: u64,
    /// Product `∏_u 2^(1 - t_u)` over every `u`, including `t_u = 0`; an
    /// upper bound, expressed as `Σ_u t_u - |U|` (may be negative).
    pub product_halvings: i64,
}

impl DyadicProbability {
    pub fn value(&self) -> f64 {
        0.5f64.powi(self.halvings as i32)
    }

    pub fn product_value(&self) -> f64 {
        0.5f64.powi(self.product_halvings as i32)
    }
}

/// Probability that `set ⊆ V` is independent in [`block_construct`] output,
/// where `t_u = |set ∩ N(u)|`. A neighbourhood meeting the set in `t_u ≥ 1`
/// vertices keeps it independent only if all of them land on one side.
pub fn indep_probability(g: &BipartiteGraph, set: &[usize]) -> Result<DyadicProbability> {
    let mut members = vec![false; g.n()];
    for &v in set {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        members[v] = true;
    }
    let (mut halvings, mut total) = (0u64, 0i64);
    for u in 0..g.m() {
        let t_u = g.u_neighbors(u).iter().filter(|&&v| members[v]).count() as u64;
        halvings += t_u.saturating_sub(1);
        total += t_u as i64;
    }
    Ok(DyadicProbability { halvings, product_halvings: total - g.m() as i64 })
}

/// Number of seeds in `seeds` for which `set` is independent in the block
/// construction.
pub fn independence_frequency(g: &BipartiteGraph, set: &[usize], seeds: std::ops::Range<u64>) -> u64 {
    let start = seeds.start;
    let len = seeds.end.saturating_sub(start) as usize;
    crate::par::sum_u64(len, |i| {
        let (h, _) = block_construct(g, start + i as u64);
        is_independent(&h, set) as u64
    })
}
