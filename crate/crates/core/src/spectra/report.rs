use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::eigen::symmetric_eigenvalues;
use crate::error::{Error, Result};
use crate::graph::{bits, BipartiteGraph, Graph};
use crate::par;

pub const MAX_SPECTRUM_VERTICES: usize = 5000;

/// Relative tolerance for spectral assertions.
const TOL: f64 = 1e-6;

/// Adjacency eigenvalues in decreasing order.
pub fn spectrum(g: &Graph) -> Result<Vec<f64>> {
    let n = g.n();
    if n > MAX_SPECTRUM_VERTICES {
        return Err(Error::SizeBound(format!("spectrum of {n} vertices (max {MAX_SPECTRUM_VERTICES})")));
    }
    let mut a = vec![0.0; n * n];
    for (u, v) in g.edges() {
        a[u * n + v] = 1.0;
        a[v * n + u] = 1.0;
    }
    Ok(symmetric_eigenvalues(a, n))
}

/// Singular values of the biadjacency matrix, decreasing, computed from the
/// eigenvalues of `B B^T` (whose entries are co-degrees, formed exactly).
pub fn singular_values(b: &BipartiteGraph) -> Result<Vec<f64>> {
    let m = b.m();
    if m > MAX_SPECTRUM_VERTICES {
        return Err(Error::SizeBound(format!("singular values with {m} rows")));
    }
    let rows = par::map_collect(m, |u| {
        (0..m)
            .map(|w| {
                b.u_row(u).iter().zip(b.u_row(w)).map(|(x, y)| (x & y).count_ones()).sum::<u32>() as f64
            })
            .collect::<Vec<f64>>()
    });
    let gram: Vec<f64> = rows.into_iter().flatten().collect();
    Ok(symmetric_eigenvalues(gram, m).into_iter().map(|x| x.max(0.0).sqrt()).collect())
}

/// Largest absolute value among all eigenvalues except one copy of the
/// largest. `eigs` must be sorted decreasingly.
pub fn lambda_of(eigs: &[f64]) -> f64 {
    match eigs.len() {
        0 | 1 => 0.0,
        n => eigs[1].abs().max(eigs[n - 1].abs()),
    }
}

/// `tr(A^3)`, i.e. six times the number of triangles.
pub fn trace_cube(g: &Graph) -> u64 {
    let n = g.n();
    let triangles = par::sum_u64(n, |u| {
        g.neighbors(u)
            .iter()
            .filter(|&&v| v > u)
            .map(|&v| {
                let above = bits::above(n, v);
                g.row(u)
                    .iter()
                    .zip(g.row(v))
                    .zip(&above)
                    .map(|((a, b), c)| (a & b & c).count_ones() as u64)
                    .sum::<u64>()
            })
            .sum()
    });
    6 * triangles
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SsvRatio {
    pub s: u32,
    /// `λ n^(s-2) / d^(s-1)`; absent when `d = 0`.
    pub ratio: Option<f64>,
}

/// The `(n, d, λ)` summary of a graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralReport {
    pub n: usize,
    pub is_regular: bool,
    /// The common degree when regular, otherwise the maximum degree.
    pub d: usize,
    /// Degree to number of vertices with that degree.
    pub degree_multiset: BTreeMap<usize, usize>,
    pub eigenvalues: Vec<f64>,
    pub lambda: f64,
    pub bipartite: bool,
    pub ssv_ratios: Vec<SsvRatio>,
    pub trace_cube: u64,
}

pub fn ndl_report(g: &Graph, s_values: &[u32]) -> Result<SpectralReport> {
    let eigenvalues = spectrum(g)?;
    let n = g.n();
    let regular = g.regular_degree();
    let d = regular.unwrap_or_else(|| g.max_degree());
    let mut degree_multiset = BTreeMap::new();
    for deg in g.degrees() {
        *degree_multiset.entry(deg).or_insert(0) += 1;
    }
    let lambda = lambda_of(&eigenvalues);
    let ssv_ratios = s_values
        .iter()
        .map(|&s| SsvRatio {
            s,
            ratio: (d > 0).then(|| {
                lambda * (n as f64).powi(s as i32 - 2) / (d as f64).powi(s as i32 - 1)
            }),
        })
        .collect();
    Ok(SpectralReport {
        n,
        is_regular: regular.is_some(),
        d,
        degree_multiset,
        eigenvalues,
        lambda,
        bipartite: g.is_bipartite(),
        ssv_ratios,
        trace_cube: trace_cube(g),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TraceStatus {
    Pass,
    Fail,
    NotApplicable,
}

/// Outcome of checking `tr(A^3) >= d^3 - λ^3 (n - 1)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceCheck {
    pub status: TraceStatus,
    pub trace_cube: u64,
    pub triangles: u64,
    pub d: usize,
    pub lambda: f64,
    pub n: usize,
    /// `d^3 - λ^3 (n - 1)`.
    pub rhs: f64,
    pub triangle_free: bool,
}

pub fn trace_cube_check(g: &Graph, report: &SpectralReport) -> TraceCheck {
    let tr = trace_cube(g);
    let d = report.d as f64;
    let rhs = d.powi(3) - report.lambda.powi(3) * (report.n as f64 - 1.0);
    let status = if !report.is_regular {
        TraceStatus::NotApplicable
    } else if tr as f64 >= rhs - TOL * d.powi(3) {
        TraceStatus::Pass
    } else {
        TraceStatus::Fail
    };
    TraceCheck {
        status,
        trace_cube: tr,
        triangles: tr / 6,
        d: report.d,
        lambda: report.lambda,
        n: report.n,
        rhs,
        triangle_free: tr == 0,
    }
}

/// Power sums of the spectrum compared with edge and triangle counts.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MomentCheck {
    pub sum: f64,
    pub sum_squares: f64,
    pub sum_cubes: f64,
    pub twice_edges: u64,
    pub trace_cube: u64,
    pub ok: bool,
}

/// Checks `Σλ = 0`, `Σλ² = 2|E|` within `1e-6 n` and `Σλ³ = tr(A³)` within
/// `1e-6 n d³`.
pub fn moment_check(g: &Graph, eigs: &[f64]) -> MomentCheck {
    let n = g.n() as f64;
    let d = (g.max_degree() as f64).max(1.0);
    let sum: f64 = eigs.iter().sum();
    let sum_squares: f64 = eigs.iter().map(|x| x * x).sum();
    let sum_cubes: f64 = eigs.iter().map(|x| x * x * x).sum();
    let twice_edges = 2 * g.edge_count() as u64;
    let tr = trace_cube(g);
    let ok = sum.abs() <= TOL * n.max(1.0)
        && (sum_squares - twice_edges as f64).abs() <= TOL * n.max(1.0)
        && (sum_cubes - tr as f64).abs() <= TOL * n.max(1.0) * d.powi(3);
    MomentCheck { sum, sum_squares, sum_cubes, twice_edges, trace_cube: tr, ok }
}
