use std::fmt;
use std::sync::Arc;

use crate::algebra::{Elem, FiniteField, ProjectiveSpace};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph, GraphBuilder};
use crate::provenance::Family;

pub const MAX_POLARITY_VERTICES: u64 = 100_000;
pub const MAX_GQ_POINTS: u64 = 10_000;
pub const MAX_PLANE_POINTS: u64 = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeometryKind {
    ProjectivePlane,
    GeneralizedQuadrangle,
    Other,
}

impl fmt::Display for GeometryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeometryKind::ProjectivePlane => "projective plane",
            GeometryKind::GeneralizedQuadrangle => "generalized quadrangle",
            GeometryKind::Other => "incidence structure",
        })
    }
}

/// Points `0..points`, lines as sorted point lists, and the reverse index.
#[derive(Clone, Debug)]
pub struct IncidenceStructure {
    kind: GeometryKind,
    q: Option<u64>,
    point_labels: Vec<String>,
    lines: Vec<Vec<usize>>,
    point_lines: Vec<Vec<usize>>,
}

impl IncidenceStructure {
    pub fn new(
        points: usize,
        mut lines: Vec<Vec<usize>>,
        kind: GeometryKind,
        q: Option<u64>,
        point_labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let mut point_lines = vec![Vec::new(); points];
        for (i, line) in lines.iter_mut().enumerate() {
            line.sort_unstable();
            line.dedup();
            for &p in line.iter() {
                if p >= points {
                    return Err(Error::VertexOutOfRange { vertex: p, n: points });
                }
                point_lines[p].push(i);
            }
        }
        let point_labels = match point_labels {
            Some(l) if l.len() == points => l,
            Some(l) => {
                return Err(Error::InvalidArgument(format!("{} labels for {points} points", l.len())))
            }
            None => (0..points).map(|p| p.to_string()).collect(),
        };
        Ok(IncidenceStructure { kind, q, point_labels, lines, point_lines })
    }

    /// `PG(2, q)` with lines indexed like points: line `i` is the set of
    /// points orthogonal to point `i`.
    pub fn projective_plane(q: u64) -> Result<Self> {
        let count = q * q + q + 1;
        if count > MAX_PLANE_POINTS {
            return Err(Error::SizeBound(format!("PG(2,{q}) has {count} points, above {MAX_PLANE_POINTS}")));
        }
        let space = ProjectiveSpace::new(Arc::new(FiniteField::of_order(q)?), 2)?;
        let lines = (0..space.len()).map(|i| orthogonal_line(&space, i)).collect();
        let labels = space.points().iter().map(|p| p.label()).collect();
        Self::new(space.len(), lines, GeometryKind::ProjectivePlane, Some(q), Some(labels))
    }

    /// The symplectic quadrangle `W(3, q)`: all points of `PG(3, q)` and the
    /// lines that are totally isotropic for `x1 y2 - x2 y1 + x3 y4 - x4 y3`.
    pub fn symplectic_quadrangle(q: u64) -> Result<Self> {
        let count = (q + 1) * (q * q + 1);
        if count > MAX_GQ_POINTS {
            return Err(Error::SizeBound(format!("W(3,{q}) has {count} points, above {MAX_GQ_POINTS}")));
        }
        let space = ProjectiveSpace::new(Arc::new(FiniteField::of_order(q)?), 3)?;
        let f = space.field().clone();
        let pts = space.points();
        let form = |x: &[Elem], y: &[Elem]| {
            let a = f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]));
            let b = f.sub(f.mul(x[2], y[3]), f.mul(x[3], y[2]));
            f.add(a, b)
        };
        let mut lines = Vec::new();
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                if form(pts[i].coords(), pts[j].coords()) != 0 {
                    continue;
                }
                let line = space.line_through(i, j);
                // Every line is found once, from its two smallest points.
                if line[0] == i && line[1] == j {
                    lines.push(line);
                }
            }
        }
        let labels = pts.iter().map(|p| p.label()).collect();
        Self::new(pts.len(), lines, GeometryKind::GeneralizedQuadrangle, Some(q), Some(labels))
    }

    pub fn kind(&self) -> GeometryKind {
        self.kind
    }

    pub fn order(&self) -> Option<u64> {
        self.q
    }

    pub fn point_count(&self) -> usize {
        self.point_lines.len()
    }

    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn line(&self, l: usize) -> &[usize] {
        &self.lines[l]
    }

    pub fn lines_through(&self, p: usize) -> &[usize] {
        &self.point_lines[p]
    }

    pub fn point_labels(&self) -> &[String] {
        &self.point_labels
    }

    pub fn incident(&self, p: usize, l: usize) -> bool {
        self.lines[l].binary_search(&p).is_ok()
    }

    /// Levi graph with lines on side `U` and points on side `V`.
    pub fn incidence_graph(&self, provenance: impl Into<String>) -> Result<BipartiteGraph> {
        let edges = self.lines.iter().enumerate().flat_map(|(l, pts)| pts.iter().map(move |&p| (l, p)));
        BipartiteGraph::new(self.line_count(), self.point_count(), edges, provenance)
    }
}

/// Points of `PG(2, q)` orthogonal to point `a` under the standard dot product.
fn orthogonal_line(space: &ProjectiveSpace, a: usize) -> Vec<usize> {
    let f = space.field();
    let c = space.points()[a].coords();
    let (u, w): ([Elem; 3], [Elem; 3]) = if c[0] != 0 {
        ([f.neg(c[1]), 1, 0], [f.neg(c[2]), 0, 1])
    } else if c[1] != 0 {
        ([1, 0, 0], [0, f.neg(c[2]), 1])
    } else {
        ([1, 0, 0], [0, 1, 0])
    };
    let iu = space.index_of(&u).expect("nonzero vector");
    let iw = space.index_of(&w).expect("nonzero vector");
    space.line_through(iu, iw)
}

/// Erdős–Rényi orthogonal polarity graph on the points of `PG(2, q)`:
/// distinct `x ~ y` whenever `x · y = 0`. Absolute points carry no loop.
pub fn er_polarity(q: u64) -> Result<Graph> {
    let count = q * q + q + 1;
    if count > MAX_POLARITY_VERTICES {
        return Err(Error::SizeBound(format!("ER_{q} has {count} vertices, above {MAX_POLARITY_VERTICES}")));
    }
    let space = ProjectiveSpace::new(Arc::new(FiniteField::of_order(q)?), 2)?;
    let n = space.len();
    let rows: Vec<Vec<usize>> = crate::par::map_collect(n, |x| orthogonal_line(&space, x));
    let mut b = GraphBuilder::new(n);
    for (x, row) in rows.iter().enumerate() {
        for &y in row {
            if x < y {
                b.add_edge(x, y)?;
            }
        }
    }
    let labels = space.points().iter().map(|p| p.label()).collect();
    b.build(Family::ErPolarity { q }.to_string()).with_labels(labels)
}

/// Point-line incidence graph of `PG(2, q)`.
pub fn pg_incidence(q: u64) -> Result<BipartiteGraph> {
    IncidenceStructure::projective_plane(q)?.incidence_graph(Family::PgIncidence { q }.to_string())
}

/// Point-line incidence graph of `W(3, q)`.
pub fn gq_incidence(q: u64) -> Result<BipartiteGraph> {
    IncidenceStructure::symplectic_quadrangle(q)?.incidence_graph(Family::GqIncidence { q }.to_string())
}
