use std::collections::HashMap;
use std::sync::Arc;

use super::field::{Elem, FiniteField};
use crate::error::{Error, Result};

const MAX_POINTS: u64 = 1_000_000;

/// A point of `PG(dim, q)` in homogeneous coordinates, normalised so that the
/// first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    coords: Vec<Elem>,
}

impl ProjectivePoint {
    /// Normalises a nonzero vector; returns `None` for the zero vector.
    pub fn from_vector(field: &FiniteField, v: &[Elem]) -> Option<Self> {
        let lead = *v.iter().find(|&&c| c != 0)?;
        let scale = field.inv(lead)?;
        Some(ProjectivePoint { coords: v.iter().map(|&c| field.mul(c, scale)).collect() })
    }

    pub fn coords(&self) -> &[Elem] {
        &self.coords
    }

    /// Dotted coordinate label, e.g. `1.0.2`.
    pub fn label(&self) -> String {
        self.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(".")
    }
}

/// Number of points of `PG(dim, q)`.
pub fn point_count(q: u64, dim: u32) -> u64 {
    (0..=dim).map(|i| q.pow(i)).sum()
}

/// All points of `PG(dim, q)` for `dim` in {2, 3}, sorted by coordinates.
pub fn projective_points(field: &FiniteField, dim: u32) -> Result<Vec<ProjectivePoint>> {
    if !(2..=3).contains(&dim) {
        return Err(Error::InvalidArgument(format!("projective dimension {dim} not in 2..=3")));
    }
    let q = field.order() as u64;
    let count = point_count(q, dim);
    if count > MAX_POINTS {
        return Err(Error::SizeBound(format!("PG({dim},{q}) has {count} points")));
    }
    let len = dim as usize + 1;
    let mut points = Vec::with_capacity(count as usize);
    for lead in 0..len {
        let free = len - lead - 1;
        for mut idx in 0..q.pow(free as u32) {
            let mut coords = vec![0; len];
            coords[lead] = 1;
            for slot in coords[lead + 1..].iter_mut().rev() {
                *slot = (idx % q) as Elem;
                idx /= q;
            }
            points.push(ProjectivePoint { coords });
        }
    }
    points.sort_unstable();
    debug_assert_eq!(points.len() as u64, count);
    Ok(points)
}

/// The points of `PG(dim, q)` together with a coordinate index.
#[derive(Clone, Debug)]
pub struct ProjectiveSpace {
    field: Arc<FiniteField>,
    dim: u32,
    points: Vec<ProjectivePoint>,
    index: HashMap<Vec<Elem>, usize>,
}

impl ProjectiveSpace {
    pub fn new(field: Arc<FiniteField>, dim: u32) -> Result<Self> {
        let points = projective_points(&field, dim)?;
        let index = points.iter().enumerate().map(|(i, p)| (p.coords.clone(), i)).collect();
        Ok(ProjectiveSpace { field, dim, points, index })
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Index of the point spanned by a nonzero vector.
    pub fn index_of(&self, v: &[Elem]) -> Option<usize> {
        let p = ProjectivePoint::from_vector(&self.field, v)?;
        self.index.get(&p.coords).copied()
    }

    /// Indices of the `q + 1` points on the line spanned by two distinct points.
    pub fn line_through(&self, a: usize, b: usize) -> Vec<usize> {
        let f = &self.field;
        let (x, y) = (self.points[a].coords(), self.points[b].coords());
        let mut out: Vec<usize> = f
            .elements()
            .map(|c| {
                let v: Vec<Elem> = x.iter().zip(y).map(|(&xi, &yi)| f.add(f.mul(c, xi), yi)).collect();
                self.index_of(&v).expect("nonzero combination of independent points")
            })
            .chain(std::iter::once(a))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}
