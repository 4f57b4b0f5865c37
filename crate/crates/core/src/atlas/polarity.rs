use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::provenance::Family;

use super::geometry::{GeometryKind, IncidenceStructure};

/// Largest structure on which [`find_polarity`] runs a backtracking search.
pub const MAX_SEARCH_POINTS: usize = 40;

/// A bijection from points to lines with `p ∈ π(r)` iff `r ∈ π(p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polarity {
    point_to_line: Vec<usize>,
    absolute_points: Vec<usize>,
}

impl Polarity {
    /// Validates `point_to_line` against `inc`.
    pub fn new(inc: &IncidenceStructure, point_to_line: Vec<usize>) -> Result<Self> {
        let n = inc.point_count();
        if point_to_line.len() != n || inc.line_count() != n {
            return Err(Error::InvalidPolarity(format!(
                "map of length {} on {} points and {} lines",
                point_to_line.len(),
                n,
                inc.line_count()
            )));
        }
        let mut seen = vec![false; n];
        for &l in &point_to_line {
            if l >= n || std::mem::replace(&mut seen[l], true) {
                return Err(Error::InvalidPolarity(format!("line {l} is not hit exactly once")));
            }
        }
        for p in 0..n {
            for &r in inc.line(point_to_line[p]) {
                if !inc.incident(p, point_to_line[r]) {
                    return Err(Error::InvalidPolarity(format!(
                        "point {r} lies on the image of {p} but not conversely"
                    )));
                }
            }
        }
        let absolute_points = (0..n).filter(|&p| inc.incident(p, point_to_line[p])).collect();
        Ok(Polarity { point_to_line, absolute_points })
    }

    pub fn point_to_line(&self) -> &[usize] {
        &self.point_to_line
    }

    pub fn image(&self, p: usize) -> usize {
        self.point_to_line[p]
    }

    /// Points incident with their own image.
    pub fn absolute_points(&self) -> &[usize] {
        &self.absolute_points
    }

    /// The induced map on lines, inverse to `point_to_line`.
    pub fn line_to_point(&self) -> Vec<usize> {
        let mut inv = vec![0; self.point_to_line.len()];
        for (p, &l) in self.point_to_line.iter().enumerate() {
            inv[l] = p;
        }
        inv
    }
}

/// Finds a polarity of `inc`.
///
/// Projective planes from [`IncidenceStructure::projective_plane`] use the
/// orthogonal polarity directly. Other structures with at most
/// [`MAX_SEARCH_POINTS`] points are searched exhaustively, returning
/// `Ok(None)` when none exists and an error when `budget` nodes run out.
pub fn find_polarity(inc: &IncidenceStructure, budget: u64) -> Result<Option<Polarity>> {
    let n = inc.point_count();
    if inc.line_count() != n {
        return Ok(None);
    }
    if inc.kind() == GeometryKind::ProjectivePlane {
        return Polarity::new(inc, (0..n).collect()).map(Some);
    }
    if n > MAX_SEARCH_POINTS {
        return Err(Error::SizeBound(format!(
            "polarity search supports at most {MAX_SEARCH_POINTS} points, got {n}"
        )));
    }
    let mut search = Search { inc, map: vec![usize::MAX; n], used: vec![false; n], nodes: 0, budget };
    if search.extend(0)? {
        Polarity::new(inc, search.map).map(Some)
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    inc: &'a IncidenceStructure,
    map: Vec<usize>,
    used: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn extend(&mut self, p: usize) -> Result<bool> {
        if p == self.map.len() {
            return Ok(true);
        }
        for l in 0..self.map.len() {
            if self.used[l] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExhausted { budget: self.budget });
            }
            let consistent = (0..p).all(|r| self.inc.incident(r, l) == self.inc.incident(p, self.map[r]));
            if !consistent {
                continue;
            }
            self.map[p] = l;
            self.used[l] = true;
            if self.extend(p + 1)? {
                return Ok(true);
            }
            self.used[l] = false;
            self.map[p] = usize::MAX;
        }
        Ok(false)
    }
}

/// Graph on the points with distinct `x ~ y` iff `x ∈ π(y)`; loops at
/// absolute points are dropped.
pub fn polarity_graph(inc: &IncidenceStructure, polarity: &Polarity) -> Result<Graph> {
    let checked = Polarity::new(inc, polarity.point_to_line.clone())?;
    let n = inc.point_count();
    let mut b = GraphBuilder::new(n);
    for y in 0..n {
        for &x in inc.line(checked.image(y)) {
            if x < y {
                b.add_edge(x, y)?;
            }
        }
    }
    let provenance = match (inc.kind(), inc.order()) {
        (GeometryKind::ProjectivePlane, Some(q)) => Family::PgPolarity { q }.to_string(),
        (GeometryKind::GeneralizedQuadrangle, Some(q)) => Family::GqPolarity { q }.to_string(),
        _ => "polarity()".to_string(),
    };
    b.build(provenance).with_labels(inc.point_labels().to_vec())
}

/// Polarity graph of `PG(2, q)` through the generic path.
pub fn pg_polarity(q: u64) -> Result<Graph> {
    let pg = IncidenceStructure::projective_plane(q)?;
    let pol = find_polarity(&pg, 0)?.expect("orthogonal polarity");
    polarity_graph(&pg, &pol)
}

/// Polarity graph of `W(3, q)` under the first polarity found by search.
pub fn gq_polarity(q: u64, budget: u64) -> Result<Graph> {
    let gq = IncidenceStructure::symplectic_quadrangle(q)?;
    let pol = find_polarity(&gq, budget)?
        .ok_or_else(|| Error::InvalidPolarity(format!("W(3,{q}) admits no polarity")))?;
    polarity_graph(&gq, &pol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::er_polarity;

    #[test]
    fn orthogonal_polarity_matches_er() {
        for q in [2, 3, 4, 5] {
            let a = pg_polarity(q).unwrap();
            let b = er_polarity(q).unwrap();
            assert!(a.edges().eq(b.edges()));
        }
    }

    #[test]
    fn w32_is_self_dual() {
        let gq = IncidenceStructure::symplectic_quadrangle(2).unwrap();
        let pol = find_polarity(&gq, 1_000_000).unwrap().unwrap();
        assert_eq!(pol.absolute_points().len(), 5);
    }

    #[test]
    fn rejects_non_polarity() {
        let pg = IncidenceStructure::projective_plane(2).unwrap();
        let mut map: Vec<usize> = (0..7).collect();
        map.swap(0, 1);
        assert!(Polarity::new(&pg, map).is_err());
    }
}
