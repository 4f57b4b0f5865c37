use crate::algebra::{Elem, FiniteField};
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::provenance::Family;

pub const MAX_DKQ_SIDE: u64 = 100_000;
pub const MAX_DKQ_K: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    Line,
    Point,
}

/// Coordinate `c` (0-based, `c >= 1`) satisfies
/// `l_c - p_c = x_a * y_b`, returned as `((side, a), (side, b))`.
fn equation(c: usize) -> ((Side, usize), (Side, usize)) {
    use Side::*;
    match c {
        1 => ((Line, 0), (Point, 0)),
        2 => ((Line, 1), (Point, 0)),
        3 => ((Line, 0), (Point, 1)),
        _ => {
            let r = (c - 4) % 4;
            let b = c - r;
            match r {
                0 => ((Line, 0), (Point, b - 2)),
                1 => ((Line, b - 1), (Point, 0)),
                2 => ((Line, b), (Point, 0)),
                _ => ((Line, 0), (Point, b + 1)),
            }
        }
    }
}

fn product(f: &FiniteField, c: usize, line: &[Elem], point: &[Elem]) -> Elem {
    let pick = |(side, i): (Side, usize)| match side {
        Side::Line => line[i],
        Side::Point => point[i],
    };
    let (a, b) = equation(c);
    f.mul(pick(a), pick(b))
}

/// The line adjacent to `point` whose first coordinate is `l1`.
pub fn dkq_line_through(f: &FiniteField, point: &[Elem], l1: Elem) -> Vec<Elem> {
    let mut line = vec![0; point.len()];
    line[0] = l1;
    for c in 1..point.len() {
        line[c] = f.add(point[c], product(f, c, &line, point));
    }
    line
}

/// The point adjacent to `line` whose first coordinate is `p1`.
pub fn dkq_point_on(f: &FiniteField, line: &[Elem], p1: Elem) -> Vec<Elem> {
    let mut point = vec![0; line.len()];
    point[0] = p1;
    for c in 1..line.len() {
        point[c] = f.sub(line[c], product(f, c, line, &point));
    }
    point
}

pub fn dkq_adjacent(f: &FiniteField, line: &[Elem], point: &[Elem]) -> bool {
    (1..line.len()).all(|c| f.sub(line[c], point[c]) == product(f, c, line, point))
}

fn encode(q: u64, v: &[Elem]) -> usize {
    v.iter().fold(0usize, |acc, &x| acc * q as usize + x as usize)
}

fn decode(q: u64, k: usize, mut i: usize) -> Vec<Elem> {
    let mut v = vec![0; k];
    for c in (0..k).rev() {
        v[c] = (i % q as usize) as Elem;
        i /= q as usize;
    }
    v
}

/// The bipartite graph `D(k, q)`: lines on side `U`, points on side `V`,
/// both indexed by their coordinate vectors read as base-`q` numbers.
pub fn dkq(k: usize, q: u64) -> Result<BipartiteGraph> {
    if !(2..=MAX_DKQ_K).contains(&k) {
        return Err(Error::InvalidArgument(format!("D(k,q) needs 2 <= k <= {MAX_DKQ_K}, got k = {k}")));
    }
    let side = (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if side > MAX_DKQ_SIDE as u128 {
        return Err(Error::SizeBound(format!("D({k},{q}) has q^k = {side} vertices per side")));
    }
    let f = FiniteField::of_order(q)?;
    let side = side as usize;
    let rows: Vec<Vec<usize>> = crate::par::map_collect(side, |v| {
        let point = decode(q, k, v);
        f.elements().map(|l1| encode(q, &dkq_line_through(&f, &point, l1))).collect()
    });
    let edges = rows.iter().enumerate().flat_map(|(v, ls)| ls.iter().map(move |&u| (u, v)));
    BipartiteGraph::new(side, side, edges, Family::Dkq { k: k as u64, q }.to_string())
}
