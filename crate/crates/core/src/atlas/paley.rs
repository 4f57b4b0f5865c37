use crate::algebra::FiniteField;
use crate::error::{Error, Result};
use crate::graph::GraphBuilder;
use crate::graph::Graph;
use crate::provenance::Family;

pub const MAX_PALEY_ORDER: u64 = 100_000;

/// Paley graph on `GF(q)`: `x ~ y` when `x - y` is a nonzero square.
///
/// Requires `q ≡ 1 (mod 4)` so that adjacency is symmetric. Vertices are
/// the field elements in encoding order, labelled by their integer code.
pub fn paley(q: u64) -> Result<Graph> {
    if q % 4 != 1 {
        return Err(Error::InvalidArgument(format!("Paley graphs need q ≡ 1 (mod 4), got q = {q}")));
    }
    if q > MAX_PALEY_ORDER {
        return Err(Error::SizeBound(format!("Paley order {q} exceeds {MAX_PALEY_ORDER}")));
    }
    let field = FiniteField::of_order(q)?;
    let squares = field.quadratic_residues()?;
    let n = q as usize;
    let mut b = GraphBuilder::new(n);
    for x in field.elements() {
        for &s in &squares {
            let y = field.add(x, s);
            if (x as usize) < (y as usize) {
                b.add_edge(x as usize, y as usize)?;
            }
        }
    }
    let labels = (0..n).map(|x| x.to_string()).collect();
    b.build(Family::Paley { q }.to_string()).with_labels(labels)
}
