//! Finite fields `GF(p^k)` and point sets of projective spaces over them.

mod field;
mod projective;

pub use field::{is_prime, prime_power, Elem, FiniteField};
pub use projective::{projective_points, ProjectivePoint, ProjectiveSpace};
