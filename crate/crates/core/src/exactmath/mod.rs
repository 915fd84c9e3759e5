//! Exact arithmetic in Q(q) and dense linear algebra over it.

mod matrix;
mod poly;
mod scalar;

pub use matrix::{QMatrix, Rref, Solution};
pub use poly::Poly;
pub use scalar::{normalize, pow, Laurent, QScalar};
