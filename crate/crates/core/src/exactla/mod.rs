//! Exact linear algebra over Q.

pub mod lp;
mod matrix;
pub mod rational;
mod sparse;
mod subspace;

pub use matrix::{Echelon, RationalMatrix};
pub use rational::{binomial, format_rational, parse_rational, rat, ratio, Rational};
pub use sparse::SparseMatrix;
pub use subspace::{format_vector, kernel_basis, wedge_labels, Subspace};

/// Rank over Q.
pub fn rank(m: &RationalMatrix) -> usize {
    m.rank()
}
