//! Exact sheaf cohomology on polytope complexes and the Betti numbers, E₂ pages and
//! Leray filtrations of the broken toric varieties they describe.
//!
//! Everything is computed over Q with exact rational arithmetic.

pub mod cohomology;
pub mod complex;
pub mod document;
pub mod error;
pub mod exactla;
pub mod invariants;
pub mod sheaves;

pub use cohomology::{betti, sheaf_cohomology, BettiVector, CochainComplex, Engine};
pub use complex::{build_complex, generate, singular_decomposition, Cell, CellId, PolytopeComplex, Shape};
pub use document::ComplexDocument;
pub use error::{Error, Result};
pub use exactla::{Rational, RationalMatrix, Subspace};
pub use invariants::{betti_broken_toric, e2_page, leray_weight_table, E2Page, FiltrationTable};
pub use sheaves::{CellSheaf, constant_sheaf, moment_sheaf, structural_sheaf};
