//! Cell-compatible sheaves, realized as monotone assignments of subspaces of a fixed
//! coefficient space Q^M to the cells of a complex. Generization maps are the inclusions.

mod peel;

use std::sync::Arc;

use crate::complex::{CellId, PolytopeComplex};
use crate::error::{Error, Result};
use crate::exactla::{binomial, Subspace};

pub use peel::{peel_sequence, PeelReport, PeelStep};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellSheaf {
    complex: Arc<PolytopeComplex>,
    coeff_dim: usize,
    stalks: Vec<Subspace>,
}

impl CellSheaf {
    /// Wraps an explicit stalk table. Compatibility is not checked here; see
    /// [`check_cell_compatibility`].
    pub fn new(complex: Arc<PolytopeComplex>, coeff_dim: usize, stalks: Vec<Subspace>) -> Result<Self> {
        if stalks.len() != complex.num_cells() {
            return Err(Error::Precondition(format!(
                "{} stalks for {} cells",
                stalks.len(),
                complex.num_cells()
            )));
        }
        if let Some(s) = stalks.iter().find(|s| s.ambient_dim() != coeff_dim) {
            return Err(Error::DimensionMismatch {
                left: s.ambient_dim(),
                right: coeff_dim,
            });
        }
        Ok(CellSheaf {
            complex,
            coeff_dim,
            stalks,
        })
    }

    pub fn complex(&self) -> &Arc<PolytopeComplex> {
        &self.complex
    }

    pub fn coeff_dim(&self) -> usize {
        self.coeff_dim
    }

    pub fn stalk(&self, cell: CellId) -> &Subspace {
        &self.stalks[cell]
    }

    pub fn stalks(&self) -> &[Subspace] {
        &self.stalks
    }

    pub fn is_zero(&self) -> bool {
        self.stalks.iter().all(Subspace::is_zero)
    }
}

/// Every stalk is all of Q^m.
pub fn constant_sheaf(p: &Arc<PolytopeComplex>, m: usize) -> CellSheaf {
    CellSheaf {
        complex: p.clone(),
        coeff_dim: m,
        stalks: vec![Subspace::full(m); p.num_cells()],
    }
}

/// The i-th higher direct image of the constant sheaf: the stalk on a cell is the
/// i-th exterior power of the cell's direction space, inside `⋀^i Q^N`.
pub fn moment_sheaf(p: &Arc<PolytopeComplex>, i: usize) -> CellSheaf {
    CellSheaf {
        complex: p.clone(),
        coeff_dim: binomial(p.ambient_dim(), i),
        stalks: p.cells().iter().map(|c| c.direction.exterior_power(i)).collect(),
    }
}

/// Subsheaf of the constant sheaf `⋀^i D(P)` on a single polytope `P`, cut down on the
/// closure of each facet in `facets` by that facet's direction hyperplane.
pub fn structural_sheaf(p: &Arc<PolytopeComplex>, i: usize, facets: &[CellId]) -> Result<CellSheaf> {
    let top = p.single_top_cell()?;
    let top_cell = p.cell(top);
    for &a in facets {
        if !top_cell.facets.iter().any(|(f, _)| *f == a) {
            return Err(Error::NotAFacet(a));
        }
    }
    let stalks = p
        .cells()
        .iter()
        .map(|gamma| {
            let mut space = top_cell.direction.clone();
            for &a in facets {
                if p.is_face(gamma.id, a) {
                    space = space
                        .intersect(&p.cell(a).direction)
                        .expect("direction spaces share the ambient space");
                }
            }
            space.exterior_power(i)
        })
        .collect();
    Ok(CellSheaf {
        complex: p.clone(),
        coeff_dim: binomial(p.ambient_dim(), i),
        stalks,
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CompatibilityReport {
    /// `(face, coface)` pairs whose stalks are not nested.
    pub violations: Vec<(CellId, CellId)>,
}

impl CompatibilityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_cell_compatibility(s: &CellSheaf) -> CompatibilityReport {
    let p = s.complex();
    let mut violations = Vec::new();
    for beta in p.cells() {
        for &(alpha, _) in &beta.facets {
            let ok = s.stalks[beta.id]
                .contains(&s.stalks[alpha])
                .expect("stalks share the coefficient space");
            if !ok {
                violations.push((alpha, beta.id));
            }
        }
    }
    violations.sort_unstable();
    CompatibilityReport { violations }
}

/// Copies stalks onto the cells of `sub`, matched by their point sets.
pub fn restrict_sheaf(s: &CellSheaf, sub: &Arc<PolytopeComplex>) -> Result<CellSheaf> {
    let map = s.complex.embed(sub)?;
    Ok(CellSheaf {
        complex: sub.clone(),
        coeff_dim: s.coeff_dim,
        stalks: map.iter().map(|&c| s.stalks[c].clone()).collect(),
    })
}
