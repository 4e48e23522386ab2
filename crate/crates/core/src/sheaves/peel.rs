use std::collections::HashMap;
use std::sync::Arc;

use super::{structural_sheaf, CellSheaf};
use crate::complex::{CellId, PolytopeComplex};
use crate::error::{Error, Result};
use crate::exactla::{binomial, Subspace};

/// One facet removal `S(A_m) ⊆ S(A_{m-1}) → S_{a_m}(A_{m-1} ∩ a_m)`.
#[derive(Clone, Debug)]
pub struct PeelStep {
    /// 1-based position in the ordering.
    pub index: usize,
    pub facet: CellId,
    pub sheaf_before: CellSheaf,
    pub sheaf_after: CellSheaf,
    /// Lives on the closed facet; its cells map to ours through `facet_cells`.
    pub quotient_sheaf: CellSheaf,
    /// Cell of the polytope for each cell of the facet complex.
    pub facet_cells: Vec<CellId>,
    /// Cells where the stalk identity fails.
    pub failures: Vec<CellId>,
}

#[derive(Clone, Debug)]
pub struct PeelReport {
    pub steps: Vec<PeelStep>,
    /// Whether every step is exact on every stalk.
    pub exact: bool,
    /// The partial unions of peeled facets are not tested for contractibility.
    pub contractibility_checked: bool,
}

/// Peels the facets of a simple polytope one at a time in the given order and checks
/// that each step is a short exact sequence on every stalk.
pub fn peel_sequence(p: &Arc<PolytopeComplex>, i: usize, ordering: &[CellId]) -> Result<PeelReport> {
    p.require_simple()?;
    let top = p.single_top_cell()?;
    let n = p.cell(top).dim;
    for &a in ordering {
        if !p.cell(top).facets.iter().any(|(f, _)| *f == a) {
            return Err(Error::NotAFacet(a));
        }
    }
    let mut seen = ordering.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != ordering.len() {
        return Err(Error::Precondition("facet ordering repeats a facet".into()));
    }

    let mut steps = Vec::with_capacity(ordering.len());
    let mut before = structural_sheaf(p, i, &[])?;
    for (m, &facet) in ordering.iter().enumerate() {
        let after = structural_sheaf(p, i, &ordering[..=m])?;
        let facet_complex = Arc::new(p.subcomplex([facet]));
        let facet_cells = p.embed(&facet_complex)?;
        let local: HashMap<CellId, CellId> =
            facet_cells.iter().enumerate().map(|(l, &g)| (g, l)).collect();

        let ridges: Vec<CellId> = ordering[..m]
            .iter()
            .filter_map(|&earlier| {
                let shared: Vec<usize> = p
                    .cell(earlier)
                    .vertices
                    .iter()
                    .filter(|v| p.cell(facet).vertices.binary_search(v).is_ok())
                    .copied()
                    .collect();
                let ridge = p.find_cell(&shared)?;
                (n >= 2 && p.cell(ridge).dim == n - 2).then(|| local[&ridge])
            })
            .collect();
        let quotient = if i == 0 {
            let zero = Subspace::zero(0);
            CellSheaf::new(facet_complex.clone(), 0, vec![zero; facet_complex.num_cells()])?
        } else {
            structural_sheaf(&facet_complex, i - 1, &ridges)?
        };
        debug_assert_eq!(quotient.coeff_dim(), if i == 0 { 0 } else { binomial(p.ambient_dim(), i - 1) });

        let failures = p
            .cells()
            .iter()
            .filter(|gamma| {
                let b = before.stalk(gamma.id);
                let a = after.stalk(gamma.id);
                match local.get(&gamma.id) {
                    Some(&l) => {
                        !b.contains(a).unwrap_or(false)
                            || b.dim() != a.dim() + quotient.stalk(l).dim()
                    }
                    None => a != b,
                }
            })
            .map(|gamma| gamma.id)
            .collect();
        steps.push(PeelStep {
            index: m + 1,
            facet,
            sheaf_before: before,
            sheaf_after: after.clone(),
            quotient_sheaf: quotient,
            facet_cells,
            failures,
        });
        before = after;
    }
    let exact = steps.iter().all(|s| s.failures.is_empty());
    Ok(PeelReport {
        steps,
        exact,
        contractibility_checked: false,
    })
}
