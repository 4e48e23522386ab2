use num_traits::Zero;

use super::{require_compatible, BasisLabel, CochainComplex, InclusionCache};
use crate::error::Result;
use crate::exactla::{rat, SparseMatrix};
use crate::sheaves::CellSheaf;

/// `C^k = ⊕_{dim σ = k} F(σ)` with `d` built from incidence numbers times stalk inclusions.
pub fn cellular_complex(s: &CellSheaf) -> Result<CochainComplex> {
    require_compatible(s)?;
    let p = s.complex();
    if p.is_empty() {
        return CochainComplex::new(Vec::new(), Vec::new(), Vec::new());
    }
    let top = p.top_dim();
    let mut offset = vec![0usize; p.num_cells()];
    let mut terms = Vec::with_capacity(top + 1);
    let mut labels = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let mut total = 0;
        let mut lab = Vec::new();
        for c in p.cells_of_dim(k) {
            offset[c.id] = total;
            let d = s.stalk(c.id).dim();
            total += d;
            lab.extend((0..d).map(|v| BasisLabel {
                chain: vec![c.id],
                vector: v,
            }));
        }
        terms.push(total);
        labels.push(lab);
    }
    let mut cache = InclusionCache::new(s);
    let mut differentials = Vec::with_capacity(top);
    for k in 0..top {
        let mut triplets = Vec::new();
        for beta in p.cells_of_dim(k + 1) {
            for &(alpha, sign) in &beta.facets {
                let sign = rat(sign as i64);
                for (r, c, x) in cache.get(alpha, beta.id)? {
                    if !x.is_zero() {
                        triplets.push((offset[beta.id] + r, offset[alpha] + c, x * &sign));
                    }
                }
            }
        }
        differentials.push(SparseMatrix::from_triplets(terms[k + 1], terms[k], triplets));
    }
    CochainComplex::new(terms, differentials, labels)
}
