use std::collections::HashMap;

use num_traits::{One, Zero};

use super::{require_compatible, BasisLabel, CochainComplex, InclusionCache};
use crate::complex::CellId;
use crate::error::Result;
use crate::exactla::{Rational, SparseMatrix};
use crate::sheaves::CellSheaf;

/// Cochains on strict chains `γ0 < … < γk` of the face poset with values in `F(γk)`.
pub fn bar_complex(s: &CellSheaf) -> Result<CochainComplex> {
    require_compatible(s)?;
    let p = s.complex();
    if p.is_empty() {
        return CochainComplex::new(Vec::new(), Vec::new(), Vec::new());
    }
    let top = p.top_dim();
    let n = p.num_cells();

    let mut above: Vec<Vec<CellId>> = vec![Vec::new(); n];
    for c in p.cells() {
        for f in p.closure([c.id]) {
            if f != c.id {
                above[f].push(c.id);
            }
        }
    }
    for a in &mut above {
        a.sort_unstable();
    }

    let mut chains: Vec<Vec<Vec<CellId>>> = vec![Vec::new(); top + 1];
    let mut stack: Vec<Vec<CellId>> = (0..n).rev().map(|c| vec![c]).collect();
    while let Some(chain) = stack.pop() {
        let last = *chain.last().unwrap();
        for &next in above[last].iter().rev() {
            let mut longer = chain.clone();
            longer.push(next);
            stack.push(longer);
        }
        chains[chain.len() - 1].push(chain);
    }
    for level in &mut chains {
        level.sort_unstable();
    }

    let mut offsets: Vec<HashMap<&[CellId], usize>> = Vec::with_capacity(top + 1);
    let mut terms = Vec::with_capacity(top + 1);
    let mut labels = Vec::with_capacity(top + 1);
    for level in &chains {
        let mut map = HashMap::with_capacity(level.len());
        let mut total = 0;
        let mut lab = Vec::new();
        for chain in level {
            let d = s.stalk(*chain.last().unwrap()).dim();
            map.insert(chain.as_slice(), total);
            lab.extend((0..d).map(|v| BasisLabel {
                chain: chain.clone(),
                vector: v,
            }));
            total += d;
        }
        offsets.push(map);
        terms.push(total);
        labels.push(lab);
    }

    let mut cache = InclusionCache::new(s);
    let mut differentials = Vec::with_capacity(top);
    for k in 0..top {
        let mut triplets: Vec<(usize, usize, Rational)> = Vec::new();
        for chain in &chains[k + 1] {
            let last = chain[k + 1];
            let dim = s.stalk(last).dim();
            if dim == 0 {
                continue;
            }
            let row0 = offsets[k + 1][chain.as_slice()];
            let mut face = Vec::with_capacity(k + 1);
            for t in 0..=k {
                face.clear();
                face.extend(chain.iter().enumerate().filter(|&(u, _)| u != t).map(|(_, &c)| c));
                let col0 = offsets[k][face.as_slice()];
                let sign = if t % 2 == 0 { Rational::one() } else { -Rational::one() };
                triplets.extend((0..dim).map(|v| (row0 + v, col0 + v, sign.clone())));
            }
            let col0 = offsets[k][&chain[..=k]];
            let sign = if (k + 1) % 2 == 0 { Rational::one() } else { -Rational::one() };
            for (r, c, x) in cache.get(chain[k], last)? {
                if !x.is_zero() {
                    triplets.push((row0 + r, col0 + c, x * &sign));
                }
            }
        }
        differentials.push(SparseMatrix::from_triplets(terms[k + 1], terms[k], triplets));
    }
    CochainComplex::new(terms, differentials, labels)
}
