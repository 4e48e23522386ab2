//! Sheaf cohomology of cell sheaves by two independent routes: the signed cellular
//! cochain complex and the chain (bar) complex of the face poset.

mod bar;
mod cellular;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::CellId;
use crate::error::{Error, Result};
use crate::exactla::{Rational, SparseMatrix, Subspace};
use crate::sheaves::{check_cell_compatibility, CellSheaf};

pub use bar::bar_complex;
pub use cellular::cellular_complex;

/// Names one basis vector of a cochain group: a cell (or chain of cells) and an index into
/// the canonical basis of the stalk it carries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisLabel {
    pub chain: Vec<CellId>,
    pub vector: usize,
}

/// Finite cochain complex `C^0 → C^1 → … → C^top` of rational vector spaces.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    pub terms: Vec<usize>,
    /// `differentials[k]` maps `C^k` to `C^{k+1}`.
    pub differentials: Vec<SparseMatrix>,
    pub basis_labels: Vec<Vec<BasisLabel>>,
}

impl CochainComplex {
    pub(crate) fn new(
        terms: Vec<usize>,
        differentials: Vec<SparseMatrix>,
        basis_labels: Vec<Vec<BasisLabel>>,
    ) -> Result<Self> {
        for (k, d) in differentials.iter().enumerate() {
            assert_eq!((d.rows(), d.cols()), (terms[k + 1], terms[k]), "differential shape");
        }
        for k in 1..differentials.len() {
            if !differentials[k].mul(&differentials[k - 1]).is_zero() {
                return Err(Error::NotAComplex(k - 1));
            }
        }
        Ok(CochainComplex {
            terms,
            differentials,
            basis_labels,
        })
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.terms)
    }
}

/// Cohomology dimensions `h^0, h^1, …`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BettiVector {
    pub dims: Vec<usize>,
}

impl BettiVector {
    pub fn get(&self, k: usize) -> usize {
        self.dims.get(k).copied().unwrap_or(0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.dims)
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub(crate) fn alternating_sum(xs: &[usize]) -> i64 {
    xs.iter()
        .enumerate()
        .map(|(k, &x)| if k % 2 == 0 { x as i64 } else { -(x as i64) })
        .sum()
}

/// `h^k = dim ker d^k − rank d^{k−1}`.
pub fn betti(c: &CochainComplex) -> BettiVector {
    let ranks: Vec<usize> = c.differentials.par_iter().map(SparseMatrix::rank).collect();
    let dims = (0..c.terms.len())
        .map(|k| {
            let out = ranks.get(k).copied().unwrap_or(0);
            let inc = if k == 0 { 0 } else { ranks[k - 1] };
            c.terms[k] - out - inc
        })
        .collect();
    BettiVector { dims }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Cellular,
    Bar,
    #[default]
    Both,
}

impl FromStr for Engine {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "cellular" => Ok(Engine::Cellular),
            "bar" => Ok(Engine::Bar),
            "both" => Ok(Engine::Both),
            other => Err(format!("unknown engine `{other}` (expected cellular, bar or both)")),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Cellular => "cellular",
            Engine::Bar => "bar",
            Engine::Both => "both",
        })
    }
}

/// Cohomology of `s` on its complex. With [`Engine::Both`] the two routes must agree.
pub fn sheaf_cohomology(s: &CellSheaf, engine: Engine) -> Result<BettiVector> {
    match engine {
        Engine::Cellular => Ok(betti(&cellular_complex(s)?)),
        Engine::Bar => Ok(betti(&bar_complex(s)?)),
        Engine::Both => {
            let (cellular, bar) = rayon::join(
                || cellular_complex(s).map(|c| betti(&c)),
                || bar_complex(s).map(|c| betti(&c)),
            );
            let (cellular, bar) = (cellular?, bar?);
            if cellular != bar {
                return Err(Error::EngineDisagreement {
                    cellular: cellular.dims,
                    bar: bar.dims,
                });
            }
            Ok(cellular)
        }
    }
}

pub(crate) fn require_compatible(s: &CellSheaf) -> Result<()> {
    match check_cell_compatibility(s).violations.first() {
        Some(&(face, coface)) => Err(Error::Incompatible { face, coface }),
        None => Ok(()),
    }
}

pub(crate) type Block = Vec<(usize, usize, Rational)>;

/// Triplets `(row, col, value)` of the inclusion `src ↪ dst` in canonical stalk bases.
pub(crate) fn inclusion_entries(src: &Subspace, dst: &Subspace) -> Option<Block> {
    let mut out = Vec::new();
    for c in 0..src.dim() {
        let coords = dst.coordinates(src.basis_vector(c))?;
        for (r, x) in coords.into_iter().enumerate() {
            out.push((r, c, x));
        }
    }
    Some(out)
}

/// Memoized inclusion blocks keyed by `(face, coface)`.
pub(crate) struct InclusionCache<'a> {
    sheaf: &'a CellSheaf,
    blocks: HashMap<(CellId, CellId), Block>,
}

impl<'a> InclusionCache<'a> {
    pub(crate) fn new(sheaf: &'a CellSheaf) -> Self {
        InclusionCache {
            sheaf,
            blocks: HashMap::new(),
        }
    }

    pub(crate) fn get(&mut self, face: CellId, coface: CellId) -> Result<&[(usize, usize, Rational)]> {
        if !self.blocks.contains_key(&(face, coface)) {
            let block = inclusion_entries(self.sheaf.stalk(face), self.sheaf.stalk(coface))
                .ok_or(Error::Incompatible { face, coface })?;
            self.blocks.insert((face, coface), block);
        }
        Ok(&self.blocks[&(face, coface)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::RationalMatrix;

    #[test]
    fn betti_of_single_term() {
        let c = CochainComplex::new(vec![3], vec![], vec![vec![]]).unwrap();
        assert_eq!(betti(&c).dims, vec![3]);
    }

    #[test]
    fn rejects_non_complex() {
        let d0 = SparseMatrix::from_dense(&RationalMatrix::from_i64(&[&[1]]));
        let d1 = SparseMatrix::from_dense(&RationalMatrix::from_i64(&[&[1]]));
        let r = CochainComplex::new(vec![1, 1, 1], vec![d0, d1], vec![vec![], vec![], vec![]]);
        assert!(matches!(r, Err(Error::NotAComplex(0))));
    }

    #[test]
    fn engine_parsing() {
        assert_eq!("bar".parse::<Engine>().unwrap(), Engine::Bar);
        assert!("x".parse::<Engine>().is_err());
        assert_eq!(Engine::default(), Engine::Both);
    }
}
