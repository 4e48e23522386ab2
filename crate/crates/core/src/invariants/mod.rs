//! E₂ pages, Betti numbers and Leray filtrations of broken toric varieties, closed-form
//! predictions and consistency checks.

mod checks;
mod formulas;

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cohomology::{sheaf_cohomology, BettiVector, Engine};
use crate::complex::PolytopeComplex;
use crate::error::Result;
use crate::sheaves::moment_sheaf;

pub use checks::{
    euler_check, mayer_vietoris_check, vanishing_report, verify_vanishing, CheckItem, EulerReport,
    MayerVietorisReport, MayerVietorisRow, VanishingMode, VerifyReport,
};
pub use formulas::{
    h_vector_formula, skeletal_closed_form, skeletal_formula, ClosedFormPrediction, SkeletalPrediction,
};

/// `grid[p][q] = h^p(P_•, R^q f_* Q)` for `0 ≤ p, q ≤ n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct E2Page {
    pub grid: Vec<Vec<usize>>,
}

impl E2Page {
    /// Dimension `n` of the complex; the grid is `(n+1) × (n+1)`.
    pub fn dim(&self) -> usize {
        self.grid.len().saturating_sub(1)
    }

    pub fn get(&self, p: usize, q: usize) -> usize {
        self.grid.get(p).and_then(|row| row.get(q)).copied().unwrap_or(0)
    }

    /// Anti-diagonal sums `b_k = Σ_{p+q=k} grid[p][q]`, `k = 0..=2n`.
    pub fn betti(&self) -> BettiVector {
        if self.grid.is_empty() {
            return BettiVector::default();
        }
        let n = self.dim();
        let dims = (0..=2 * n)
            .map(|k| (0..=k.min(n)).filter(|&q| k - q <= n).map(|q| self.get(k - q, q)).sum())
            .collect();
        BettiVector { dims }
    }

    /// Entries `(p, q)` with `p < q` that are nonzero.
    pub fn lower_violations(&self) -> Vec<(usize, usize)> {
        let n = self.dim();
        let mut out = Vec::new();
        for q in 0..=n {
            for p in 0..q {
                if self.get(p, q) != 0 {
                    out.push((p, q));
                }
            }
        }
        out
    }
}

impl fmt::Display for E2Page {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        let width = self
            .grid
            .iter()
            .flatten()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1)
            .max(3);
        write!(f, "{:>5}", "q\\p")?;
        for p in 0..=n {
            write!(f, " {:>width$}", p)?;
        }
        writeln!(f)?;
        for q in (0..=n).rev() {
            write!(f, "{:>5}", q)?;
            for p in 0..=n {
                write!(f, " {:>width$}", self.get(p, q))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub fn e2_page(p: &Arc<PolytopeComplex>) -> Result<E2Page> {
    e2_page_with(p, Engine::Both)
}

pub fn e2_page_with(p: &Arc<PolytopeComplex>, engine: Engine) -> Result<E2Page> {
    if p.is_empty() {
        return Ok(E2Page::default());
    }
    let n = p.top_dim();
    let columns: Vec<BettiVector> = (0..=n)
        .into_par_iter()
        .map(|q| sheaf_cohomology(&moment_sheaf(p, q), engine))
        .collect::<Result<_>>()?;
    let grid = (0..=n)
        .map(|pdeg| columns.iter().map(|c| c.get(pdeg)).collect())
        .collect();
    Ok(E2Page { grid })
}

/// Betti numbers `b_0..b_{2n}` of the broken toric variety over `p`.
pub fn betti_broken_toric(p: &Arc<PolytopeComplex>) -> Result<BettiVector> {
    Ok(e2_page(p)?.betti())
}

/// `dims[i][k] = dim L_k H^i` for `0 ≤ i ≤ 2n`, `0 ≤ k ≤ n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationTable {
    pub dims: Vec<Vec<usize>>,
    /// `weight_labels[k]` names the weight pieces identified with `L_k`.
    pub weight_labels: Vec<String>,
}

impl FiltrationTable {
    pub fn from_e2(page: &E2Page) -> Self {
        if page.grid.is_empty() {
            return FiltrationTable::default();
        }
        let n = page.dim();
        let dims = (0..=2 * n)
            .map(|i| {
                let mut acc = 0;
                (0..=n)
                    .map(|k| {
                        if k <= i && i - k <= n {
                            acc += page.get(i - k, k);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        let weight_labels = (0..=n).map(|k| format!("W_{} = W_{} = L_{}", 2 * k, 2 * k + 1, k)).collect();
        FiltrationTable { dims, weight_labels }
    }

    pub fn total(&self, i: usize) -> usize {
        self.dims.get(i).and_then(|r| r.last()).copied().unwrap_or(0)
    }

    pub fn is_monotone(&self) -> bool {
        self.dims.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]))
    }
}

pub fn leray_weight_table(p: &Arc<PolytopeComplex>) -> Result<FiltrationTable> {
    Ok(FiltrationTable::from_e2(&e2_page(p)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{generate, Shape};

    fn arc(shape: Shape) -> Arc<PolytopeComplex> {
        Arc::new(generate(&shape).unwrap())
    }

    fn cube_skeleton() -> Arc<PolytopeComplex> {
        arc(Shape::Skeleton(Box::new(Shape::Cube(3)), 2))
    }

    #[test]
    fn necklace_page() {
        let e = e2_page(&arc(Shape::Necklace)).unwrap();
        assert_eq!(e.grid, vec![vec![1, 0], vec![1, 3]]);
        assert_eq!(e.betti().dims, vec![1, 1, 3]);
    }

    #[test]
    fn two_triangles_page() {
        let e = e2_page(&arc(Shape::TwoTriangles)).unwrap();
        assert_eq!(e.grid, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 2]]);
        assert_eq!(e.betti().dims, vec![1, 0, 1, 0, 2]);
    }

    #[test]
    fn cube_skeleton_page() {
        let e = e2_page(&cube_skeleton()).unwrap();
        assert_eq!(e.grid, vec![vec![1, 0, 0], vec![0, 3, 0], vec![1, 3, 6]]);
        assert_eq!(e.betti().dims, vec![1, 0, 4, 3, 6]);
    }

    #[test]
    fn filtrations() {
        let t = leray_weight_table(&arc(Shape::Necklace)).unwrap();
        assert_eq!(t.dims[2], vec![0, 3]);
        assert_eq!(t.weight_labels[1], "W_2 = W_3 = L_1");
        let t = leray_weight_table(&cube_skeleton()).unwrap();
        assert_eq!(t.dims[2], vec![1, 4, 4]);
        assert_eq!(t.dims[0][0], 1);
        assert!(t.is_monotone());
        assert_eq!(t.total(4), 6);
    }

    #[test]
    fn empty_complex() {
        let p = Arc::new(PolytopeComplex::empty(2));
        assert_eq!(e2_page(&p).unwrap(), E2Page::default());
        assert!(betti_broken_toric(&p).unwrap().dims.is_empty());
    }
}
