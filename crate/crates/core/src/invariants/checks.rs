use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::formulas::h_from_f;
use super::{e2_page, E2Page};
use crate::cohomology::{sheaf_cohomology, Engine};
use crate::complex::{singular_decomposition, PolytopeComplex};
use crate::error::{Error, Result};
use crate::sheaves::moment_sheaf;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckItem {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckItem {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub items: Vec<CheckItem>,
    /// Checks that were not applicable, with the reason.
    pub notices: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|c| c.passed)
    }

    pub fn extend(&mut self, other: VerifyReport) {
        self.items.extend(other.items);
        self.notices.extend(other.notices);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VanishingMode {
    /// `grid[j][i] = 0` for `j < i`.
    Lower,
    /// Additionally, for a simple polytope, `grid[j][i] = 0` for `j > i` and
    /// `grid[i][i] = h_i`.
    ToricDiagonal,
}

pub fn verify_vanishing(p: &Arc<PolytopeComplex>, mode: VanishingMode) -> Result<VerifyReport> {
    vanishing_report(p, &e2_page(p)?, mode)
}

/// Vanishing checks against an already computed page of `p`.
pub fn vanishing_report(p: &PolytopeComplex, page: &E2Page, mode: VanishingMode) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    let bad = page.lower_violations();
    report.items.push(CheckItem::new(
        "lower vanishing",
        bad.is_empty(),
        if bad.is_empty() {
            "h^j(R^i) = 0 for all j < i".to_string()
        } else {
            format!("nonzero at (j, i) = {}", pairs(&bad))
        },
    ));
    if mode == VanishingMode::Lower {
        return Ok(report);
    }
    p.single_top_cell()?;
    if !p.is_simple()? {
        report
            .notices
            .push("polytope is not simple; diagonal vanishing and h-vector checks skipped".into());
        return Ok(report);
    }
    let n = page.dim();
    let mut upper = Vec::new();
    for i in 0..=n {
        for j in i + 1..=n {
            if page.get(j, i) != 0 {
                upper.push((j, i));
            }
        }
    }
    report.items.push(CheckItem::new(
        "upper vanishing",
        upper.is_empty(),
        if upper.is_empty() {
            "h^j(R^i) = 0 for all j > i".to_string()
        } else {
            format!("nonzero at (j, i) = {}", pairs(&upper))
        },
    ));
    let h = h_from_f(&p.f_vector());
    let diag: Vec<i64> = (0..=n).map(|i| page.get(i, i) as i64).collect();
    report.items.push(CheckItem::new(
        "diagonal equals h-vector",
        diag == h,
        format!("diagonal {:?}, h-vector {:?}", diag, h),
    ));
    Ok(report)
}

fn pairs(v: &[(usize, usize)]) -> String {
    v.iter().map(|(a, b)| format!("({a}, {b})")).collect::<Vec<_>>().join(", ")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerReport {
    pub alternating_sum: i64,
    pub vertices: usize,
    pub passed: bool,
}

/// `Σ_k (−1)^k b_k = number of vertices`.
pub fn euler_check(p: &Arc<PolytopeComplex>) -> Result<EulerReport> {
    Ok(euler_from_page(p, &e2_page(p)?))
}

pub(crate) fn euler_from_page(p: &PolytopeComplex, page: &E2Page) -> EulerReport {
    let alternating_sum = page.betti().euler_characteristic();
    let vertices = p.cells_of_dim(0).len();
    EulerReport {
        alternating_sum,
        vertices,
        passed: alternating_sum == vertices as i64,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MayerVietorisRow {
    pub degree: usize,
    pub chi_x: i64,
    pub chi_y: i64,
    pub chi_xtilde: i64,
    pub chi_ytilde: i64,
    /// `χ(X) − χ(Y) − χ(X̃) + χ(Ỹ)`.
    pub total: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MayerVietorisReport {
    pub rows: Vec<MayerVietorisRow>,
    pub passed: bool,
}

fn chi(p: &PolytopeComplex, i: usize, engine: Engine) -> Result<i64> {
    if p.is_empty() {
        return Ok(0);
    }
    let p = Arc::new(p.clone());
    Ok(sheaf_cohomology(&moment_sheaf(&p, i), engine)?.euler_characteristic())
}

/// Euler characteristics of the moment sheaves over `X`, `Y`, `X̃` and `Ỹ`, combined with
/// signs `+ − − +`.
pub fn mayer_vietoris_check(p: &PolytopeComplex, engine: Engine) -> Result<MayerVietorisReport> {
    if p.is_empty() || p.top_dim() == 0 {
        return Err(Error::Precondition("Mayer-Vietoris check needs dimension at least 1".into()));
    }
    let d = singular_decomposition(p)?;
    let mut rows = Vec::new();
    for i in 0..=p.top_dim() {
        let chi_x = chi(p, i, engine)?;
        let chi_y = chi(&d.y_complex, i, engine)?;
        let chi_xtilde = d.xtilde.iter().map(|c| chi(c, i, engine)).sum::<Result<i64>>()?;
        let chi_ytilde = d.ytilde.iter().map(|c| chi(c, i, engine)).sum::<Result<i64>>()?;
        rows.push(MayerVietorisRow {
            degree: i,
            chi_x,
            chi_y,
            chi_xtilde,
            chi_ytilde,
            total: chi_x - chi_y - chi_xtilde + chi_ytilde,
        });
    }
    let passed = rows.iter().all(|r| r.total == 0);
    Ok(MayerVietorisReport { rows, passed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{generate, Shape};

    fn arc(shape: Shape) -> Arc<PolytopeComplex> {
        Arc::new(generate(&shape).unwrap())
    }

    #[test]
    fn toric_cube() {
        let r = verify_vanishing(&arc(Shape::Cube(3)), VanishingMode::ToricDiagonal).unwrap();
        assert_eq!(r.items.len(), 3);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn pyramid_skips_simple_checks() {
        let r = verify_vanishing(&arc(Shape::SquarePyramid), VanishingMode::ToricDiagonal).unwrap();
        assert!(r.passed());
        assert_eq!(r.items.len(), 1);
        assert_eq!(r.notices.len(), 1);
    }

    #[test]
    fn toric_mode_needs_single_polytope() {
        assert!(verify_vanishing(&arc(Shape::Necklace), VanishingMode::ToricDiagonal).is_err());
        assert!(verify_vanishing(&arc(Shape::Necklace), VanishingMode::Lower).unwrap().passed());
    }

    #[test]
    fn euler() {
        for (shape, v) in [(Shape::Necklace, 3), (Shape::TwoTriangles, 4), (Shape::Cube(3), 8)] {
            let r = euler_check(&arc(shape)).unwrap();
            assert!(r.passed);
            assert_eq!(r.vertices, v);
        }
    }

    #[test]
    fn necklace_mayer_vietoris() {
        let r = mayer_vietoris_check(&arc(Shape::Necklace), Engine::Both).unwrap();
        let r0 = &r.rows[0];
        assert_eq!((r0.chi_x, r0.chi_y, r0.chi_xtilde, r0.chi_ytilde), (0, 3, 3, 6));
        assert!(r.passed);
    }

    #[test]
    fn mayer_vietoris_fixtures() {
        for shape in [
            Shape::TwoTriangles,
            Shape::Skeleton(Box::new(Shape::Cube(3)), 2),
            Shape::Cube(2),
        ] {
            let r = mayer_vietoris_check(&arc(shape.clone()), Engine::Cellular).unwrap();
            assert!(r.passed, "{shape}: {r:?}");
        }
    }
}
