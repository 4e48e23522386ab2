use std::collections::BTreeSet;

use super::{CellId, PolytopeComplex};
use crate::error::{Error, Result};

/// The gluing data of a polytope complex: the closed singular locus `Y`, the disjoint
/// closed top cells `X̃`, and the preimage `Ỹ` of `Y` in `X̃`.
#[derive(Clone, Debug)]
pub struct SingularDecomposition {
    /// Cells of the closed singular locus, as ids in the original complex.
    pub singular_cells: BTreeSet<CellId>,
    pub y_complex: PolytopeComplex,
    /// One closed top cell per entry.
    pub xtilde: Vec<PolytopeComplex>,
    /// For each top cell meeting `Y`, its intersection with `Y`.
    pub ytilde: Vec<PolytopeComplex>,
}

/// Splits a complex of dimension `n >= 1` along its singular locus.
///
/// A cell is singular when it lies in a number of closed top cells other than one; in
/// dimension `n - 1` these are exactly the faces shared by several top cells or bounding
/// none. The locus is closed under taking faces.
pub fn singular_decomposition(p: &PolytopeComplex) -> Result<SingularDecomposition> {
    if p.is_empty() || p.top_dim() == 0 {
        return Err(Error::Precondition(
            "singular decomposition needs a complex of dimension at least 1".into(),
        ));
    }
    let tops: Vec<CellId> = p.top_cells().iter().map(|c| c.id).collect();
    let closures: Vec<BTreeSet<CellId>> = tops.iter().map(|&t| p.closure([t])).collect();
    let seeds: Vec<CellId> = p
        .cells()
        .iter()
        .filter(|c| closures.iter().filter(|cl| cl.contains(&c.id)).count() != 1)
        .map(|c| c.id)
        .collect();
    let singular_cells = p.closure(seeds);
    let y_complex = p.subcomplex(singular_cells.iter().copied());
    let xtilde = tops.iter().map(|&t| p.subcomplex([t])).collect();
    let ytilde = closures
        .iter()
        .map(|cl| cl.intersection(&singular_cells).copied().collect::<Vec<_>>())
        .filter(|cells| !cells.is_empty())
        .map(|cells| p.subcomplex(cells))
        .collect();
    Ok(SingularDecomposition {
        singular_cells,
        y_complex,
        xtilde,
        ytilde,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{generate, Shape};

    #[test]
    fn necklace() {
        let d = singular_decomposition(&generate(&Shape::Necklace).unwrap()).unwrap();
        assert_eq!(d.y_complex.f_vector(), vec![3]);
        assert_eq!(d.xtilde.len(), 3);
        assert!(d.xtilde.iter().all(|x| x.f_vector() == vec![2, 1]));
        // each segment meets the locus in its two endpoints
        assert_eq!(d.ytilde.len(), 3);
        assert!(d.ytilde.iter().all(|y| y.f_vector() == vec![2]));
    }

    #[test]
    fn two_triangles() {
        let d = singular_decomposition(&generate(&Shape::TwoTriangles).unwrap()).unwrap();
        assert_eq!(d.y_complex.f_vector(), vec![2, 1]);
        assert_eq!(d.xtilde.len(), 2);
        assert_eq!(d.ytilde.len(), 2);
        assert!(d.ytilde.iter().all(|y| y.f_vector() == vec![2, 1]));
    }

    #[test]
    fn solid_square_has_no_locus() {
        let d = singular_decomposition(&generate(&Shape::Cube(2)).unwrap()).unwrap();
        assert!(d.y_complex.is_empty());
        assert_eq!(d.xtilde.len(), 1);
        assert!(d.ytilde.is_empty());
    }

    #[test]
    fn rejects_points() {
        assert!(singular_decomposition(&generate(&Shape::Cube(0)).unwrap()).is_err());
    }
}
