use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};

use super::matrix::RationalMatrix;
use super::rational::{binomial, format_rational, Rational};
use crate::error::{Error, Result};

/// A linear subspace of Q^M, held as the reduced row-echelon form of a basis.
///
/// Two subspaces compare equal exactly when they are the same set of vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: RationalMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: RationalMatrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::from_matrix(&RationalMatrix::identity(ambient_dim))
    }

    /// Span of the rows of `m`.
    pub fn from_matrix(m: &RationalMatrix) -> Self {
        let e = m.echelon();
        Subspace {
            ambient_dim: m.cols(),
            basis: e.matrix,
            pivots: e.pivots,
        }
    }

    pub fn span(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Self {
        Self::from_matrix(&RationalMatrix::from_rows(ambient_dim, vectors))
    }

    /// Span of standard basis vectors, 0-based indices.
    pub fn coordinate(ambient_dim: usize, axes: &[usize]) -> Self {
        let rows = axes
            .iter()
            .map(|&a| {
                let mut v = vec![Rational::zero(); ambient_dim];
                v[a] = Rational::one();
                v
            })
            .collect();
        Self::span(ambient_dim, rows)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &RationalMatrix {
        &self.basis
    }

    pub fn basis_vector(&self, k: usize) -> &[Rational] {
        self.basis.row(k)
    }

    /// Coordinates of `v` in the canonical basis, or `None` when `v` is not in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient_dim);
        // In reduced echelon form the coefficient of row r is v at that row's pivot.
        let coeffs: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (r, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (x, b) in residual.iter_mut().zip(self.basis.row(r)) {
                if !b.is_zero() {
                    *x -= c * b;
                }
            }
        }
        residual.iter().all(Zero::is_zero).then_some(coeffs)
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    /// True iff `other` is a subspace of `self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.dim() <= self.dim()
            && (0..other.dim()).all(|k| self.contains_vector(other.basis.row(k))))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Self::from_matrix(&self.basis.vstack(&other.basis)))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        // U ∩ V = (U^⊥ + V^⊥)^⊥ with ⊥ the annihilator under the standard pairing.
        let ann = self.annihilator().sum(&other.annihilator())?;
        Ok(ann.annihilator())
    }

    /// Vectors pairing to zero with every vector of `self`.
    pub fn annihilator(&self) -> Subspace {
        kernel_basis(&self.basis)
    }

    /// `⋀^i` of this subspace inside `⋀^i Q^M`, whose coordinates are indexed by the
    /// lexicographically ordered `i`-subsets of `0..M`.
    pub fn exterior_power(&self, i: usize) -> Subspace {
        let m = self.ambient_dim;
        let target = binomial(m, i);
        if i > self.dim() {
            return Subspace::zero(target);
        }
        let col_sets: Vec<Vec<usize>> = (0..m).combinations(i).collect();
        let rows = (0..self.dim())
            .combinations(i)
            .map(|row_set| {
                col_sets
                    .iter()
                    .map(|cols| self.basis.select(&row_set, cols).determinant())
                    .collect()
            })
            .collect();
        Subspace::span(target, rows)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        Ok(())
    }
}

/// Kernel of `m` (as a map Q^cols -> Q^rows) in canonical form.
pub fn kernel_basis(m: &RationalMatrix) -> Subspace {
    let n = m.cols();
    let e = m.echelon();
    let mut is_pivot = vec![false; n];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    let vectors = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|free| {
            let mut v = vec![Rational::zero(); n];
            v[free] = Rational::one();
            for (r, &p) in e.pivots.iter().enumerate() {
                v[p] = -e.matrix[(r, free)].clone();
            }
            v
        })
        .collect();
    Subspace::span(n, vectors)
}

/// Renders a vector as a combination of `e1..eM` (or wedge labels when `labels` is given).
pub fn format_vector(v: &[Rational], labels: &[String]) -> String {
    let mut out = String::new();
    for (x, label) in v.iter().zip(labels) {
        if x.is_zero() {
            continue;
        }
        let neg = x < &Rational::zero();
        let mag = if neg { -x.clone() } else { x.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            if mag.is_integer() {
                out.push_str(&format_rational(&mag));
            } else {
                out.push_str(&format!("({})", format_rational(&mag)));
            }
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Labels `e1, e2, ...` for degree 1, `e1^e2, ...` for wedge coordinates of degree `i`.
pub fn wedge_labels(base_dim: usize, i: usize) -> Vec<String> {
    if i == 0 {
        return vec!["1".to_string()];
    }
    (1..=base_dim)
        .combinations(i)
        .map(|s| s.iter().map(|k| format!("e{k}")).join("^"))
        .collect()
}

impl Subspace {
    /// `⟨e1 - e2⟩`-style rendering; `0` for the zero space.
    pub fn render(&self, labels: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = (0..self.dim())
            .map(|k| format_vector(self.basis.row(k), labels))
            .collect();
        format!("⟨{}⟩", parts.join(", "))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = (1..=self.ambient_dim).map(|k| format!("x{k}")).collect();
        write!(f, "{} in Q^{}", self.render(&labels), self.ambient_dim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rational::rat;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&RationalMatrix::identity(2)).is_zero());
        let k = kernel_basis(&RationalMatrix::from_i64(&[&[1, 1]]));
        assert_eq!(k, Subspace::span(2, vec![v(&[1, -1])]));
        assert_eq!(kernel_basis(&RationalMatrix::zeros(2, 3)), Subspace::full(3));
    }

    #[test]
    fn intersections() {
        let a = Subspace::coordinate(3, &[0, 1]);
        let b = Subspace::coordinate(3, &[1, 2]);
        assert_eq!(a.intersect(&b).unwrap(), Subspace::coordinate(3, &[1]));
        assert_eq!(a.intersect(&a).unwrap(), a);
        let x = Subspace::coordinate(2, &[0]);
        let y = Subspace::coordinate(2, &[1]);
        assert!(x.intersect(&y).unwrap().is_zero());
        assert!(matches!(
            x.intersect(&a),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn containment() {
        let a = Subspace::coordinate(2, &[0, 1]);
        let diag = Subspace::span(2, vec![v(&[1, 1])]);
        assert!(a.contains(&diag).unwrap());
        let x = Subspace::coordinate(2, &[0]);
        let y = Subspace::coordinate(2, &[1]);
        assert!(!x.contains(&y).unwrap());
        assert!(y.contains(&Subspace::zero(2)).unwrap());
        assert!(x.contains(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn exterior_powers() {
        let u = Subspace::coordinate(3, &[0, 1]);
        let w = u.exterior_power(2);
        assert_eq!(w.ambient_dim(), 3);
        // coordinates ordered {0,1}, {0,2}, {1,2}
        assert_eq!(w, Subspace::span(3, vec![v(&[1, 0, 0])]));
        assert_eq!(u.exterior_power(1), u);
        assert_eq!(u.exterior_power(0), Subspace::full(1));
        assert!(u.exterior_power(3).is_zero());
        assert_eq!(u.exterior_power(3).ambient_dim(), 1);

        // e1+e2, e1-e2 wedge to -2 e1^e2, which spans all of ⋀²Q².
        let skew = Subspace::span(2, vec![v(&[1, 1]), v(&[1, -1])]);
        let m = RationalMatrix::from_i64(&[&[1, 1], &[1, -1]]);
        assert_eq!(m.determinant(), rat(-2));
        assert_eq!(skew.exterior_power(2), Subspace::full(1));
    }

    #[test]
    fn canonical_form_is_basis_independent() {
        let a = Subspace::span(3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = Subspace::span(3, vec![v(&[1, 2, 1]), v(&[2, 1, -1]), v(&[3, 3, 0])]);
        assert_eq!(a, b);
        assert_eq!(format!("{:?}", a), format!("{:?}", b));
    }

    #[test]
    fn rendering() {
        let labels = wedge_labels(2, 1);
        assert_eq!(Subspace::span(2, vec![v(&[1, -1])]).render(&labels), "⟨e1 - e2⟩");
        assert_eq!(Subspace::coordinate(2, &[0, 1]).render(&labels), "⟨e1, e2⟩");
        assert_eq!(Subspace::zero(2).render(&labels), "0");
        assert_eq!(wedge_labels(3, 2), vec!["e1^e2", "e1^e3", "e2^e3"]);
    }
}
