use std::collections::HashMap;

use num_traits::Zero;

use super::matrix::RationalMatrix;
use super::rational::Rational;

/// Column-compressed rational matrix. Each column holds `(row, value)` pairs sorted by row,
/// with no explicit zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, Rational)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    /// Assembles from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Self {
        let mut columns: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); cols];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet out of bounds");
            if !v.is_zero() {
                columns[c].push((r, v));
            }
        }
        for col in &mut columns {
            col.sort_by_key(|(r, _)| *r);
            let mut merged: Vec<(usize, Rational)> = Vec::with_capacity(col.len());
            for (r, v) in col.drain(..) {
                match merged.last_mut() {
                    Some((lr, lv)) if *lr == r => *lv += v,
                    _ => merged.push((r, v)),
                }
            }
            merged.retain(|(_, v)| !v.is_zero());
            *col = merged;
        }
        SparseMatrix {
            rows,
            cols,
            columns,
        }
    }

    pub fn from_dense(m: &RationalMatrix) -> Self {
        let mut triplets = Vec::new();
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                if !m[(r, c)].is_zero() {
                    triplets.push((r, c, m[(r, c)].clone()));
                }
            }
        }
        Self::from_triplets(m.rows(), m.cols(), triplets)
    }

    pub fn to_dense(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.rows, self.cols);
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                m[(*r, c)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn column(&self, c: usize) -> &[(usize, Rational)] {
        &self.columns[c]
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut triplets = Vec::new();
        for (c, col) in other.columns.iter().enumerate() {
            let mut acc: HashMap<usize, Rational> = HashMap::new();
            for (k, b) in col {
                for (r, a) in &self.columns[*k] {
                    *acc.entry(*r).or_insert_with(Rational::zero) += a * b;
                }
            }
            triplets.extend(acc.into_iter().map(|(r, v)| (r, c, v)));
        }
        Self::from_triplets(self.rows, other.cols, triplets)
    }

    /// Rank over Q by left-to-right column reduction on the lowest nonzero row.
    pub fn rank(&self) -> usize {
        // pivot row -> reduced column owning it
        let mut owner: HashMap<usize, Vec<(usize, Rational)>> = HashMap::new();
        let mut rank = 0;
        for col in &self.columns {
            let mut col = col.clone();
            while let Some((low, lv)) = col.last().cloned() {
                let Some(piv) = owner.get(&low) else {
                    break;
                };
                let factor = lv / &piv.last().unwrap().1;
                col = axpy(&col, piv, &factor);
            }
            if let Some((low, _)) = col.last() {
                owner.insert(*low, col);
                rank += 1;
            }
        }
        rank
    }
}

/// `x - factor * y` for sorted sparse vectors.
fn axpy(x: &[(usize, Rational)], y: &[(usize, Rational)], factor: &Rational) -> Vec<(usize, Rational)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i].clone());
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(factor * &y[j].1)));
            j += 1;
        } else {
            let v = &x[i].1 - factor * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
