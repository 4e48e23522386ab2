//! Exact two-phase simplex for small standard-form programs
//! `maximize c·x subject to A x = b, x >= 0`, using Bland's rule.

use num_traits::{Signed, Zero};

use super::matrix::RationalMatrix;
use super::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Rational, point: Vec<Rational> },
}

struct Tableau {
    // rows 0..m are constraints, each with rhs in the last column
    t: RationalMatrix,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, r: usize) -> &Rational {
        &self.t[(r, self.width)]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let piv = self.t[(row, col)].clone();
        for j in 0..=self.width {
            let x = &self.t[(row, j)] / &piv;
            self.t[(row, j)] = x;
        }
        for r in 0..self.t.rows() {
            if r == row || self.t[(r, col)].is_zero() {
                continue;
            }
            let f = self.t[(r, col)].clone();
            for j in 0..=self.width {
                if self.t[(row, j)].is_zero() {
                    continue;
                }
                let d = &f * &self.t[(row, j)];
                self.t[(r, j)] -= d;
            }
        }
        self.basis[row] = col;
    }

    /// Maximizes `cost` over columns `0..allowed`; returns false when unbounded.
    fn optimize(&mut self, cost: &[Rational], allowed: usize) -> bool {
        let m = self.basis.len();
        loop {
            // reduced cost of column j: cost_j - sum_r cost_{basis r} * t[r][j]
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut rc = cost[j].clone();
                for r in 0..m {
                    let a = &self.t[(r, j)];
                    if !a.is_zero() {
                        rc -= &cost[self.basis[r]] * a;
                    }
                }
                rc.is_positive()
            });
            let Some(col) = entering else {
                return true;
            };
            let mut best: Option<(Rational, usize)> = None;
            for r in 0..m {
                let a = &self.t[(r, col)];
                if a.is_positive() {
                    let ratio = self.rhs(r) / a;
                    let better = match &best {
                        None => true,
                        Some((b, br)) => ratio < *b || (ratio == *b && self.basis[r] < self.basis[*br]),
                    };
                    if better {
                        best = Some((ratio, r));
                    }
                }
            }
            let Some((_, row)) = best else {
                return false;
            };
            self.pivot(row, col);
        }
    }
}

pub fn maximize(a: &RationalMatrix, b: &[Rational], c: &[Rational]) -> LpOutcome {
    let m = a.rows();
    let n = a.cols();
    assert_eq!(b.len(), m);
    assert_eq!(c.len(), n);
    // Columns: n originals, m artificials, then rhs.
    let width = n + m;
    let mut t = RationalMatrix::zeros(m, width + 1);
    for r in 0..m {
        let flip = b[r].is_negative();
        for j in 0..n {
            t[(r, j)] = if flip { -a[(r, j)].clone() } else { a[(r, j)].clone() };
        }
        t[(r, n + r)] = Rational::from_integer(1.into());
        t[(r, width)] = if flip { -b[r].clone() } else { b[r].clone() };
    }
    let mut tab = Tableau {
        t,
        basis: (n..n + m).collect(),
        width,
    };
    let mut phase1 = vec![Rational::zero(); width];
    for x in phase1.iter_mut().skip(n) {
        *x = -Rational::from_integer(1.into());
    }
    tab.optimize(&phase1, width);
    for r in 0..m {
        if tab.basis[r] >= n && !tab.rhs(r).is_zero() {
            return LpOutcome::Infeasible;
        }
    }
    // Drive zero-valued artificials out of the basis where possible.
    for r in 0..m {
        if tab.basis[r] >= n {
            if let Some(j) = (0..n).find(|&j| !tab.t[(r, j)].is_zero()) {
                tab.pivot(r, j);
            }
        }
    }
    let mut cost = c.to_vec();
    cost.resize(width, Rational::zero());
    // Redundant rows keep an artificial basic at value zero; it never re-enters.
    if !tab.optimize(&cost, n) {
        return LpOutcome::Unbounded;
    }
    let mut point = vec![Rational::zero(); n];
    for r in 0..m {
        if tab.basis[r] < n {
            point[tab.basis[r]] = tab.rhs(r).clone();
        }
    }
    let value = point
        .iter()
        .zip(c)
        .fold(Rational::zero(), |acc, (x, w)| acc + x * w);
    LpOutcome::Optimal { value, point }
}
