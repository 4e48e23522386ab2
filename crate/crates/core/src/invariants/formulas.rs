use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{e2_page, E2Page};
use crate::complex::PolytopeComplex;
use crate::error::{Error, Result};
use crate::exactla::binomial;

fn sgn(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn c(n: usize, k: usize) -> i64 {
    binomial(n, k) as i64
}

/// `h_i = Σ_{j=i}^{n} (−1)^{i−j} C(j,i) f_j` for a simple polytope, top cell included.
pub fn h_vector_formula(p: &PolytopeComplex) -> Result<Vec<i64>> {
    p.require_simple()?;
    Ok(h_from_f(&p.f_vector()))
}

pub(crate) fn h_from_f(f: &[usize]) -> Vec<i64> {
    let n = f.len() - 1;
    (0..=n)
        .map(|i| {
            (i..=n)
                .map(|j| sgn(i as i64 - j as i64) * c(j, i) * f[j] as i64)
                .sum()
        })
        .collect()
}

/// Predicted E₂ grid of the `n`-skeleton of a solid polytope `P'`. Entries are indexed
/// `[p][q]` as in [`E2Page`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeletalPrediction {
    pub n: usize,
    pub parent_dim: usize,
    /// From the cohomology of `P'` computed by the engine.
    pub general: Vec<Vec<i64>>,
    /// From the h-vector of `P'`; present only when `P'` is simple.
    pub simple: Option<Vec<Vec<i64>>>,
}

impl SkeletalPrediction {
    pub fn matches(&self, page: &E2Page) -> bool {
        let same = |g: &Vec<Vec<i64>>| {
            g.len() == page.grid.len()
                && g.iter()
                    .zip(&page.grid)
                    .all(|(a, b)| a.len() == b.len() && a.iter().zip(b).all(|(x, y)| *x == *y as i64))
        };
        same(&self.general) && self.simple.as_ref().is_none_or(same)
    }
}

pub fn skeletal_formula(parent: &Arc<PolytopeComplex>, n: usize) -> Result<SkeletalPrediction> {
    let top = parent.single_top_cell()?;
    let np = parent.cell(top).dim;
    if n >= np {
        return Err(Error::BadParameter(format!(
            "skeleton dimension {n} must be below the polytope dimension {np}"
        )));
    }
    let f = parent.f_vector();
    let solid = e2_page(parent)?;
    let tail = |i: usize| -> i64 {
        (n + 1..=np)
            .map(|l| sgn((n + l + 1) as i64) * c(l, i) * f[l] as i64)
            .sum()
    };

    let mut general: Vec<Vec<i64>> = (0..n)
        .map(|j| (0..=n).map(|i| solid.get(j, i) as i64).collect())
        .collect();
    general.push(
        (0..=n)
            .map(|i| {
                let upper: i64 = (n..=np).map(|l| sgn((n + l) as i64) * solid.get(l, i) as i64).sum();
                upper + tail(i)
            })
            .collect(),
    );

    let simple = if parent.is_simple()? {
        let h = h_from_f(&f);
        let mut g = vec![vec![0i64; n + 1]; n + 1];
        for (i, row) in g.iter_mut().enumerate().take(n) {
            row[i] = h[i];
        }
        g[n] = (0..=n).map(tail).collect();
        g[n][n] += h[n];
        Some(g)
    } else {
        None
    };
    Ok(SkeletalPrediction {
        n,
        parent_dim: np,
        general,
        simple,
    })
}

/// Closed-form Betti numbers of the codimension-one skeleton of a simple polytope,
/// evaluated with the middle sign `(−1)^{n+1−i}` and, for comparison, `(−1)^{n+1−2i}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormPrediction {
    pub n: usize,
    pub corrected: Vec<i64>,
    pub printed_sign: Vec<i64>,
    /// Degrees where the two sign conventions disagree.
    pub sign_discrepancies: Vec<usize>,
}

pub fn skeletal_closed_form(parent: &PolytopeComplex) -> Result<ClosedFormPrediction> {
    parent.require_simple()?;
    let top = parent.single_top_cell()?;
    let dim = parent.cell(top).dim;
    if dim == 0 {
        return Err(Error::BadParameter("needs a polytope of dimension at least 1".into()));
    }
    let n = dim - 1;
    let f = parent.f_vector();
    let even_term = |i: usize, exponent: i64| -> i64 {
        let s: i64 = (i..=n).map(|k| sgn(i as i64 - k as i64) * c(k, i) * f[k] as i64).sum();
        sgn(exponent) * c(n + 1, i) + s
    };
    let eval = |printed: bool| -> Vec<i64> {
        (0..=2 * n)
            .map(|j| {
                let i = j / 2;
                let exponent = |i: usize| {
                    if printed {
                        (n + 1) as i64 - 2 * i as i64
                    } else {
                        (n + 1 - i) as i64
                    }
                };
                if j < n {
                    if j % 2 == 0 {
                        even_term(i, exponent(i))
                    } else {
                        0
                    }
                } else if j % 2 == 1 {
                    c(n + 1, j - n)
                } else {
                    c(n + 1, j - n) + even_term(i, exponent(i))
                }
            })
            .collect()
    };
    let corrected = eval(false);
    let printed_sign = eval(true);
    let sign_discrepancies = (0..corrected.len()).filter(|&j| corrected[j] != printed_sign[j]).collect();
    Ok(ClosedFormPrediction {
        n,
        corrected,
        printed_sign,
        sign_discrepancies,
    })
}
