use std::fmt;

use super::{build_complex, Point, PolytopeComplex};
use crate::error::{Error, Result};
use crate::exactla::{rat, Rational};

/// Standard complexes used as fixtures and by the `generate` command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    /// Convex hull of `0, e1, ..., en`.
    Simplex(usize),
    /// `{0,1}^n`.
    Cube(usize),
    /// Convex hull of `±e1, ..., ±en`.
    CrossPolytope(usize),
    /// A convex k-gon with rational vertices. For k = 3 and 4 this is the standard
    /// triangle and the unit square; otherwise consecutive points `(t, t²)` on a parabola.
    Polygon(usize),
    /// Square pyramid over `[0,2]²` with apex `(1,1,1)`. Not simple.
    SquarePyramid,
    /// Boundary of the standard triangle: three segments around a circle.
    Necklace,
    /// Unit square cut along the anti-diagonal into two triangles.
    TwoTriangles,
    Product(Box<Shape>, Box<Shape>),
    Skeleton(Box<Shape>, usize),
    Boundary(Box<Shape>),
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Simplex(n) => write!(f, "simplex({n})"),
            Shape::Cube(n) => write!(f, "cube({n})"),
            Shape::CrossPolytope(n) => write!(f, "cross_polytope({n})"),
            Shape::Polygon(k) => write!(f, "polygon({k})"),
            Shape::SquarePyramid => write!(f, "pyramid"),
            Shape::Necklace => write!(f, "example(2.6)"),
            Shape::TwoTriangles => write!(f, "example(2.7)"),
            Shape::Product(a, b) => write!(f, "product({a}, {b})"),
            Shape::Skeleton(a, k) => write!(f, "skeleton({a}, {k})"),
            Shape::Boundary(a) => write!(f, "boundary({a})"),
        }
    }
}

fn int_points(raw: &[&[i64]]) -> Vec<Point> {
    raw.iter().map(|p| p.iter().map(|&x| rat(x)).collect()).collect()
}

fn single(ambient: usize, vertices: Vec<Point>) -> Result<PolytopeComplex> {
    let all = (0..vertices.len()).collect();
    build_complex(ambient, vertices, vec![all])
}

pub fn generate(shape: &Shape) -> Result<PolytopeComplex> {
    match shape {
        Shape::Simplex(n) => {
            let n = *n;
            let mut vs = vec![vec![rat(0); n]];
            for i in 0..n {
                let mut e = vec![rat(0); n];
                e[i] = rat(1);
                vs.push(e);
            }
            single(n, vs)
        }
        Shape::Cube(n) => {
            let n = *n;
            if n > 8 {
                return Err(Error::BadParameter(format!("cube({n}) is too large")));
            }
            let vs = (0..1usize << n)
                .map(|bits| {
                    (0..n)
                        .map(|i| rat(((bits >> (n - 1 - i)) & 1) as i64))
                        .collect()
                })
                .collect();
            single(n, vs)
        }
        Shape::CrossPolytope(n) => {
            let n = *n;
            if n == 0 {
                return Err(Error::BadParameter("cross_polytope needs n >= 1".into()));
            }
            let mut vs = Vec::new();
            for i in 0..n {
                for s in [1, -1] {
                    let mut e = vec![rat(0); n];
                    e[i] = rat(s);
                    vs.push(e);
                }
            }
            single(n, vs)
        }
        Shape::Polygon(k) => {
            let vs = match *k {
                0..=2 => return Err(Error::BadParameter(format!("polygon needs k >= 3, got {k}"))),
                3 => int_points(&[&[0, 0], &[1, 0], &[0, 1]]),
                4 => int_points(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]),
                k => (0..k as i64).map(|t| vec![rat(t), rat(t * t)]).collect(),
            };
            single(2, vs)
        }
        Shape::SquarePyramid => single(
            3,
            int_points(&[&[0, 0, 0], &[2, 0, 0], &[0, 2, 0], &[2, 2, 0], &[1, 1, 1]]),
        ),
        Shape::Necklace => build_complex(
            2,
            int_points(&[&[0, 0], &[1, 0], &[0, 1]]),
            vec![vec![0, 1], vec![0, 2], vec![1, 2]],
        ),
        Shape::TwoTriangles => build_complex(
            2,
            int_points(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]),
            vec![vec![0, 1, 2], vec![1, 2, 3]],
        ),
        Shape::Product(a, b) => product(&generate(a)?, &generate(b)?),
        Shape::Skeleton(a, k) => {
            let c = generate(a)?;
            if *k > c.top_dim() {
                return Err(Error::BadParameter(format!(
                    "skeleton dimension {k} exceeds dimension {}",
                    c.top_dim()
                )));
            }
            Ok(c.skeleton(*k))
        }
        Shape::Boundary(a) => {
            let c = generate(a)?;
            if c.top_dim() == 0 {
                return Err(Error::BadParameter("boundary of a 0-dimensional complex".into()));
            }
            Ok(c.skeleton(c.top_dim() - 1))
        }
    }
}

/// Cartesian product; vertex `(i, j)` gets index `i * |B| + j`.
pub fn product(a: &PolytopeComplex, b: &PolytopeComplex) -> Result<PolytopeComplex> {
    let nb = b.vertices().len();
    let vertices: Vec<Point> = a
        .vertices()
        .iter()
        .flat_map(|p| {
            b.vertices().iter().map(move |q| {
                let mut r: Vec<Rational> = p.clone();
                r.extend(q.iter().cloned());
                r
            })
        })
        .collect();
    let mut maximal = Vec::new();
    for ca in a.maximal_cells() {
        for cb in b.maximal_cells() {
            let mut cell = Vec::new();
            for &i in &a.cell(ca).vertices {
                for &j in &b.cell(cb).vertices {
                    cell.push(i * nb + j);
                }
            }
            maximal.push(cell);
        }
    }
    build_complex(a.ambient_dim() + b.ambient_dim(), vertices, maximal)
}
