//! Fixtures shared by the benchmarks.

use std::sync::Arc;

use brokentoric::{generate, PolytopeComplex, Shape};

pub fn fixture(shape: Shape) -> Arc<PolytopeComplex> {
    Arc::new(generate(&shape).expect("benchmark fixtures are valid"))
}

pub fn cube_skeleton(n: usize, k: usize) -> Arc<PolytopeComplex> {
    fixture(Shape::Skeleton(Box::new(Shape::Cube(n)), k))
}
