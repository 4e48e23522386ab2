use std::sync::Arc;

use brokentoric::invariants::{
    h_vector_formula, mayer_vietoris_check, skeletal_closed_form, skeletal_formula, verify_vanishing, VanishingMode,
};
use brokentoric::sheaves::peel_sequence;
use brokentoric::{betti_broken_toric, e2_page, generate, leray_weight_table, Engine, PolytopeComplex, Shape};

fn arc(shape: Shape) -> Arc<PolytopeComplex> {
    Arc::new(generate(&shape).unwrap())
}

fn skel(shape: Shape, k: usize) -> Shape {
    Shape::Skeleton(Box::new(shape), k)
}

#[test]
fn toric_diagonal_small() {
    for shape in [Shape::Simplex(1), Shape::Simplex(2), Shape::Simplex(3), Shape::Cube(2), Shape::Cube(3)] {
        let p = arc(shape.clone());
        let page = e2_page(&p).unwrap();
        let h = h_vector_formula(&p).unwrap();
        for (q, row) in page.grid.iter().enumerate() {
            for (i, &x) in row.iter().enumerate() {
                let expected = if q == i { h[i] } else { 0 };
                assert_eq!(x as i64, expected, "{shape} at ({q}, {i})");
            }
        }
        assert!(verify_vanishing(&p, VanishingMode::ToricDiagonal).unwrap().passed());
    }
}

#[test]
fn skeletal_pairs() {
    for (shape, n) in [(Shape::Polygon(3), 1), (Shape::Cube(2), 1), (Shape::Cube(3), 2), (Shape::Simplex(3), 2)] {
        let parent = arc(shape.clone());
        let prediction = skeletal_formula(&parent, n).unwrap();
        let page = e2_page(&Arc::new(parent.skeleton(n))).unwrap();
        assert!(prediction.matches(&page), "{shape}, n = {n}: {prediction:?} vs {page:?}");
        let closed = skeletal_closed_form(&parent).unwrap();
        if n + 1 == parent.top_dim() {
            let b = betti_broken_toric(&Arc::new(parent.skeleton(n))).unwrap();
            let b: Vec<i64> = b.dims.iter().map(|&x| x as i64).collect();
            assert_eq!(closed.corrected, b, "{shape}");
        }
    }
}

#[test]
fn skeletal_formula_general_branch_on_pyramid() {
    let parent = arc(Shape::SquarePyramid);
    let prediction = skeletal_formula(&parent, 2).unwrap();
    assert!(prediction.simple.is_none());
    assert!(prediction.matches(&e2_page(&Arc::new(parent.skeleton(2))).unwrap()));
    let prediction = skeletal_formula(&parent, 1).unwrap();
    assert!(prediction.matches(&e2_page(&Arc::new(parent.skeleton(1))).unwrap()));
}

#[test]
fn lower_vanishing_on_corpus() {
    for shape in [
        Shape::Necklace,
        Shape::TwoTriangles,
        Shape::SquarePyramid,
        Shape::CrossPolytope(3),
        skel(Shape::Cube(3), 2),
        skel(Shape::SquarePyramid, 2),
    ] {
        let p = arc(shape.clone());
        assert!(e2_page(&p).unwrap().lower_violations().is_empty(), "{shape}");
    }
}

#[test]
fn peeling_orders() {
    for shape in [Shape::Cube(3), Shape::Simplex(3)] {
        let p = arc(shape.clone());
        let top = p.single_top_cell().unwrap();
        let facets: Vec<usize> = p.cell(top).facets.iter().map(|(f, _)| *f).collect();
        let mut reversed = facets.clone();
        reversed.reverse();
        let mut rotated = facets.clone();
        rotated.rotate_left(2);
        for order in [facets, reversed, rotated] {
            for i in 0..=3 {
                let r = peel_sequence(&p, i, &order).unwrap();
                assert!(r.exact, "{shape}, i = {i}, order {order:?}");
            }
        }
    }
}

#[test]
fn mayer_vietoris_sign_pattern() {
    for shape in [Shape::Necklace, Shape::TwoTriangles, skel(Shape::Cube(3), 2), Shape::Cube(3)] {
        let r = mayer_vietoris_check(&arc(shape.clone()), Engine::Both).unwrap();
        assert!(r.passed, "{shape}: {r:?}");
    }
}

#[test]
fn filtration_sums() {
    for shape in [Shape::Necklace, Shape::TwoTriangles, skel(Shape::Cube(3), 2)] {
        let p = arc(shape);
        let page = e2_page(&p).unwrap();
        let t = leray_weight_table(&p).unwrap();
        let b = page.betti();
        let n = page.dim();
        for i in 0..=2 * n {
            for k in 0..=n {
                let mut expected = 0;
                for q in 0..=k {
                    if q <= i && i - q <= n {
                        expected += page.grid[i - q][q];
                    }
                }
                assert_eq!(t.dims[i][k], expected);
            }
            assert_eq!(t.total(i), b.dims[i]);
        }
        assert!(t.is_monotone());
        assert_eq!(t.weight_labels.len(), n + 1);
    }
}
