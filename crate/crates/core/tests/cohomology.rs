use std::sync::Arc;

use brokentoric::cohomology::{bar_complex, cellular_complex};
use brokentoric::sheaves::check_cell_compatibility;
use brokentoric::{
    betti, constant_sheaf, generate, moment_sheaf, sheaf_cohomology, CellSheaf, Engine, PolytopeComplex, Shape,
    Subspace,
};

fn arc(shape: Shape) -> Arc<PolytopeComplex> {
    Arc::new(generate(&shape).unwrap())
}

fn skel(shape: Shape, k: usize) -> Shape {
    Shape::Skeleton(Box::new(shape), k)
}

fn bnd(shape: Shape) -> Shape {
    Shape::Boundary(Box::new(shape))
}

/// Rank of a small integer matrix by fraction-free elimination.
fn int_rank(mut m: Vec<Vec<i64>>) -> usize {
    let mut rank = 0;
    let cols = m.first().map_or(0, Vec::len);
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let (a, b) = (m[rank][c], m[r][c]);
                for k in 0..cols {
                    m[r][k] = a * m[r][k] - b * m[rank][k];
                }
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn triangle_boundary_constant_sheaf() {
    let p = arc(bnd(Shape::Polygon(3)));
    let c = cellular_complex(&constant_sheaf(&p, 1)).unwrap();
    assert_eq!(c.terms, vec![3, 3]);
    let d0 = c.differentials[0].to_dense();
    let signed: Vec<Vec<i64>> = (0..3)
        .map(|r| (0..3).map(|col| d0[(r, col)].numer().try_into().unwrap()).collect())
        .collect();
    for row in &signed {
        assert_eq!(row.iter().filter(|x| **x != 0).count(), 2);
        assert_eq!(row.iter().sum::<i64>(), 0);
    }
    assert_eq!(int_rank(signed), 2);
    assert_eq!(c.differentials[0].rank(), 2);
    assert_eq!(betti(&c).dims, vec![1, 1]);
}

#[test]
fn triangle_boundary_moment_sheaf() {
    let p = arc(bnd(Shape::Polygon(3)));
    let c = cellular_complex(&moment_sheaf(&p, 1)).unwrap();
    assert_eq!(c.terms, vec![0, 3]);
    assert!(c.differentials[0].is_zero());
    assert_eq!(sheaf_cohomology(&moment_sheaf(&p, 1), Engine::Both).unwrap().dims, vec![0, 3]);
}

#[test]
fn moment_beyond_top_is_zero() {
    for shape in [Shape::Necklace, Shape::Cube(2), Shape::TwoTriangles] {
        let p = arc(shape);
        let s = moment_sheaf(&p, p.top_dim() + 1);
        for c in [cellular_complex(&s).unwrap(), bar_complex(&s).unwrap()] {
            assert!(c.terms.iter().all(|&t| t == 0));
        }
    }
}

#[test]
fn bar_engine_examples() {
    let sq = arc(Shape::Cube(2));
    assert_eq!(betti(&bar_complex(&constant_sheaf(&sq, 1)).unwrap()).dims, vec![1, 0, 0]);
    let two = arc(Shape::TwoTriangles);
    assert_eq!(betti(&bar_complex(&moment_sheaf(&two, 1)).unwrap()).dims, vec![0, 1, 0]);
    let zero = bar_complex(&constant_sheaf(&two, 0)).unwrap();
    assert!(zero.terms.iter().all(|&t| t == 0));
    assert_eq!(sheaf_cohomology(&moment_sheaf(&two, 2), Engine::Both).unwrap().dims, vec![0, 0, 2]);
}

#[test]
fn two_triangles_moment_one_by_hand() {
    // Stalks: 0 on vertices, lines on the five edges, Q² on the two triangles.
    let two = arc(Shape::TwoTriangles);
    let c = cellular_complex(&moment_sheaf(&two, 1)).unwrap();
    assert_eq!(c.terms, vec![0, 5, 4]);
    assert_eq!(c.differentials[1].rank(), 4);
}

#[test]
fn constant_sheaf_topology() {
    let cases = [
        (bnd(Shape::Polygon(5)), vec![1, 1]),
        (skel(Shape::Cube(3), 2), vec![1, 0, 1]),
        (bnd(Shape::Simplex(3)), vec![1, 0, 1]),
        (Shape::Cube(2), vec![1, 0, 0]),
        (Shape::Polygon(6), vec![1, 0, 0]),
        (skel(Shape::Cube(3), 1), vec![1, 5]),
        (skel(Shape::Simplex(4), 2), vec![1, 0, 4]),
        (bnd(Shape::Cube(4)), vec![1, 0, 0, 1]),
    ];
    for (shape, expected) in cases {
        let p = arc(shape.clone());
        for engine in [Engine::Cellular, Engine::Bar] {
            assert_eq!(sheaf_cohomology(&constant_sheaf(&p, 1), engine).unwrap().dims, expected, "{shape}");
        }
    }
}

#[test]
fn euler_consistency_per_engine() {
    for shape in [Shape::Necklace, Shape::TwoTriangles, skel(Shape::Cube(3), 2), Shape::SquarePyramid] {
        let p = arc(shape);
        for i in 0..=p.top_dim() {
            let s = moment_sheaf(&p, i);
            for c in [cellular_complex(&s).unwrap(), bar_complex(&s).unwrap()] {
                assert_eq!(c.euler_characteristic(), betti(&c).euler_characteristic());
            }
        }
    }
}

#[test]
fn moment_cochains_start_in_degree_i() {
    let p = arc(Shape::Cube(3));
    for i in 0..=3 {
        let c = cellular_complex(&moment_sheaf(&p, i)).unwrap();
        assert!(c.terms[..i].iter().all(|&t| t == 0));
    }
}

#[test]
fn basis_labels_match_terms() {
    let p = arc(Shape::TwoTriangles);
    let s = moment_sheaf(&p, 1);
    for c in [cellular_complex(&s).unwrap(), bar_complex(&s).unwrap()] {
        for (k, labels) in c.basis_labels.iter().enumerate() {
            assert_eq!(labels.len(), c.terms[k]);
        }
    }
    let cell = cellular_complex(&s).unwrap();
    assert!(cell.basis_labels.iter().flatten().all(|l| l.chain.len() == 1));
    let bar = bar_complex(&s).unwrap();
    assert!(bar.basis_labels[2].iter().all(|l| l.chain.len() == 3));
}

#[test]
fn incompatible_sheaf_is_rejected() {
    let p = arc(Shape::Necklace);
    let mut stalks: Vec<Subspace> = vec![Subspace::zero(1); p.num_cells()];
    stalks[0] = Subspace::full(1);
    let s = CellSheaf::new(p.clone(), 1, stalks).unwrap();
    assert!(!check_cell_compatibility(&s).passed());
    assert!(cellular_complex(&s).is_err());
    assert!(bar_complex(&s).is_err());
    assert!(sheaf_cohomology(&s, Engine::Both).is_err());
}

#[test]
fn engines_agree_on_corpus() {
    let shapes = [
        Shape::Necklace,
        Shape::TwoTriangles,
        Shape::Cube(2),
        Shape::Cube(3),
        Shape::Simplex(3),
        Shape::SquarePyramid,
        Shape::CrossPolytope(3),
        skel(Shape::Cube(3), 2),
        skel(Shape::Simplex(4), 2),
        Shape::Product(Box::new(Shape::Polygon(3)), Box::new(Shape::Simplex(1))),
    ];
    let mut pairs = 0;
    for shape in shapes {
        let p = arc(shape.clone());
        for i in 0..=p.top_dim() {
            let s = moment_sheaf(&p, i);
            let a = sheaf_cohomology(&s, Engine::Cellular).unwrap();
            let b = sheaf_cohomology(&s, Engine::Bar).unwrap();
            assert_eq!(a, b, "{shape}, moment {i}");
            pairs += 1;
        }
    }
    assert!(pairs >= 30);
}
