use std::sync::Arc;

use brokentoric::exactla::{binomial, kernel_basis, rat, SparseMatrix};
use brokentoric::invariants::{e2_page, euler_check};
use brokentoric::{build_complex, betti_broken_toric, generate, PolytopeComplex, RationalMatrix, Shape, Subspace};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn small_matrix(max_rows: usize, cols: usize) -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, cols), 0..=max_rows).prop_map(move |rows| {
        let rows = rows.into_iter().map(|r| r.into_iter().map(rat).collect()).collect();
        RationalMatrix::from_rows(cols, rows)
    })
}

fn subspace(dim: usize) -> impl Strategy<Value = Subspace> {
    small_matrix(dim, dim).prop_map(|m| Subspace::from_matrix(&m))
}

proptest! {
    #[test]
    fn grassmann_identity(u in subspace(4), v in subspace(4)) {
        let s = u.sum(&v).unwrap();
        let i = u.intersect(&v).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
        prop_assert!(s.contains(&u).unwrap() && s.contains(&v).unwrap());
        prop_assert!(u.contains(&i).unwrap() && v.contains(&i).unwrap());
    }

    #[test]
    fn rank_nullity(m in small_matrix(5, 4)) {
        let k = kernel_basis(&m);
        prop_assert_eq!(m.rank() + k.dim(), 4);
        for b in 0..k.dim() {
            let image = m.mul_vec(k.basis_vector(b));
            prop_assert!(image.iter().all(|x| *x == rat(0)));
        }
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert_eq!(SparseMatrix::from_dense(&m).rank(), m.rank());
    }

    #[test]
    fn exterior_power_dimension(u in subspace(5), i in 0usize..=5) {
        let w = u.exterior_power(i);
        prop_assert_eq!(w.dim(), binomial(u.dim(), i));
        prop_assert_eq!(w.ambient_dim(), binomial(5, i));
    }

    #[test]
    fn exterior_power_is_monotone(u in subspace(4), v in subspace(4), i in 0usize..=4) {
        let small = u.intersect(&v).unwrap();
        prop_assert!(u.exterior_power(i).contains(&small.exterior_power(i)).unwrap());
    }

    #[test]
    fn canonical_form(u in subspace(4), mix in prop::collection::vec(-2i64..=2, 16)) {
        // Recombine the basis with a unitriangular matrix and rebuild.
        let d = u.dim();
        let rows: Vec<Vec<_>> = (0..d)
            .map(|r| {
                let mut acc = u.basis_vector(r).to_vec();
                for s in r + 1..d {
                    let c = rat(mix[r * 4 + s]);
                    for (a, b) in acc.iter_mut().zip(u.basis_vector(s)) {
                        *a += &c * b;
                    }
                }
                acc
            })
            .rev()
            .collect();
        let w = Subspace::span(4, rows);
        prop_assert_eq!(&w, &u);
        prop_assert_eq!(u.annihilator().annihilator(), u.clone());
        prop_assert_eq!(u.annihilator().dim() + u.dim(), 4);
    }

    #[test]
    fn sparse_product_matches_dense(a in small_matrix(4, 3), b in small_matrix(3, 3)) {
        prop_assume!(b.rows() == 3);
        let dense = a.mul(&b);
        let sparse = SparseMatrix::from_dense(&a).mul(&SparseMatrix::from_dense(&b));
        prop_assert_eq!(sparse.to_dense(), dense);
    }
}

/// Same complex with vertices permuted and coordinates moved by an invertible integer map.
fn transformed(p: &PolytopeComplex, perm: &[usize], shear: i64) -> PolytopeComplex {
    let n = p.ambient_dim();
    let mut vertices = vec![Vec::new(); perm.len()];
    for (old, &new) in perm.iter().enumerate() {
        let v = &p.vertices()[old];
        let moved: Vec<_> = (0..n)
            .map(|k| if k + 1 < n { &v[k] + &v[k + 1] * rat(shear) } else { v[k].clone() + rat(7) })
            .collect();
        vertices[new] = moved;
    }
    let cells = p
        .maximal_cells()
        .into_iter()
        .map(|c| p.cell(c).vertices.iter().map(|&v| perm[v]).collect())
        .collect();
    build_complex(n, vertices, cells).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]
    #[test]
    fn betti_invariant_under_relabeling(seed in any::<u64>(), shear in -2i64..=2, which in 0usize..3) {
        let shape = [
            Shape::TwoTriangles,
            Shape::Necklace,
            Shape::Skeleton(Box::new(Shape::Cube(3)), 2),
        ][which].clone();
        let p = generate(&shape).unwrap();
        let mut perm: Vec<usize> = (0..p.vertices().len()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let q = transformed(&p, &perm, shear);
        prop_assert_eq!(q.f_vector(), p.f_vector());
        let (p, q) = (Arc::new(p), Arc::new(q));
        prop_assert_eq!(e2_page(&q).unwrap(), e2_page(&p).unwrap());
        prop_assert_eq!(betti_broken_toric(&q).unwrap(), betti_broken_toric(&p).unwrap());
    }
}

#[test]
fn fixed_equivalent_embeddings() {
    // Two triangles glued along an edge, embedded differently.
    let a = build_complex(
        2,
        vec![vec![rat(0), rat(0)], vec![rat(1), rat(0)], vec![rat(0), rat(1)], vec![rat(1), rat(1)]],
        vec![vec![0, 1, 2], vec![1, 2, 3]],
    )
    .unwrap();
    let b = build_complex(
        2,
        vec![vec![rat(0), rat(0)], vec![rat(2), rat(1)], vec![rat(1), rat(1)], vec![rat(3), rat(1)]],
        vec![vec![0, 1, 2], vec![0, 1, 3]],
    )
    .unwrap();
    assert_eq!(
        betti_broken_toric(&Arc::new(a)).unwrap(),
        betti_broken_toric(&Arc::new(b)).unwrap()
    );
}

#[test]
fn euler_on_random_subcomplexes() {
    let parents = [
        generate(&Shape::Skeleton(Box::new(Shape::Cube(3)), 2)).unwrap(),
        generate(&Shape::Skeleton(Box::new(Shape::Simplex(4)), 2)).unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for t in 0..25 {
        let parent = &parents[t % 2];
        let picks: Vec<usize> = (0..parent.num_cells()).filter(|_| rng.gen_bool(0.3)).collect();
        let sub = parent.subcomplex(picks);
        if sub.is_empty() {
            continue;
        }
        let r = euler_check(&Arc::new(sub)).unwrap();
        assert!(r.passed, "trial {t}: {r:?}");
    }
}
