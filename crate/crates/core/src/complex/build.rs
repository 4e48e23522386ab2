use std::collections::{BTreeSet, HashMap, HashSet};

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use super::{Cell, CellId, Point, PolytopeComplex};
use crate::error::{Error, Result};
use crate::exactla::lp::{maximize, LpOutcome};
use crate::exactla::{kernel_basis, Rational, RationalMatrix, Subspace};

struct FaceData {
    dim: usize,
    facets: Vec<Vec<usize>>,
}

/// Builds the full face lattice of the complex whose maximal cells are given by vertex sets.
pub fn build_complex(
    ambient_dim: usize,
    vertices: Vec<Point>,
    maximal_cells: Vec<Vec<usize>>,
) -> Result<PolytopeComplex> {
    validate_input(ambient_dim, &vertices, &maximal_cells)?;
    let mut maximal: Vec<Vec<usize>> = maximal_cells
        .into_iter()
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect();
    maximal.sort();
    maximal.dedup();

    let mut faces: HashMap<Vec<usize>, FaceData> = HashMap::new();
    for cell in &maximal {
        enumerate_faces(cell, &vertices, &mut faces)?;
    }
    check_intersections(&maximal, &vertices, &faces)?;

    let mut keys: Vec<(usize, Vec<usize>)> =
        faces.iter().map(|(vs, d)| (d.dim, vs.clone())).collect();
    keys.sort();
    let ids: HashMap<&Vec<usize>, CellId> = keys.iter().enumerate().map(|(i, (_, vs))| (vs, i)).collect();

    let frames: Vec<(Subspace, RationalMatrix)> = keys
        .iter()
        .map(|(dim, vs)| oriented_frame(&points(vs, &vertices), *dim))
        .collect();

    let mut cells = Vec::with_capacity(keys.len());
    for (id, (dim, vs)) in keys.iter().enumerate() {
        let data = &faces[vs];
        let mut facets: Vec<(CellId, i8)> = data
            .facets
            .iter()
            .map(|f| {
                let fid = ids[f];
                let sign = incidence_sign(vs, &frames[id], f, &frames[fid], &vertices);
                (fid, sign)
            })
            .collect();
        facets.sort_unstable();
        cells.push(Cell {
            id,
            dim: *dim,
            vertices: vs.clone(),
            facets,
            direction: frames[id].0.clone(),
        });
    }
    check_boundary_identity(&cells)?;
    Ok(PolytopeComplex::from_sorted_cells(ambient_dim, vertices, cells))
}

fn validate_input(ambient_dim: usize, vertices: &[Point], maximal_cells: &[Vec<usize>]) -> Result<()> {
    for (i, p) in vertices.iter().enumerate() {
        if p.len() != ambient_dim {
            return Err(Error::InvalidComplex(format!(
                "vertex {i} has {} coordinates, expected {ambient_dim}",
                p.len()
            )));
        }
    }
    let mut seen = HashSet::new();
    for (i, p) in vertices.iter().enumerate() {
        if !seen.insert(p) {
            return Err(Error::InvalidComplex(format!("vertex {i} repeats an earlier vertex")));
        }
    }
    for cell in maximal_cells {
        if cell.is_empty() {
            return Err(Error::InvalidComplex("empty cell".into()));
        }
        if let Some(v) = cell.iter().find(|&&v| v >= vertices.len()) {
            return Err(Error::InvalidComplex(format!("vertex index {v} out of range")));
        }
        if cell.iter().collect::<HashSet<_>>().len() != cell.len() {
            return Err(Error::InvalidComplex(format!("cell {cell:?} repeats a vertex")));
        }
    }
    Ok(())
}

fn points(vs: &[usize], vertices: &[Point]) -> Vec<Point> {
    vs.iter().map(|&v| vertices[v].clone()).collect()
}

fn diff(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn enumerate_faces(
    cell: &[usize],
    vertices: &[Point],
    faces: &mut HashMap<Vec<usize>, FaceData>,
) -> Result<()> {
    let mut stack = vec![cell.to_vec()];
    while let Some(vs) = stack.pop() {
        if faces.contains_key(&vs) {
            continue;
        }
        let pts = points(&vs, vertices);
        let dim = affine_dim(&pts);
        let local = facets_of_cell(&pts)?;
        let facets: Vec<Vec<usize>> = local
            .iter()
            .map(|f| f.iter().map(|&k| vs[k]).collect())
            .collect();
        if dim > 0 {
            let covered: HashSet<usize> = facets.iter().flatten().copied().collect();
            if let Some(&v) = vs.iter().find(|v| !covered.contains(v)) {
                return Err(Error::DegenerateCell {
                    cell: cell.to_vec(),
                    vertex: v,
                });
            }
        }
        stack.extend(facets.iter().cloned());
        faces.insert(vs, FaceData { dim, facets });
    }
    Ok(())
}

fn affine_dim(pts: &[Point]) -> usize {
    if pts.len() <= 1 {
        return 0;
    }
    let rows = pts[1..].iter().map(|p| diff(p, &pts[0])).collect();
    RationalMatrix::from_rows(pts[0].len(), rows).rank()
}

/// Vertex subsets (as indices into `pts`) spanning the facets of the polytope `conv(pts)`.
///
/// Candidate hyperplanes pass through affinely independent vertex tuples in the cell's own
/// affine hull; a candidate is kept when every other vertex lies weakly on one side.
pub fn facets_of_cell(pts: &[Point]) -> Result<Vec<Vec<usize>>> {
    if pts.is_empty() {
        return Err(Error::InvalidComplex("cell without vertices".into()));
    }
    let origin = &pts[0];
    let span = Subspace::span(
        origin.len(),
        pts.iter().skip(1).map(|p| diff(p, origin)).collect(),
    );
    let d = span.dim();
    if d == 0 {
        return Ok(Vec::new());
    }
    let local: Vec<Vec<Rational>> = pts
        .iter()
        .map(|p| span.coordinates(&diff(p, origin)).expect("point in its own affine hull"))
        .collect();

    let mut found: Vec<Vec<usize>> = Vec::new();
    for tuple in (0..pts.len()).combinations(d) {
        if found.iter().any(|f| tuple.iter().all(|t| f.binary_search(t).is_ok())) {
            continue;
        }
        let base = &local[tuple[0]];
        let rows = tuple[1..].iter().map(|&t| diff(&local[t], base)).collect();
        let normal_space = kernel_basis(&RationalMatrix::from_rows(d, rows));
        if normal_space.dim() != 1 {
            continue;
        }
        let normal = normal_space.basis_vector(0);
        let values: Vec<Rational> = local
            .iter()
            .map(|q| {
                diff(q, base)
                    .iter()
                    .zip(normal)
                    .fold(Rational::zero(), |acc, (x, c)| acc + x * c)
            })
            .collect();
        let has_pos = values.iter().any(Signed::is_positive);
        let has_neg = values.iter().any(Signed::is_negative);
        if has_pos && has_neg {
            continue;
        }
        let facet: Vec<usize> = (0..pts.len()).filter(|&k| values[k].is_zero()).collect();
        if facet.len() == pts.len() {
            continue;
        }
        found.push(facet);
    }
    found.sort();
    found.dedup();
    Ok(found)
}

/// Direction space and the ordered frame orienting a cell: take the points in
/// lexicographic coordinate order and keep the first differences that raise the rank.
fn oriented_frame(pts: &[Point], dim: usize) -> (Subspace, RationalMatrix) {
    let ambient = pts[0].len();
    let mut sorted: Vec<&Point> = pts.iter().collect();
    sorted.sort();
    let base = sorted[0];
    let mut frame: Vec<Vec<Rational>> = Vec::with_capacity(dim);
    let mut span = Subspace::zero(ambient);
    for p in &sorted[1..] {
        if frame.len() == dim {
            break;
        }
        let v = diff(p, base);
        if !span.contains_vector(&v) {
            frame.push(v);
            span = Subspace::span(ambient, frame.clone());
        }
    }
    (span, RationalMatrix::from_rows(ambient, frame))
}

/// `[upper : facet]`: the sign comparing (outward vector, facet frame) against the upper frame,
/// measured in coordinates of the upper direction space.
fn incidence_sign(
    upper: &[usize],
    upper_frame: &(Subspace, RationalMatrix),
    facet: &[usize],
    facet_frame: &(Subspace, RationalMatrix),
    vertices: &[Point],
) -> i8 {
    let (space, frame) = upper_frame;
    let inner = upper
        .iter()
        .find(|v| facet.binary_search(v).is_err())
        .expect("a facet misses at least one vertex");
    let outward = diff(&vertices[facet[0]], &vertices[*inner]);
    let coords = |v: &[Rational]| space.coordinates(v).expect("vector in the cell's direction space");
    let mut rows = vec![coords(&outward)];
    for r in 0..facet_frame.1.rows() {
        rows.push(coords(facet_frame.1.row(r)));
    }
    let k = space.dim();
    let lhs = RationalMatrix::from_rows(k, rows).determinant();
    let transition = RationalMatrix::from_rows(k, (0..frame.rows()).map(|r| coords(frame.row(r))).collect());
    let det = lhs * transition.determinant();
    debug_assert!(!det.is_zero());
    if det.is_positive() {
        1
    } else {
        -1
    }
}

fn check_boundary_identity(cells: &[Cell]) -> Result<()> {
    for beta in cells {
        let mut acc: HashMap<CellId, i32> = HashMap::new();
        for &(alpha, s1) in &beta.facets {
            for &(gamma, s2) in &cells[alpha].facets {
                *acc.entry(gamma).or_insert(0) += i32::from(s1) * i32::from(s2);
            }
        }
        if let Some((&gamma, _)) = acc.iter().find(|(_, v)| **v != 0) {
            return Err(Error::IncidenceInconsistent {
                upper: beta.id,
                lower: gamma,
            });
        }
    }
    Ok(())
}

fn faces_below(cell: &[usize], faces: &HashMap<Vec<usize>, FaceData>) -> BTreeSet<Vec<usize>> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![cell.to_vec()];
    while let Some(f) = stack.pop() {
        if let Some(d) = faces.get(&f) {
            stack.extend(d.facets.iter().cloned());
        }
        seen.insert(f);
    }
    seen
}

/// Every pair of maximal cells must meet in a common face (or not at all).
fn check_intersections(
    maximal: &[Vec<usize>],
    vertices: &[Point],
    faces: &HashMap<Vec<usize>, FaceData>,
) -> Result<()> {
    let lattices: Vec<BTreeSet<Vec<usize>>> = maximal.iter().map(|c| faces_below(c, faces)).collect();
    for (i, j) in (0..maximal.len()).tuple_combinations() {
        let (a, b) = (&maximal[i], &maximal[j]);
        let shared: Vec<usize> = a.iter().filter(|v| b.binary_search(v).is_ok()).copied().collect();
        let err = || Error::NonFaceIntersection {
            left: a.clone(),
            right: b.clone(),
        };
        if !shared.is_empty() && (!lattices[i].contains(&shared) || !lattices[j].contains(&shared)) {
            return Err(err());
        }
        if !meets_only_in(a, b, &shared, vertices) {
            return Err(err());
        }
    }
    Ok(())
}

/// Decides `conv(a) ∩ conv(b) ⊆ conv(shared)` exactly. Since `shared` is a face of both,
/// a convex combination landing in it puts no weight outside it, so it suffices that
/// no common point gives positive weight to a non-shared vertex.
fn meets_only_in(a: &[usize], b: &[usize], shared: &[usize], vertices: &[Point]) -> bool {
    let n = vertices[a[0]].len();
    let vars = a.len() + b.len();
    let mut m = RationalMatrix::zeros(n + 2, vars);
    let mut rhs = vec![Rational::zero(); n + 2];
    for (k, &v) in a.iter().enumerate() {
        m[(0, k)] = Rational::one();
        for c in 0..n {
            m[(2 + c, k)] = vertices[v][c].clone();
        }
    }
    for (k, &v) in b.iter().enumerate() {
        m[(1, a.len() + k)] = Rational::one();
        for c in 0..n {
            m[(2 + c, a.len() + k)] = -vertices[v][c].clone();
        }
    }
    rhs[0] = Rational::one();
    rhs[1] = Rational::one();
    let objective: Vec<Rational> = a
        .iter()
        .chain(b)
        .map(|v| {
            if shared.binary_search(v).is_ok() {
                Rational::zero()
            } else {
                Rational::one()
            }
        })
        .collect();
    match maximize(&m, &rhs, &objective) {
        LpOutcome::Infeasible => true,
        LpOutcome::Optimal { value, .. } => value.is_zero(),
        LpOutcome::Unbounded => unreachable!("bounded simplex weights"),
    }
}
