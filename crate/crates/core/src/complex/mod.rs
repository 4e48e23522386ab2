//! Embedded polytope complexes: vertices in Q^N, the full face lattice of their cells,
//! orientations and incidence numbers.

mod build;
mod decomposition;
mod generate;

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::exactla::{Rational, Subspace};

pub use build::{build_complex, facets_of_cell};
pub use decomposition::{singular_decomposition, SingularDecomposition};
pub use generate::{generate, Shape};

pub type CellId = usize;
pub type Point = Vec<Rational>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub id: CellId,
    pub dim: usize,
    /// Sorted vertex indices into the complex's vertex list.
    pub vertices: Vec<usize>,
    /// Codimension-one faces with their incidence numbers `[self : facet]`.
    pub facets: Vec<(CellId, i8)>,
    /// Span of differences of the cell's points.
    pub direction: Subspace,
}

/// A polytope complex with its complete face lattice. Cells are ordered by
/// `(dim, sorted vertex ids)`, and a cell's id is its position in that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeComplex {
    ambient_dim: usize,
    vertices: Vec<Point>,
    cells: Vec<Cell>,
    dim_offsets: Vec<usize>,
    cofacets: Vec<Vec<CellId>>,
    lookup: HashMap<Vec<usize>, CellId>,
}

impl PolytopeComplex {
    pub(crate) fn from_sorted_cells(ambient_dim: usize, vertices: Vec<Point>, cells: Vec<Cell>) -> Self {
        let top = cells.last().map_or(0, |c| c.dim);
        let mut dim_offsets = vec![0; top + 2];
        for c in &cells {
            dim_offsets[c.dim + 1] += 1;
        }
        for k in 1..dim_offsets.len() {
            dim_offsets[k] += dim_offsets[k - 1];
        }
        let mut cofacets = vec![Vec::new(); cells.len()];
        for c in &cells {
            for &(f, _) in &c.facets {
                cofacets[f].push(c.id);
            }
        }
        let lookup = cells.iter().map(|c| (c.vertices.clone(), c.id)).collect();
        PolytopeComplex {
            ambient_dim,
            vertices,
            cells,
            dim_offsets,
            cofacets,
            lookup,
        }
    }

    /// The complex with no cells.
    pub fn empty(ambient_dim: usize) -> Self {
        Self::from_sorted_cells(ambient_dim, Vec::new(), Vec::new())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, id: CellId) -> &Cell {
        &self.cells[id]
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Dimension of the highest cell; 0 for the empty complex.
    pub fn top_dim(&self) -> usize {
        self.cells.last().map_or(0, |c| c.dim)
    }

    pub fn cells_of_dim(&self, k: usize) -> &[Cell] {
        if k + 1 >= self.dim_offsets.len() {
            return &[];
        }
        &self.cells[self.dim_offsets[k]..self.dim_offsets[k + 1]]
    }

    /// Number of cells in each dimension `0..=top_dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        if self.is_empty() {
            return Vec::new();
        }
        (0..=self.top_dim()).map(|k| self.cells_of_dim(k).len()).collect()
    }

    pub fn cofacets(&self, id: CellId) -> &[CellId] {
        &self.cofacets[id]
    }

    /// Incidence number `[upper : lower]`; 0 when `lower` is not a facet of `upper`.
    pub fn incidence(&self, upper: CellId, lower: CellId) -> i8 {
        self.cells[upper]
            .facets
            .iter()
            .find(|(f, _)| *f == lower)
            .map_or(0, |(_, s)| *s)
    }

    pub fn find_cell(&self, vertices: &[usize]) -> Option<CellId> {
        self.lookup.get(vertices).copied()
    }

    pub fn points_of(&self, id: CellId) -> Vec<Point> {
        self.cells[id]
            .vertices
            .iter()
            .map(|&v| self.vertices[v].clone())
            .collect()
    }

    /// True iff `lower` is a face of `upper` (including equality).
    pub fn is_face(&self, lower: CellId, upper: CellId) -> bool {
        let (l, u) = (&self.cells[lower], &self.cells[upper]);
        l.dim <= u.dim && l.vertices.iter().all(|v| u.vertices.binary_search(v).is_ok())
    }

    /// All faces of the given cells, the cells themselves included.
    pub fn closure(&self, ids: impl IntoIterator<Item = CellId>) -> BTreeSet<CellId> {
        let mut seen = BTreeSet::new();
        let mut stack: Vec<CellId> = ids.into_iter().collect();
        while let Some(c) = stack.pop() {
            if seen.insert(c) {
                stack.extend(self.cells[c].facets.iter().map(|(f, _)| *f));
            }
        }
        seen
    }

    /// Cells that are not a facet of any other cell.
    pub fn maximal_cells(&self) -> Vec<CellId> {
        (0..self.cells.len())
            .filter(|&c| self.cofacets[c].is_empty())
            .collect()
    }

    /// Top-dimensional cells.
    pub fn top_cells(&self) -> &[Cell] {
        if self.is_empty() {
            return &[];
        }
        self.cells_of_dim(self.top_dim())
    }

    /// Closed subcomplex generated by `ids`. Vertices are renumbered in their original order,
    /// so cell order and incidence numbers carry over unchanged.
    pub fn subcomplex(&self, ids: impl IntoIterator<Item = CellId>) -> PolytopeComplex {
        let keep = self.closure(ids);
        let used: BTreeSet<usize> = keep
            .iter()
            .flat_map(|&c| self.cells[c].vertices.iter().copied())
            .collect();
        let vmap: HashMap<usize, usize> = used.iter().enumerate().map(|(n, &o)| (o, n)).collect();
        let cmap: HashMap<CellId, CellId> = keep.iter().enumerate().map(|(n, &o)| (o, n)).collect();
        let cells = keep
            .iter()
            .map(|&o| {
                let c = &self.cells[o];
                Cell {
                    id: cmap[&o],
                    dim: c.dim,
                    vertices: c.vertices.iter().map(|v| vmap[v]).collect(),
                    facets: c.facets.iter().map(|(f, s)| (cmap[f], *s)).collect(),
                    direction: c.direction.clone(),
                }
            })
            .collect();
        let vertices = used.iter().map(|&v| self.vertices[v].clone()).collect();
        PolytopeComplex::from_sorted_cells(self.ambient_dim, vertices, cells)
    }

    /// Cells of dimension at most `k`.
    pub fn skeleton(&self, k: usize) -> PolytopeComplex {
        let ids: Vec<CellId> = self.cells.iter().filter(|c| c.dim <= k).map(|c| c.id).collect();
        self.subcomplex(ids)
    }

    /// Maps every cell of `sub` to the cell of `self` with the same point set.
    pub fn embed(&self, sub: &PolytopeComplex) -> Result<Vec<CellId>> {
        if sub.ambient_dim != self.ambient_dim {
            return Err(Error::NotSubcomplex(format!(
                "ambient dimension {} vs {}",
                sub.ambient_dim, self.ambient_dim
            )));
        }
        let index: HashMap<&Point, usize> =
            self.vertices.iter().enumerate().map(|(i, p)| (p, i)).collect();
        sub.cells
            .iter()
            .map(|c| {
                let mut vs = c
                    .vertices
                    .iter()
                    .map(|v| {
                        index.get(&sub.vertices[*v]).copied().ok_or_else(|| {
                            Error::NotSubcomplex(format!("vertex {v} of cell {} is not a vertex", c.id))
                        })
                    })
                    .collect::<Result<Vec<usize>>>()?;
                vs.sort_unstable();
                self.find_cell(&vs)
                    .ok_or_else(|| Error::NotSubcomplex(format!("cell {} has no counterpart", c.id)))
            })
            .collect()
    }

    /// True iff every vertex lies in exactly `n` facets of the single top cell.
    pub fn is_simple(&self) -> Result<bool> {
        let top = self.single_top_cell()?;
        let n = self.cells[top].dim;
        let facets = &self.cells[top].facets;
        Ok(self.cells_of_dim(0).iter().all(|v| {
            let count = facets
                .iter()
                .filter(|(f, _)| self.cells[*f].vertices.contains(&v.vertices[0]))
                .count();
            count == n
        }))
    }

    /// Like [`is_simple`](Self::is_simple) but reports the first offending vertex.
    pub fn require_simple(&self) -> Result<()> {
        let top = self.single_top_cell()?;
        let n = self.cells[top].dim;
        for v in self.cells_of_dim(0) {
            let count = self.cells[top]
                .facets
                .iter()
                .filter(|(f, _)| self.cells[*f].vertices.contains(&v.vertices[0]))
                .count();
            if count != n {
                return Err(Error::NotSimple {
                    vertex: v.vertices[0],
                    facets: count,
                    expected: n,
                });
            }
        }
        Ok(())
    }

    /// Id of the unique top cell of a single-polytope complex.
    pub fn single_top_cell(&self) -> Result<CellId> {
        let tops = self.top_cells();
        if tops.len() != 1 || self.maximal_cells().len() != 1 {
            return Err(Error::NotSinglePolytope {
                top_cells: self.maximal_cells().len(),
            });
        }
        Ok(tops[0].id)
    }
}
