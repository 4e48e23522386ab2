use thiserror::Error;

use crate::complex::CellId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("degenerate cell {cell:?}: vertex {vertex} is not an extreme point of its hull")]
    DegenerateCell { cell: Vec<usize>, vertex: usize },

    #[error("cells {left:?} and {right:?} intersect in a set that is not a common face")]
    NonFaceIntersection { left: Vec<usize>, right: Vec<usize> },

    #[error("incidence signs violate the boundary identity at cells {upper} and {lower}")]
    IncidenceInconsistent { upper: CellId, lower: CellId },

    #[error("expected a single polytope, found {top_cells} top-dimensional cells")]
    NotSinglePolytope { top_cells: usize },

    #[error("polytope is not simple: vertex {vertex} lies in {facets} facets, expected {expected}")]
    NotSimple { vertex: usize, facets: usize, expected: usize },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("bad generator parameter: {0}")]
    BadParameter(String),

    #[error("cell {0} is not a facet of the polytope")]
    NotAFacet(CellId),

    #[error("complex is not a subcomplex: {0}")]
    NotSubcomplex(String),

    #[error("sheaf is not cell-compatible: stalk at cell {face} is not contained in the stalk at cell {coface}")]
    Incompatible { face: CellId, coface: CellId },

    #[error("differential does not square to zero in degree {0}")]
    NotAComplex(usize),

    #[error("cohomology engines disagree: cellular {cellular:?}, bar {bar:?}")]
    EngineDisagreement { cellular: Vec<usize>, bar: Vec<usize> },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
