//! JSON interchange format for polytope complexes.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::complex::{build_complex, PolytopeComplex};
use crate::error::{Error, Result};
use crate::exactla::{format_rational, parse_rational, Rational};

/// A complex given by its vertices and maximal cells. Coordinates are JSON integers or
/// `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub ambient_dim: usize,
    pub maximal_cells: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: Vec<Vec<Coordinate>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coordinate(pub Rational);

impl Serialize for Coordinate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.denom().is_one() {
            if let Some(x) = self.0.numer().to_i64() {
                return s.serialize_i64(x);
            }
        }
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Coordinate {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(x) => Ok(Coordinate(Rational::from_integer(BigInt::from(x)))),
            Raw::Text(t) => parse_rational(&t)
                .map(Coordinate)
                .ok_or_else(|| de::Error::custom(format!("`{t}` is not an exact rational"))),
        }
    }
}

impl ComplexDocument {
    pub fn from_complex(p: &PolytopeComplex, name: Option<String>) -> Self {
        ComplexDocument {
            ambient_dim: p.ambient_dim(),
            maximal_cells: p
                .maximal_cells()
                .into_iter()
                .map(|c| p.cell(c).vertices.clone())
                .collect(),
            name,
            vertices: p
                .vertices()
                .iter()
                .map(|v| v.iter().cloned().map(Coordinate).collect())
                .collect(),
        }
    }

    pub fn to_complex(&self) -> Result<PolytopeComplex> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|c| c.0.clone()).collect())
            .collect();
        build_complex(self.ambient_dim, vertices, self.maximal_cells.clone())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidComplex(format!("malformed document: {e}")))
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }
}
