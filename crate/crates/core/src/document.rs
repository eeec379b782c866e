//! JSON documents for matrices, polytope presentations and normalizations.
//!
//! Every document carries `"schema_version": "1"`. Scalars are JSON integers
//! or `"p/q"` strings; infinite bounds are the strings `"-inf"` and `"inf"`.
//! Indices are zero-based.

use std::fmt;

use serde::de::{self, DeserializeOwned, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::MaxPlusMatrix;
use crate::normalization::{GenPermMatrix, NormalizationResult};
use crate::point::Point;
use crate::polytope::{AlcovedHRep, DiffBound, Interval, VertexSet, VertexTag};
use crate::scalar::Scalar;

pub const SCHEMA_VERSION: &str = "1";

fn schema_version() -> String {
    SCHEMA_VERSION.to_string()
}

fn check_version(found: &str) -> Result<()> {
    if found == SCHEMA_VERSION {
        Ok(())
    } else {
        Err(Error::Parse(format!(
            "unsupported schema_version `{found}`, expected `{SCHEMA_VERSION}`"
        )))
    }
}

/// Parses a JSON document.
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("documents always serialize");
    text.push('\n');
    text
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub schema_version: String,
    pub matrix: Vec<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl MatrixDocument {
    pub fn new(matrix: &MaxPlusMatrix, label: Option<String>) -> Self {
        MatrixDocument {
            schema_version: schema_version(),
            matrix: matrix.to_rows(),
            label,
        }
    }

    pub fn to_matrix(&self) -> Result<MaxPlusMatrix> {
        check_version(&self.schema_version)?;
        MaxPlusMatrix::from_rows(self.matrix.clone())
    }
}

/// A bound that may be infinite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(Scalar),
    PosInf,
}

impl Serialize for Bound {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Bound::NegInf => serializer.serialize_str("-inf"),
            Bound::PosInf => serializer.serialize_str("inf"),
            Bound::Finite(v) => v.serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for Bound {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct BoundVisitor;

        impl Visitor<'_> for BoundVisitor {
            type Value = Bound;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer, a \"p/q\" string, \"-inf\" or \"inf\"")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Bound, E> {
                Ok(Bound::Finite(Scalar::from(v)))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Bound, E> {
                Scalar::deserialize(de::value::U64Deserializer::<E>::new(v)).map(Bound::Finite)
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Bound, E> {
                Err(E::custom(format!(
                    "floating-point value {v} is not exact; write it as a \"p/q\" string"
                )))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Bound, E> {
                match v.trim() {
                    "-inf" => Ok(Bound::NegInf),
                    "inf" | "+inf" => Ok(Bound::PosInf),
                    other => other.parse().map(Bound::Finite).map_err(E::custom),
                }
            }
        }

        deserializer.deserialize_any(BoundVisitor)
    }
}

fn lower_to_doc(v: &Option<Scalar>) -> Bound {
    v.clone().map_or(Bound::NegInf, Bound::Finite)
}

fn upper_to_doc(v: &Option<Scalar>) -> Bound {
    v.clone().map_or(Bound::PosInf, Bound::Finite)
}

fn lower_from_doc(b: &Bound) -> Result<Option<Scalar>> {
    match b {
        Bound::NegInf => Ok(None),
        Bound::Finite(v) => Ok(Some(v.clone())),
        Bound::PosInf => Err(Error::Parse("a lower bound cannot be +inf".into())),
    }
}

fn upper_from_doc(b: &Bound) -> Result<Option<Scalar>> {
    match b {
        Bound::PosInf => Ok(None),
        Bound::Finite(v) => Ok(Some(v.clone())),
        Bound::NegInf => Err(Error::Parse("an upper bound cannot be -inf".into())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxBound {
    pub lower: Bound,
    pub upper: Bound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffDocument {
    pub i: usize,
    pub k: usize,
    pub lower: Bound,
    pub upper: Bound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HRepDocument {
    pub schema_version: String,
    pub dim: usize,
    #[serde(rename = "box")]
    pub bounds: Vec<BoxBound>,
    #[serde(default)]
    pub diffs: Vec<DiffDocument>,
}

impl HRepDocument {
    pub fn new(h: &AlcovedHRep) -> Self {
        HRepDocument {
            schema_version: schema_version(),
            dim: h.dim,
            bounds: h
                .bounds
                .iter()
                .map(|b| BoxBound {
                    lower: lower_to_doc(&b.lower),
                    upper: upper_to_doc(&b.upper),
                })
                .collect(),
            diffs: h
                .diffs
                .iter()
                .map(|d| DiffDocument {
                    i: d.i,
                    k: d.k,
                    lower: lower_to_doc(&d.bounds.lower),
                    upper: upper_to_doc(&d.bounds.upper),
                })
                .collect(),
        }
    }

    pub fn to_hrep(&self) -> Result<AlcovedHRep> {
        check_version(&self.schema_version)?;
        let bounds = self
            .bounds
            .iter()
            .map(|b| {
                Ok(Interval::new(
                    lower_from_doc(&b.lower)?,
                    upper_from_doc(&b.upper)?,
                ))
            })
            .collect::<Result<_>>()?;
        let diffs = self
            .diffs
            .iter()
            .map(|d| {
                Ok(DiffBound {
                    i: d.i,
                    k: d.k,
                    bounds: Interval::new(lower_from_doc(&d.lower)?, upper_from_doc(&d.upper)?),
                })
            })
            .collect::<Result<_>>()?;
        let h = AlcovedHRep {
            dim: self.dim,
            bounds,
            diffs,
        };
        h.validate()?;
        Ok(h)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDocument {
    /// Coordinates in ℝ^dim, the section `x_n = 0` without its last entry.
    pub coords: Vec<Scalar>,
    pub tag: VertexTag,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexCounts {
    pub total: usize,
    pub generators: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VRepDocument {
    pub schema_version: String,
    pub dim: usize,
    pub vertices: Vec<VertexDocument>,
    pub counts: VertexCounts,
}

impl VRepDocument {
    pub fn new(v: &VertexSet) -> Self {
        VRepDocument {
            schema_version: schema_version(),
            dim: v.order - 1,
            vertices: v
                .vertices
                .iter()
                .map(|vx| {
                    let mut coords = vx.point.coords().to_vec();
                    coords.pop();
                    VertexDocument {
                        coords,
                        tag: vx.tag,
                    }
                })
                .collect(),
            counts: VertexCounts {
                total: v.len(),
                generators: v.generator_count(),
            },
        }
    }

    /// Rebuilds the vertex set, checking the counts and that points are
    /// distinct and of the declared dimension.
    pub fn to_vertex_set(&self) -> Result<VertexSet> {
        check_version(&self.schema_version)?;
        let mut vertices = Vec::with_capacity(self.vertices.len());
        for v in &self.vertices {
            if v.coords.len() != self.dim {
                return Err(Error::DimensionMismatch(format!(
                    "vertex with {} coordinates in dimension {}",
                    v.coords.len(),
                    self.dim
                )));
            }
            let point = Point::new(v.coords.clone()).embed();
            if vertices
                .iter()
                .any(|w: &crate::polytope::Vertex| w.point == point)
            {
                return Err(Error::Parse(format!("duplicate vertex {point}")));
            }
            vertices.push(crate::polytope::Vertex { point, tag: v.tag });
        }
        let set = VertexSet {
            order: self.dim + 1,
            vertices,
        };
        if set.len() != self.counts.total || set.generator_count() != self.counts.generators {
            return Err(Error::Parse(
                "vertex counts do not match the vertex list".into(),
            ));
        }
        Ok(set)
    }
}

/// Sidecar written next to a normalized matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizationDocument {
    pub schema_version: String,
    pub sigma: Vec<usize>,
    pub row_potentials: Vec<Scalar>,
    pub col_potentials: Vec<Scalar>,
    pub t: Scalar,
    pub p: GenPermMatrix,
    pub q: GenPermMatrix,
}

impl NormalizationDocument {
    pub fn new(r: &NormalizationResult) -> Self {
        NormalizationDocument {
            schema_version: schema_version(),
            sigma: r.assignment.sigma.clone(),
            row_potentials: r.assignment.row_potentials.clone(),
            col_potentials: r.assignment.col_potentials.clone(),
            t: r.t.clone(),
            p: r.p.clone(),
            q: r.q.clone(),
        }
    }
}

/// Either kind of polytope input, told apart by its keys.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum PolytopeInput {
    Matrix(MatrixDocument),
    HRep(HRepDocument),
}
