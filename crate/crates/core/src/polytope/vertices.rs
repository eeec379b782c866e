//! Exact extremal enumeration for `C_A`, `A` a Kleene star.
//!
//! A vertex of `C_A` is a feasible point at which `n − 1` independent
//! constraints `x_i − x_k = a_ik` are active. Over the nodes `0..n` (node
//! `n − 1` pinned to zero) an independent set of such equalities is a spanning
//! tree, so the search walks spanning trees of active constraints with a
//! union-find carrying offsets. A partial tree fixes all differences inside
//! each of its components, which lets infeasible branches be cut as soon as
//! two components merge.
//!
//! The number of candidate trees grows like `nⁿ⁻² · 2ⁿ⁻¹`; orders up to 6 are
//! instant and [`MAX_ENUMERATION_ORDER`] is the hard limit.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{contains, embedded};
use crate::error::{Error, Result};
use crate::matrix::MaxPlusMatrix;
use crate::point::Point;
use crate::scalar::Scalar;
use crate::span::{span_membership, Combination};

pub const MAX_ENUMERATION_ORDER: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexTag {
    /// A column of `A_0`.
    Generator,
    /// Any other extremal.
    Pseudovertex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    /// Embedded in `{x_n = 0}`: the last coordinate is zero.
    pub point: Point,
    pub tag: VertexTag,
}

/// All extremals of an alcoved polytope, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    /// Order `n` of the source matrix; points have `n` coordinates.
    pub order: usize,
    pub vertices: Vec<Vertex>,
}

impl VertexSet {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn generator_count(&self) -> usize {
        self.with_tag(VertexTag::Generator).count()
    }

    pub fn with_tag(&self, tag: VertexTag) -> impl Iterator<Item = &Point> {
        self.vertices
            .iter()
            .filter(move |v| v.tag == tag)
            .map(|v| &v.point)
    }

    pub fn points(&self) -> impl Iterator<Item = &Point> {
        self.vertices.iter().map(|v| &v.point)
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        self.vertices.iter().any(|v| &v.point == p)
    }
}

/// `C(2n − 2, n − 1)`, the largest possible number of extremals of an
/// alcoved polytope in ℝⁿ⁻¹.
pub fn develin_sturmfels_bound(n: usize) -> u128 {
    let k = n.saturating_sub(1) as u128;
    (1..=k).fold(1u128, |acc, i| acc * (k + i) / i)
}

struct Forest {
    comp: Vec<usize>,
    /// `x_v − x_root(comp[v])`.
    offset: Vec<Scalar>,
}

struct Search<'a> {
    a: &'a MaxPlusMatrix,
    n: usize,
    arcs: Vec<(usize, usize)>,
    found: BTreeSet<Point>,
}

impl Search<'_> {
    fn run(&mut self, forest: &Forest, next: usize, edges: usize) {
        if edges + 1 == self.n {
            let pin = &forest.offset[self.n - 1];
            let coords = forest.offset.iter().map(|o| o - pin).collect();
            self.found.insert(Point::new(coords));
            return;
        }
        let needed = self.n - 1 - edges;
        for idx in next..self.arcs.len() {
            if self.arcs.len() - idx < needed {
                break;
            }
            let (i, k) = self.arcs[idx];
            if forest.comp[i] == forest.comp[k] {
                continue;
            }
            if let Some(merged) = self.merge(forest, i, k) {
                self.run(&merged, idx + 1, edges + 1);
            }
        }
    }

    /// Adds `x_i − x_k = a_ik`, then checks every constraint across the two
    /// merged components.
    fn merge(&self, forest: &Forest, i: usize, k: usize) -> Option<Forest> {
        let (ci, ck) = (forest.comp[i], forest.comp[k]);
        let shift = &forest.offset[i] - self.a.get(i, k) - &forest.offset[k];
        let mut comp = forest.comp.clone();
        let mut offset = forest.offset.clone();
        for v in 0..self.n {
            if forest.comp[v] == ck {
                comp[v] = ci;
                offset[v] = &forest.offset[v] + &shift;
            }
        }
        for p in (0..self.n).filter(|&p| forest.comp[p] == ci) {
            for q in (0..self.n).filter(|&q| forest.comp[q] == ck) {
                let diff = &offset[p] - &offset[q];
                if &diff < self.a.get(p, q) || &(-&diff) < self.a.get(q, p) {
                    return None;
                }
            }
        }
        Some(Forest { comp, offset })
    }
}

fn require_kleene_star(a: &MaxPlusMatrix) -> Result<usize> {
    let n = a.order()?;
    if a.is_kleene_star()? {
        Ok(n)
    } else {
        Err(Error::NotKleeneStar)
    }
}

/// Every extremal of `C_A`, exact, tagged and sorted.
///
/// Requires a Kleene star; use [`super::tighten`] first otherwise. A Kleene
/// star always has a non-empty polytope.
pub fn enumerate_vertices(a: &MaxPlusMatrix) -> Result<VertexSet> {
    let n = require_kleene_star(a)?;
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::TooLarge {
            order: n,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    let arcs = (0..n)
        .flat_map(|i| (0..n).map(move |k| (i, k)))
        .filter(|(i, k)| i != k)
        .collect();
    let mut search = Search {
        a,
        n,
        arcs,
        found: BTreeSet::new(),
    };
    let start = Forest {
        comp: (0..n).collect(),
        offset: vec![Scalar::zero(); n],
    };
    search.run(&start, 0, 0);

    let generators: BTreeSet<Point> = a.column_normalized().columns().collect();
    let vertices = search
        .found
        .into_iter()
        .map(|point| {
            let tag = if generators.contains(&point) {
                VertexTag::Generator
            } else {
                VertexTag::Pseudovertex
            };
            Vertex { point, tag }
        })
        .collect();
    Ok(VertexSet { order: n, vertices })
}

/// Tropical coefficients over the columns of `A_0` reproducing a point `v` of
/// `C_A`, `A` a Kleene star.
pub fn express_vertex(a: &MaxPlusMatrix, v: &Point) -> Result<Combination> {
    let n = require_kleene_star(a)?;
    let v = embedded(n, v)?;
    if !contains(a, &v)? {
        return Err(Error::NotInPolytope(v.to_string()));
    }
    span_membership(a, &v)?
        .ok_or_else(|| Error::Internal(format!("{v} lies in C_A but not in span(A)")))
}

/// Columns of `(−Aᵀ)_0` for a normal idempotent `A`, deduplicated in column
/// order. Each one is an extremal of `C_A`.
pub fn dual_extremals(a: &MaxPlusMatrix) -> Result<Vec<Point>> {
    if !a.is_normal_idempotent()? {
        return Err(Error::NotNormalIdempotent);
    }
    let mut out: Vec<Point> = Vec::new();
    for col in a.transpose().negated().column_normalized().columns() {
        if !out.contains(&col) {
            out.push(col);
        }
    }
    Ok(out)
}
