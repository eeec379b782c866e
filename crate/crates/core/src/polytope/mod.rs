//! The alcoved polytope `C_A` of a square matrix.
//!
//! `C_A = { x ∈ ℝⁿ⁻¹ : a_in ≤ x_i ≤ −a_ni, a_ik ≤ x_i − x_k ≤ −a_ki }`.
//! With `x_n = 0` this is the difference-constraint system
//! `x_i − x_k ≥ a_ik` for all `i ≠ k` in `0..n`.

mod hrep;
mod vertices;

pub use hrep::{auto_t, hrep_from_matrix, matrix_from_hrep, AlcovedHRep, DiffBound, Interval};
pub use vertices::{
    develin_sturmfels_bound, dual_extremals, enumerate_vertices, express_vertex, Vertex, VertexSet,
    VertexTag, MAX_ENUMERATION_ORDER,
};

use crate::cycles;
use crate::error::{Error, Result};
use crate::matrix::MaxPlusMatrix;
use crate::point::Point;

/// Accepts a point of ℝⁿ⁻¹ or its embedding in `{x_n = 0}` and returns the
/// embedded form.
pub(crate) fn embedded(a_order: usize, x: &Point) -> Result<Point> {
    if x.dim() + 1 == a_order {
        Ok(x.embed())
    } else if x.dim() == a_order {
        if x.in_section() {
            Ok(x.clone())
        } else {
            Err(Error::NotInSection(x[x.dim() - 1].to_string()))
        }
    } else {
        Err(Error::DimensionMismatch(format!(
            "point of dimension {} for a polytope of order {a_order}",
            x.dim()
        )))
    }
}

/// Whether `C_A` is empty: the constraints `x_i − x_k ≥ a_ik` are infeasible
/// exactly when the off-diagonal digraph of `A` has a positive cycle.
pub fn is_empty(a: &MaxPlusMatrix) -> Result<bool> {
    a.order()?;
    Ok(cycles::positive_cycle(a, false).is_some())
}

/// Whether `x` satisfies all `n(n − 1)` inequalities defining `C_A`.
pub fn contains(a: &MaxPlusMatrix, x: &Point) -> Result<bool> {
    let n = a.order()?;
    let x = embedded(n, x)?;
    Ok((0..n).all(|i| (0..n).all(|k| i == k || &(&x[i] - &x[k]) >= a.get(i, k))))
}

fn require_zero_diagonal(a: &MaxPlusMatrix) -> Result<()> {
    if a.is_zero_diagonal()? {
        Ok(())
    } else {
        Err(Error::NonZeroDiagonal)
    }
}

/// The tight presentation `C_A = C_{A*}`.
pub fn tighten(a: &MaxPlusMatrix) -> Result<MaxPlusMatrix> {
    require_zero_diagonal(a)?;
    a.kleene_star()
}

/// Whether `span(A) ∩ {x_n = 0}` is convex, for zero-diagonal `A`; this
/// holds exactly when `A` is a Kleene star.
pub fn is_span_convex(a: &MaxPlusMatrix) -> Result<bool> {
    require_zero_diagonal(a)?;
    a.is_kleene_star()
}
