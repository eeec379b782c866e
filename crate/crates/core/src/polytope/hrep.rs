//! Inequality presentations of alcoved polytopes.

use crate::error::{Error, Result};
use crate::matrix::MaxPlusMatrix;
use crate::point::Point;
use crate::scalar::Scalar;

/// `lower ≤ value ≤ upper`; `None` means unbounded on that side.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Interval {
    pub lower: Option<Scalar>,
    pub upper: Option<Scalar>,
}

impl Interval {
    pub fn new(lower: Option<Scalar>, upper: Option<Scalar>) -> Self {
        Interval { lower, upper }
    }

    pub fn finite(lower: Scalar, upper: Scalar) -> Self {
        Interval {
            lower: Some(lower),
            upper: Some(upper),
        }
    }

    pub fn holds(&self, value: &Scalar) -> bool {
        self.lower.as_ref().is_none_or(|l| l <= value)
            && self.upper.as_ref().is_none_or(|u| value <= u)
    }
}

/// `lower ≤ x_i − x_k ≤ upper`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffBound {
    pub i: usize,
    pub k: usize,
    pub bounds: Interval,
}

/// An alcoved polytope in ℝ^dim, given by bounds on coordinates and on
/// coordinate differences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlcovedHRep {
    pub dim: usize,
    /// One interval per coordinate.
    pub bounds: Vec<Interval>,
    pub diffs: Vec<DiffBound>,
}

impl AlcovedHRep {
    /// Checks index ranges and the lengths of the box.
    pub fn validate(&self) -> Result<()> {
        if self.bounds.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinate bounds for dimension {}",
                self.bounds.len(),
                self.dim
            )));
        }
        for d in &self.diffs {
            if d.i >= self.dim || d.k >= self.dim {
                return Err(Error::DimensionMismatch(format!(
                    "difference bound on ({}, {}) outside dimension {}",
                    d.i, d.k, self.dim
                )));
            }
            if d.i == d.k {
                return Err(Error::InconsistentBounds(format!(
                    "difference bound on ({}, {}) needs two distinct coordinates",
                    d.i, d.k
                )));
            }
        }
        Ok(())
    }

    /// Evaluates every inequality at `x`, a point of ℝ^dim.
    pub fn contains(&self, x: &Point) -> Result<bool> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "point of dimension {} for a polytope in dimension {}",
                x.dim(),
                self.dim
            )));
        }
        Ok(self.bounds.iter().zip(x).all(|(b, v)| b.holds(v))
            && self
                .diffs
                .iter()
                .all(|d| d.bounds.holds(&(&x[d.i] - &x[d.k]))))
    }

    /// Largest absolute value among the finite bounds.
    pub fn max_finite_bound(&self) -> Scalar {
        self.bounds
            .iter()
            .chain(self.diffs.iter().map(|d| &d.bounds))
            .flat_map(|b| b.lower.iter().chain(b.upper.iter()))
            .map(Scalar::abs)
            .max()
            .unwrap_or_default()
    }
}

/// The presentation `a_in ≤ x_i ≤ −a_ni`, `a_ik ≤ x_i − x_k ≤ −a_ki` of `C_A`.
///
/// Difference bounds are listed once per unordered pair, as `(i, k)` with
/// `i > k` in lexicographic order.
pub fn hrep_from_matrix(a: &MaxPlusMatrix) -> Result<AlcovedHRep> {
    let n = a.order()?;
    let last = n - 1;
    let bounds = (0..last)
        .map(|i| Interval::finite(a.get(i, last).clone(), -a.get(last, i)))
        .collect();
    let diffs = (0..last)
        .flat_map(|i| (0..i).map(move |k| (i, k)))
        .map(|(i, k)| DiffBound {
            i,
            k,
            bounds: Interval::finite(a.get(i, k).clone(), -a.get(k, i)),
        })
        .collect();
    Ok(AlcovedHRep {
        dim: last,
        bounds,
        diffs,
    })
}

/// The big-`t` default: twice the largest finite bound, plus one.
pub fn auto_t(h: &AlcovedHRep) -> Scalar {
    h.max_finite_bound().scale(&Scalar::from(2)) + Scalar::from(1)
}

/// Reads the presentation back into a zero-diagonal matrix.
///
/// Infinite (or absent) bounds become the entry `−t`; with `t = None` the
/// value from [`auto_t`] is used. Two bounds that land on the same entry
/// must agree.
pub fn matrix_from_hrep(h: &AlcovedHRep, t: Option<Scalar>) -> Result<MaxPlusMatrix> {
    h.validate()?;
    let n = h.dim + 1;
    let last = h.dim;
    let mut entries: Vec<Option<Scalar>> = vec![None; n * n];
    let mut put = |i: usize, j: usize, value: Scalar| -> Result<()> {
        let slot = &mut entries[i * n + j];
        match slot {
            Some(existing) if *existing != value => Err(Error::InconsistentBounds(format!(
                "entry ({i}, {j}) bound to both {existing} and {value}"
            ))),
            _ => {
                *slot = Some(value);
                Ok(())
            }
        }
    };
    for (i, b) in h.bounds.iter().enumerate() {
        if let Some(l) = &b.lower {
            put(i, last, l.clone())?;
        }
        if let Some(u) = &b.upper {
            put(last, i, -u)?;
        }
    }
    for d in &h.diffs {
        if let Some(l) = &d.bounds.lower {
            put(d.i, d.k, l.clone())?;
        }
        if let Some(u) = &d.bounds.upper {
            put(d.k, d.i, -u)?;
        }
    }
    let filler = -&t.unwrap_or_else(|| auto_t(h));
    MaxPlusMatrix::from_fn(n, n, |i, j| {
        if i == j {
            Scalar::zero()
        } else {
            entries[i * n + j].clone().unwrap_or_else(|| filler.clone())
        }
    })
}
