use std::fmt;
use std::ops::{Add, Index, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A point of ℝⁿ with exact coordinates.
///
/// Points of ℝⁿ⁻¹ are identified with the hyperplane `x_n = 0`; see
/// [`Point::embed`] and [`Point::section`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(Vec<Scalar>);

impl Point {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Point(coords)
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&c| Scalar::from(c)).collect())
    }

    pub fn origin(dim: usize) -> Self {
        Point(vec![Scalar::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.0.iter()
    }

    /// Appends a zero coordinate, mapping ℝⁿ⁻¹ onto `{x_n = 0}`.
    pub fn embed(&self) -> Point {
        let mut coords = self.0.clone();
        coords.push(Scalar::zero());
        Point(coords)
    }

    /// Drops the last coordinate. Errors unless that coordinate is zero.
    pub fn section(&self) -> Result<Point> {
        match self.0.split_last() {
            Some((last, rest)) if last.is_zero() => Ok(Point(rest.to_vec())),
            Some((last, _)) => Err(Error::NotInSection(last.to_string())),
            None => Err(Error::DimensionMismatch(
                "empty point has no section".into(),
            )),
        }
    }

    pub fn in_section(&self) -> bool {
        self.0.last().is_some_and(Scalar::is_zero)
    }

    /// Classical translation by `(λ, …, λ)`.
    pub fn translate(&self, lambda: &Scalar) -> Point {
        Point(self.0.iter().map(|c| c + lambda).collect())
    }

    /// Coordinatewise maximum.
    pub fn tropical_add(&self, other: &Point) -> Result<Point> {
        check_same_dim(self, other)?;
        Ok(Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.max(b).clone())
                .collect(),
        ))
    }

    /// Classical convex combination `θ·self + (1 − θ)·other`.
    pub fn convex_combination(&self, other: &Point, theta: &Scalar) -> Result<Point> {
        check_same_dim(self, other)?;
        Ok(Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| b + (a - b).scale(theta))
                .collect(),
        ))
    }
}

pub(crate) fn check_same_dim(p: &Point, q: &Point) -> Result<()> {
    if p.dim() == q.dim() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!(
            "points of dimension {} and {}",
            p.dim(),
            q.dim()
        )))
    }
}

impl Index<usize> for Point {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl From<Vec<Scalar>> for Point {
    fn from(coords: Vec<Scalar>) -> Self {
        Point(coords)
    }
}

impl<'a> IntoIterator for &'a Point {
    type Item = &'a Scalar;
    type IntoIter = std::slice::Iter<'a, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Classical coordinatewise sum. Panics on dimension mismatch.
impl Add for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        assert_eq!(self.dim(), rhs.dim(), "point dimension mismatch");
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

/// Classical coordinatewise difference. Panics on dimension mismatch.
impl Sub for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        assert_eq!(self.dim(), rhs.dim(), "point dimension mismatch");
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
