//! Exact max-plus (tropical) matrix algebra and alcoved polytopes.
//!
//! Matrices are dense with exact rational entries ([`Scalar`]). The crate
//! computes Kleene stars, decides whether a zero-diagonal matrix has a convex
//! column span, normalizes matrices with an optimal assignment, presents the
//! alcoved polytope `C_A` of a matrix by inequalities or by its extremals, and
//! measures spans and polytopes with the tropical seminorm.
//!
//! ```
//! use alcove::{fixtures, polytope};
//!
//! let a = fixtures::hexagon();
//! assert!(a.is_kleene_star().unwrap());
//! let vertices = polytope::enumerate_vertices(&a).unwrap();
//! assert_eq!(vertices.len(), 6);
//! assert_eq!(vertices.generator_count(), 3);
//! ```

pub mod cycles;
pub mod document;
pub mod error;
pub mod fixtures;
pub mod matrix;
pub mod metric;
pub mod normalization;
pub mod point;
pub mod polytope;
pub mod scalar;
pub mod span;

#[cfg(test)]
mod testing;

pub use error::{Error, Result};
pub use matrix::{MaxPlusMatrix, StarFailure};
pub use point::Point;
pub use scalar::Scalar;
pub use span::Combination;
