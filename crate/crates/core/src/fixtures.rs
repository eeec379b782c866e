//! Worked example matrices used throughout the test suites and the docs.

use crate::matrix::MaxPlusMatrix;

fn m<const N: usize>(rows: [[i64; N]; N]) -> MaxPlusMatrix {
    MaxPlusMatrix::from_integers(&rows).expect("fixture is well formed")
}

/// A normal idempotent 3×3 matrix whose polytope is the hexagon
/// `−1 ≤ x ≤ 3, −2 ≤ y ≤ 6, −4 ≤ y − x ≤ 5`.
pub fn hexagon() -> MaxPlusMatrix {
    m([[0, -5, -1], [-4, 0, -2], [-3, -6, 0]])
}

/// A normal idempotent 4×4 matrix whose polytope has 17 extremals.
pub fn ni_order_four() -> MaxPlusMatrix {
    m([
        [0, -6, -10, -5],
        [-8, 0, -5, -3],
        [-3, -5, 0, -6],
        [-5, -3, -6, 0],
    ])
}

/// The hexagon of [`hexagon`] without the bound `−4 ≤ y − x`, with the
/// missing entry written as `−t`.
pub fn antenna(t: i64) -> MaxPlusMatrix {
    m([[0, -5, -1], [-t, 0, -2], [-3, -6, 0]])
}

/// The Kleene star of [`antenna`], independent of `t`.
pub fn antenna_star() -> MaxPlusMatrix {
    m([[0, -5, -1], [-5, 0, -2], [-3, -6, 0]])
}

/// A zero-diagonal matrix whose square is [`ni_order_four`]; its span is not convex.
pub fn non_convex_order_four() -> MaxPlusMatrix {
    m([
        [0, -6, -10, -5],
        [-9, 0, -5, -3],
        [-3, -5, 0, -6],
        [-5, -3, -6, 0],
    ])
}

/// The 13 pseudovertices of the [`ni_order_four`] polytope, in section coordinates.
pub fn ni_order_four_pseudovertices() -> Vec<[i64; 3]> {
    vec![
        [-5, 1, 5],
        [-3, -1, -6],
        [5, 3, 6],
        [5, 3, 2],
        [1, 3, -2],
        [5, 1, 6],
        [-3, -3, -6],
        [-3, 3, 6],
        [-4, 2, 6],
        [-5, 1, -4],
        [-5, -1, -6],
        [-5, 0, 5],
        [-5, -3, 2],
    ]
}
