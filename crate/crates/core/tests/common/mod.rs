//! Test-only oracles, independent of the library's algorithms.

#![allow(dead_code)]

use std::collections::BTreeSet;

use alcove::span::XorShift64;
use alcove::{MaxPlusMatrix, Point, Scalar};
use itertools::Itertools;

/// Solves a square linear system exactly by Gauss-Jordan elimination.
/// Returns `None` when the system is singular.
pub fn solve(mut rows: Vec<Vec<Scalar>>, mut rhs: Vec<Scalar>) -> Option<Vec<Scalar>> {
    let d = rows.len();
    for col in 0..d {
        let pivot = (col..d).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, pivot);
        rhs.swap(col, pivot);
        for r in 0..d {
            if r == col || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].as_ratio() / rows[col][col].as_ratio();
            let factor = Scalar::from_ratio(factor);
            let pivot_row = rows[col].clone();
            for (v, p) in rows[r].iter_mut().zip(&pivot_row).skip(col) {
                *v = &*v - &p.scale(&factor);
            }
            let delta = rhs[col].scale(&factor);
            rhs[r] = &rhs[r] - &delta;
        }
    }
    Some(
        (0..d)
            .map(|i| Scalar::from_ratio(rhs[i].as_ratio() / rows[i][i].as_ratio()))
            .collect(),
    )
}

/// Extremals of `C_A` by brute force: every `(n − 1)`-subset of the
/// `n(n − 1)` inequalities is made tight and solved as a linear system; the
/// nonsingular, feasible solutions are the vertices.
pub fn brute_force_vertices(a: &MaxPlusMatrix) -> BTreeSet<Point> {
    let n = a.rows();
    let d = n - 1;
    // x_i - x_k >= a_ik, with x_{n-1} = 0 dropped from the unknowns.
    let mut normals = Vec::new();
    let mut offsets = Vec::new();
    for i in 0..n {
        for k in 0..n {
            if i == k {
                continue;
            }
            let mut row = vec![Scalar::zero(); d];
            if i < d {
                row[i] = Scalar::from(1);
            }
            if k < d {
                row[k] = Scalar::from(-1);
            }
            normals.push(row);
            offsets.push(a.get(i, k).clone());
        }
    }
    let feasible = |x: &[Scalar]| {
        normals.iter().zip(&offsets).all(|(row, b)| {
            let lhs: Scalar = row.iter().zip(x).map(|(r, v)| r.scale(v)).sum();
            &lhs >= b
        })
    };
    let mut found = BTreeSet::new();
    if d == 0 {
        found.insert(Point::origin(1));
        return found;
    }
    for subset in (0..normals.len()).combinations(d) {
        let rows = subset.iter().map(|&s| normals[s].clone()).collect();
        let rhs = subset.iter().map(|&s| offsets[s].clone()).collect();
        if let Some(x) = solve(rows, rhs) {
            if feasible(&x) {
                found.insert(Point::new(x).embed());
            }
        }
    }
    found
}

/// Exhaustive maximum over all permutations.
pub fn brute_force_assignment_value(a: &MaxPlusMatrix) -> Scalar {
    let n = a.rows();
    (0..n)
        .permutations(n)
        .map(|perm| {
            perm.iter()
                .enumerate()
                .map(|(i, &j)| a.get(i, j).clone())
                .sum()
        })
        .max()
        .unwrap()
}

pub fn random_zero_diagonal(rng: &mut XorShift64, n: usize, lo: i64, hi: i64) -> MaxPlusMatrix {
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Scalar::zero()
                    } else {
                        Scalar::from(rng.range_i64(lo, hi))
                    }
                })
                .collect()
        })
        .collect();
    MaxPlusMatrix::from_rows(rows).unwrap()
}

pub fn random_matrix(rng: &mut XorShift64, n: usize, lo: i64, hi: i64) -> MaxPlusMatrix {
    let rows = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| Scalar::from(rng.range_i64(lo, hi)))
                .collect()
        })
        .collect();
    MaxPlusMatrix::from_rows(rows).unwrap()
}

/// A random Kleene star of order `n`, not necessarily normal.
pub fn random_kleene_star(rng: &mut XorShift64, n: usize) -> MaxPlusMatrix {
    loop {
        if let Ok(star) = random_zero_diagonal(rng, n, -9, 4).kleene_star() {
            return star;
        }
    }
}

/// A random normal idempotent matrix: the star of a random normal matrix.
pub fn random_ni(rng: &mut XorShift64, n: usize) -> MaxPlusMatrix {
    random_zero_diagonal(rng, n, -12, 0).kleene_star().unwrap()
}
