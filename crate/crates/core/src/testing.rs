//! Proptest strategies shared by the unit tests.

use std::ops::RangeInclusive;

use proptest::prelude::*;

use crate::matrix::MaxPlusMatrix;
use crate::scalar::Scalar;

pub fn zero_diagonal_matrix(
    order: RangeInclusive<usize>,
    values: RangeInclusive<i64>,
) -> impl Strategy<Value = MaxPlusMatrix> {
    order.prop_flat_map(move |n| {
        proptest::collection::vec(values.clone(), n * n).prop_map(move |v| {
            MaxPlusMatrix::from_fn(n, n, |i, j| {
                if i == j {
                    Scalar::zero()
                } else {
                    Scalar::from(v[i * n + j])
                }
            })
            .unwrap()
        })
    })
}

pub fn normal_matrix(
    order: RangeInclusive<usize>,
    min: i64,
) -> impl Strategy<Value = MaxPlusMatrix> {
    zero_diagonal_matrix(order, min..=0)
}

/// Kleene stars of random normal matrices.
pub fn ni_matrix(order: RangeInclusive<usize>, min: i64) -> impl Strategy<Value = MaxPlusMatrix> {
    normal_matrix(order, min).prop_map(|a| a.kleene_star().unwrap())
}

/// Kleene stars of random zero-diagonal matrices, not necessarily normal.
pub fn kleene_star(order: RangeInclusive<usize>) -> impl Strategy<Value = MaxPlusMatrix> {
    zero_diagonal_matrix(order, -9..=3).prop_filter_map("no Kleene star", |a| a.kleene_star().ok())
}
