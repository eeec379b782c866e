//! Cycle computations on the complete weighted digraph of a square matrix.
//!
//! The arc `i -> j` carries weight `a_ij`, so the weight of a cycle
//! `(i_1, …, i_k)` is `a_{i_1 i_2} + … + a_{i_k i_1}`.

use crate::matrix::MaxPlusMatrix;
use crate::scalar::Scalar;

/// Weight of the closed walk visiting `cycle` in order.
pub fn cycle_weight(a: &MaxPlusMatrix, cycle: &[usize]) -> Scalar {
    let k = cycle.len();
    (0..k)
        .map(|s| a.get(cycle[s], cycle[(s + 1) % k]).clone())
        .sum()
}

/// Finds a cycle of strictly positive weight, if one exists.
///
/// Longest-path Bellman–Ford from a virtual source joined to every node with
/// weight zero. If a relaxation still succeeds in round `n`, walking the
/// parent pointers `n` steps lands on a cycle of the parent graph, and every
/// cycle of that graph has positive weight. With `with_loops = false` the
/// diagonal is ignored, which is the feasibility test for the difference
/// constraints `x_i - x_k >= a_ik`.
pub fn positive_cycle(a: &MaxPlusMatrix, with_loops: bool) -> Option<Vec<usize>> {
    let n = a.rows();
    let mut dist = vec![Scalar::zero(); n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut last_updated = None;

    for _ in 0..n {
        last_updated = None;
        for u in 0..n {
            for v in 0..n {
                if u == v && !with_loops {
                    continue;
                }
                let candidate = &dist[u] + a.get(u, v);
                if candidate > dist[v] {
                    dist[v] = candidate;
                    parent[v] = Some(u);
                    last_updated = Some(v);
                }
            }
        }
        last_updated?;
    }

    let mut x = last_updated?;
    for _ in 0..n {
        x = parent[x].expect("updated node has a parent");
    }
    // `x` lies on a cycle of the parent graph; parents point backwards.
    let mut cycle = vec![x];
    let mut y = parent[x].expect("cycle node has a parent");
    while y != x {
        cycle.push(y);
        y = parent[y].expect("cycle node has a parent");
    }
    cycle.reverse();
    debug_assert!(cycle_weight(a, &cycle).is_positive());
    Some(cycle)
}

/// Maximum cycle mean by Karp's algorithm, exact.
pub fn max_cycle_mean(a: &MaxPlusMatrix) -> Scalar {
    let n = a.rows();
    // walks[k][v]: maximum weight of a walk with exactly k arcs ending at v.
    let mut walks: Vec<Vec<Scalar>> = Vec::with_capacity(n + 1);
    walks.push(vec![Scalar::zero(); n]);
    for k in 1..=n {
        let prev = &walks[k - 1];
        let row = (0..n)
            .map(|v| {
                (0..n)
                    .map(|u| &prev[u] + a.get(u, v))
                    .max()
                    .expect("non-empty matrix")
            })
            .collect();
        walks.push(row);
    }
    (0..n)
        .map(|v| {
            (0..n)
                .map(|k| (&walks[n][v] - &walks[k][v]).div_int((n - k) as i64))
                .min()
                .expect("non-empty matrix")
        })
        .max()
        .expect("non-empty matrix")
}
