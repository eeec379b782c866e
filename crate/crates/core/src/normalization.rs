//! Normalization `N = Q′ ⊙ A ⊙ P′` by an optimal assignment.
//!
//! Convention: `P′` carries the column permutation together with the column
//! potentials, `Q′` is diagonal with the row potentials. Both are expanded
//! with a finite off-pattern value `−t` in place of `−∞`.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::matrix::MaxPlusMatrix;
use crate::scalar::Scalar;

/// Maximum-weight assignment with dual potentials.
///
/// `u_i + v_j ≥ a_ij` everywhere, with equality on `j = sigma[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assignment {
    pub sigma: Vec<usize>,
    pub row_potentials: Vec<Scalar>,
    pub col_potentials: Vec<Scalar>,
    pub value: Scalar,
}

/// A permutation pattern with finite weights: entry `(i, sigma[i])` is
/// `weights[i]`, every other entry is `offvalue`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenPermMatrix {
    pub sigma: Vec<usize>,
    pub weights: Vec<Scalar>,
    pub offvalue: Scalar,
}

impl GenPermMatrix {
    pub fn order(&self) -> usize {
        self.sigma.len()
    }

    pub fn to_dense(&self) -> MaxPlusMatrix {
        self.to_dense_with(&self.offvalue)
    }

    /// Dense expansion with an explicit off-pattern value.
    pub fn to_dense_with(&self, offvalue: &Scalar) -> MaxPlusMatrix {
        let n = self.order();
        MaxPlusMatrix::from_fn(n, n, |i, j| {
            if self.sigma[i] == j {
                self.weights[i].clone()
            } else {
                offvalue.clone()
            }
        })
        .expect("order is positive")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizationResult {
    /// The normal matrix, `N_ij = a_{i,σ(j)} − u_i − v_{σ(j)}`.
    pub normal: MaxPlusMatrix,
    /// Right factor: column relabeling by `σ` and shifts `−v`.
    pub p: GenPermMatrix,
    /// Left factor: diagonal shifts `−u`.
    pub q: GenPermMatrix,
    /// The finite stand-in for `∞`; off-pattern entries of `p` and `q` are `−t`.
    pub t: Scalar,
    pub assignment: Assignment,
}

/// Hungarian algorithm on `cost = −A` (shortest augmenting paths with
/// potentials), followed by a lexicographically smallest choice among the
/// optimal assignments.
pub fn max_assignment(a: &MaxPlusMatrix) -> Result<Assignment> {
    let n = a.order()?;
    let cost = |i: usize, j: usize| -a.get(i, j);

    // One-based arrays; index 0 of the column side is the virtual column.
    let mut u = vec![Scalar::zero(); n + 1];
    let mut v = vec![Scalar::zero(); n + 1];
    let mut owner = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        owner[0] = i;
        let mut j0 = 0;
        let mut minv: Vec<Option<Scalar>> = vec![None; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = owner[j0];
            let mut delta: Option<Scalar> = None;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost(i0 - 1, j - 1) - &u[i0] - &v[j];
                if minv[j].as_ref().is_none_or(|m| &cur < m) {
                    minv[j] = Some(cur);
                    way[j] = j0;
                }
                let mj = minv[j].as_ref().expect("just set");
                if delta.as_ref().is_none_or(|d| mj < d) {
                    delta = Some(mj.clone());
                    j1 = j;
                }
            }
            let delta = delta.expect("an unused column remains");
            for j in 0..=n {
                if used[j] {
                    u[owner[j]] += &delta;
                    v[j] -= &delta;
                } else if let Some(m) = minv[j].as_mut() {
                    *m -= &delta;
                }
            }
            j0 = j1;
            if owner[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            owner[j0] = owner[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    // Back to the max form: u_i + v_j >= a_ij.
    let row_potentials: Vec<Scalar> = u[1..].iter().map(|x| -x).collect();
    let col_potentials: Vec<Scalar> = v[1..].iter().map(|x| -x).collect();

    // Optimal assignments are exactly the perfect matchings on tight edges.
    let tight: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| &(&row_potentials[i] + &col_potentials[j]) == a.get(i, j))
                .collect()
        })
        .collect();
    let sigma = lexicographic_matching(&tight);
    let value = (0..n).map(|i| a.get(i, sigma[i]).clone()).sum();
    Ok(Assignment {
        sigma,
        row_potentials,
        col_potentials,
        value,
    })
}

/// Lexicographically smallest perfect matching of a bipartite graph that is
/// known to have one.
fn lexicographic_matching(edges: &[Vec<bool>]) -> Vec<usize> {
    let n = edges.len();
    let mut sigma = Vec::with_capacity(n);
    let mut taken = vec![false; n];
    for i in 0..n {
        let choice = (0..n)
            .find(|&j| {
                if taken[j] || !edges[i][j] {
                    return false;
                }
                taken[j] = true;
                let ok = has_perfect_matching(edges, i + 1, &taken);
                taken[j] = false;
                ok
            })
            .expect("tight graph has a perfect matching");
        taken[choice] = true;
        sigma.push(choice);
    }
    sigma
}

/// Whether rows `first..n` can be matched into the columns not yet taken.
fn has_perfect_matching(edges: &[Vec<bool>], first: usize, taken: &[bool]) -> bool {
    fn augment(
        edges: &[Vec<bool>],
        row: usize,
        taken: &[bool],
        seen: &mut [bool],
        matched: &mut [Option<usize>],
    ) -> bool {
        for j in 0..edges.len() {
            if taken[j] || seen[j] || !edges[row][j] {
                continue;
            }
            seen[j] = true;
            if matched[j].is_none_or(|r| augment(edges, r, taken, seen, matched)) {
                matched[j] = Some(row);
                return true;
            }
        }
        false
    }

    let n = edges.len();
    let mut matched = vec![None; n];
    (first..n).all(|row| augment(edges, row, taken, &mut vec![false; n], &mut matched))
}

/// Normalizes a square matrix: `N` is normal and `N = Q′ ⊙ A ⊙ P′`.
pub fn normalize(a: &MaxPlusMatrix) -> Result<NormalizationResult> {
    let n = a.order()?;
    let assignment = max_assignment(a)?;
    let Assignment {
        sigma,
        row_potentials: u,
        col_potentials: v,
        ..
    } = &assignment;

    let normal = MaxPlusMatrix::from_fn(n, n, |i, j| a.get(i, sigma[j]) - &u[i] - &v[sigma[j]])?;

    // Every cross term of the dense product sits at least
    // t − 2|||A||| − max(|u|, |v|) below the main term, so this t suffices.
    let spread = u
        .iter()
        .chain(v.iter())
        .map(Scalar::abs)
        .max()
        .unwrap_or_default();
    let t = a.norm() + a.norm() + normal.norm() + spread + Scalar::from(1);
    let offvalue = -&t;

    let mut inverse = vec![0; n];
    for (j, &s) in sigma.iter().enumerate() {
        inverse[s] = j;
    }
    let p = GenPermMatrix {
        sigma: inverse,
        weights: v.iter().map(|x| -x).collect(),
        offvalue: offvalue.clone(),
    };
    let q = GenPermMatrix {
        sigma: (0..n).collect(),
        weights: u.iter().map(|x| -x).collect(),
        offvalue,
    };
    Ok(NormalizationResult {
        normal,
        p,
        q,
        t,
        assignment,
    })
}
