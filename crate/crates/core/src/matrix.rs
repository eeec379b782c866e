//! Dense max-plus matrices over exact rationals.

use std::fmt;

use thiserror::Error;

use crate::cycles;
use crate::error::{Error, Result};
use crate::point::Point;
use crate::scalar::Scalar;

/// A dense real matrix under the operations `⊕ = max` and `⊙ = +`.
///
/// Every entry is finite. Indices are zero-based throughout the crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MaxPlusMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// The series `A ⊕ A² ⊕ ⋯` diverges: `witness_cycle` has positive weight.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("Kleene star does not exist: cycle {witness_cycle:?} has weight {weight} > 0")]
pub struct StarFailure {
    pub witness_cycle: Vec<usize>,
    pub weight: Scalar,
}

impl MaxPlusMatrix {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch("matrix must be non-empty".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(MaxPlusMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != m) {
            return Err(Error::DimensionMismatch(format!(
                "row {bad} has {} entries, expected {m}",
                rows[bad].len()
            )));
        }
        Self::new(n, m, rows.into_iter().flatten().collect())
    }

    pub fn from_integers<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| Scalar::from(v)).collect())
                .collect(),
        )
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Result<Self> {
        let entries = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        Self::new(rows, cols, entries)
    }

    /// The order-`n` matrix of zeros. It is normal and idempotent.
    pub fn zeros(n: usize) -> Self {
        MaxPlusMatrix {
            rows: n,
            cols: n,
            entries: vec![Scalar::zero(); n * n],
        }
    }

    /// Zero diagonal with every off-diagonal entry equal to `off`.
    pub fn zero_diagonal_with(n: usize, off: &Scalar) -> Self {
        let mut a = MaxPlusMatrix {
            rows: n,
            cols: n,
            entries: vec![off.clone(); n * n],
        };
        for i in 0..n {
            a.set(i, i, Scalar::zero());
        }
        a
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Returns the order `n`, or a dimension error for rectangular input.
    pub fn order(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Point {
        Point::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn columns(&self) -> impl Iterator<Item = Point> + '_ {
        (0..self.cols).map(|j| self.column(j))
    }

    pub fn transpose(&self) -> MaxPlusMatrix {
        MaxPlusMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
            .expect("transpose keeps shape valid")
    }

    /// Classical negation of every entry.
    pub fn negated(&self) -> MaxPlusMatrix {
        MaxPlusMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|v| -v).collect(),
        }
    }

    /// `|||A||| = max |a_ij|`.
    pub fn norm(&self) -> Scalar {
        self.entries
            .iter()
            .map(Scalar::abs)
            .max()
            .expect("matrix is non-empty")
    }

    /// Entrywise `A ≤ B`.
    pub fn entrywise_le(&self, other: &MaxPlusMatrix) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    /// Entrywise maximum `A ⊕ B`.
    pub fn tropical_add(&self, other: &MaxPlusMatrix) -> Result<MaxPlusMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(MaxPlusMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.max(b).clone())
                .collect(),
        })
    }

    /// `C_ij = max_k (a_ik + b_kj)`.
    pub fn tropical_matmul(&self, other: &MaxPlusMatrix) -> Result<MaxPlusMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        MaxPlusMatrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols)
                .map(|k| self.get(i, k) + other.get(k, j))
                .max()
                .expect("inner dimension is positive")
        })
    }

    /// Applies the matrix to a point: `(A ⊙ x)_i = max_j (a_ij + x_j)`.
    pub fn apply(&self, x: &Point) -> Result<Point> {
        if x.dim() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix applied to a point of dimension {}",
                self.rows,
                self.cols,
                x.dim()
            )));
        }
        Ok(Point::new(
            (0..self.rows)
                .map(|i| {
                    (0..self.cols)
                        .map(|j| self.get(i, j) + &x[j])
                        .max()
                        .expect("positive width")
                })
                .collect(),
        ))
    }

    /// The `k`-fold tropical product, by repeated squaring.
    pub fn tropical_pow(&self, k: u32) -> Result<MaxPlusMatrix> {
        self.order()?;
        if k == 0 {
            return Err(Error::DimensionMismatch(
                "tropical power requires k >= 1".into(),
            ));
        }
        let mut result: Option<MaxPlusMatrix> = None;
        let mut base = self.clone();
        let mut e = k;
        loop {
            if e & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(r) => r.tropical_matmul(&base)?,
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.tropical_matmul(&base)?;
        }
        Ok(result.expect("k >= 1"))
    }

    /// The Kleene star `A* = A ⊕ A² ⊕ A³ ⊕ ⋯`, when the series converges.
    ///
    /// Squares `B ← B ⊕ B²` until `B = A ⊕ ⋯ ⊕ A^m` with `m ≥ n`. Without a
    /// positive cycle that partial sum is already the supremum; with one, a
    /// diagonal entry of it is positive and a witness cycle is extracted.
    pub fn kleene_star(&self) -> Result<MaxPlusMatrix> {
        let n = self.order()?;
        let mut partial = self.clone();
        let mut covered = 1usize;
        while covered < n {
            let square = partial.tropical_matmul(&partial)?;
            partial = partial.tropical_add(&square)?;
            covered *= 2;
        }
        if (0..n).any(|i| partial.get(i, i).is_positive()) {
            let witness_cycle = cycles::positive_cycle(self, true)
                .ok_or_else(|| Error::Internal("positive diagonal without cycle".into()))?;
            let weight = cycles::cycle_weight(self, &witness_cycle);
            return Err(StarFailure {
                witness_cycle,
                weight,
            }
            .into());
        }
        Ok(partial)
    }

    /// Maximum cycle mean `λ(A)` of the weighted digraph of `A`.
    pub fn max_cycle_mean(&self) -> Result<Scalar> {
        self.order()?;
        Ok(cycles::max_cycle_mean(self))
    }

    pub fn is_zero_diagonal(&self) -> Result<bool> {
        let n = self.order()?;
        Ok((0..n).all(|i| self.get(i, i).is_zero()))
    }

    /// Kleene star test by the linear characterization: `a_ii = 0` and
    /// `a_ik + a_kj ≤ a_ij` whenever `{i, j, k}` has at least two elements.
    pub fn is_kleene_star(&self) -> Result<bool> {
        if !self.is_zero_diagonal()? {
            return Ok(false);
        }
        let n = self.rows;
        for i in 0..n {
            for j in 0..n {
                let target = self.get(i, j);
                for k in 0..n {
                    if i == j && j == k {
                        continue;
                    }
                    if &(self.get(i, k) + self.get(k, j)) > target {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Kleene star test by definition: zero diagonal and `A = A²`.
    pub fn is_idempotent_zero_diagonal(&self) -> Result<bool> {
        Ok(self.is_zero_diagonal()? && self.is_idempotent()?)
    }

    pub fn is_idempotent(&self) -> Result<bool> {
        self.order()?;
        Ok(&self.tropical_matmul(self)? == self)
    }

    /// Zero diagonal and every entry `≤ 0`.
    pub fn is_normal(&self) -> Result<bool> {
        Ok(self.is_zero_diagonal()? && self.entries.iter().all(|v| !v.is_positive()))
    }

    /// Normal and `A = A²`.
    pub fn is_normal_idempotent(&self) -> Result<bool> {
        Ok(self.is_normal()? && self.is_idempotent()?)
    }

    /// `A_0` with `α_ij = a_ij − a_nj`: each column translated into the
    /// hyperplane `x_n = 0`. Works for rectangular input too.
    pub fn column_normalized(&self) -> MaxPlusMatrix {
        let last = self.rows - 1;
        MaxPlusMatrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) - self.get(last, j)
        })
        .expect("same shape")
    }
}

impl fmt::Display for MaxPlusMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            f.write_str("]")?;
            if i + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MaxPlusMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| self.row(i)))
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn m(rows: &[&[i64]]) -> MaxPlusMatrix {
        MaxPlusMatrix::from_integers(rows).unwrap()
    }

    /// Independent triple-loop product over plain integers.
    fn naive_product(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let mut c = vec![vec![i64::MIN; b[0].len()]; a.len()];
        for i in 0..a.len() {
            for j in 0..b[0].len() {
                for k in 0..b.len() {
                    c[i][j] = c[i][j].max(a[i][k] + b[k][j]);
                }
            }
        }
        c
    }

    #[test]
    fn hexagon_is_idempotent() {
        let a = fixtures::hexagon();
        assert_eq!(a.tropical_matmul(&a).unwrap(), a);
        assert_eq!(a.kleene_star().unwrap(), a);
        assert!(a.is_kleene_star().unwrap());
        assert!(a.is_normal_idempotent().unwrap());
    }

    #[test]
    fn near_identity_product() {
        let a = fixtures::hexagon();
        let z = MaxPlusMatrix::zero_diagonal_with(3, &Scalar::from(-1_000_000));
        assert_eq!(a.tropical_matmul(&z).unwrap(), a);
    }

    #[test]
    fn product_matches_triple_loop() {
        let a = [
            vec![3, -1, 4, 1],
            vec![-5, 9, -2, 6],
            vec![5, -3, 5, 8],
            vec![-9, 7, 9, -3],
        ];
        let b = [
            vec![2, 7, -1, 8],
            vec![-2, 8, 1, -8],
            vec![2, -8, 4, 5],
            vec![9, 0, -4, 5],
        ];
        let expected = naive_product(&a, &b);
        let got = m(&a.iter().map(Vec::as_slice).collect::<Vec<_>>())
            .tropical_matmul(&m(&b.iter().map(Vec::as_slice).collect::<Vec<_>>()))
            .unwrap();
        assert_eq!(
            got,
            m(&expected.iter().map(Vec::as_slice).collect::<Vec<_>>())
        );
    }

    #[test]
    fn rectangular_product_and_mismatch() {
        let a = m(&[&[0, 1, 2]]);
        let b = m(&[&[1], &[0], &[-5]]);
        assert_eq!(a.tropical_matmul(&b).unwrap(), m(&[&[1]]));
        assert!(matches!(
            a.tropical_matmul(&a),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn antenna_square_is_independent_of_t() {
        let expected = m(&[&[0, -5, -1], &[-5, 0, -2], &[-3, -6, 0]]);
        for t in [5, 6, 7, 100] {
            let a = fixtures::antenna(t);
            assert_eq!(a.tropical_pow(2).unwrap(), expected, "t = {t}");
            assert_eq!(a.kleene_star().unwrap(), expected, "t = {t}");
        }
        assert_eq!(
            fixtures::antenna(7).tropical_pow(1).unwrap(),
            fixtures::antenna(7)
        );
    }

    #[test]
    fn star_failure_witness() {
        let a = m(&[&[0, 1], &[1, 0]]);
        match a.kleene_star() {
            Err(Error::Star(failure)) => {
                let mut cycle = failure.witness_cycle.clone();
                cycle.sort_unstable();
                assert_eq!(cycle, vec![0, 1]);
                assert_eq!(failure.weight, Scalar::from(2));
            }
            other => panic!("expected star failure, got {other:?}"),
        }
        assert_eq!(a.max_cycle_mean().unwrap(), Scalar::from(1));
    }

    #[test]
    fn star_of_negative_diagonal_is_literal_supremum() {
        let a = m(&[&[-1, -3], &[-2, -4]]);
        // A² = [[-2,-4],[-3,-5]]; the series peaks at A itself.
        assert_eq!(a.kleene_star().unwrap(), a);
        assert_eq!(m(&[&[-2]]).kleene_star().unwrap(), m(&[&[-2]]));
    }

    #[test]
    fn predicates() {
        let ex4 = fixtures::non_convex_order_four();
        assert!(!ex4.is_kleene_star().unwrap());
        assert!(ex4.is_zero_diagonal().unwrap());

        let star_not_normal = m(&[&[0, -2], &[1, 0]]);
        assert!(star_not_normal.is_kleene_star().unwrap());
        assert!(!star_not_normal.is_normal().unwrap());

        let ex2 = fixtures::ni_order_four();
        assert!(ex2.is_normal().unwrap() && ex2.is_normal_idempotent().unwrap());

        let z = MaxPlusMatrix::zeros(4);
        assert!(z.is_normal().unwrap() && z.is_normal_idempotent().unwrap());

        let rect = m(&[&[0, 1]]);
        assert!(matches!(
            rect.is_kleene_star(),
            Err(Error::NotSquare { .. })
        ));
        assert!(matches!(rect.kleene_star(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn column_normalization() {
        assert_eq!(
            fixtures::hexagon().column_normalized(),
            m(&[&[3, 1, -1], &[-1, 6, -2], &[0, 0, 0]])
        );
        assert_eq!(
            fixtures::ni_order_four().column_normalized(),
            m(&[
                &[5, -3, -4, -5],
                &[-3, 3, 1, -3],
                &[2, -2, 6, -6],
                &[0, 0, 0, 0]
            ])
        );
        let zero_last = m(&[&[1, 2], &[0, 0]]);
        assert_eq!(zero_last.column_normalized(), zero_last);
    }

    mod props {
        use super::*;
        use crate::testing::{normal_matrix, zero_diagonal_matrix};
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(200))]

            #[test]
            fn zero_diagonal_is_below_square(a in zero_diagonal_matrix(2..=6, -8..=8)) {
                prop_assert!(a.entrywise_le(&a.tropical_matmul(&a).unwrap()));
            }

            #[test]
            fn star_characterizations_agree(a in zero_diagonal_matrix(2..=6, -4..=1)) {
                prop_assert_eq!(a.is_kleene_star().unwrap(), a.is_idempotent_zero_diagonal().unwrap());
                if let Ok(star) = a.kleene_star() {
                    prop_assert!(star.is_kleene_star().unwrap());
                    prop_assert_eq!(star.is_kleene_star().unwrap(), star.is_idempotent_zero_diagonal().unwrap());
                }
            }

            #[test]
            fn star_properties(a in zero_diagonal_matrix(1..=6, -9..=2)) {
                match a.kleene_star() {
                    Ok(star) => {
                        prop_assert!(a.entrywise_le(&star));
                        prop_assert_eq!(&star.tropical_matmul(&star).unwrap(), &star);
                        let n = a.rows() as u32;
                        if n >= 2 {
                            prop_assert_eq!(&a.tropical_pow(n - 1).unwrap(), &star);
                        }
                    }
                    Err(Error::Star(f)) => {
                        prop_assert!(f.weight.is_positive());
                        prop_assert!(a.max_cycle_mean().unwrap().is_positive());
                    }
                    Err(e) => prop_assert!(false, "unexpected error {e}"),
                }
            }

            #[test]
            fn normal_powers_stabilize(a in normal_matrix(2..=6, -9)) {
                let n = a.rows() as u32;
                let p = a.tropical_pow(n.max(2) - 1).unwrap();
                prop_assert_eq!(&p, &a.tropical_pow(n).unwrap());
                prop_assert!(p.is_normal_idempotent().unwrap());
                prop_assert_eq!(a.max_cycle_mean().unwrap(), Scalar::zero());
                prop_assert!(a.norm() >= p.norm());
            }

            #[test]
            fn power_by_squaring_matches_repeated_product(a in zero_diagonal_matrix(1..=4, -5..=3), k in 1u32..=7) {
                let mut expected = a.clone();
                for _ in 1..k {
                    expected = expected.tropical_matmul(&a).unwrap();
                }
                prop_assert_eq!(a.tropical_pow(k).unwrap(), expected);
            }
        }
    }
}
