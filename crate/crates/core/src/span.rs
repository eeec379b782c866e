//! Tropical column spans: membership by residuation and seeded sampling.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::MaxPlusMatrix;
use crate::point::Point;
use crate::scalar::Scalar;

/// Tropical coefficients `μ` over the columns of `A_0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Combination {
    pub mu: Vec<Scalar>,
}

impl Combination {
    /// `max_k (α_jk + μ_k)` for every row `j` of `a0`.
    pub fn recombine(&self, a0: &MaxPlusMatrix) -> Result<Point> {
        a0.apply(&Point::new(self.mu.clone()))
    }

    /// Tropical sum of the coefficients.
    pub fn total(&self) -> Scalar {
        self.mu.iter().max().cloned().unwrap_or_default()
    }
}

/// Decides whether `x` (a point of `{x_n = 0}`) lies in `span(A)`.
///
/// Computes the principal solution `μ*_k = min_j (x_j − α_jk)`, which is the
/// greatest `μ` with `A_0 ⊙ μ ≤ x`. Some `μ` solves `A_0 ⊙ μ = x` exactly when
/// `μ*` does, so `None` is a definite non-membership verdict. The last row of
/// `A_0` is zero, which forces `max_k μ*_k = 0` for members.
pub fn span_membership(a: &MaxPlusMatrix, x: &Point) -> Result<Option<Combination>> {
    if x.dim() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "point of dimension {} for a matrix with {} rows",
            x.dim(),
            a.rows()
        )));
    }
    if !x.in_section() {
        return Err(Error::NotInSection(x[x.dim() - 1].to_string()));
    }
    let a0 = a.column_normalized();
    let mu: Vec<Scalar> = (0..a0.cols())
        .map(|k| {
            (0..a0.rows())
                .map(|j| &x[j] - a0.get(j, k))
                .min()
                .expect("matrix has rows")
        })
        .collect();
    let combination = Combination { mu };
    if &combination.recombine(&a0)? == x {
        Ok(Some(combination))
    } else {
        Ok(None)
    }
}

/// The point `A_0 ⊙ μ`; lies in `span(A) ∩ {x_n = 0}` when `max μ = 0`.
pub fn span_point(a: &MaxPlusMatrix, mu: &[Scalar]) -> Result<Point> {
    Combination { mu: mu.to_vec() }.recombine(&a.column_normalized())
}

/// xorshift64* generator seeded through one SplitMix64 step.
///
/// Fixed so that span samples are reproducible for a given seed.
#[derive(Debug, Clone)]
pub struct XorShift64 {
    state: u64,
}

impl XorShift64 {
    pub fn new(seed: u64) -> Self {
        let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
        XorShift64 {
            state: if z == 0 { 0x2545_F491_4F6C_DD1D } else { z },
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform-ish integer in `0..bound` (modulo reduction). `bound > 0`.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Integer in `lo..=hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

/// Draws `count` points of `span(A) ∩ {x_n = 0}`.
///
/// Each coefficient is a half-integer in `[−2R, 0]` with `R = max(1, |||A_0|||)`
/// rounded up, and one uniformly chosen coefficient is reset to `0` so that
/// `max μ = 0`.
pub fn span_sample(a: &MaxPlusMatrix, count: usize, seed: u64) -> Vec<Point> {
    let a0 = a.column_normalized();
    let m = a0.cols();
    let reach = a0.norm().to_f64().ceil().max(1.0) as u64;
    let mut rng = XorShift64::new(seed);
    (0..count)
        .map(|_| {
            let mut mu: Vec<Scalar> = (0..m)
                .map(|_| Scalar::from_fraction(-(rng.below(4 * reach + 1) as i64), 2))
                .collect();
            mu[rng.below(m as u64) as usize] = Scalar::zero();
            Combination { mu }
                .recombine(&a0)
                .expect("coefficients match the column count")
        })
        .collect()
}
