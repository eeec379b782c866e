//! Tropical seminorm, distance and radii.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::MaxPlusMatrix;
use crate::point::{check_same_dim, Point};
use crate::polytope::{contains, AlcovedHRep, VertexSet};
use crate::scalar::Scalar;

/// `‖p‖ = max_{i,j} { |p_i|, |p_i − p_j| }`.
///
/// Appending a zero coordinate does not change the value.
pub fn seminorm(p: &Point) -> Scalar {
    let (Some(max), Some(min)) = (p.iter().max(), p.iter().min()) else {
        return Scalar::zero();
    };
    // max |p_i| and max |p_i − p_j| are both attained at the extremes.
    let spread = max - min;
    spread.max(max.abs()).max(min.abs())
}

/// `dd(p, q) = ‖p − q‖`, a distance on `{x_n = 0}`.
pub fn tropical_distance(p: &Point, q: &Point) -> Result<Scalar> {
    check_same_dim(p, q)?;
    Ok(seminorm(&(p - q)))
}

/// `τ(p) = max_{i,j} (p_i − p_j)`; never exceeds `‖p‖`.
pub fn range_seminorm(p: &Point) -> Scalar {
    match (p.iter().max(), p.iter().min()) {
        (Some(max), Some(min)) => max - min,
        _ => Scalar::zero(),
    }
}

/// `|||A||| = max |a_ij|`.
pub fn matrix_norm(a: &MaxPlusMatrix) -> Scalar {
    a.norm()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RadiusMethod {
    /// Radius read off the matrix norm of a normal matrix.
    NormTheorem,
    /// Maximum of the seminorm over the extremals of a polytope.
    VertexMax,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadiusReport {
    pub radius: Scalar,
    /// A point of the measured set whose seminorm equals `radius`.
    pub attaining_point: Point,
    pub method: RadiusMethod,
}

/// The radius of `span(A) ∩ {x_n = 0}` for a normal `A`, which is `|||A|||`.
///
/// The attaining point is the first column of `A_0` of largest seminorm.
pub fn radius_section(a: &MaxPlusMatrix) -> Result<RadiusReport> {
    if !a.is_normal()? {
        return Err(Error::NotNormal);
    }
    let radius = a.norm();
    let attaining_point = a
        .column_normalized()
        .columns()
        .find(|c| seminorm(c) == radius)
        .ok_or_else(|| Error::Internal("no column of A_0 attains |||A|||".into()))?;
    Ok(RadiusReport {
        radius,
        attaining_point,
        method: RadiusMethod::NormTheorem,
    })
}

/// Where a vertex set came from, so that origin containment can be checked.
#[derive(Debug, Clone, Copy)]
pub enum PolytopeSource<'a> {
    /// The polytope is `C_A`.
    Matrix(&'a MaxPlusMatrix),
    /// The polytope is given by inequalities.
    HRep(&'a AlcovedHRep),
}

/// The radius of a polytope given by its extremals: the seminorm is convex,
/// so its supremum over the polytope is attained at a vertex.
pub fn radius_polytope(vertices: &VertexSet, source: PolytopeSource<'_>) -> Result<RadiusReport> {
    let origin_inside = match source {
        PolytopeSource::Matrix(a) => {
            if a.order()? != vertices.order {
                return Err(Error::DimensionMismatch(format!(
                    "vertex set of order {} for a matrix of order {}",
                    vertices.order,
                    a.rows()
                )));
            }
            contains(a, &Point::origin(vertices.order))?
        }
        PolytopeSource::HRep(h) => h.contains(&Point::origin(h.dim))?,
    };
    if !origin_inside {
        return Err(Error::OriginNotContained);
    }
    let (radius, attaining_point) = vertices
        .points()
        .map(|p| (seminorm(p), p))
        .reduce(|best, cur| if cur.0 > best.0 { cur } else { best })
        .ok_or_else(|| Error::DimensionMismatch("empty vertex set".into()))?;
    Ok(RadiusReport {
        radius,
        attaining_point: attaining_point.clone(),
        method: RadiusMethod::VertexMax,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::polytope::{enumerate_vertices, hrep_from_matrix};
    use crate::span::span_sample;

    fn p(c: &[i64]) -> Point {
        Point::from_integers(c)
    }

    /// Direct evaluation of the defining maximum.
    fn seminorm_by_definition(p: &Point) -> Scalar {
        let mut best = Scalar::zero();
        for a in p {
            best = best.max(a.abs());
            for b in p {
                best = best.max((a - b).abs());
            }
        }
        best
    }

    #[test]
    fn seminorm_values() {
        assert_eq!(seminorm(&p(&[-5, -2, 0])), Scalar::from(5));
        assert_eq!(seminorm(&p(&[0, 0, 0])), Scalar::zero());
        assert_eq!(seminorm(&p(&[3, -1, 0])), Scalar::from(4));
        assert_eq!(seminorm(&Point::default()), Scalar::zero());
    }

    #[test]
    fn distance_values() {
        let d = |a: &[i64], b: &[i64]| tropical_distance(&p(a), &p(b)).unwrap();
        assert_eq!(d(&[-2, -2, 0], &[0, 0, 0]), Scalar::from(2));
        assert_eq!(d(&[-5, -2, 0], &[-2, -5, 0]), Scalar::from(6));
        assert_eq!(d(&[-5, -2, 0], &[0, 0, 0]), Scalar::from(5));
        assert_eq!(d(&[4, 1, 0], &[4, 1, 0]), Scalar::zero());
        assert!(tropical_distance(&p(&[1]), &p(&[1, 0])).is_err());
    }

    #[test]
    fn range_seminorm_values() {
        assert_eq!(range_seminorm(&p(&[-5, -2, 0])), Scalar::from(5));
        assert_eq!(range_seminorm(&p(&[7, 7, 7])), Scalar::zero());
        assert_eq!(range_seminorm(&p(&[3, -1, 0])), Scalar::from(4));
        // not invariant under the embedding
        assert_eq!(range_seminorm(&p(&[3, 2])), Scalar::from(1));
        assert_eq!(range_seminorm(&p(&[3, 2, 0])), Scalar::from(3));
    }

    #[test]
    fn norms() {
        assert_eq!(matrix_norm(&fixtures::ni_order_four()), Scalar::from(10));
        assert_eq!(
            matrix_norm(&fixtures::non_convex_order_four()),
            Scalar::from(10)
        );
        assert_eq!(matrix_norm(&MaxPlusMatrix::zeros(3)), Scalar::zero());
    }

    #[test]
    fn section_radii() {
        let r = radius_section(&fixtures::ni_order_four()).unwrap();
        assert_eq!(r.radius, Scalar::from(10));
        assert_eq!(seminorm(&r.attaining_point), r.radius);
        for t in [6, 7, 10, 25] {
            assert_eq!(
                radius_section(&fixtures::antenna(t)).unwrap().radius,
                Scalar::from(t)
            );
        }
        assert_eq!(
            radius_section(&MaxPlusMatrix::zeros(2)).unwrap().radius,
            Scalar::zero()
        );
        let not_normal = MaxPlusMatrix::from_integers(&[[0, -2], [1, 0]]).unwrap();
        assert_eq!(radius_section(&not_normal), Err(Error::NotNormal));
    }

    #[test]
    fn sampled_section_stays_within_radius() {
        let a = fixtures::antenna(7);
        let r = radius_section(&a).unwrap().radius;
        assert!(span_sample(&a, 2000, 11).iter().all(|x| seminorm(x) <= r));
    }

    #[test]
    fn polytope_radii() {
        let a = fixtures::ni_order_four();
        let v = enumerate_vertices(&a).unwrap();
        let r = radius_polytope(&v, PolytopeSource::Matrix(&a)).unwrap();
        assert_eq!(r.radius, Scalar::from(10));
        assert_eq!(r.method, RadiusMethod::VertexMax);
        assert!(v.contains_point(&r.attaining_point));

        let star = fixtures::antenna_star();
        let v = enumerate_vertices(&star).unwrap();
        assert_eq!(
            radius_polytope(&v, PolytopeSource::Matrix(&star))
                .unwrap()
                .radius,
            Scalar::from(6)
        );
        let h = hrep_from_matrix(&star).unwrap();
        assert_eq!(
            radius_polytope(&v, PolytopeSource::HRep(&h))
                .unwrap()
                .radius,
            Scalar::from(6)
        );

        let z = MaxPlusMatrix::zeros(3);
        let v = enumerate_vertices(&z).unwrap();
        assert_eq!(
            radius_polytope(&v, PolytopeSource::Matrix(&z))
                .unwrap()
                .radius,
            Scalar::zero()
        );
    }

    #[test]
    fn polytope_without_origin() {
        // 1 <= x <= 2 in the line
        let a = MaxPlusMatrix::from_integers(&[[0, 1], [-2, 0]]).unwrap();
        let v = enumerate_vertices(&a).unwrap();
        assert_eq!(
            radius_polytope(&v, PolytopeSource::Matrix(&a)),
            Err(Error::OriginNotContained)
        );
    }

    mod props {
        use super::*;
        use crate::testing::ni_matrix;
        use proptest::prelude::*;

        fn point(dim: usize) -> impl Strategy<Value = Point> {
            proptest::collection::vec((-50i64..=50, 1i64..=6), dim).prop_map(|v| {
                Point::new(
                    v.into_iter()
                        .map(|(a, b)| Scalar::from_fraction(a, b))
                        .collect(),
                )
            })
        }

        fn pair() -> impl Strategy<Value = (Point, Point)> {
            (1usize..=6).prop_flat_map(|d| (point(d), point(d)))
        }

        proptest! {
            #[test]
            fn seminorm_axioms((x, y) in pair(), k in -5i64..=5) {
                prop_assert_eq!(seminorm(&x), seminorm_by_definition(&x));
                prop_assert!(!seminorm(&x).is_negative());
                prop_assert!(seminorm(&(&x + &y)) <= seminorm(&x) + seminorm(&y));
                let c = Scalar::from(k);
                let scaled = Point::new(x.iter().map(|v| v.scale(&c)).collect());
                prop_assert_eq!(seminorm(&scaled), seminorm(&x).scale(&c.abs()));
                prop_assert_eq!(seminorm(&x.embed()), seminorm(&x));
                prop_assert_eq!(tropical_distance(&x, &y).unwrap(), seminorm(&(&x - &y)));
            }

            #[test]
            fn range_below_seminorm(x in (1usize..=6).prop_flat_map(point)) {
                let tau = range_seminorm(&x);
                prop_assert!(tau <= seminorm(&x));
                let max = x.iter().max().unwrap();
                let min = x.iter().min().unwrap();
                if !max.is_negative() && !min.is_positive() {
                    prop_assert_eq!(tau, seminorm(&x));
                }
                // on the hyperplane τ and ‖·‖ induce the same distance
                let e = x.embed();
                prop_assert_eq!(range_seminorm(&e), seminorm(&e));
            }

            #[test]
            fn radius_theorem(a in ni_matrix(2..=5, -9)) {
                let section = radius_section(&a).unwrap();
                let v = enumerate_vertices(&a).unwrap();
                let poly = radius_polytope(&v, PolytopeSource::Matrix(&a)).unwrap();
                prop_assert_eq!(&section.radius, &a.norm());
                prop_assert_eq!(&poly.radius, &a.norm());
                prop_assert_eq!(seminorm(&section.attaining_point), section.radius);
            }
        }
    }
}
