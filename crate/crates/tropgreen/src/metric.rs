//! The tropical Hilbert projective metric, in two evaluation modes.
//!
//! Full mode is the projective metric itself,
//! `d_H(x,y) = -(⟨x|y⟩ ⊗ ⟨y|x⟩)` with `d_H = 0` on finite scalar multiples;
//! it is scaling-invariant. Chart mode evaluates the same formula on
//! `(n-1)`-coordinate chart representatives and is *not* scaling-invariant —
//! it reproduces the numbers printed next to the bundled example figures.
//! Every consumer of distances names the mode it used.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{proj_equal, projectivize, scalar_product, TropVector};
use crate::scalar::{SemiringFlavor, TropScalar};

/// A Hilbert-metric value: a rational `≥ 0` or `+inf`, never `-inf`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DistanceValue(TropScalar);

impl DistanceValue {
    fn new(value: TropScalar) -> Self {
        match &value {
            TropScalar::NegInf => panic!("Hilbert distances are never -inf"),
            TropScalar::Finite(q) => {
                assert!(!q.is_negative(), "Hilbert distances are never negative")
            }
            TropScalar::PosInf => {}
        }
        DistanceValue(value)
    }

    pub fn scalar(&self) -> &TropScalar {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0 == TropScalar::int(0)
    }
}

impl std::fmt::Display for DistanceValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Which evaluation the caller wants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum MetricMode {
    #[serde(rename = "full")]
    Full,
    #[serde(rename = "chart")]
    Chart,
}

impl std::fmt::Display for MetricMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MetricMode::Full => "full",
            MetricMode::Chart => "chart",
        })
    }
}

/// `d_H(x,y)`: zero on finite scalar multiples, else
/// `-(⟨x|y⟩ ⊗ ⟨y|x⟩)`. Symmetric, scaling-invariant, finite on all-finite
/// vectors.
pub fn d_hilbert(x: &TropVector, y: &TropVector) -> Result<DistanceValue> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            op: "d_hilbert",
            detail: format!("{} vs {}", x.len(), y.len()),
        });
    }
    if proj_equal(x, y) {
        return Ok(DistanceValue::new(TropScalar::int(0)));
    }
    let xy = scalar_product(x, y)?;
    let yx = scalar_product(y, x)?;
    Ok(DistanceValue::new(xy.t_mul(&yx).neg_unchecked()))
}

/// A chart point: extended-rational coordinates of an affine representative.
pub type ChartPoint = Vec<TropScalar>;

/// `d_H` of two chart points viewed as affine vectors in `FT^{n-1}`.
/// All coordinates must be rational.
pub fn d_chart(u: &ChartPoint, v: &ChartPoint) -> Result<DistanceValue> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch {
            op: "d_chart",
            detail: format!("{} vs {}", u.len(), v.len()),
        });
    }
    for e in u.iter().chain(v.iter()) {
        if !e.is_finite() {
            return Err(Error::ChartUndefined(format!(
                "chart distances need rational coordinates, found {e}"
            )));
        }
    }
    let uv = TropVector::new(SemiringFlavor::FT, u.clone())?;
    let vv = TropVector::new(SemiringFlavor::FT, v.clone())?;
    d_hilbert(&uv, &vv)
}

/// Chart representatives of a family of points.
///
/// The pivot is the last coordinate at which every point takes one shared
/// constant finite value (the convention of the bundled example figures,
/// where the coordinate fixed across the drawn points is dropped); when no
/// such coordinate exists each point is sent through [`projectivize`],
/// i.e. the final coordinate is the pivot.
pub fn chart_points(points: &[TropVector]) -> Result<Vec<ChartPoint>> {
    if points.is_empty() {
        return Ok(Vec::new());
    }
    let n = points[0].len();
    for p in points {
        if p.len() != n {
            return Err(Error::DimensionMismatch {
                op: "chart_points",
                detail: "points of unequal length".into(),
            });
        }
    }
    match chart_pivot(points) {
        Some(k) => {
            let pivot_val = points[0].get(k).neg_unchecked();
            Ok(points
                .iter()
                .map(|p| {
                    p.entries()
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != k)
                        .map(|(_, e)| pivot_val.t_mul(e))
                        .collect()
                })
                .collect())
        }
        None => points.iter().map(projectivize).collect(),
    }
}

/// The last coordinate at which all points share one constant finite value.
pub fn chart_pivot(points: &[TropVector]) -> Option<usize> {
    let first = points.first()?;
    (0..first.len())
        .rev()
        .find(|&k| first.get(k).is_finite() && points.iter().all(|p| p.get(k) == first.get(k)))
}

/// All pairwise distances of a point family, sorted ascending.
pub fn distance_multiset(points: &[TropVector], mode: MetricMode) -> Result<Vec<DistanceValue>> {
    if points.len() < 2 {
        return Err(Error::PreconditionViolated(
            "distance_multiset needs at least two points".into(),
        ));
    }
    let mut out = Vec::new();
    match mode {
        MetricMode::Full => {
            for i in 0..points.len() {
                for j in i + 1..points.len() {
                    out.push(d_hilbert(&points[i], &points[j])?);
                }
            }
        }
        MetricMode::Chart => {
            let charts = chart_points(points)?;
            for i in 0..charts.len() {
                for j in i + 1..charts.len() {
                    out.push(d_chart(&charts[i], &charts[j])?);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Exact squared Euclidean distance of two rational chart points.
pub fn squared_euclidean(u: &ChartPoint, v: &ChartPoint) -> Result<BigRational> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch {
            op: "squared_euclidean",
            detail: format!("{} vs {}", u.len(), v.len()),
        });
    }
    let mut acc = BigRational::zero();
    for (a, b) in u.iter().zip(v) {
        match (a.as_rational(), b.as_rational()) {
            (Some(p), Some(q)) => {
                let d = p - q;
                acc += &d * &d;
            }
            _ => {
                return Err(Error::ChartUndefined(
                    "Euclidean comparison needs rational coordinates".into(),
                ))
            }
        }
    }
    Ok(acc)
}

/// Verify the Lipschitz comparison `d_H ≤ √2 d_E` and `d_E ≤ √(n-1) d_H`
/// between the Hilbert and Euclidean metrics on the chart, exactly, in
/// squared form: `d_H² ≤ 2 d_E²` and `d_E² ≤ (n-1) d_H²`.
///
/// `d_H` is the full projective metric of the unprojected representatives
/// `(u, 0)` and `(v, 0)` in ambient dimension `n = len + 1`.
pub fn lipschitz_check(u: &ChartPoint, v: &ChartPoint) -> Result<bool> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch {
            op: "lipschitz_check",
            detail: format!("{} vs {}", u.len(), v.len()),
        });
    }
    let lift = |c: &ChartPoint| -> Result<TropVector> {
        let mut entries = c.clone();
        entries.push(TropScalar::int(0));
        TropVector::new(SemiringFlavor::FT, entries)
    };
    let x = lift(u)?;
    let y = lift(v)?;
    let dh = d_hilbert(&x, &y)?;
    let dh = dh
        .scalar()
        .as_rational()
        .expect("all-finite vectors have finite distance")
        .clone();
    let de2 = squared_euclidean(u, v)?;
    let dh2 = &dh * &dh;
    let n_minus_1 = BigRational::from_integer((u.len() as i64).into());
    let two = BigRational::from_integer(2.into());
    Ok(dh2 <= two * &de2 && de2 <= n_minus_1 * &dh2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;
    use SemiringFlavor::{FT, T};

    fn ints(flavor: SemiringFlavor, e: &[i64]) -> TropVector {
        TropVector::from_ints(flavor, e)
    }

    fn chart(e: &[i64]) -> ChartPoint {
        e.iter().map(|&n| TropScalar::int(n)).collect()
    }

    fn dist(n: i64) -> DistanceValue {
        DistanceValue::new(TropScalar::int(n))
    }

    #[test]
    fn d_hilbert_examples() {
        assert_eq!(
            d_hilbert(&ints(FT, &[0, 0, 0]), &ints(FT, &[1, 5, 0])).unwrap(),
            dist(5)
        );
        let x = ints(FT, &[4, -1, 7]);
        assert_eq!(
            d_hilbert(&x, &x.scale(&TropScalar::int(7))).unwrap(),
            dist(0)
        );
        let u = TropVector::new(T, vec![TropScalar::int(0), TropScalar::NegInf]).unwrap();
        let w = ints(T, &[0, 0]).with_flavor(T).unwrap();
        assert_eq!(
            d_hilbert(&u, &w).unwrap(),
            DistanceValue::new(TropScalar::PosInf)
        );
    }

    #[test]
    fn d_chart_examples() {
        assert_eq!(d_chart(&chart(&[0, 0]), &chart(&[1, 5])).unwrap(), dist(4));
        assert_eq!(d_chart(&chart(&[3, 2]), &chart(&[3, 2])).unwrap(), dist(0));
        assert_eq!(d_chart(&chart(&[0, 0]), &chart(&[3, 2])).unwrap(), dist(1));
    }

    #[test]
    fn multisets_for_bundled_example() {
        let a = fixtures::a63();
        let rows: Vec<TropVector> = a.rows().collect();
        let cols: Vec<TropVector> = a.cols().collect();

        // chart mode reproduces the figure-label numbers
        assert_eq!(
            distance_multiset(&rows, MetricMode::Chart).unwrap(),
            vec![dist(1), dist(4), dist(5)]
        );
        assert_eq!(
            distance_multiset(&cols, MetricMode::Chart).unwrap(),
            vec![dist(2), dist(3), dist(5)]
        );

        // the projective metric itself gives equal multisets on both sides
        assert_eq!(
            distance_multiset(&rows, MetricMode::Full).unwrap(),
            vec![dist(3), dist(5), dist(5)]
        );
        assert_eq!(
            distance_multiset(&cols, MetricMode::Full).unwrap(),
            vec![dist(3), dist(5), dist(5)]
        );
    }

    #[test]
    fn chart_pivot_rule() {
        let a = fixtures::a63();
        let rows: Vec<TropVector> = a.rows().collect();
        let cols: Vec<TropVector> = a.cols().collect();
        assert_eq!(chart_pivot(&rows), Some(2)); // last coordinate constant
        assert_eq!(chart_pivot(&cols), Some(0)); // first coordinate constant
        let generic = vec![ints(FT, &[1, 2]), ints(FT, &[3, 4])];
        assert_eq!(chart_pivot(&generic), None);
        // fallback = projectivize
        assert_eq!(
            chart_points(&generic).unwrap(),
            vec![vec![TropScalar::int(-1)], vec![TropScalar::int(-1)]]
        );
    }

    #[test]
    fn lipschitz_examples() {
        let u = chart(&[2, -5]);
        assert!(lipschitz_check(&u, &u).unwrap());
        // d_H = 5, d_E² = 26 in ambient n = 3
        assert!(lipschitz_check(&chart(&[0, 0]), &chart(&[1, 5])).unwrap());
    }

    fn arb_fin(n: usize) -> impl Strategy<Value = TropVector> {
        proptest::collection::vec(-12i64..12, n).prop_map(move |v| TropVector::from_ints(FT, &v))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(80))]

        #[test]
        fn symmetry_scaling_nonneg(x in arb_fin(4), y in arb_fin(4), lam in -9i64..9) {
            let d = d_hilbert(&x, &y).unwrap();
            prop_assert_eq!(d.clone(), d_hilbert(&y, &x).unwrap());
            prop_assert_eq!(
                d.clone(),
                d_hilbert(&x.scale(&TropScalar::int(lam)), &y).unwrap()
            );
            prop_assert!(d.scalar() >= &TropScalar::int(0));
            prop_assert_eq!(d.is_zero(), proj_equal(&x, &y));
        }

        #[test]
        fn triangle_inequality(x in arb_fin(3), y in arb_fin(3), z in arb_fin(3)) {
            let dxy = d_hilbert(&x, &y).unwrap();
            let dyz = d_hilbert(&y, &z).unwrap();
            let dxz = d_hilbert(&x, &z).unwrap();
            prop_assert!(dxz.scalar() <= &dxy.scalar().t_mul(dyz.scalar()));
        }

        #[test]
        fn lipschitz_fuzz(u in proptest::collection::vec(-10i64..10, 3),
                          v in proptest::collection::vec(-10i64..10, 3)) {
            let cu = chart(&u);
            let cv = chart(&v);
            prop_assert!(lipschitz_check(&cu, &cv).unwrap());
        }
    }
}
