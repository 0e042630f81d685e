//! Report-only isometry diagnostics for the projective row spaces of a
//! pair of matrices: weak-basis distance multisets, diameters, and a
//! heuristic realizability probe. Never a verdict — an isometric embedding
//! is necessary for the J-order but not sufficient, and whether row-space
//! diameters are always attained at weak-basis points is not asserted.

use itertools::Itertools;
use rand_chacha::ChaCha8Rng;

use crate::convex::ConvexSet;
use crate::duality::sample_points;
use crate::error::Result;
use crate::linalg::{TropMatrix, TropVector};
use crate::metric::{distance_multiset, DistanceValue, MetricMode};
use rand::SeedableRng;

/// Diagnostics comparing `PR(A)` with `PR(B)`. `sound` is always `false`:
/// nothing here certifies or refutes a relation.
#[derive(Debug, Clone, serde::Serialize)]
pub struct IsometryReport {
    pub mode: MetricMode,
    pub multiset_a: Vec<DistanceValue>,
    pub multiset_b: Vec<DistanceValue>,
    pub diameter_a: Option<DistanceValue>,
    pub diameter_b: Option<DistanceValue>,
    /// whether some sampled points of `PR(B)` realize `multiset_a`
    /// (full mode only, small bases only); `None` when not attempted
    pub multiset_a_realizable_in_b: Option<bool>,
    pub sound: bool,
}

impl serde::Serialize for DistanceValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.scalar().to_text())
    }
}

/// Weak-basis distance multisets of the projective row spaces of `a` and
/// `b` in the requested mode, with diameters and a sampled realizability
/// probe.
pub fn isometry_diagnostics(
    a: &TropMatrix,
    b: &TropMatrix,
    mode: MetricMode,
    seed: u64,
) -> Result<IsometryReport> {
    let rows_a = ConvexSet::row_space(a);
    let rows_b = ConvexSet::row_space(b);
    let basis_a: Vec<TropVector> = rows_a.weak_basis().into_iter().cloned().collect();
    let basis_b: Vec<TropVector> = rows_b.weak_basis().into_iter().cloned().collect();

    let multiset = |pts: &[TropVector]| -> Result<Vec<DistanceValue>> {
        if pts.len() < 2 {
            Ok(Vec::new())
        } else {
            distance_multiset(pts, mode)
        }
    };
    let multiset_a = multiset(&basis_a)?;
    let multiset_b = multiset(&basis_b)?;
    let diameter_a = multiset_a.last().cloned();
    let diameter_b = multiset_b.last().cloned();

    // realizability probe: can |basis_a| sampled points of PR(B) reproduce
    // multiset_a? Only meaningful for the projective metric (chart values
    // depend on the presentation), and kept small.
    let multiset_a_realizable_in_b =
        if mode == MetricMode::Full && basis_a.len() >= 2 && basis_a.len() <= 4 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let pool = sample_points(&rows_b, 12, &mut rng);
            let found = pool.iter().combinations(basis_a.len()).any(|subset| {
                let pts: Vec<TropVector> = subset.into_iter().cloned().collect();
                matches!(distance_multiset(&pts, MetricMode::Full), Ok(m) if m == multiset_a)
            });
            Some(found)
        } else {
            None
        };

    Ok(IsometryReport {
        mode,
        multiset_a,
        multiset_b,
        diameter_a,
        diameter_b,
        multiset_a_realizable_in_b,
        sound: false,
    })
}
