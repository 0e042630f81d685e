//! The duality maps between the row and column space of a square matrix,
//! and executable verification of their order, scaling and isometry
//! properties.
//!
//! `θ_A(x) = A ⊗ (-x)ᵀ` maps `R(A)` to `C(A)` and `θ'_A(x) = (-x)ᵀ ⊗ A`
//! maps back; they only make sense where the involution is total, so the
//! flavor must be `FT` or `TBar`.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::convex::ConvexSet;
use crate::error::{Error, Result};
use crate::linalg::{mat_vec, vec_mat, TropMatrix, TropVector};
use crate::metric::d_hilbert;
use crate::scalar::{SemiringFlavor, TropScalar};

fn require_involutive(a: &TropMatrix, op: &'static str) -> Result<()> {
    if !a.flavor().involution_total() {
        return Err(Error::FlavorUnsupported {
            op,
            flavor: a.flavor().name(),
        });
    }
    Ok(())
}

/// `θ_A(x) = A ⊗ (-x)ᵀ`, from the row space into the column space.
/// Errors if `x` is not a member of `R(A)`.
pub fn theta(a: &TropMatrix, x: &TropVector) -> Result<TropVector> {
    require_involutive(a, "theta")?;
    if ConvexSet::row_space(a).member(x)?.is_none() {
        return Err(Error::NotAMember);
    }
    mat_vec(a, &x.neg_unchecked())
}

/// `θ'_A(x) = (-x)ᵀ ⊗ A`, from the column space into the row space.
/// Errors if `x` is not a member of `C(A)`.
pub fn theta_prime(a: &TropMatrix, x: &TropVector) -> Result<TropVector> {
    require_involutive(a, "theta_prime")?;
    if ConvexSet::col_space(a).member(x)?.is_none() {
        return Err(Error::NotAMember);
    }
    vec_mat(&x.neg_unchecked(), a)
}

/// Deterministic sample of points in a convex set: the weak basis plus
/// random tropical combinations with small rational coefficients.
pub fn sample_points(set: &ConvexSet, extra: usize, rng: &mut ChaCha8Rng) -> Vec<TropVector> {
    let mut points: Vec<TropVector> = set.weak_basis().into_iter().cloned().collect();
    let basis: Vec<TropVector> = points.clone();
    if basis.is_empty() {
        return points;
    }
    for _ in 0..extra {
        let coeffs: Vec<TropScalar> = basis
            .iter()
            .map(|_| {
                if set.flavor() != SemiringFlavor::FT && rng.gen_bool(0.2) {
                    TropScalar::NegInf
                } else {
                    TropScalar::ratio(rng.gen_range(-12..=12), rng.gen_range(1..=2))
                }
            })
            .collect();
        let combo = crate::convex::combine(set.ambient_dim(), &basis, &coeffs);
        if let Ok(v) = combo.with_flavor(set.flavor()) {
            points.push(v);
        }
    }
    points
}

/// Aggregate result of a sampled duality check.
#[derive(Debug, Clone, serde::Serialize)]
pub struct DualityReport {
    pub pass: bool,
    pub pairs_checked: usize,
    pub failure: Option<String>,
}

/// Check that `θ_A` preserves Hilbert distances between sampled points of
/// `R(A)`, exactly. Fails loudly with the first counterexample.
pub fn check_metric_duality(a: &TropMatrix, samples: usize, seed: u64) -> Result<DualityReport> {
    require_involutive(a, "check_metric_duality")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = ConvexSet::row_space(a);
    let points = sample_points(&rows, samples, &mut rng);
    let mut pairs_checked = 0;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let lhs = d_hilbert(&points[i], &points[j])?;
            let rhs = d_hilbert(&theta(a, &points[i])?, &theta(a, &points[j])?)?;
            pairs_checked += 1;
            if lhs != rhs {
                return Ok(DualityReport {
                    pass: false,
                    pairs_checked,
                    failure: Some(format!(
                        "d_H({:?}, {:?}) = {} but images give {}",
                        points[i].entries(),
                        points[j].entries(),
                        lhs,
                        rhs
                    )),
                });
            }
        }
    }
    Ok(DualityReport {
        pass: true,
        pairs_checked,
        failure: None,
    })
}
