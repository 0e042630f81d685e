//! Witness finitization: turning sandwich factors over a larger semiring
//! into factors over a smaller one without disturbing the product.
//!
//! For `A, B` finitary and `P, Q` over `T` with `A = P ⊗ B ⊗ Q`, replacing
//! every `-inf` entry of `P` and `Q` by a sufficiently negative `δ` keeps
//! the product intact; the three bounds below say how negative suffices.
//! For `A, B` over `T` and `P, Q` over `TBar`, replacing every `+inf` by
//! `0` does the same.

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::linalg::{mat_mul, TropMatrix};
use crate::scalar::{SemiringFlavor, TropScalar};

fn finite_min_max(m: &TropMatrix) -> Option<(BigRational, BigRational)> {
    let mut range: Option<(BigRational, BigRational)> = None;
    for i in 0..m.n_rows() {
        for j in 0..m.n_cols() {
            if let Some(q) = m.get(i, j).as_rational() {
                range = Some(match range {
                    None => (q.clone(), q.clone()),
                    Some((lo, hi)) => (lo.min(q.clone()), hi.max(q.clone())),
                });
            }
        }
    }
    range
}

fn check_product(p: &TropMatrix, b: &TropMatrix, q: &TropMatrix, a: &TropMatrix) -> Result<()> {
    let product = mat_mul(&mat_mul(p, b)?, q)?;
    if product != *a {
        return Err(Error::PreconditionViolated(
            "A = P ⊗ B ⊗ Q does not hold for the given factors".into(),
        ));
    }
    Ok(())
}

/// Replace every `-inf` entry of `P` and `Q` by a `δ` small enough that
/// `A = P' ⊗ B ⊗ Q'` still holds, yielding finitary factors.
///
/// Requires `A`, `B` finitary, `P`, `Q` over `T` and `A = P ⊗ B ⊗ Q`.
/// The bounds: `δ ≤ p+b+q-b'-p'`, `δ ≤ p+b+q-b'-q'` and `2δ ≤ p+b+q-b'`
/// over all finite entries `p,p'` of `P`, `q,q'` of `Q` and all entries
/// `b,b'` of `B`.
pub fn finitize_t_witness(
    p: &TropMatrix,
    b: &TropMatrix,
    q: &TropMatrix,
    a: &TropMatrix,
) -> Result<(TropMatrix, TropMatrix)> {
    if a.flavor() != SemiringFlavor::FT || b.flavor() != SemiringFlavor::FT {
        return Err(Error::PreconditionViolated(
            "finitize_t_witness needs finitary A and B".into(),
        ));
    }
    for (m, name) in [(p, "P"), (q, "Q")] {
        if m.rows().any(|r| r.entries().contains(&TropScalar::PosInf)) {
            return Err(Error::PreconditionViolated(format!(
                "factor {name} must live in T (no +inf entries)"
            )));
        }
    }
    check_product(p, b, q, a)?;

    let already_finite =
        p.with_flavor(SemiringFlavor::FT).is_ok() && q.with_flavor(SemiringFlavor::FT).is_ok();
    if already_finite {
        return Ok((
            p.with_flavor(SemiringFlavor::FT)?,
            q.with_flavor(SemiringFlavor::FT)?,
        ));
    }

    // A is finitary, so P has a finite entry in every row and Q in every
    // column; B is all-finite.
    let (min_p, max_p) = finite_min_max(p).expect("P has finite entries");
    let (min_q, max_q) = finite_min_max(q).expect("Q has finite entries");
    let (min_b, max_b) = finite_min_max(b).expect("B is finitary");

    let base = &min_p + &min_b + &min_q - &max_b;
    let bound1 = &base - &max_p;
    let bound2 = &base - &max_q;
    let bound3 = base / BigRational::from_integer(2.into());
    let delta = TropScalar::Finite(bound1.min(bound2).min(bound3));

    let p_prime = p
        .substitute(&TropScalar::NegInf, &delta)
        .with_flavor(SemiringFlavor::FT)?;
    let q_prime = q
        .substitute(&TropScalar::NegInf, &delta)
        .with_flavor(SemiringFlavor::FT)?;
    let product = mat_mul(&mat_mul(&p_prime, b)?, &q_prime)?;
    assert_eq!(
        product.with_flavor(SemiringFlavor::FT)?,
        *a,
        "the replacement bounds guarantee the product is preserved"
    );
    Ok((p_prime, q_prime))
}

/// Replace every `+inf` entry of `P` and `Q` by `0`, preserving
/// `A = P' ⊗ B ⊗ Q'`. Requires `A`, `B` over `T` (or `FT`) and
/// `A = P ⊗ B ⊗ Q`.
pub fn finitize_tbar_witness(
    p: &TropMatrix,
    b: &TropMatrix,
    q: &TropMatrix,
    a: &TropMatrix,
) -> Result<(TropMatrix, TropMatrix)> {
    if a.flavor() == SemiringFlavor::TBar || b.flavor() == SemiringFlavor::TBar {
        return Err(Error::PreconditionViolated(
            "finitize_tbar_witness needs A and B without +inf entries".into(),
        ));
    }
    check_product(p, b, q, a)?;
    let zero = TropScalar::int(0);
    let p_prime = p
        .substitute(&TropScalar::PosInf, &zero)
        .with_flavor(SemiringFlavor::T)?;
    let q_prime = q
        .substitute(&TropScalar::PosInf, &zero)
        .with_flavor(SemiringFlavor::T)?;
    let product = mat_mul(&mat_mul(&p_prime, b)?, &q_prime)?;
    assert_eq!(
        product,
        a.with_flavor(product.flavor())?,
        "+inf entries never achieve a finite maximum, so substitution is safe"
    );
    Ok((p_prime, q_prime))
}
