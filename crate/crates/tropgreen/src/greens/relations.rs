//! Exact deciders for `≤_L`, `≤_R`, `L`, `R` and `H` via principal
//! solutions: `A ≤_L B` iff `R(A) ⊆ R(B)` iff the greatest `P` with
//! `P ⊗ B ≤ A` achieves equality (or `A = B`, the adjoined-identity case).

use super::{
    check_same_shape, BudgetStats, Claim, Factor, Obstruction, TaggedWitness, Verdict, Witness,
};
use crate::error::Result;
use crate::linalg::{left_residual, mat_mul, right_residual, TropMatrix};
use crate::scalar::{SemiringFlavor, TropScalar};

/// Narrow a `TBar` one-sided factor to the target flavor.
///
/// Over `T`, `+inf` entries are replaced by `0`: such an entry can only
/// face an all-`-inf` row (column) of the other factor, so the product is
/// unchanged; the substitution is re-verified by the caller. Over `FT` the
/// principal factor of finitary matrices is already finite. Failure would
/// mean a broken invariant, so it panics loudly.
fn narrow_factor(p: &TropMatrix, target: SemiringFlavor) -> TropMatrix {
    match target {
        SemiringFlavor::TBar => p.clone(),
        SemiringFlavor::T => p
            .substitute(&TropScalar::PosInf, &TropScalar::int(0))
            .with_flavor(SemiringFlavor::T)
            .expect("a one-sided factor over T has no +inf after substitution"),
        SemiringFlavor::FT => p
            .with_flavor(SemiringFlavor::FT)
            .expect("principal factors of finitary systems are finite"),
    }
}

/// `A ≤_L B`: exact. Holds carries `P` with `A = P ⊗ B` (or the identity);
/// Fails cites a row of `A` outside `R(B)`.
pub fn leq_l(a: &TropMatrix, b: &TropMatrix) -> Result<Verdict> {
    check_same_shape(a, b, "leq_l")?;
    let budget = BudgetStats::default();
    if a == b {
        return Ok(Verdict::holds(
            vec![TaggedWitness {
                claim: Claim::Locates,
                witness: Witness::Sandwich {
                    p: Factor::Identity,
                    q: Factor::Identity,
                },
            }],
            budget,
        ));
    }
    let flavor = a.flavor().unify(b.flavor());
    let principal = right_residual(a, b)?;
    let product = mat_mul(&principal, b)?;
    if product == *a {
        let p = narrow_factor(&principal, flavor);
        assert_eq!(mat_mul(&p, b)?, *a, "narrowing preserves the product");
        return Ok(Verdict::holds(
            vec![TaggedWitness {
                claim: Claim::Locates,
                witness: Witness::Sandwich {
                    p: Factor::Matrix(p),
                    q: Factor::Identity,
                },
            }],
            budget,
        ));
    }
    let bad_row = (0..a.n_rows())
        .find(|&i| product.row(i).entries() != a.row(i).entries())
        .expect("product differs from A in some row");
    Ok(Verdict::fails(
        Obstruction::NonMembership {
            axis: "row",
            index: bad_row,
        },
        budget,
    ))
}

/// `A ≤_R B`: exact, dual to [`leq_l`]. Holds carries `Q` with
/// `A = B ⊗ Q`.
pub fn leq_r(a: &TropMatrix, b: &TropMatrix) -> Result<Verdict> {
    check_same_shape(a, b, "leq_r")?;
    let budget = BudgetStats::default();
    if a == b {
        return Ok(Verdict::holds(
            vec![TaggedWitness {
                claim: Claim::Locates,
                witness: Witness::Sandwich {
                    p: Factor::Identity,
                    q: Factor::Identity,
                },
            }],
            budget,
        ));
    }
    let flavor = a.flavor().unify(b.flavor());
    let principal = left_residual(b, a)?;
    let product = mat_mul(b, &principal)?;
    if product == *a {
        let q = narrow_factor(&principal, flavor);
        assert_eq!(mat_mul(b, &q)?, *a, "narrowing preserves the product");
        return Ok(Verdict::holds(
            vec![TaggedWitness {
                claim: Claim::Locates,
                witness: Witness::Sandwich {
                    p: Factor::Identity,
                    q: Factor::Matrix(q),
                },
            }],
            budget,
        ));
    }
    let bad_col = (0..a.n_cols())
        .find(|&j| product.col(j).entries() != a.col(j).entries())
        .expect("product differs from A in some column");
    Ok(Verdict::fails(
        Obstruction::NonMembership {
            axis: "column",
            index: bad_col,
        },
        budget,
    ))
}

fn conjoin(parts: Vec<Verdict>) -> Verdict {
    let mut budget = BudgetStats::default();
    let mut witnesses = Vec::new();
    for v in &parts {
        budget.absorb(&v.budget);
    }
    for v in parts {
        match v.outcome {
            super::Outcome::Holds => witnesses.extend(v.witnesses),
            super::Outcome::Fails => {
                return Verdict::fails(v.obstruction.expect("fails carries obstruction"), budget)
            }
            super::Outcome::Unknown => return Verdict::unknown(budget),
        }
    }
    Verdict::holds(witnesses, budget)
}

fn reverse_claims(mut v: Verdict) -> Verdict {
    for w in &mut v.witnesses {
        w.claim = match w.claim {
            Claim::Locates => Claim::LocatesReversed,
            other => other,
        };
    }
    v
}

/// `A L B`: equality of row spaces, both containments certified.
pub fn rel_l(a: &TropMatrix, b: &TropMatrix) -> Result<Verdict> {
    Ok(conjoin(vec![leq_l(a, b)?, reverse_claims(leq_l(b, a)?)]))
}

/// `A R B`: equality of column spaces.
pub fn rel_r(a: &TropMatrix, b: &TropMatrix) -> Result<Verdict> {
    Ok(conjoin(vec![leq_r(a, b)?, reverse_claims(leq_r(b, a)?)]))
}

/// `A H B`: both row and column spaces equal.
pub fn rel_h(a: &TropMatrix, b: &TropMatrix) -> Result<Verdict> {
    Ok(conjoin(vec![rel_l(a, b)?, rel_r(a, b)?]))
}
