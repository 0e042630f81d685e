//! The two-sided witness search (`A = P ⊗ B ⊗ Q` by alternating
//! residuation) and the `≤_J` / `J` semideciders built on it.
//!
//! The alternation from a seed `Q₀` keeps `P ⊗ B ⊗ Q ≤ A` after the first
//! step, with `P` entrywise non-increasing and `Q` non-decreasing between
//! rounds; it stops at a fixed point, at the round budget, or when an entry
//! crosses the divergence threshold. Only equality (re-verified, flavor-
//! narrowed) produces `Holds`; a fruitless search is `Unknown`, never
//! `Fails`.

use num_rational::BigRational;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use super::finitize::{finitize_t_witness, finitize_tbar_witness};
use super::relations::{leq_l, leq_r};
use super::{
    check_same_shape, BudgetStats, Claim, DecideConfig, Factor, Obstruction, TaggedWitness,
    Verdict, Witness,
};
use crate::error::{Error, Result};
use crate::linalg::{left_residual, mat_mul, right_residual, TropMatrix};
use crate::ranks::{determinantal_rank, gm_rank, tropical_rank, Axis, IntInterval, RankOptions};
use crate::scalar::{SemiringFlavor, TropScalar};

/// A user-supplied hint for the `≤_J` search: explicit factors, or a matrix
/// whose restriction embeds the column space of `A` into that of `B`.
#[derive(Debug, Clone, Default)]
pub struct WitnessHint {
    pub p: Option<TropMatrix>,
    pub q: Option<TropMatrix>,
    pub embedding: Option<TropMatrix>,
}

/// Narrow a `TBar` sandwich witness to the pair's flavor and re-verify.
fn narrow_sandwich(
    p: &TropMatrix,
    q: &TropMatrix,
    a: &TropMatrix,
    b: &TropMatrix,
) -> Result<(TropMatrix, TropMatrix)> {
    match a.flavor().unify(b.flavor()) {
        SemiringFlavor::TBar => Ok((p.clone(), q.clone())),
        SemiringFlavor::T => finitize_tbar_witness(p, b, q, a),
        SemiringFlavor::FT => {
            let (pt, qt) = finitize_tbar_witness(p, b, q, a)?;
            finitize_t_witness(&pt, b, &qt, a)
        }
    }
}

fn sandwich_witness(p: TropMatrix, q: TropMatrix) -> TaggedWitness {
    TaggedWitness {
        claim: Claim::Locates,
        witness: Witness::Sandwich {
            p: Factor::Matrix(p),
            q: Factor::Matrix(q),
        },
    }
}

/// Search for `P, Q` with `A = P ⊗ B ⊗ Q`.
pub fn sandwich_search(a: &TropMatrix, b: &TropMatrix, cfg: &DecideConfig) -> Result<Verdict> {
    check_same_shape(a, b, "sandwich_search")?;
    let mut budget = BudgetStats::default();

    // one-sided shortcuts first
    let left = leq_l(a, b)?;
    budget.absorb(&left.budget);
    if left.is_holds() {
        return Ok(Verdict::holds(left.witnesses, budget));
    }
    let right = leq_r(a, b)?;
    budget.absorb(&right.budget);
    if right.is_holds() {
        return Ok(Verdict::holds(right.witnesses, budget));
    }

    let a_bar = a.with_flavor(SemiringFlavor::TBar)?;
    let b_bar = b.with_flavor(SemiringFlavor::TBar)?;
    let n = a.n_rows();

    // abandon a seed when any finite entry drifts below this
    let max_abs = a.max_finite_abs().max(b.max_finite_abs());
    let threshold = -(BigRational::from_integer((4 * n as i64).into()) * max_abs
        + BigRational::from_integer(1.into()));
    let diverged = |m: &TropMatrix| {
        (0..m.n_rows()).any(|i| {
            (0..m.n_cols()).any(|j| m.get(i, j).as_rational().is_some_and(|v| *v < threshold))
        })
    };

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for seed_idx in 0..cfg.seeds {
        budget.seeds_tried += 1;
        let mut q = match seed_idx {
            0 => left_residual(&b_bar, &a_bar)?,
            1 => TropMatrix::identity(SemiringFlavor::TBar, n)?,
            _ => TropMatrix::from_fn(SemiringFlavor::TBar, n, n, |_, _| {
                TropScalar::int(rng.gen_range(-6..=6))
            })?,
        };
        let mut prev: Option<(TropMatrix, TropMatrix)> = None;
        for _ in 0..cfg.budget_rounds {
            budget.residual_rounds += 1;
            let p = right_residual(&a_bar, &mat_mul(&b_bar, &q)?)?;
            let q_next = left_residual(&mat_mul(&p, &b_bar)?, &a_bar)?;
            if let Some((prev_p, prev_q)) = &prev {
                debug_assert!(p.entrywise_leq(prev_p), "P must be non-increasing");
                debug_assert!(prev_q.entrywise_leq(&q_next), "Q must be non-decreasing");
            }
            let product = mat_mul(&mat_mul(&p, &b_bar)?, &q_next)?;
            debug_assert!(product.entrywise_leq(&a_bar));
            if product == a_bar {
                let (pn, qn) = narrow_sandwich(&p, &q_next, a, b)?;
                let w = sandwich_witness(pn, qn);
                debug_assert!(w.verify(a, b));
                return Ok(Verdict::holds(vec![w], budget));
            }
            if diverged(&p) || diverged(&q_next) {
                break;
            }
            let state = (p, q_next.clone());
            if prev.as_ref() == Some(&state) {
                break; // fixed point without equality
            }
            prev = Some(state);
            q = q_next;
        }
    }
    Ok(Verdict::unknown(budget))
}

/// One rank comparison inside the obstruction battery: a certified lower
/// bound for `A` against a certified upper bound for `B`.
struct RankPair {
    name: &'static str,
    lhs_lb: usize,
    rhs_ub: usize,
}

/// Ranks that respect the `≤_J` order for the given flavor: tropical and
/// determinantal over `FT`/`T`, Gondran-Minoux over `T`/`TBar`. Entries the
/// size cap rules out are skipped silently (the battery is a sound filter,
/// not an obligation).
fn obstruction_battery(
    a: &TropMatrix,
    b: &TropMatrix,
    opts: &RankOptions,
) -> Result<Vec<RankPair>> {
    let flavor = a.flavor().unify(b.flavor());
    let mut out = Vec::new();
    if flavor != SemiringFlavor::TBar {
        for (name, f) in [
            (
                "tropical",
                tropical_rank as fn(&TropMatrix, &RankOptions) -> Result<usize>,
            ),
            ("determinantal", determinantal_rank),
        ] {
            match (f(a, opts), f(b, opts)) {
                (Ok(ra), Ok(rb)) => out.push(RankPair {
                    name,
                    lhs_lb: ra,
                    rhs_ub: rb,
                }),
                (Err(Error::SizeCapExceeded { .. }), _)
                | (_, Err(Error::SizeCapExceeded { .. })) => {}
                (Err(e), _) | (_, Err(e)) => return Err(e),
            }
        }
    }
    if flavor != SemiringFlavor::FT {
        for (axis, name) in [(Axis::Rows, "gm-row"), (Axis::Columns, "gm-col")] {
            match (
                gm_rank(a, axis, flavor, opts),
                gm_rank(b, axis, flavor, opts),
            ) {
                (Ok(ia), Ok(ib)) => out.push(RankPair {
                    name,
                    lhs_lb: ia.lb,
                    rhs_ub: ib.ub,
                }),
                (Err(Error::SizeCapExceeded { .. }), _)
                | (_, Err(Error::SizeCapExceeded { .. })) => {}
                (Err(e), _) | (_, Err(e)) => return Err(e),
            }
        }
    }
    Ok(out)
}

fn first_excess(pairs: &[RankPair]) -> Option<Obstruction> {
    pairs.iter().find_map(|p| {
        (p.lhs_lb > p.rhs_ub).then_some(Obstruction::RankExcess {
            rank: p.name,
            lhs: p.lhs_lb,
            rhs: p.rhs_ub,
        })
    })
}

/// Turn an embedding hint into an explicit sandwich: with `C = M ⊗ A`,
/// `A ≤_L C` and `C ≤_R B` compose to `A = U ⊗ B ⊗ X`.
fn embedding_to_sandwich(
    m: &TropMatrix,
    a: &TropMatrix,
    b: &TropMatrix,
) -> Result<Option<(TropMatrix, TropMatrix)>> {
    let c = mat_mul(m, a)?;
    let back = leq_l(a, &c)?;
    if !back.is_holds() {
        return Ok(None);
    }
    let into = leq_r(&c, b)?;
    if !into.is_holds() {
        return Ok(None);
    }
    let u = match &back.witnesses[0].witness {
        Witness::Sandwich {
            p: Factor::Matrix(u),
            ..
        } => u.clone(),
        // A = C exactly: U may be the adjoined identity; use the principal
        // left factor instead so the composite is a genuine sandwich
        _ => right_residual(a, &c)?,
    };
    let x = match &into.witnesses[0].witness {
        Witness::Sandwich {
            q: Factor::Matrix(x),
            ..
        } => x.clone(),
        _ => left_residual(b, &c)?,
    };
    let product = mat_mul(&mat_mul(&u, b)?, &x)?;
    if product == *a {
        let narrowed = narrow_sandwich(&u, &x, a, b)?;
        Ok(Some(narrowed))
    } else {
        Ok(None)
    }
}

fn try_hint(hint: &WitnessHint, a: &TropMatrix, b: &TropMatrix) -> Result<Option<TaggedWitness>> {
    if hint.p.is_some() || hint.q.is_some() {
        let step1 = match &hint.p {
            Some(p) => mat_mul(p, b)?,
            None => b.clone(),
        };
        let product = match &hint.q {
            Some(q) => mat_mul(&step1, q)?,
            None => step1,
        };
        if product == *a {
            let w = TaggedWitness {
                claim: Claim::Locates,
                witness: Witness::Sandwich {
                    p: hint.p.clone().map_or(Factor::Identity, Factor::Matrix),
                    q: hint.q.clone().map_or(Factor::Identity, Factor::Matrix),
                },
            };
            return Ok(Some(w));
        }
    }
    if let Some(m) = &hint.embedding {
        if let Some((u, x)) = embedding_to_sandwich(m, a, b)? {
            let w = sandwich_witness(u, x);
            debug_assert!(w.verify(a, b));
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// `A ≤_J B`: sound obstruction battery, then hint verification, then the
/// alternating witness search; `Unknown` when everything is inconclusive.
pub fn leq_j_decide(
    a: &TropMatrix,
    b: &TropMatrix,
    cfg: &DecideConfig,
    hint: Option<&WitnessHint>,
) -> Result<Verdict> {
    check_same_shape(a, b, "leq_j_decide")?;
    let mut budget = BudgetStats::default();
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
    let battery = obstruction_battery(a, b, &cfg.rank_opts)?;
    if let Some(obstruction) = first_excess(&battery) {
        return Ok(Verdict::fails(obstruction, budget));
    }
    if let Some(h) = hint {
        if let Some(w) = try_hint(h, a, b)? {
            return Ok(Verdict::holds(vec![w], budget));
        }
    }
    let searched = sandwich_search(a, b, cfg)?;
    budget.absorb(&searched.budget);
    Ok(Verdict { budget, ..searched })
}

/// `A J B`: both `≤_J` directions must hold (two witnesses); over `FT`
/// additionally row and column ranks must agree (`D = J` there, and
/// D-related matrices share them). A sound obstruction in either direction
/// fails the pair.
pub fn rel_j_decide(
    a: &TropMatrix,
    b: &TropMatrix,
    cfg: &DecideConfig,
    hint_forward: Option<&WitnessHint>,
    hint_backward: Option<&WitnessHint>,
) -> Result<Verdict> {
    check_same_shape(a, b, "rel_j_decide")?;
    let mut budget = BudgetStats::default();
    if a.flavor().unify(b.flavor()) == SemiringFlavor::FT {
        for (name, ra, rb) in [
            ("row", crate::ranks::row_rank(a), crate::ranks::row_rank(b)),
            (
                "column",
                crate::ranks::col_rank(a),
                crate::ranks::col_rank(b),
            ),
        ] {
            if ra != rb {
                return Ok(Verdict::fails(
                    Obstruction::RankMismatch {
                        rank: name,
                        lhs: ra,
                        rhs: rb,
                    },
                    budget,
                ));
            }
        }
    }
    let forward = leq_j_decide(a, b, cfg, hint_forward)?;
    budget.absorb(&forward.budget);
    if forward.is_fails() {
        return Ok(Verdict::fails(forward.obstruction.unwrap(), budget));
    }
    let backward = leq_j_decide(b, a, cfg, hint_backward)?;
    budget.absorb(&backward.budget);
    if backward.is_fails() {
        // the obstruction certifies NOT(B ≤_J A), which already sinks the
        // equivalence
        return Ok(Verdict::fails(backward.obstruction.unwrap(), budget));
    }
    if forward.is_holds() && backward.is_holds() {
        let mut witnesses = forward.witnesses;
        witnesses.extend(backward.witnesses.into_iter().map(|mut w| {
            w.claim = Claim::LocatesReversed;
            w
        }));
        return Ok(Verdict::holds(witnesses, budget));
    }
    Ok(Verdict::unknown(budget))
}

/// Used by fuzz suites: interval form of a rank for the product inequality,
/// `None` when the rank is not defined for the flavor.
pub fn rank_interval_for(
    name: &str,
    m: &TropMatrix,
    flavor: SemiringFlavor,
    opts: &RankOptions,
) -> Result<Option<IntInterval>> {
    Ok(match name {
        "tropical" => {
            if flavor == SemiringFlavor::TBar {
                None
            } else {
                Some(IntInterval::exact(tropical_rank(m, opts)?))
            }
        }
        "determinantal" => {
            if flavor == SemiringFlavor::TBar {
                None
            } else {
                Some(IntInterval::exact(determinantal_rank(m, opts)?))
            }
        }
        "gm-row" => {
            if flavor == SemiringFlavor::FT {
                None
            } else {
                Some(gm_rank(m, Axis::Rows, flavor, opts)?)
            }
        }
        "gm-col" => {
            if flavor == SemiringFlavor::FT {
                None
            } else {
                Some(gm_rank(m, Axis::Columns, flavor, opts)?)
            }
        }
        "factor-bracket" => Some(crate::ranks::factor_rank_bounds(m, opts)?),
        other => {
            return Err(Error::Parse {
                place: "rank name".into(),
                msg: format!("unknown rank {other:?}"),
            })
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::greens::Outcome;
    use SemiringFlavor::{FT, T};

    fn cfg() -> DecideConfig {
        DecideConfig::default()
    }

    #[test]
    fn ex61_j_order_holds() {
        let a = fixtures::a61();
        let b = fixtures::b61();
        let v = leq_j_decide(&a, &b, &cfg(), None).unwrap();
        assert!(v.is_holds(), "{v:?}");
        assert!(v.verify_witnesses(&a, &b));
    }

    #[test]
    fn reflexive_j() {
        let a = fixtures::a63();
        let v = leq_j_decide(&a, &a, &cfg(), None).unwrap();
        assert!(v.is_holds());
        let r = rel_j_decide(&a, &a, &cfg(), None, None).unwrap();
        assert!(r.is_holds());
    }

    #[test]
    fn tropical_rank_obstruction_fires() {
        let a = fixtures::a63(); // tropical rank 3
        let b = TropMatrix::from_ints(FT, &[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]); // rank 1
        let v = leq_j_decide(&a, &b, &cfg(), None).unwrap();
        assert_eq!(v.outcome, Outcome::Fails);
        assert!(matches!(
            v.obstruction,
            Some(Obstruction::RankExcess {
                rank: "tropical",
                lhs: 3,
                rhs: 1
            })
        ));
    }

    #[test]
    fn sandwich_search_trivial_and_shortcut() {
        let a = fixtures::a61();
        assert!(sandwich_search(&a, &a, &cfg()).unwrap().is_holds());
        let v = sandwich_search(&a, &fixtures::b61(), &cfg()).unwrap();
        assert!(v.is_holds()); // via the ≤_R shortcut
        assert!(v.verify_witnesses(&a, &fixtures::b61()));
    }

    #[test]
    fn ex62_mutual_j_with_embedding_hints() {
        let a = fixtures::a62();
        let b = fixtures::b62();
        let hint = WitnessHint {
            embedding: Some(fixtures::mu62()),
            ..WitnessHint::default()
        };
        let v = rel_j_decide(&a, &b, &cfg(), Some(&hint), Some(&hint)).unwrap();
        assert!(v.is_holds(), "{v:?}");
        assert!(v.verify_witnesses(&a, &b));
        // the pair demonstrates that column rank is not a J-class invariant
        assert_ne!(crate::ranks::col_rank(&a), crate::ranks::col_rank(&b));
    }

    #[test]
    fn ft_rank_mismatch_fails_rel_j() {
        let a = fixtures::a63();
        let b = TropMatrix::from_ints(FT, &[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
        let v = rel_j_decide(&a, &b, &cfg(), None, None).unwrap();
        assert_eq!(v.outcome, Outcome::Fails);
        assert!(matches!(
            v.obstruction,
            Some(Obstruction::RankMismatch { .. })
        ));
    }

    #[test]
    fn rel_j_of_ex61_pair_fails_via_col_rank() {
        // A61 ≤_J B61 holds but they are not J-equivalent: over FT column
        // ranks 4 vs 3 obstruct
        let v = rel_j_decide(&fixtures::a61(), &fixtures::b61(), &cfg(), None, None).unwrap();
        assert_eq!(v.outcome, Outcome::Fails);
    }

    #[test]
    fn explicit_factor_hints_are_verified() {
        let a = fixtures::a61();
        let b = fixtures::b61();
        let good = WitnessHint {
            q: Some(fixtures::x61()),
            ..WitnessHint::default()
        };
        let v = leq_j_decide(&a, &b, &cfg(), Some(&good)).unwrap();
        assert!(v.is_holds());

        let bad = WitnessHint {
            q: Some(fixtures::a61()),
            ..WitnessHint::default()
        };
        // a wrong hint is ignored, not trusted; search still succeeds here
        let v2 = leq_j_decide(&a, &b, &cfg(), Some(&bad)).unwrap();
        assert!(v2.is_holds());
        assert!(v2.verify_witnesses(&a, &b));
    }

    #[test]
    fn alternation_makes_progress_over_t() {
        // a pair solvable only with a genuine two-sided product
        let b = fixtures::b62();
        let p = fixtures::mu62();
        let q = TropMatrix::identity(T, 4).unwrap();
        let a = mat_mul(&mat_mul(&p, &b).unwrap(), &q)
            .unwrap()
            .with_flavor(T)
            .unwrap();
        let v = sandwich_search(&a, &b, &cfg()).unwrap();
        assert!(v.is_holds());
        assert!(v.verify_witnesses(&a, &b));
    }
}
