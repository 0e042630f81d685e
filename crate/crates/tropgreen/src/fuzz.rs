//! Deterministically seeded property suites. Each suite replays the
//! project's standing invariants at a configurable trial count and reports
//! every violation it finds; the acceptance tests and the `fuzz` CLI
//! subcommand both run these.

use num_rational::BigRational;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::convex::{combine, ConvexSet, GeneratorMap, MapExtension};
use crate::duality::{check_metric_duality, sample_points, theta, theta_prime};
use crate::error::Result;
use crate::greens::{
    finitize_t_witness, finitize_tbar_witness, leq_l, leq_r, rel_h, sandwich_search, DecideConfig,
};
use crate::linalg::{mat_mul, proj_equal, scalar_product, TropMatrix, TropVector};
use crate::metric::{d_hilbert, lipschitz_check, ChartPoint};
use crate::ranks::RankOptions;
use crate::scalar::{SemiringFlavor, TropScalar};

/// Outcome of one suite run.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub trials: usize,
    pub checks: u64,
    pub violations: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str, trials: usize) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            trials,
            checks: 0,
            violations: Vec::new(),
        }
    }

    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

pub const SUITES: &[&str] = &[
    "duality",
    "metric-duality",
    "rank-product",
    "greens-consistency",
    "finitize",
    "map-extends-oracle",
];

/// Run a named suite with deterministic seeding.
pub fn run_suite(name: &str, trials: usize, seed: u64) -> Result<SuiteReport> {
    match name {
        "duality" => Ok(duality_suite(trials, seed)),
        "metric-duality" => Ok(metric_suite(trials, seed)),
        "rank-product" => rank_product_suite(trials, seed),
        "greens-consistency" => greens_consistency_suite(trials, seed),
        "finitize" => finitize_suite(trials, seed),
        "map-extends-oracle" => Ok(map_extends_oracle_suite(trials, seed)),
        other => Err(crate::error::Error::Parse {
            place: "suite name".into(),
            msg: format!("unknown suite {other:?}; expected one of {SUITES:?}"),
        }),
    }
}

fn rand_int(rng: &mut ChaCha8Rng) -> TropScalar {
    TropScalar::int(rng.gen_range(-8..=8))
}

fn rand_ft_matrix(rng: &mut ChaCha8Rng, n: usize) -> TropMatrix {
    TropMatrix::from_fn(SemiringFlavor::FT, n, n, |_, _| rand_int(rng)).unwrap()
}

fn rand_t_matrix(rng: &mut ChaCha8Rng, n: usize, ninf: f64) -> TropMatrix {
    TropMatrix::from_fn(SemiringFlavor::T, n, n, |_, _| {
        if rng.gen_bool(ninf) {
            TropScalar::NegInf
        } else {
            rand_int(rng)
        }
    })
    .unwrap()
}

fn rand_tbar_vector(rng: &mut ChaCha8Rng, n: usize) -> TropVector {
    TropVector::new(
        SemiringFlavor::TBar,
        (0..n)
            .map(|_| {
                let roll: f64 = rng.gen();
                if roll < 0.25 {
                    TropScalar::NegInf
                } else if roll < 0.4 {
                    TropScalar::PosInf
                } else {
                    rand_int(rng)
                }
            })
            .collect(),
    )
    .unwrap()
}

/// Lemma-level duality properties: θ/θ' are mutually inverse, order
/// reversing, scaling anti-compatible on sampled points of random finitary
/// matrices.
pub fn duality_suite(trials: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("duality", trials);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let n = rng.gen_range(2..=4);
        let a = rand_ft_matrix(&mut rng, n);
        let rows = ConvexSet::row_space(&a);
        let points = sample_points(&rows, 20, &mut rng);
        // (i) mutually inverse
        for x in &points {
            report.checks += 1;
            let round = theta_prime(&a, &theta(&a, x).unwrap()).unwrap();
            if round.entries() != x.entries() {
                report
                    .violations
                    .push(format!("trial {trial}: θ'∘θ ≠ id at {x:?}"));
            }
        }
        // (ii) order reversal on comparable pairs
        for w in points.windows(2).take(20) {
            report.checks += 1;
            let joined = w[0].join(&w[1]).unwrap();
            let img_low = theta(&a, &joined).unwrap();
            let img_hi = theta(&a, &w[0]).unwrap();
            if !img_low.leq(&img_hi) {
                report
                    .violations
                    .push(format!("trial {trial}: θ does not reverse ≤"));
            }
        }
        // (iii) scaling anti-compatibility
        for x in points.iter().take(20) {
            report.checks += 1;
            let lam = rand_int(&mut rng);
            let lhs = theta(&a, &x.scale(&lam)).unwrap();
            let rhs = theta(&a, x).unwrap().scale(&lam.neg_unchecked());
            if lhs.entries() != rhs.entries() {
                report
                    .violations
                    .push(format!("trial {trial}: θ(λx) ≠ (-λ)θ(x)"));
            }
        }
        // metric preservation on weak-basis points plus 20 samples
        report.checks += 1;
        let dual = check_metric_duality(&a, 20, seed ^ trial as u64).unwrap();
        if !dual.pass {
            report.violations.push(format!(
                "trial {trial}: metric duality failed: {:?}",
                dual.failure
            ));
        }
    }
    report
}

/// Metric-level properties: the opposition lemma on `TBar` pairs, symmetry
/// / scaling invariance / triangle inequality on finite triples, and the
/// squared Lipschitz comparison on chart pairs.
pub fn metric_suite(trials: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("metric-duality", trials);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let n = rng.gen_range(2..=5);
        // opposition lemma
        let x = rand_tbar_vector(&mut rng, n);
        let y = rand_tbar_vector(&mut rng, n);
        report.checks += 1;
        if x != y
            && scalar_product(&x, &y).unwrap() == TropScalar::PosInf
            && scalar_product(&y, &x).unwrap() != TropScalar::NegInf
        {
            report
                .violations
                .push(format!("trial {trial}: opposition lemma failed"));
        }
        // d_H never -inf, symmetric, scaling invariant, triangle on finite
        let fin = |rng: &mut ChaCha8Rng| {
            TropVector::new(SemiringFlavor::FT, (0..n).map(|_| rand_int(rng)).collect()).unwrap()
        };
        let (u, v, w) = (fin(&mut rng), fin(&mut rng), fin(&mut rng));
        report.checks += 1;
        let duv = d_hilbert(&u, &v).unwrap();
        if duv != d_hilbert(&v, &u).unwrap() {
            report.violations.push(format!("trial {trial}: asymmetry"));
        }
        if duv != d_hilbert(&u.scale(&rand_int(&mut rng)), &v).unwrap() {
            report
                .violations
                .push(format!("trial {trial}: scaling variance"));
        }
        if (duv.is_zero()) != proj_equal(&u, &v) {
            report
                .violations
                .push(format!("trial {trial}: zero-distance mismatch"));
        }
        let dvw = d_hilbert(&v, &w).unwrap();
        let duw = d_hilbert(&u, &w).unwrap();
        if duw.scalar() > &duv.scalar().t_mul(dvw.scalar()) {
            report
                .violations
                .push(format!("trial {trial}: triangle inequality failed"));
        }
        // Lipschitz comparison on rational chart points
        report.checks += 1;
        let chart = |rng: &mut ChaCha8Rng| -> ChartPoint {
            (0..n - 1)
                .map(|_| TropScalar::ratio(rng.gen_range(-20..=20), rng.gen_range(1..=3)))
                .collect()
        };
        let (cu, cv) = (chart(&mut rng), chart(&mut rng));
        if !lipschitz_check(&cu, &cv).unwrap() {
            report
                .violations
                .push(format!("trial {trial}: Lipschitz bounds failed"));
        }
    }
    report
}

/// `rank(AB) ≤ min(rank(A), rank(B))` for one named rank function on
/// random `size × size` pairs (bracket form for the factor-rank interval).
/// Any violation serializes the offending pair.
pub fn rank_product_fuzz(
    rank_name: &str,
    trials: usize,
    size: usize,
    flavor: SemiringFlavor,
    seed: u64,
) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(&format!("rank-product:{rank_name}"), trials);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let opts = RankOptions::default();
    for trial in 0..trials {
        let gen = |rng: &mut ChaCha8Rng| match flavor {
            SemiringFlavor::FT => rand_ft_matrix(rng, size),
            _ => rand_t_matrix(rng, size, 0.2),
        };
        let a = gen(&mut rng);
        let b = gen(&mut rng);
        let ab = mat_mul(&a, &b)?;
        report.checks += 1;
        let ra = crate::greens::rank_interval_for(rank_name, &a, flavor, &opts)?;
        let rb = crate::greens::rank_interval_for(rank_name, &b, flavor, &opts)?;
        let rab = crate::greens::rank_interval_for(rank_name, &ab, flavor, &opts)?;
        if let (Some(ra), Some(rb), Some(rab)) = (ra, rb, rab) {
            if rab.lb > ra.ub.min(rb.ub) {
                report.violations.push(format!(
                    "{rank_name} trial {trial}: rank(AB) = {rab} exceeds min({ra}, {rb}) for A={}, B={}",
                    crate::io::serialize_matrix(&a),
                    crate::io::serialize_matrix(&b),
                ));
            }
        }
    }
    Ok(report)
}

/// The product inequality for every rank claimed to respect the J-order,
/// plus the deliberate non-example: column rank over `T` must fail
/// J-monotonicity on the bundled 6.2 pair.
pub fn rank_product_suite(trials: usize, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("rank-product", trials);
    for (name, flavor) in [
        ("tropical", SemiringFlavor::T),
        ("determinantal", SemiringFlavor::FT),
        ("gm-col", SemiringFlavor::T),
        ("factor-bracket", SemiringFlavor::T),
    ] {
        let sub = rank_product_fuzz(name, trials.max(1), 3, flavor, seed)?;
        report.checks += sub.checks;
        report.violations.extend(sub.violations);
    }
    // the non-invariance witness: a verified mutually-J pair with distinct
    // column ranks
    report.checks += 1;
    let a62 = crate::fixtures::a62();
    let b62 = crate::fixtures::b62();
    if crate::ranks::col_rank(&a62) == crate::ranks::col_rank(&b62) {
        report
            .violations
            .push("column rank unexpectedly agreed on the 6.2 pair".into());
    }
    Ok(report)
}

/// Products stay below in the one-sided orders; constructed mutually-J
/// finitary pairs satisfy the row/column rank equalities; obstructions
/// never fire on pairs with verified witnesses.
pub fn greens_consistency_suite(trials: usize, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("greens-consistency", trials);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cfg = DecideConfig::default();
    for trial in 0..trials {
        let n = rng.gen_range(2..=3);
        let p = rand_ft_matrix(&mut rng, n);
        let a = rand_ft_matrix(&mut rng, n);
        let q = rand_ft_matrix(&mut rng, n);
        report.checks += 2;
        let pa = mat_mul(&p, &a)?;
        if !leq_l(&pa, &a)?.is_holds() {
            report
                .violations
                .push(format!("trial {trial}: P⊗A ≤_L A failed"));
        }
        let aq = mat_mul(&a, &q)?;
        if !leq_r(&aq, &a)?.is_holds() {
            report
                .violations
                .push(format!("trial {trial}: A⊗Q ≤_R A failed"));
        }
        // no obstruction may fire on a pair with a verified witness
        report.checks += 1;
        let pbq = mat_mul(&mat_mul(&p, &a)?, &q)?;
        let verdict = crate::greens::leq_j_decide(&pbq, &a, &cfg, None)?;
        if verdict.is_fails() {
            report.violations.push(format!(
                "trial {trial}: obstruction fired against a constructed witness: {:?}",
                verdict.obstruction
            ));
        }
    }
    // mutually-J pairs by dominant-diagonal conjugation: B = D ⊗ A ⊗ E
    // where the off-diagonal entries are far below everything in A
    let mut pairs_checked = 0;
    while pairs_checked < 10 {
        let n = rng.gen_range(2..=3);
        let a = rand_ft_matrix(&mut rng, n);
        let low = -1000;
        let diag = |rng: &mut ChaCha8Rng| {
            TropMatrix::from_fn(SemiringFlavor::FT, n, n, |i, j| {
                if i == j {
                    TropScalar::int(rng.gen_range(-3..=3))
                } else {
                    TropScalar::int(low)
                }
            })
            .unwrap()
        };
        let d = diag(&mut rng);
        let e = diag(&mut rng);
        let b = mat_mul(&mat_mul(&d, &a)?, &e)?;
        // the inverse conjugation recovers A, so the pair is mutually J
        let d_inv = TropMatrix::from_fn(SemiringFlavor::FT, n, n, |i, j| {
            if i == j {
                d.get(i, i).neg_unchecked()
            } else {
                TropScalar::int(low)
            }
        })
        .unwrap();
        let e_inv = TropMatrix::from_fn(SemiringFlavor::FT, n, n, |i, j| {
            if i == j {
                e.get(i, i).neg_unchecked()
            } else {
                TropScalar::int(low)
            }
        })
        .unwrap();
        if mat_mul(&mat_mul(&d_inv, &b)?, &e_inv)? != a {
            continue; // conjugation failed to invert (entries too wild)
        }
        pairs_checked += 1;
        report.checks += 1;
        if crate::ranks::row_rank(&a) != crate::ranks::row_rank(&b)
            || crate::ranks::col_rank(&a) != crate::ranks::col_rank(&b)
        {
            report.violations.push(format!(
                "mutually-J pair with unequal row/col ranks: {}",
                crate::io::serialize_matrix(&a)
            ));
        }
        // cross-check: the searches find the witnesses
        report.checks += 1;
        let fwd = sandwich_search(&b, &a, &cfg)?;
        if fwd.is_fails() {
            report
                .violations
                .push("sandwich search refuted a constructed witness pair".into());
        }
    }
    // scaling pairs are H-related with dominant-diagonal witnesses
    report.checks += 1;
    let a = rand_ft_matrix(&mut rng, 3);
    let scaled = TropMatrix::from_fn(SemiringFlavor::FT, 3, 3, |i, j| {
        TropScalar::int(3).t_mul(a.get(i, j))
    })
    .unwrap();
    if !rel_h(&a, &scaled)?.is_holds() {
        report.violations.push("A and 3⊗A are not H-related".into());
    }

    // cross-check from the other side: whenever the two-sided search DOES
    // certify A = P⊗B⊗Q, the J-monotone ranks must already agree with it
    let opts = RankOptions::default();
    for trial in 0..20 {
        let a = rand_t_matrix(&mut rng, 3, 0.2);
        let b = rand_t_matrix(&mut rng, 3, 0.2);
        report.checks += 1;
        let v = sandwich_search(&a, &b, &cfg)?;
        if v.is_holds() {
            if !v.verify_witnesses(&a, &b) {
                report.violations.push(format!(
                    "trial {trial}: emitted witness failed re-verification"
                ));
            }
            for name in ["tropical", "determinantal", "gm-row", "gm-col"] {
                let ra = crate::greens::rank_interval_for(name, &a, SemiringFlavor::T, &opts)?;
                let rb = crate::greens::rank_interval_for(name, &b, SemiringFlavor::T, &opts)?;
                if let (Some(ra), Some(rb)) = (ra, rb) {
                    if ra.lb > rb.ub {
                        report.violations.push(format!(
                            "trial {trial}: verified witness contradicts {name} monotonicity \
                             ({} vs {})",
                            ra, rb
                        ));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Prop-style finitization fuzz: both directions preserve the sandwich
/// identity exactly.
pub fn finitize_suite(trials: usize, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("finitize", trials);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done_t = 0;
    while done_t < trials {
        let n = rng.gen_range(2..=3);
        let b = rand_ft_matrix(&mut rng, n);
        let p = rand_t_matrix(&mut rng, n, 0.35);
        let q = rand_t_matrix(&mut rng, n, 0.35);
        let a = mat_mul(&mat_mul(&p, &b)?, &q)?;
        let Ok(a) = a.with_flavor(SemiringFlavor::FT) else {
            continue;
        };
        report.checks += 1;
        match finitize_t_witness(&p, &b, &q, &a) {
            Ok((pp, qp)) => {
                if mat_mul(&mat_mul(&pp, &b)?, &qp)? != a {
                    report
                        .violations
                        .push(format!("T→FT finitization broke the product at {done_t}"));
                }
            }
            Err(e) => report
                .violations
                .push(format!("T→FT finitization errored: {e}")),
        }
        done_t += 1;
    }
    let mut done_tbar = 0;
    while done_tbar < trials {
        let n = rng.gen_range(2..=3);
        let b = rand_t_matrix(&mut rng, n, 0.4);
        let tbar = |rng: &mut ChaCha8Rng| {
            TropMatrix::from_fn(SemiringFlavor::TBar, n, n, |_, _| {
                let roll: f64 = rng.gen();
                if roll < 0.25 {
                    TropScalar::NegInf
                } else if roll < 0.45 {
                    TropScalar::PosInf
                } else {
                    rand_int(rng)
                }
            })
            .unwrap()
        };
        let p = tbar(&mut rng);
        let q = tbar(&mut rng);
        let a = mat_mul(&mat_mul(&p, &b)?, &q)?;
        let Ok(a) = a.with_flavor(SemiringFlavor::T) else {
            continue;
        };
        report.checks += 1;
        match finitize_tbar_witness(&p, &b, &q, &a) {
            Ok((pp, qp)) => {
                let product = mat_mul(&mat_mul(&pp, &b)?, &qp)?.with_flavor(SemiringFlavor::T)?;
                if product != a {
                    report.violations.push(format!(
                        "TBar→T finitization broke the product at {done_tbar}"
                    ));
                }
            }
            Err(e) => report
                .violations
                .push(format!("TBar→T finitization errored: {e}")),
        }
        done_tbar += 1;
    }
    Ok(report)
}

/// The extension checker against its sampling oracle: on random generator
/// maps, comparable coefficient combinations must stay comparable in the
/// image whenever the checker says "extends", and every violation witness
/// must re-verify.
pub fn map_extends_oracle_suite(trials: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("map-extends-oracle", trials);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut trial = 0;
    while trial < trials {
        let k = rng.gen_range(1..=4);
        let n_dom = rng.gen_range(1..=4);
        let n_cod = rng.gen_range(1..=4);
        let rand_vec = |rng: &mut ChaCha8Rng, len: usize| {
            TropVector::new(
                SemiringFlavor::T,
                (0..len)
                    .map(|_| {
                        if rng.gen_bool(0.2) {
                            TropScalar::NegInf
                        } else {
                            TropScalar::int(rng.gen_range(-5..=5))
                        }
                    })
                    .collect(),
            )
            .unwrap()
        };
        let gens: Vec<TropVector> = (0..k).map(|_| rand_vec(&mut rng, n_dom)).collect();
        let dom = match ConvexSet::from_generators(SemiringFlavor::T, gens) {
            Ok(d) if d.generator_dimension() > 0 => d,
            _ => continue,
        };
        let images: Vec<TropVector> = (0..dom.generator_dimension())
            .map(|_| rand_vec(&mut rng, n_cod))
            .collect();
        let map = match GeneratorMap::new(dom.clone(), images.clone()) {
            Ok(m) => m,
            Err(_) => continue,
        };
        trial += 1;
        let basis: Vec<TropVector> = dom.weak_basis().into_iter().cloned().collect();
        match map.extends() {
            MapExtension::Violation(w) => {
                report.checks += 1;
                if !map.verify_violation(&w) {
                    report
                        .violations
                        .push(format!("trial {trial}: violation witness failed to verify"));
                }
            }
            MapExtension::Extends => {
                for sample in 0..1000 {
                    report.checks += 1;
                    let beta: Vec<TropScalar> = basis
                        .iter()
                        .map(|_| {
                            if rng.gen_bool(0.25) {
                                TropScalar::NegInf
                            } else {
                                TropScalar::int(rng.gen_range(-5..=5))
                            }
                        })
                        .collect();
                    let upper = combine(dom.ambient_dim(), &basis, &beta);
                    let alpha: Vec<TropScalar> = basis
                        .iter()
                        .map(|w| {
                            match scalar_product(w, &upper).unwrap() {
                                TropScalar::Finite(q) => TropScalar::Finite(
                                    q - BigRational::from_integer(rng.gen_range(0..=2).into()),
                                ),
                                // +inf principal coefficients only face
                                // all--inf generators; any value works
                                TropScalar::PosInf => TropScalar::int(0),
                                TropScalar::NegInf => TropScalar::NegInf,
                            }
                        })
                        .collect();
                    let lower = combine(dom.ambient_dim(), &basis, &alpha);
                    if !lower.leq(&upper) {
                        report.violations.push(format!(
                            "trial {trial}.{sample}: oracle construction broke comparability"
                        ));
                        continue;
                    }
                    let img_lower = combine(n_cod, &images, &alpha);
                    let img_upper = combine(n_cod, &images, &beta);
                    if !img_lower.leq(&img_upper) {
                        report.violations.push(format!(
                            "trial {trial}.{sample}: extends verdict contradicted by sampled pair"
                        ));
                    }
                }
            }
        }
    }
    report
}
