//! Rank functions for tropical matrices: row/column rank (generator
//! dimension), factor-rank bounds, Gondran-Minoux ranks, determinantal rank
//! and tropical rank, plus the aggregate [`RankReport`].
//!
//! Minor and subset enumeration is capped (default `n ≤ 5`); larger inputs
//! need an explicit override. Gondran-Minoux solvability is decided exactly
//! by enumerating sign patterns and solving difference-constraint systems,
//! so definite ranks carry no numerical caveats; `Unknown` only appears
//! when an enumeration budget is exceeded.

use itertools::Itertools;
use num_rational::BigRational;

use crate::convex::{combine, ConvexSet};
use crate::diffcon::DiffSystem;
use crate::error::{Error, Result};
use crate::linalg::{TropMatrix, TropVector};
use crate::scalar::{t_sum, SemiringFlavor, TropScalar};

/// Enumeration limits for the combinatorial ranks.
#[derive(Debug, Clone)]
pub struct RankOptions {
    /// Largest square size for minor/permutation/subset enumeration.
    pub enum_cap: usize,
    /// Budget on difference-constraint systems per Gondran-Minoux call.
    pub gm_system_budget: usize,
}

impl Default for RankOptions {
    fn default() -> Self {
        RankOptions {
            enum_cap: 5,
            gm_system_budget: 2_000_000,
        }
    }
}

/// A rank value known to lie in `[lb, ub]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct IntInterval {
    pub lb: usize,
    pub ub: usize,
}

impl IntInterval {
    pub fn exact(v: usize) -> Self {
        IntInterval { lb: v, ub: v }
    }

    pub fn is_exact(&self) -> bool {
        self.lb == self.ub
    }
}

impl std::fmt::Display for IntInterval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.lb)
        } else {
            write!(f, "[{}, {}]", self.lb, self.ub)
        }
    }
}

/// Generator dimension of the row space.
pub fn row_rank(a: &TropMatrix) -> usize {
    ConvexSet::row_space(a).generator_dimension()
}

/// Generator dimension of the column space.
pub fn col_rank(a: &TropMatrix) -> usize {
    ConvexSet::col_space(a).generator_dimension()
}

fn permutations_with_sign(k: usize) -> Vec<(Vec<usize>, bool)> {
    (0..k)
        .permutations(k)
        .map(|p| {
            let mut inversions = 0usize;
            for i in 0..p.len() {
                for j in i + 1..p.len() {
                    if p[i] > p[j] {
                        inversions += 1;
                    }
                }
            }
            (p, inversions.is_multiple_of(2))
        })
        .collect()
}

fn minor_weight(m: &TropMatrix, rows: &[usize], cols: &[usize], perm: &[usize]) -> TropScalar {
    let mut acc = TropScalar::int(0);
    for (i, &p) in perm.iter().enumerate() {
        acc = acc.t_mul(m.get(rows[i], cols[p]));
    }
    acc
}

/// Strong regularity: the maximum permutation weight is finite and attained
/// by exactly one permutation. Equivalent to the no-balancing-subset
/// definition (checked against brute force in tests).
pub fn strongly_regular(m: &TropMatrix) -> Result<bool> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch {
            op: "strongly_regular",
            detail: format!("{}x{} is not square", m.n_rows(), m.n_cols()),
        });
    }
    let k = m.n_rows();
    let rows: Vec<usize> = (0..k).collect();
    let mut best = TropScalar::NegInf;
    let mut count = 0usize;
    for (perm, _) in permutations_with_sign(k) {
        let w = minor_weight(m, &rows, &rows, &perm);
        if w > best {
            best = w;
            count = 1;
        } else if w == best && best != TropScalar::NegInf {
            count += 1;
        }
    }
    Ok(best.is_finite() && count == 1)
}

fn submatrix(m: &TropMatrix, rows: &[usize], cols: &[usize]) -> TropMatrix {
    TropMatrix::from_fn(m.flavor(), rows.len(), cols.len(), |i, j| {
        m.get(rows[i], cols[j]).clone()
    })
    .expect("index sets are nonempty")
}

/// Largest `k` with a strongly regular `k × k` minor; `0` for the zero
/// matrix.
pub fn tropical_rank(a: &TropMatrix, opts: &RankOptions) -> Result<usize> {
    let n = a.n_rows().min(a.n_cols());
    if n > opts.enum_cap {
        return Err(Error::SizeCapExceeded {
            n,
            cap: opts.enum_cap,
        });
    }
    for k in (1..=n).rev() {
        for rows in (0..a.n_rows()).combinations(k) {
            for cols in (0..a.n_cols()).combinations(k) {
                if strongly_regular(&submatrix(a, &rows, &cols))? {
                    return Ok(k);
                }
            }
        }
    }
    Ok(0)
}

/// Largest `k` with a `k × k` minor whose even-permutation tropical sum
/// differs from the odd one. Defined over `FT` and `T` only.
pub fn determinantal_rank(a: &TropMatrix, opts: &RankOptions) -> Result<usize> {
    if a.flavor() == SemiringFlavor::TBar {
        return Err(Error::FlavorUnsupported {
            op: "determinantal_rank",
            flavor: "TBar",
        });
    }
    let n = a.n_rows().min(a.n_cols());
    if n > opts.enum_cap {
        return Err(Error::SizeCapExceeded {
            n,
            cap: opts.enum_cap,
        });
    }
    for k in (1..=n).rev() {
        let perms = permutations_with_sign(k);
        for rows in (0..a.n_rows()).combinations(k) {
            for cols in (0..a.n_cols()).combinations(k) {
                let mut even = TropScalar::NegInf;
                let mut odd = TropScalar::NegInf;
                for (perm, is_even) in &perms {
                    let w = minor_weight(a, &rows, &cols, perm);
                    if *is_even {
                        even = even.t_add(&w);
                    } else {
                        odd = odd.t_add(&w);
                    }
                }
                if even != odd {
                    return Ok(k);
                }
            }
        }
    }
    Ok(0)
}

/// `[max(1, tropical), min(row, col)]` for a nonzero matrix, `[0, 0]` for
/// the zero matrix. The lower bound rests on the standard chain
/// tropical ≤ factor, which the bundled property suites check empirically.
pub fn factor_rank_bounds(a: &TropMatrix, opts: &RankOptions) -> Result<IntInterval> {
    if a.is_zero() {
        return Ok(IntInterval::exact(0));
    }
    let lb = tropical_rank(a, opts)?.max(1);
    let ub = row_rank(a).min(col_rank(a));
    Ok(IntInterval { lb, ub })
}

/// Verdict of a Gondran-Minoux independence question.
#[derive(Debug, Clone)]
pub enum GmVerdict {
    /// No balanced relation exists; proven by exhausting all sign patterns.
    Independent,
    /// A balanced relation with the given data exists (re-verified).
    Dependent(GmWitness),
    /// Enumeration budget exceeded before a proof either way.
    Unknown,
}

impl GmVerdict {
    pub fn is_independent(&self) -> bool {
        matches!(self, GmVerdict::Independent)
    }

    pub fn is_dependent(&self) -> bool {
        matches!(self, GmVerdict::Dependent(_))
    }
}

/// A balanced relation `⊕_{i∈I} α_i x_i = ⊕_{j∈J} α_j x_j` with disjoint
/// `I`, `J` and no `-inf` coefficient on the cited indices.
#[derive(Debug, Clone)]
pub struct GmWitness {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub coeffs: Vec<(usize, TropScalar)>,
}

impl GmWitness {
    /// Re-evaluate both sides exactly.
    pub fn verify(&self, vectors: &[TropVector]) -> bool {
        if self.left.is_empty() && self.right.is_empty() {
            return false;
        }
        let dim = vectors[0].len();
        let side = |indices: &[usize]| -> TropVector {
            let gens: Vec<TropVector> = indices.iter().map(|&i| vectors[i].clone()).collect();
            let coeffs: Vec<TropScalar> = indices
                .iter()
                .map(|i| {
                    self.coeffs
                        .iter()
                        .find(|(j, _)| j == i)
                        .map(|(_, c)| c.clone())
                        .expect("witness carries every cited coefficient")
                })
                .collect();
            combine(dim, &gens, &coeffs)
        };
        let lhs = side(&self.left);
        let rhs = side(&self.right);
        lhs.entries() == rhs.entries() && self.coeffs.iter().all(|(_, c)| *c != TropScalar::NegInf)
    }
}

#[derive(Clone, Copy, PartialEq)]
enum SideClass {
    Dead,
    Inf,
    Fin,
}

/// Decide Gondran-Minoux independence of a family of vectors over `T` or
/// `TBar`, exactly.
///
/// Dependence means some disjoint pair `(I, J)`, not both empty, admits a
/// balanced relation whose cited coefficients are all above `-inf` (smaller
/// supports are separate partitions, so full support loses nothing). Over
/// `TBar` coefficients may also be `+inf`; those are enumerated as pins.
/// For a fixed pattern every ambient coordinate is classified as dead,
/// infinite or finite, and the finite coordinates leave a choice of argmax
/// witnesses whose consistency is a difference-constraint system.
pub fn gm_independent(
    vectors: &[TropVector],
    flavor: SemiringFlavor,
    opts: &RankOptions,
) -> Result<GmVerdict> {
    if flavor == SemiringFlavor::FT {
        return Err(Error::FlavorUnsupported {
            op: "gm_independent",
            flavor: "FT",
        });
    }
    for v in vectors {
        for e in v.entries() {
            if !flavor.admits(e) {
                return Err(Error::IllegalEntry {
                    flavor: flavor.name(),
                    value: e.to_text(),
                });
            }
        }
    }
    let t = vectors.len();
    if t == 0 {
        return Ok(GmVerdict::Independent);
    }
    if t > opts.enum_cap {
        return Err(Error::SizeCapExceeded {
            n: t,
            cap: opts.enum_cap,
        });
    }
    let dim = vectors[0].len();
    let mut budget = opts.gm_system_budget;

    // each index goes Out (0), Left (1) or Right (2); skip all-Out; fix the
    // first cited index to Left to halve the symmetric search
    let mut pattern = vec![0u8; t];
    loop {
        // advance base-3 counter
        let mut pos = 0;
        loop {
            if pos == t {
                return Ok(GmVerdict::Independent);
            }
            pattern[pos] += 1;
            if pattern[pos] == 3 {
                pattern[pos] = 0;
                pos += 1;
            } else {
                break;
            }
        }
        let first_cited = pattern.iter().position(|&s| s != 0);
        match first_cited {
            None => continue,
            Some(i) if pattern[i] == 2 => continue, // symmetric twin
            Some(_) => {}
        }
        let left: Vec<usize> = (0..t).filter(|&i| pattern[i] == 1).collect();
        let right: Vec<usize> = (0..t).filter(|&i| pattern[i] == 2).collect();
        let cited: Vec<usize> = (0..t).filter(|&i| pattern[i] != 0).collect();

        let pin_patterns: usize = if flavor == SemiringFlavor::TBar {
            1usize << cited.len()
        } else {
            1
        };
        for pin_mask in 0..pin_patterns {
            if budget == 0 {
                return Ok(GmVerdict::Unknown);
            }
            budget -= 1;
            let pinned = |i: usize| -> bool {
                cited
                    .iter()
                    .position(|&c| c == i)
                    .is_some_and(|pos| pin_mask >> pos & 1 == 1)
            };
            // variable ids for un-pinned cited indices
            let vars: Vec<usize> = cited.iter().copied().filter(|&i| !pinned(i)).collect();
            let var_id = |i: usize| vars.iter().position(|&v| v == i).expect("cited var");

            // classify both sides of every coordinate
            let classify = |side: &[usize], c: usize| -> (SideClass, Vec<usize>) {
                let mut finite_vars = Vec::new();
                let mut any_inf = false;
                for &i in side {
                    match vectors[i].get(c) {
                        TropScalar::NegInf => {}
                        TropScalar::PosInf => any_inf = true,
                        TropScalar::Finite(_) => {
                            if pinned(i) {
                                any_inf = true;
                            } else {
                                finite_vars.push(i);
                            }
                        }
                    }
                }
                if any_inf {
                    (SideClass::Inf, Vec::new())
                } else if finite_vars.is_empty() {
                    (SideClass::Dead, Vec::new())
                } else {
                    (SideClass::Fin, finite_vars)
                }
            };

            let mut coords: Vec<(usize, Vec<usize>, Vec<usize>)> = Vec::new();
            let mut feasible = true;
            for c in 0..dim {
                let (lc, lvars) = classify(&left, c);
                let (rc, rvars) = classify(&right, c);
                match (lc, rc) {
                    (SideClass::Inf, SideClass::Inf) | (SideClass::Dead, SideClass::Dead) => {}
                    (SideClass::Fin, SideClass::Fin) => coords.push((c, lvars, rvars)),
                    _ => {
                        feasible = false;
                        break;
                    }
                }
            }
            if !feasible {
                continue;
            }

            // backtracking over per-coordinate argmax witnesses
            let entry = |i: usize, c: usize| -> BigRational {
                vectors[i]
                    .get(c)
                    .as_rational()
                    .expect("classified finite")
                    .clone()
            };
            fn descend(
                coords: &[(usize, Vec<usize>, Vec<usize>)],
                level: usize,
                system: &mut DiffSystem,
                budget: &mut usize,
                var_id: &impl Fn(usize) -> usize,
                entry: &impl Fn(usize, usize) -> BigRational,
            ) -> Option<bool> {
                if *budget == 0 {
                    return None; // budget exhausted
                }
                *budget -= 1;
                if level == coords.len() {
                    return Some(system.feasible());
                }
                let (c, lvars, rvars) = &coords[level];
                for &i in lvars {
                    for &j in rvars {
                        let mark = system.len();
                        // u_i + x_{i,c} = v_j + y_{j,c}
                        let delta = entry(j, *c) - entry(i, *c);
                        system.add(var_id(i), var_id(j), delta.clone());
                        system.add(var_id(j), var_id(i), -delta);
                        // dominance on both sides
                        for &i2 in lvars {
                            if i2 != i {
                                system.add(var_id(i2), var_id(i), entry(i, *c) - entry(i2, *c));
                            }
                        }
                        for &j2 in rvars {
                            if j2 != j {
                                system.add(var_id(j2), var_id(j), entry(j, *c) - entry(j2, *c));
                            }
                        }
                        if system.feasible() {
                            match descend(coords, level + 1, system, budget, var_id, entry) {
                                Some(true) => return Some(true),
                                Some(false) => {}
                                None => return None,
                            }
                        }
                        system.truncate(mark);
                    }
                }
                Some(false)
            }

            let mut system = DiffSystem::new(vars.len());
            let solved = descend(&coords, 0, &mut system, &mut budget, &var_id, &entry);
            match solved {
                None => return Ok(GmVerdict::Unknown),
                Some(false) => continue,
                Some(true) => {
                    let assignment = system.solve().expect("just checked feasible");
                    let coeffs: Vec<(usize, TropScalar)> = cited
                        .iter()
                        .map(|&i| {
                            let c = if pinned(i) {
                                TropScalar::PosInf
                            } else {
                                TropScalar::Finite(assignment[var_id(i)].clone())
                            };
                            (i, c)
                        })
                        .collect();
                    let witness = GmWitness {
                        left,
                        right,
                        coeffs,
                    };
                    assert!(
                        witness.verify(vectors),
                        "solver produced a non-verifying balanced relation"
                    );
                    return Ok(GmVerdict::Dependent(witness));
                }
            }
        }
    }
}

/// Which vectors a Gondran-Minoux rank should use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Axis {
    Rows,
    Columns,
}

/// Maximal cardinality of a Gondran-Minoux independent subset of rows or
/// columns; an interval when some subsets came back `Unknown`.
pub fn gm_rank(
    a: &TropMatrix,
    axis: Axis,
    flavor: SemiringFlavor,
    opts: &RankOptions,
) -> Result<IntInterval> {
    let vectors: Vec<TropVector> = match axis {
        Axis::Rows => a.rows().collect(),
        Axis::Columns => a.cols().collect(),
    };
    if vectors.len() > opts.enum_cap {
        return Err(Error::SizeCapExceeded {
            n: vectors.len(),
            cap: opts.enum_cap,
        });
    }
    let t = vectors.len();
    let mut lb = 0usize;
    let mut ub = 0usize;
    for mask in 0u32..(1 << t) {
        let subset: Vec<TropVector> = (0..t)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| vectors[i].clone())
            .collect();
        let size = subset.len();
        if size <= lb && size <= ub {
            continue;
        }
        match gm_independent(&subset, flavor, opts)? {
            GmVerdict::Independent => {
                lb = lb.max(size);
                ub = ub.max(size);
            }
            GmVerdict::Unknown => ub = ub.max(size),
            GmVerdict::Dependent(_) => {}
        }
    }
    Ok(IntInterval { lb, ub })
}

/// Everything the rank engines know about one matrix.
#[derive(Debug, Clone, serde::Serialize)]
pub struct RankReport {
    pub flavor: SemiringFlavor,
    pub row_rank: usize,
    pub col_rank: usize,
    pub factor: IntInterval,
    pub tropical: usize,
    /// `None` over `TBar` (outside the supported corollary).
    pub determinantal: Option<usize>,
    /// `None` over `FT` (no zero element).
    pub gm_row: Option<IntInterval>,
    pub gm_col: Option<IntInterval>,
    pub consistency: Vec<ConsistencyFlag>,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct ConsistencyFlag {
    pub name: String,
    pub ok: bool,
}

impl RankReport {
    pub fn compute(a: &TropMatrix, opts: &RankOptions) -> Result<RankReport> {
        let flavor = a.flavor();
        let row_rank = row_rank(a);
        let col_rank = col_rank(a);
        let tropical = tropical_rank(a, opts)?;
        let factor = factor_rank_bounds(a, opts)?;
        let determinantal = match flavor {
            SemiringFlavor::TBar => None,
            _ => Some(determinantal_rank(a, opts)?),
        };
        let (gm_row, gm_col) = match flavor {
            SemiringFlavor::FT => (None, None),
            _ => (
                Some(gm_rank(a, Axis::Rows, flavor, opts)?),
                Some(gm_rank(a, Axis::Columns, flavor, opts)?),
            ),
        };
        let mut consistency = Vec::new();
        if let Some(d) = determinantal {
            consistency.push(ConsistencyFlag {
                name: "tropical <= determinantal".into(),
                ok: tropical <= d,
            });
        }
        consistency.push(ConsistencyFlag {
            name: "factor lb <= factor ub".into(),
            ok: factor.lb <= factor.ub,
        });
        consistency.push(ConsistencyFlag {
            name: "tropical <= min(row, col)".into(),
            ok: tropical <= row_rank.min(col_rank),
        });
        Ok(RankReport {
            flavor,
            row_rank,
            col_rank,
            factor,
            tropical,
            determinantal,
            gm_row,
            gm_col,
            consistency,
        })
    }

    pub fn all_consistent(&self) -> bool {
        self.consistency.iter().all(|f| f.ok)
    }
}

/// Tropical sums over a subset of permutations; the brute-force side of the
/// strong-regularity equivalence, exposed for tests and fuzz suites.
pub fn balancing_subset_exists(m: &TropMatrix, sample_cap: Option<usize>, seed: u64) -> bool {
    use rand::prelude::*;
    let k = m.n_rows();
    let rows: Vec<usize> = (0..k).collect();
    let weights: Vec<TropScalar> = permutations_with_sign(k)
        .into_iter()
        .map(|(p, _)| minor_weight(m, &rows, &rows, &p))
        .collect();
    let total = weights.len();
    let check_mask = |mask: u64| -> bool {
        let in_t: Vec<&TropScalar> = (0..total)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| &weights[i])
            .collect();
        let out_t: Vec<&TropScalar> = (0..total)
            .filter(|&i| mask >> i & 1 == 0)
            .map(|i| &weights[i])
            .collect();
        t_sum(in_t) == t_sum(out_t)
    };
    match sample_cap {
        None => (1..(1u64 << total)).any(check_mask),
        Some(cap) => {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            (0..cap).any(|_| {
                let mask = rng.gen_range(1..(1u64 << total));
                check_mask(mask)
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::mat_mul;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;
    use SemiringFlavor::{TBar, FT, T};

    fn opts() -> RankOptions {
        RankOptions::default()
    }

    #[test]
    fn row_and_col_ranks_of_bundled_matrices() {
        assert_eq!(col_rank(&fixtures::a61()), 4);
        assert_eq!(col_rank(&fixtures::b61()), 3);
        assert_eq!(row_rank(&fixtures::b61()), 3);
        assert_eq!(row_rank(&fixtures::a61()), 3);
        assert_eq!(col_rank(&fixtures::a62()), 3);
        assert_eq!(col_rank(&fixtures::b62()), 4);
    }

    #[test]
    fn strongly_regular_examples() {
        let id2 = TropMatrix::identity(T, 2).unwrap();
        assert!(strongly_regular(&id2).unwrap());

        let flat = TropMatrix::from_ints(FT, &[&[0, 0], &[0, 0]]);
        assert!(!strongly_regular(&flat).unwrap());

        // rows {0,1,2} × cols {1,2,3} of B61: unique maximum weight 3
        let b = fixtures::b61();
        let minor = submatrix(&b, &[0, 1, 2], &[1, 2, 3]);
        assert!(strongly_regular(&minor).unwrap());

        let zero = TropMatrix::zero(T, 1, 1).unwrap();
        assert!(!strongly_regular(&zero).unwrap());
    }

    #[test]
    fn strong_regularity_matches_balancing_subsets() {
        // exhaustive for k ≤ 3, sampled for k = 4
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for trial in 0..120 {
            let k = rng.gen_range(1..=3);
            let m = TropMatrix::from_fn(T, k, k, |_, _| {
                if rng.gen_bool(0.15) {
                    TropScalar::NegInf
                } else {
                    TropScalar::int(rng.gen_range(-3..=3))
                }
            })
            .unwrap();
            let unique_max = strongly_regular(&m).unwrap();
            let balanced = balancing_subset_exists(&m, None, 0);
            assert_eq!(unique_max, !balanced, "trial {trial}: {m:?}");
        }
        for trial in 0..20 {
            let m = TropMatrix::from_fn(FT, 4, 4, |_, _| TropScalar::int(rng.gen_range(-2..=2)))
                .unwrap();
            if strongly_regular(&m).unwrap() {
                assert!(
                    !balancing_subset_exists(&m, Some(4000), trial),
                    "sampled balancing subset against a unique maximum"
                );
            }
        }
    }

    #[test]
    fn tropical_rank_examples() {
        assert_eq!(tropical_rank(&fixtures::a63(), &opts()).unwrap(), 3);
        let flat = TropMatrix::from_ints(FT, &[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
        assert_eq!(tropical_rank(&flat, &opts()).unwrap(), 1);
        assert_eq!(tropical_rank(&fixtures::b61(), &opts()).unwrap(), 3);
        let zero = TropMatrix::zero(T, 2, 2).unwrap();
        assert_eq!(tropical_rank(&zero, &opts()).unwrap(), 0);
    }

    #[test]
    fn determinantal_rank_examples() {
        // |M|+ = 5 ≠ 8 = |M|- on the full 3×3
        assert_eq!(determinantal_rank(&fixtures::a63(), &opts()).unwrap(), 3);
        let flat = TropMatrix::from_ints(FT, &[&[0, 0], &[0, 0]]);
        assert_eq!(determinantal_rank(&flat, &opts()).unwrap(), 1);
        let tb = TropMatrix::from_ints(FT, &[&[0]])
            .with_flavor(TBar)
            .unwrap();
        assert!(matches!(
            determinantal_rank(&tb, &opts()),
            Err(Error::FlavorUnsupported { .. })
        ));
    }

    #[test]
    fn factor_rank_examples() {
        assert_eq!(
            factor_rank_bounds(&fixtures::b61(), &opts()).unwrap(),
            IntInterval::exact(3)
        );
        let zero = TropMatrix::zero(T, 3, 3).unwrap();
        assert_eq!(
            factor_rank_bounds(&zero, &opts()).unwrap(),
            IntInterval::exact(0)
        );
        let flat = TropMatrix::from_ints(FT, &[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
        assert_eq!(
            factor_rank_bounds(&flat, &opts()).unwrap(),
            IntInterval::exact(1)
        );
    }

    #[test]
    fn gm_example_matrix() {
        let g = fixtures::g27();
        assert_eq!(
            gm_rank(&g, Axis::Columns, T, &opts()).unwrap(),
            IntInterval::exact(2)
        );
        assert_eq!(
            gm_rank(&g, Axis::Columns, TBar, &opts()).unwrap(),
            IntInterval::exact(1)
        );
        // the TBar dependence uses +inf coefficients
        let cols: Vec<TropVector> = g.cols().collect();
        match gm_independent(&cols, TBar, &opts()).unwrap() {
            GmVerdict::Dependent(w) => {
                assert!(w.verify(&cols));
                assert!(w.coeffs.iter().any(|(_, c)| *c == TropScalar::PosInf));
            }
            other => panic!("expected dependence over TBar, got {other:?}"),
        }
    }

    #[test]
    fn gm_trivia() {
        let single = vec![TropVector::from_ints(T, &[1, 2]).with_flavor(T).unwrap()];
        assert!(gm_independent(&single, T, &opts())
            .unwrap()
            .is_independent());

        let zero = TropMatrix::zero(T, 2, 2).unwrap();
        assert_eq!(
            gm_rank(&zero, Axis::Columns, T, &opts()).unwrap(),
            IntInterval::exact(0)
        );

        assert!(matches!(
            gm_independent(&single, FT, &opts()),
            Err(Error::FlavorUnsupported { .. })
        ));
    }

    /// Independent grid-enumeration oracle: try every side assignment and
    /// every coefficient from a small grid. With entries in [-2, 2] any
    /// balanced relation normalizes into the grid, so the two must agree.
    fn grid_dependent(vectors: &[TropVector], flavor: SemiringFlavor) -> bool {
        let dim = vectors[0].len();
        let mut grid: Vec<TropScalar> = (-5..=5).map(TropScalar::int).collect();
        if flavor == TBar {
            grid.push(TropScalar::PosInf);
        }
        fn rec(
            vectors: &[TropVector],
            dim: usize,
            grid: &[TropScalar],
            sides: &mut Vec<u8>,
            coeffs: &mut Vec<TropScalar>,
        ) -> bool {
            if sides.len() == vectors.len() {
                if sides.iter().all(|&s| s == 0) {
                    return false;
                }
                let pick = |side: u8| -> (Vec<TropVector>, Vec<TropScalar>) {
                    let mut gs = Vec::new();
                    let mut cs = Vec::new();
                    for (j, (&s, c)) in sides.iter().zip(coeffs.iter()).enumerate() {
                        if s == side {
                            gs.push(vectors[j].clone());
                            cs.push(c.clone());
                        }
                    }
                    (gs, cs)
                };
                let (lg, lc) = pick(1);
                let (rg, rc) = pick(2);
                return crate::convex::combine(dim, &lg, &lc)
                    == crate::convex::combine(dim, &rg, &rc);
            }
            for side in 0..=2u8 {
                sides.push(side);
                if side == 0 {
                    coeffs.push(TropScalar::NegInf);
                    if rec(vectors, dim, grid, sides, coeffs) {
                        return true;
                    }
                    coeffs.pop();
                } else {
                    for c in grid {
                        coeffs.push(c.clone());
                        if rec(vectors, dim, grid, sides, coeffs) {
                            return true;
                        }
                        coeffs.pop();
                    }
                }
                sides.pop();
            }
            false
        }
        rec(vectors, dim, &grid, &mut Vec::new(), &mut Vec::new())
    }

    #[test]
    fn gm_solver_matches_grid_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(31415);
        for flavor in [T, TBar] {
            for trial in 0..60 {
                let t = rng.gen_range(1..=3);
                let dim = rng.gen_range(1..=3);
                let vectors: Vec<TropVector> = (0..t)
                    .map(|_| {
                        TropVector::new(
                            flavor,
                            (0..dim)
                                .map(|_| {
                                    let r: f64 = rng.gen();
                                    if r < 0.25 {
                                        TropScalar::NegInf
                                    } else if flavor == TBar && r < 0.35 {
                                        TropScalar::PosInf
                                    } else {
                                        TropScalar::int(rng.gen_range(-2..=2))
                                    }
                                })
                                .collect(),
                        )
                        .unwrap()
                    })
                    .collect();
                let solver = gm_independent(&vectors, flavor, &opts()).unwrap();
                let grid = grid_dependent(&vectors, flavor);
                match solver {
                    GmVerdict::Independent => {
                        assert!(
                            !grid,
                            "unsound Independent over {flavor:?} at {trial}: {vectors:?}"
                        )
                    }
                    GmVerdict::Dependent(w) => {
                        assert!(w.verify(&vectors));
                        assert!(grid, "grid oracle missed a genuine relation: {vectors:?}");
                    }
                    GmVerdict::Unknown => panic!("budget cannot trip at this size"),
                }
            }
        }
    }

    #[test]
    fn gm_rank_t_dominates_tbar() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..40 {
            let m = TropMatrix::from_fn(T, 3, 3, |_, _| {
                if rng.gen_bool(0.25) {
                    TropScalar::NegInf
                } else {
                    TropScalar::int(rng.gen_range(-3..=3))
                }
            })
            .unwrap();
            let over_t = gm_rank(&m, Axis::Columns, T, &opts()).unwrap();
            let over_tbar = gm_rank(&m, Axis::Columns, TBar, &opts()).unwrap();
            if over_t.is_exact() && over_tbar.is_exact() {
                assert!(over_t.lb >= over_tbar.lb, "{m:?}");
            }
        }
    }

    #[test]
    fn transpose_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..30 {
            let m = TropMatrix::from_fn(T, 3, 3, |_, _| {
                if rng.gen_bool(0.2) {
                    TropScalar::NegInf
                } else {
                    TropScalar::int(rng.gen_range(-4..=4))
                }
            })
            .unwrap();
            assert_eq!(
                tropical_rank(&m, &opts()).unwrap(),
                tropical_rank(&m.transpose(), &opts()).unwrap()
            );
            assert_eq!(
                determinantal_rank(&m, &opts()).unwrap(),
                determinantal_rank(&m.transpose(), &opts()).unwrap()
            );
        }
    }

    #[test]
    fn tropical_le_determinantal_fuzz() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..40 {
            let m = TropMatrix::from_fn(FT, 3, 3, |_, _| TropScalar::int(rng.gen_range(-4..=4)))
                .unwrap();
            assert!(
                tropical_rank(&m, &opts()).unwrap() <= determinantal_rank(&m, &opts()).unwrap()
            );
        }
    }

    #[test]
    fn rank_report_for_g27() {
        let r = RankReport::compute(&fixtures::g27(), &opts()).unwrap();
        assert_eq!(r.row_rank, 2);
        assert_eq!(r.col_rank, 2);
        assert_eq!(r.gm_col, Some(IntInterval::exact(2)));
        assert!(r.all_consistent());
    }

    #[test]
    fn size_cap_enforced() {
        let big = TropMatrix::from_fn(FT, 6, 6, |i, j| TropScalar::int((i + j) as i64)).unwrap();
        assert!(matches!(
            tropical_rank(&big, &opts()),
            Err(Error::SizeCapExceeded { .. })
        ));
        let raised = RankOptions {
            enum_cap: 6,
            ..opts()
        };
        assert!(tropical_rank(&big, &raised).is_ok());
    }

    #[test]
    fn rank_product_smoke() {
        // rank(AB) ≤ min(rank A, rank B) for the monotone ranks
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..25 {
            let gen = |rng: &mut ChaCha8Rng| {
                TropMatrix::from_fn(T, 3, 3, |_, _| {
                    if rng.gen_bool(0.2) {
                        TropScalar::NegInf
                    } else {
                        TropScalar::int(rng.gen_range(-4..=4))
                    }
                })
                .unwrap()
            };
            let a = gen(&mut rng);
            let b = gen(&mut rng);
            let ab = mat_mul(&a, &b).unwrap();
            assert!(
                tropical_rank(&ab, &opts()).unwrap()
                    <= tropical_rank(&a, &opts())
                        .unwrap()
                        .min(tropical_rank(&b, &opts()).unwrap())
            );
            assert!(
                determinantal_rank(&ab, &opts()).unwrap()
                    <= determinantal_rank(&a, &opts())
                        .unwrap()
                        .min(determinantal_rank(&b, &opts()).unwrap())
            );
        }
    }
}
