//! Tropical vectors and matrices: products, the scalar product, residuation
//! (principal solutions) and projectivization.
//!
//! Residuals are always computed with the completed-semiring (`TBar`)
//! conventions, where principal solutions exist; callers narrow the flavor
//! of any witness they want to keep.

use crate::error::{Error, Result};
use crate::scalar::{SemiringFlavor, TropScalar};

/// An affine tropical vector with a declared flavor.
///
/// The flavor is a view tag recording which semiring the entries were
/// validated against; equality compares entries only, so a vector computed
/// over `TBar` equals the `T`-flavored vector with the same entries.
#[derive(Debug, Clone, Eq)]
pub struct TropVector {
    flavor: SemiringFlavor,
    entries: Vec<TropScalar>,
}

impl PartialEq for TropVector {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl TropVector {
    pub fn new(flavor: SemiringFlavor, entries: Vec<TropScalar>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::DimensionMismatch {
                op: "TropVector::new",
                detail: "a vector needs at least one entry".into(),
            });
        }
        for e in &entries {
            if !flavor.admits(e) {
                return Err(Error::IllegalEntry {
                    flavor: flavor.name(),
                    value: e.to_text(),
                });
            }
        }
        Ok(TropVector { flavor, entries })
    }

    pub fn from_ints(flavor: SemiringFlavor, entries: &[i64]) -> Self {
        TropVector::new(
            flavor,
            entries.iter().map(|&n| TropScalar::int(n)).collect(),
        )
        .expect("integer entries are legal in every flavor")
    }

    /// The all-`-inf` vector (the zero of `T`/`TBar` modules).
    pub fn zero(flavor: SemiringFlavor, len: usize) -> Result<Self> {
        TropVector::new(flavor, vec![TropScalar::NegInf; len])
    }

    pub fn flavor(&self) -> SemiringFlavor {
        self.flavor
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[TropScalar] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &TropScalar {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| *e == TropScalar::NegInf)
    }

    /// Reinterpret under another flavor, validating every entry.
    pub fn with_flavor(&self, flavor: SemiringFlavor) -> Result<TropVector> {
        TropVector::new(flavor, self.entries.clone())
    }

    /// Componentwise tropical sum; flavors must unify.
    pub fn join(&self, rhs: &TropVector) -> Result<TropVector> {
        if self.len() != rhs.len() {
            return Err(Error::DimensionMismatch {
                op: "join",
                detail: format!("{} vs {}", self.len(), rhs.len()),
            });
        }
        let flavor = self.flavor.unify(rhs.flavor);
        TropVector::new(
            flavor,
            self.entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.t_add(b))
                .collect(),
        )
    }

    /// Scale every entry by `lambda`.
    pub fn scale(&self, lambda: &TropScalar) -> TropVector {
        let entries: Vec<_> = self.entries.iter().map(|e| lambda.t_mul(e)).collect();
        let flavor = if entries.iter().all(|e| self.flavor.admits(e)) {
            self.flavor
        } else {
            SemiringFlavor::TBar
        };
        TropVector { flavor, entries }
    }

    /// Componentwise `≤`.
    pub fn leq(&self, rhs: &TropVector) -> bool {
        self.len() == rhs.len() && self.entries.iter().zip(&rhs.entries).all(|(a, b)| a <= b)
    }

    /// Entrywise involution with `TBar` conventions.
    pub fn neg_unchecked(&self) -> TropVector {
        TropVector {
            flavor: SemiringFlavor::TBar,
            entries: self.entries.iter().map(|e| e.neg_unchecked()).collect(),
        }
    }
}

/// A rectangular tropical matrix with a declared flavor.
///
/// As with [`TropVector`], the flavor is a validation tag and equality
/// compares shape and entries only.
#[derive(Debug, Clone, Eq)]
pub struct TropMatrix {
    flavor: SemiringFlavor,
    n_rows: usize,
    n_cols: usize,
    grid: Vec<TropScalar>, // row major
}

impl PartialEq for TropMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.n_rows == other.n_rows && self.n_cols == other.n_cols && self.grid == other.grid
    }
}

impl TropMatrix {
    pub fn from_rows(flavor: SemiringFlavor, rows: Vec<Vec<TropScalar>>) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::DimensionMismatch {
                op: "TropMatrix::from_rows",
                detail: "a matrix needs at least one row and one column".into(),
            });
        }
        let n_cols = rows[0].len();
        let mut grid = Vec::with_capacity(rows.len() * n_cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n_cols {
                return Err(Error::DimensionMismatch {
                    op: "TropMatrix::from_rows",
                    detail: format!("row {r} has {} entries, expected {n_cols}", row.len()),
                });
            }
            for e in row {
                if !flavor.admits(e) {
                    return Err(Error::IllegalEntry {
                        flavor: flavor.name(),
                        value: e.to_text(),
                    });
                }
                grid.push(e.clone());
            }
        }
        Ok(TropMatrix {
            flavor,
            n_rows: rows.len(),
            n_cols,
            grid,
        })
    }

    pub fn from_ints(flavor: SemiringFlavor, rows: &[&[i64]]) -> Self {
        TropMatrix::from_rows(
            flavor,
            rows.iter()
                .map(|r| r.iter().map(|&n| TropScalar::int(n)).collect())
                .collect(),
        )
        .expect("integer entries are legal in every flavor")
    }

    pub fn from_fn(
        flavor: SemiringFlavor,
        n_rows: usize,
        n_cols: usize,
        mut f: impl FnMut(usize, usize) -> TropScalar,
    ) -> Result<Self> {
        let mut rows = Vec::with_capacity(n_rows);
        for i in 0..n_rows {
            rows.push((0..n_cols).map(|j| f(i, j)).collect());
        }
        TropMatrix::from_rows(flavor, rows)
    }

    /// The all-`-inf` matrix.
    pub fn zero(flavor: SemiringFlavor, n_rows: usize, n_cols: usize) -> Result<Self> {
        TropMatrix::from_fn(flavor, n_rows, n_cols, |_, _| TropScalar::NegInf)
    }

    /// The tropical identity: `0` on the diagonal, `-inf` elsewhere.
    /// Does not exist over `FT`.
    pub fn identity(flavor: SemiringFlavor, n: usize) -> Result<Self> {
        if flavor == SemiringFlavor::FT {
            return Err(Error::FlavorUnsupported {
                op: "identity matrix",
                flavor: "FT",
            });
        }
        TropMatrix::from_fn(flavor, n, n, |i, j| {
            if i == j {
                TropScalar::int(0)
            } else {
                TropScalar::NegInf
            }
        })
    }

    pub fn flavor(&self) -> SemiringFlavor {
        self.flavor
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn is_square(&self) -> bool {
        self.n_rows == self.n_cols
    }

    pub fn get(&self, i: usize, j: usize) -> &TropScalar {
        &self.grid[i * self.n_cols + j]
    }

    pub fn row(&self, i: usize) -> TropVector {
        TropVector {
            flavor: self.flavor,
            entries: self.grid[i * self.n_cols..(i + 1) * self.n_cols].to_vec(),
        }
    }

    pub fn col(&self, j: usize) -> TropVector {
        TropVector {
            flavor: self.flavor,
            entries: (0..self.n_rows).map(|i| self.get(i, j).clone()).collect(),
        }
    }

    pub fn rows(&self) -> impl Iterator<Item = TropVector> + '_ {
        (0..self.n_rows).map(|i| self.row(i))
    }

    pub fn cols(&self) -> impl Iterator<Item = TropVector> + '_ {
        (0..self.n_cols).map(|j| self.col(j))
    }

    pub fn transpose(&self) -> TropMatrix {
        TropMatrix::from_fn(self.flavor, self.n_cols, self.n_rows, |i, j| {
            self.get(j, i).clone()
        })
        .expect("transpose preserves legality")
    }

    pub fn is_zero(&self) -> bool {
        self.grid.iter().all(|e| *e == TropScalar::NegInf)
    }

    /// Reinterpret under another flavor, validating every entry.
    pub fn with_flavor(&self, flavor: SemiringFlavor) -> Result<TropMatrix> {
        for e in &self.grid {
            if !flavor.admits(e) {
                return Err(Error::IllegalEntry {
                    flavor: flavor.name(),
                    value: e.to_text(),
                });
            }
        }
        let mut m = self.clone();
        m.flavor = flavor;
        Ok(m)
    }

    /// Largest absolute value among finite entries (0 if none). Used for
    /// divergence thresholds in searches.
    pub fn max_finite_abs(&self) -> num_rational::BigRational {
        use num_traits::Zero;
        let mut best = num_rational::BigRational::zero();
        for e in &self.grid {
            let a = e.finite_abs();
            if a > best {
                best = a;
            }
        }
        best
    }

    pub fn entrywise_leq(&self, rhs: &TropMatrix) -> bool {
        self.n_rows == rhs.n_rows
            && self.n_cols == rhs.n_cols
            && self.grid.iter().zip(&rhs.grid).all(|(a, b)| a <= b)
    }

    /// Replace every entry matching `from` by `to`; flavor revalidated lazily
    /// by the caller via [`TropMatrix::with_flavor`].
    pub fn substitute(&self, from: &TropScalar, to: &TropScalar) -> TropMatrix {
        let grid: Vec<_> = self
            .grid
            .iter()
            .map(|e| if e == from { to.clone() } else { e.clone() })
            .collect();
        let flavor = if grid.iter().all(|e| self.flavor.admits(e)) {
            self.flavor
        } else {
            SemiringFlavor::TBar
        };
        TropMatrix {
            flavor,
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            grid,
        }
    }
}

impl serde::Serialize for TropMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.n_rows))?;
        for i in 0..self.n_rows {
            seq.serialize_element(&self.grid[i * self.n_cols..(i + 1) * self.n_cols])?;
        }
        seq.end()
    }
}

/// Tropical matrix product `(AB)_{ik} = ⊕_j A_{ij} ⊗ B_{jk}`.
pub fn mat_mul(a: &TropMatrix, b: &TropMatrix) -> Result<TropMatrix> {
    if a.n_cols != b.n_rows {
        return Err(Error::DimensionMismatch {
            op: "mat_mul",
            detail: format!("{}x{} times {}x{}", a.n_rows, a.n_cols, b.n_rows, b.n_cols),
        });
    }
    let flavor = a.flavor.unify(b.flavor);
    TropMatrix::from_fn(flavor, a.n_rows, b.n_cols, |i, k| {
        let mut acc = TropScalar::NegInf;
        for j in 0..a.n_cols {
            acc = acc.t_add(&a.get(i, j).t_mul(b.get(j, k)));
        }
        acc
    })
}

/// Apply a matrix to a column vector: `A ⊗ x`.
pub fn mat_vec(a: &TropMatrix, x: &TropVector) -> Result<TropVector> {
    if a.n_cols != x.len() {
        return Err(Error::DimensionMismatch {
            op: "mat_vec",
            detail: format!("{}x{} times {}", a.n_rows, a.n_cols, x.len()),
        });
    }
    let entries = (0..a.n_rows)
        .map(|i| {
            let mut acc = TropScalar::NegInf;
            for j in 0..a.n_cols {
                acc = acc.t_add(&a.get(i, j).t_mul(x.get(j)));
            }
            acc
        })
        .collect();
    Ok(TropVector {
        flavor: SemiringFlavor::TBar,
        entries,
    })
}

/// Apply a row vector to a matrix: `x ⊗ A`.
pub fn vec_mat(x: &TropVector, a: &TropMatrix) -> Result<TropVector> {
    mat_vec(&a.transpose(), x)
}

/// The scalar product `⟨x|y⟩ = max{λ : λ ⊗ x ≤ y}`.
///
/// `+inf` exactly when every coordinate has `x_i = -inf` or `y_i = +inf`;
/// `-inf` exactly when some coordinate has `x_j = +inf ≠ y_j` or
/// `y_j = -inf ≠ x_j`.
pub fn scalar_product(x: &TropVector, y: &TropVector) -> Result<TropScalar> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            op: "scalar_product",
            detail: format!("{} vs {}", x.len(), y.len()),
        });
    }
    let mut acc = TropScalar::PosInf;
    for (xi, yi) in x.entries.iter().zip(&y.entries) {
        let lam = xi.residual(yi);
        if lam < acc {
            acc = lam;
        }
    }
    Ok(acc)
}

/// Greatest `P` with `P ⊗ M ≤ A`; computed over `TBar`.
///
/// `P*_{ij} = ⟨row_j(M) | row_i(A)⟩`, and the Galois property holds:
/// `P ⊗ M ≤ A ⟺ P ≤ P*`.
pub fn right_residual(a: &TropMatrix, m: &TropMatrix) -> Result<TropMatrix> {
    if a.n_cols != m.n_cols {
        return Err(Error::DimensionMismatch {
            op: "right_residual",
            detail: format!("A has {} cols, M has {}", a.n_cols, m.n_cols),
        });
    }
    TropMatrix::from_fn(SemiringFlavor::TBar, a.n_rows, m.n_rows, |i, j| {
        scalar_product(&m.row(j), &a.row(i)).expect("equal lengths")
    })
}

/// Greatest `Q` with `M ⊗ Q ≤ A`; computed over `TBar`.
///
/// `Q*_{ij} = ⟨col_i(M) | col_j(A)⟩`.
pub fn left_residual(m: &TropMatrix, a: &TropMatrix) -> Result<TropMatrix> {
    if a.n_rows != m.n_rows {
        return Err(Error::DimensionMismatch {
            op: "left_residual",
            detail: format!("A has {} rows, M has {}", a.n_rows, m.n_rows),
        });
    }
    TropMatrix::from_fn(SemiringFlavor::TBar, m.n_cols, a.n_cols, |i, j| {
        scalar_product(&m.col(i), &a.col(j)).expect("equal lengths")
    })
}

/// Chart coordinates of a projective point: `(x_1 - x_n, …, x_{n-1} - x_n)`.
///
/// The final coordinate must be finite; other entries may be infinite and
/// map to the corresponding infinities.
pub fn projectivize(x: &TropVector) -> Result<Vec<TropScalar>> {
    let n = x.len();
    if n < 2 {
        return Err(Error::ChartUndefined(
            "chart needs ambient dimension at least 2".into(),
        ));
    }
    let last = x.get(n - 1);
    if !last.is_finite() {
        return Err(Error::ChartUndefined(format!(
            "last coordinate is {last}, not finite"
        )));
    }
    let neg_last = last.neg_unchecked();
    Ok(x.entries[..n - 1]
        .iter()
        .map(|e| neg_last.t_mul(e))
        .collect())
}

/// True when `y = λ ⊗ x` for a finite `λ`: infinite coordinates agree
/// exactly and `y_i - x_i` is constant over the finite coordinates.
pub fn proj_equal(x: &TropVector, y: &TropVector) -> bool {
    if x.len() != y.len() {
        return false;
    }
    let mut lambda: Option<TropScalar> = None;
    for (a, b) in x.entries.iter().zip(&y.entries) {
        match (a.is_finite(), b.is_finite()) {
            (true, true) => {
                let d = a.neg_unchecked().t_mul(b);
                match &lambda {
                    None => lambda = Some(d),
                    Some(l) if *l == d => {}
                    Some(_) => return false,
                }
            }
            (false, false) => {
                if a != b {
                    return false;
                }
            }
            _ => return false,
        }
    }
    true
}

/// A projective point: the original vector plus a representative scaled so
/// that its last finite coordinate is `0` (when one exists). Equality is
/// projective equality.
#[derive(Debug, Clone)]
pub struct ProjPoint {
    original: TropVector,
    base: TropVector,
}

impl ProjPoint {
    pub fn new(v: TropVector) -> Self {
        let base = match v.entries.iter().rposition(|e| e.is_finite()) {
            Some(k) => v.scale(&v.get(k).neg_unchecked()),
            None => v.clone(),
        };
        ProjPoint { original: v, base }
    }

    pub fn original(&self) -> &TropVector {
        &self.original
    }

    pub fn base(&self) -> &TropVector {
        &self.base
    }
}

impl PartialEq for ProjPoint {
    fn eq(&self, other: &Self) -> bool {
        proj_equal(&self.base, &other.base)
    }
}

impl Eq for ProjPoint {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;
    use SemiringFlavor::{TBar, FT, T};

    fn v(flavor: SemiringFlavor, entries: &[&str]) -> TropVector {
        TropVector::new(
            flavor,
            entries
                .iter()
                .map(|t| TropScalar::parse(t).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn flavor_validation() {
        assert!(TropVector::new(FT, vec![TropScalar::NegInf]).is_err());
        assert!(TropVector::new(T, vec![TropScalar::PosInf]).is_err());
        assert!(TropVector::new(TBar, vec![TropScalar::PosInf]).is_ok());
    }

    #[test]
    fn product_reproduces_bundled_identity() {
        // A61 = B61 ⊗ X61
        let a = fixtures::a61();
        let b = fixtures::b61();
        let x = fixtures::x61();
        assert_eq!(mat_mul(&b, &x).unwrap(), a);
    }

    #[test]
    fn product_trivia() {
        let one = TropMatrix::from_ints(FT, &[&[0]]);
        assert_eq!(mat_mul(&one, &one).unwrap(), one);

        let id = TropMatrix::identity(T, 2).unwrap();
        let m = TropMatrix::from_ints(T, &[&[3, -1], &[2, 7]])
            .with_flavor(T)
            .unwrap();
        assert_eq!(mat_mul(&id, &m).unwrap(), m);
        assert_eq!(mat_mul(&m, &id).unwrap(), m);
    }

    #[test]
    fn scalar_product_examples() {
        let x = v(FT, &["0", "0"]);
        let y = v(FT, &["1", "2"]);
        assert_eq!(scalar_product(&x, &y).unwrap(), TropScalar::int(1));

        // ⟨x|x⟩ = 0 when some entry is rational
        let z = v(T, &["-inf", "4"]);
        assert_eq!(scalar_product(&z, &z).unwrap(), TropScalar::int(0));

        let ninf = v(T, &["-inf", "-inf"]);
        let w = v(T, &["5", "7"]);
        assert_eq!(scalar_product(&ninf, &w).unwrap(), TropScalar::PosInf);
    }

    #[test]
    fn scalar_product_infinity_characterisation() {
        // -inf exactly when x_j = +inf ≠ y_j or y_j = -inf ≠ x_j
        let x = v(TBar, &["+inf", "0"]);
        let y = v(TBar, &["3", "0"]);
        assert_eq!(scalar_product(&x, &y).unwrap(), TropScalar::NegInf);
        let x2 = v(TBar, &["0", "1"]);
        let y2 = v(TBar, &["-inf", "4"]);
        assert_eq!(scalar_product(&x2, &y2).unwrap(), TropScalar::NegInf);
        // +inf tolerated on the right
        let y3 = v(TBar, &["+inf", "+inf"]);
        assert_eq!(scalar_product(&x2, &y3).unwrap(), TropScalar::PosInf);
    }

    #[test]
    fn residual_edge_cases() {
        let a = TropMatrix::from_ints(FT, &[&[0]]);
        let m = TropMatrix::zero(T, 1, 1).unwrap();
        let p = right_residual(&a, &m).unwrap();
        assert_eq!(p.get(0, 0), &TropScalar::PosInf);

        let q = left_residual(&m, &a).unwrap();
        assert_eq!(q.get(0, 0), &TropScalar::PosInf);
    }

    #[test]
    fn residual_certifies_row_space_containment() {
        let a = fixtures::a61();
        let b = fixtures::b61();
        // Ex 6.1 guarantees C(A) ⊆ C(B), i.e. B ⊗ X = A is solvable; the
        // principal solution must then achieve it.
        let x = left_residual(&b, &a).unwrap();
        assert_eq!(mat_mul(&b, &x).unwrap(), a);

        // Self-residuals reproduce the matrix.
        let m = TropMatrix::from_ints(FT, &[&[1, 4], &[-2, 0]]);
        let p = right_residual(&m, &m).unwrap();
        assert_eq!(mat_mul(&p, &m).unwrap(), m);
        let q = left_residual(&m, &m).unwrap();
        assert_eq!(mat_mul(&m, &q).unwrap(), m);
    }

    #[test]
    fn projectivize_examples() {
        let x = TropVector::from_ints(FT, &[1, 2, 3]);
        let chart = projectivize(&x).unwrap();
        assert_eq!(chart, vec![TropScalar::int(-2), TropScalar::int(-1)]);

        let y = TropVector::from_ints(FT, &[0, 1, 2, 3]);
        assert_eq!(
            projectivize(&y).unwrap(),
            vec![
                TropScalar::int(-3),
                TropScalar::int(-2),
                TropScalar::int(-1)
            ]
        );

        let z = TropVector::from_ints(FT, &[0, 0, 0]);
        assert_eq!(
            projectivize(&z.scale(&TropScalar::int(17))).unwrap(),
            projectivize(&z).unwrap()
        );

        let bad = v(T, &["0", "-inf"]);
        assert!(matches!(projectivize(&bad), Err(Error::ChartUndefined(_))));
    }

    #[test]
    fn proj_equal_examples() {
        assert!(proj_equal(
            &TropVector::from_ints(FT, &[0, 0, 0]),
            &TropVector::from_ints(FT, &[4, 4, 4])
        ));
        assert!(!proj_equal(
            &TropVector::from_ints(FT, &[0, 1]),
            &TropVector::from_ints(FT, &[1, 0])
        ));
        assert!(proj_equal(&v(T, &["-inf", "0"]), &v(T, &["-inf", "3"])));
        assert!(!proj_equal(&v(T, &["-inf", "0"]), &v(T, &["0", "0"])));
        // all-infinite patterns compare by pattern
        assert!(proj_equal(
            &v(T, &["-inf", "-inf"]),
            &v(T, &["-inf", "-inf"])
        ));
    }

    fn arb_entry() -> impl Strategy<Value = TropScalar> {
        prop_oneof![
            6 => (-9i64..9).prop_map(TropScalar::int),
            1 => Just(TropScalar::NegInf),
            1 => Just(TropScalar::PosInf),
        ]
    }

    fn arb_matrix(rows: usize, cols: usize) -> impl Strategy<Value = TropMatrix> {
        proptest::collection::vec(arb_entry(), rows * cols).prop_map(move |grid| {
            TropMatrix::from_rows(TBar, grid.chunks(cols).map(|c| c.to_vec()).collect()).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn galois_adjunction(a in arb_matrix(3, 3), m in arb_matrix(3, 3), p in arb_matrix(3, 3)) {
            let pstar = right_residual(&a, &m).unwrap();
            // P* ⊗ M ≤ A always
            prop_assert!(mat_mul(&pstar, &m).unwrap().entrywise_leq(&a));
            // P ⊗ M ≤ A ⟺ P ≤ P*
            let lhs = mat_mul(&p, &m).unwrap().entrywise_leq(&a);
            let rhs = p.entrywise_leq(&pstar);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn mat_mul_associative(a in arb_matrix(2, 3), b in arb_matrix(3, 2), c in arb_matrix(2, 2)) {
            let l = mat_mul(&mat_mul(&a, &b).unwrap(), &c).unwrap();
            let r = mat_mul(&a, &mat_mul(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(l, r);
        }

        #[test]
        fn angle_opposition(xs in proptest::collection::vec(arb_entry(), 3),
                            ys in proptest::collection::vec(arb_entry(), 3)) {
            // Lemma: x ≠ y and ⟨x|y⟩ = +inf imply ⟨y|x⟩ = -inf.
            let x = TropVector::new(TBar, xs).unwrap();
            let y = TropVector::new(TBar, ys).unwrap();
            if x != y && scalar_product(&x, &y).unwrap() == TropScalar::PosInf {
                prop_assert_eq!(scalar_product(&y, &x).unwrap(), TropScalar::NegInf);
            }
        }

        #[test]
        fn scalar_product_homogeneity(xs in proptest::collection::vec(arb_entry(), 3),
                                      ys in proptest::collection::vec(arb_entry(), 3),
                                      lam in -9i64..9) {
            let x = TropVector::new(TBar, xs).unwrap();
            let y = TropVector::new(TBar, ys).unwrap();
            let l = TropScalar::int(lam);
            let scaled = scalar_product(&x.scale(&l), &y).unwrap();
            let base = scalar_product(&x, &y).unwrap();
            prop_assert_eq!(scaled, l.neg_unchecked().t_mul(&base));
        }

        #[test]
        fn all_finite_scalar_product_is_finite(xs in proptest::collection::vec(-9i64..9, 4),
                                               ys in proptest::collection::vec(-9i64..9, 4)) {
            let x = TropVector::from_ints(FT, &xs);
            let y = TropVector::from_ints(FT, &ys);
            prop_assert!(scalar_product(&x, &y).unwrap().is_finite());
        }
    }
}
