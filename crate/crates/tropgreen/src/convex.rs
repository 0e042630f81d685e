//! Finitely generated tropical convex sets: membership with certificates,
//! weak bases, generator and dual dimension, and a finite criterion deciding
//! whether an assignment on a weak basis extends to a linear morphism.

use crate::error::{Error, Result};
use crate::linalg::{scalar_product, ProjPoint, TropMatrix, TropVector};
use crate::scalar::{SemiringFlavor, TropScalar};

/// A finitely generated tropical convex set (an `S`-submodule of `S^n`),
/// with its weak basis computed eagerly at construction.
///
/// The weak basis is stored as indices into the original generator list, so
/// [`ConvexSet::weak_basis`] returns generators exactly as supplied;
/// projectively normalized copies are only used internally to deduplicate.
#[derive(Debug, Clone)]
pub struct ConvexSet {
    flavor: SemiringFlavor,
    dim: usize,
    generators: Vec<TropVector>,
    weak_basis_idx: Vec<usize>,
}

impl ConvexSet {
    pub fn from_generators(flavor: SemiringFlavor, generators: Vec<TropVector>) -> Result<Self> {
        if generators.is_empty() && flavor == SemiringFlavor::FT {
            return Err(Error::EmptyFinitarySet);
        }
        let dim = match generators.first() {
            Some(g) => g.len(),
            None => {
                return Err(Error::DimensionMismatch {
                    op: "ConvexSet::from_generators",
                    detail: "ambient dimension unknown for an empty generator list".into(),
                })
            }
        };
        for g in &generators {
            if g.len() != dim {
                return Err(Error::DimensionMismatch {
                    op: "ConvexSet::from_generators",
                    detail: format!("generator of length {} in ambient {dim}", g.len()),
                });
            }
            for e in g.entries() {
                if !flavor.admits(e) {
                    return Err(Error::IllegalEntry {
                        flavor: flavor.name(),
                        value: e.to_text(),
                    });
                }
            }
        }
        let weak_basis_idx = compute_weak_basis(flavor, &generators);
        Ok(ConvexSet {
            flavor,
            dim,
            generators,
            weak_basis_idx,
        })
    }

    /// The convex hull of the rows of `a`.
    pub fn row_space(a: &TropMatrix) -> Self {
        ConvexSet::from_generators(a.flavor(), a.rows().collect())
            .expect("matrix rows are legal generators")
    }

    /// The convex hull of the columns of `a`.
    pub fn col_space(a: &TropMatrix) -> Self {
        ConvexSet::from_generators(a.flavor(), a.cols().collect())
            .expect("matrix columns are legal generators")
    }

    pub fn flavor(&self) -> SemiringFlavor {
        self.flavor
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[TropVector] {
        &self.generators
    }

    /// The cached weak basis: an inclusion-minimal generating subset of the
    /// supplied generators, in input order.
    pub fn weak_basis(&self) -> Vec<&TropVector> {
        self.weak_basis_idx
            .iter()
            .map(|&i| &self.generators[i])
            .collect()
    }

    /// Cardinality of the weak basis; `0` only for the set generated by the
    /// all-`-inf` vector over `T`/`TBar`.
    pub fn generator_dimension(&self) -> usize {
        self.weak_basis_idx.len()
    }

    /// Membership test with a certificate of principal coefficients.
    ///
    /// `x ∈ span(g_1..g_k)` exactly if the combination with
    /// `α_i = ⟨g_i|x⟩` reproduces `x`; over `T`, `+inf` coefficients (which
    /// arise only against all-`-inf` generators) are clamped to `0` without
    /// changing the combination.
    pub fn member(&self, x: &TropVector) -> Result<Option<Vec<TropScalar>>> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                op: "member",
                detail: format!("point of length {} in ambient {}", x.len(), self.dim),
            });
        }
        Ok(member_of(self.flavor, &self.generators, x))
    }

    /// The greatest coefficients with `⊕ α_i ⊗ g_i ≤ x`, flavor-clamped.
    pub fn principal_coefficients(&self, x: &TropVector) -> Result<Vec<TropScalar>> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                op: "principal_coefficients",
                detail: format!("point of length {} in ambient {}", x.len(), self.dim),
            });
        }
        Ok(principal_coefficients_of(self.flavor, &self.generators, x))
    }

    /// Generator dimension of the column space of the matrix whose rows are
    /// this set's generators. An invariant of the set, not of the
    /// presentation; tested rather than assumed.
    pub fn dual_dimension(&self) -> Result<usize> {
        let rows: Vec<Vec<TropScalar>> = self
            .generators
            .iter()
            .map(|g| g.entries().to_vec())
            .collect();
        if rows.is_empty() {
            return Ok(0);
        }
        let m = TropMatrix::from_rows(self.flavor, rows)?;
        Ok(ConvexSet::col_space(&m).generator_dimension())
    }
}

/// Tropical combination `⊕ α_i ⊗ g_i`; the empty combination is the zero
/// vector.
pub fn combine(dim: usize, generators: &[TropVector], coeffs: &[TropScalar]) -> TropVector {
    let mut entries = vec![TropScalar::NegInf; dim];
    for (g, a) in generators.iter().zip(coeffs) {
        for (e, ge) in entries.iter_mut().zip(g.entries()) {
            let term = a.t_mul(ge);
            if term > *e {
                *e = term;
            }
        }
    }
    TropVector::new(SemiringFlavor::TBar, entries).expect("dim >= 1")
}

/// The greatest coefficients with `⊕ α_i ⊗ g_i ≤ x`, flavor-clamped.
fn principal_coefficients_of(
    flavor: SemiringFlavor,
    generators: &[TropVector],
    x: &TropVector,
) -> Vec<TropScalar> {
    generators
        .iter()
        .map(|g| {
            let a = scalar_product(g, x).expect("equal lengths");
            if a == TropScalar::PosInf && flavor != SemiringFlavor::TBar {
                // only possible against an all--inf generator (no +inf in x);
                // any finite coefficient gives the same all--inf contribution
                TropScalar::int(0)
            } else {
                a
            }
        })
        .collect()
}

/// Principal-solution membership test over a plain generator list.
fn member_of(
    flavor: SemiringFlavor,
    generators: &[TropVector],
    x: &TropVector,
) -> Option<Vec<TropScalar>> {
    if generators.is_empty() {
        return if x.is_zero() { Some(Vec::new()) } else { None };
    }
    let coeffs = principal_coefficients_of(flavor, generators, x);
    let combo = combine(x.len(), generators, &coeffs);
    if combo.entries() == x.entries() {
        Some(coeffs)
    } else {
        None
    }
}

/// Greedy in-order weak basis: drop projective duplicates and zero vectors,
/// then remove each generator expressible from the remaining ones.
/// Cardinality is presentation-independent (weak bases are unique up to
/// permutation and scaling).
fn compute_weak_basis(flavor: SemiringFlavor, generators: &[TropVector]) -> Vec<usize> {
    let mut kept: Vec<usize> = Vec::new();
    let mut seen: Vec<ProjPoint> = Vec::new();
    for (i, g) in generators.iter().enumerate() {
        if flavor != SemiringFlavor::FT && g.is_zero() {
            continue; // the empty combination already yields it
        }
        let p = ProjPoint::new(g.clone());
        if seen.contains(&p) {
            continue;
        }
        seen.push(p);
        kept.push(i);
    }
    let mut idx = 0;
    while idx < kept.len() {
        let candidate = kept[idx];
        let others: Vec<TropVector> = kept
            .iter()
            .filter(|&&j| j != candidate)
            .map(|&j| generators[j].clone())
            .collect();
        let redundant = if others.is_empty() {
            // over T/TBar an empty list spans only the zero vector, which
            // was already dropped; over FT a single generator is never
            // redundant
            false
        } else {
            member_of(flavor, &others, &generators[candidate]).is_some()
        };
        if redundant {
            kept.remove(idx);
        } else {
            idx += 1;
        }
    }
    kept
}

/// `true` when a linear surjection `X ↠ Y` is impossible because generator
/// dimension would have to be non-increasing. Sound, not complete.
pub fn surjection_gen_dim_obstruction(x: &ConvexSet, y: &ConvexSet) -> bool {
    x.generator_dimension() < y.generator_dimension()
}

/// A candidate linear morphism given by images of the domain's weak basis.
/// It is only a candidate until [`GeneratorMap::extends`] certifies it.
#[derive(Debug, Clone)]
pub struct GeneratorMap {
    domain: ConvexSet,
    codomain_dim: usize,
    images: Vec<TropVector>,
}

/// Outcome of the extension check.
#[derive(Debug, Clone)]
pub enum MapExtension {
    Extends,
    Violation(ViolationWitness),
}

impl MapExtension {
    pub fn extends(&self) -> bool {
        matches!(self, MapExtension::Extends)
    }
}

/// Explicit coefficients showing the assignment cannot be linear:
/// `⊕ β_j w_j ≥ w_i` holds in the domain but `⊕ β_j v_j ≥ v_i` fails at
/// codomain coordinate `coord`.
#[derive(Debug, Clone)]
pub struct ViolationWitness {
    pub generator: usize,
    pub coord: usize,
    pub beta: Vec<TropScalar>,
}

impl GeneratorMap {
    pub fn new(domain: ConvexSet, images: Vec<TropVector>) -> Result<Self> {
        if images.len() != domain.generator_dimension() {
            return Err(Error::DimensionMismatch {
                op: "GeneratorMap::new",
                detail: format!(
                    "{} images for a weak basis of size {}",
                    images.len(),
                    domain.generator_dimension()
                ),
            });
        }
        let codomain_dim = match images.first() {
            Some(v) => v.len(),
            None => domain.ambient_dim(),
        };
        for v in &images {
            if v.len() != codomain_dim {
                return Err(Error::DimensionMismatch {
                    op: "GeneratorMap::new",
                    detail: "images of unequal length".into(),
                });
            }
        }
        Ok(GeneratorMap {
            domain,
            codomain_dim,
            images,
        })
    }

    pub fn domain(&self) -> &ConvexSet {
        &self.domain
    }

    pub fn images(&self) -> &[TropVector] {
        &self.images
    }

    /// Decide whether `w_i ↦ v_i` extends to a linear morphism on
    /// `span(w_1..w_k)`.
    ///
    /// A violation at `(i, c)` exists exactly when coefficients `β` can
    /// simultaneously dominate `w_i` in the domain while every `β_j` stays
    /// strictly below the failure threshold for codomain coordinate `c`.
    /// Coordinate `d` of the domain is coverable iff some `j` admits a
    /// permitted `β_j` with `β_j ⊗ W_{j,d} ≥ W_{i,d}`; the assignment fails
    /// iff for some `(i, c)` every domain coordinate is coverable.
    ///
    /// Soundness is exact (witnesses re-verify by arithmetic). Completeness
    /// in the `±inf` corner cases over `TBar` is validated empirically by
    /// the `map-extends-oracle` suite rather than proven.
    pub fn extends(&self) -> MapExtension {
        let basis = self.domain.weak_basis();
        let k = basis.len();
        for i in 0..k {
            for c in 0..self.codomain_dim {
                if let Some(witness) = self.violation_at(&basis, i, c) {
                    return MapExtension::Violation(witness);
                }
            }
        }
        MapExtension::Extends
    }

    fn violation_at(&self, basis: &[&TropVector], i: usize, c: usize) -> Option<ViolationWitness> {
        use TropScalar::*;
        let k = basis.len();
        let vic = self.images[i].get(c);
        if *vic == NegInf {
            return None; // nothing can fail below -inf
        }

        // Permitted β_j: the downward-closed set keeping coordinate c of the
        // image combination strictly below v_{i,c}.
        #[derive(Clone, PartialEq)]
        enum Allowed {
            All,               // any β_j, including +inf
            OnlyNegInf,        // exactly -inf
            Below(TropScalar), // β_j < bound (bound finite or +inf)
        }
        let allowed: Vec<Allowed> = (0..k)
            .map(|j| {
                let vjc = self.images[j].get(c);
                match vjc {
                    NegInf => Allowed::All,
                    PosInf => Allowed::OnlyNegInf,
                    // β_j < v_{i,c} - v_{j,c}; the bound is the scalar
                    // residual of v_{j,c} into v_{i,c}
                    Finite(_) => Allowed::Below(vjc.residual(vic)),
                }
            })
            .collect();

        // What coordinate d demands of β_j, if j is to cover it.
        #[derive(Clone, PartialEq)]
        enum Req {
            AtLeast(TropScalar), // finite lower bound
            GtNegInf,            // any rational works
            ExactlyPosInf,       // β_j must be +inf
        }
        let satisfiable = |req: &Req, allow: &Allowed| -> bool {
            match (req, allow) {
                (Req::ExactlyPosInf, Allowed::All) => true,
                (Req::ExactlyPosInf, _) => false,
                (Req::GtNegInf, Allowed::All) => true,
                (Req::GtNegInf, Allowed::Below(b)) => *b > NegInf,
                (Req::GtNegInf, Allowed::OnlyNegInf) => false,
                (Req::AtLeast(_), Allowed::All) => true,
                (Req::AtLeast(r), Allowed::Below(b)) => r < b,
                (Req::AtLeast(_), Allowed::OnlyNegInf) => false,
            }
        };

        let n_dom = self.domain.ambient_dim();
        let mut picks: Vec<(usize, Req)> = Vec::new();
        for d in 0..n_dom {
            let wid = basis[i].get(d);
            if *wid == NegInf {
                continue; // imposes nothing
            }
            let mut found = None;
            for j in 0..k {
                let wjd = basis[j].get(d);
                let req = match (wid, wjd) {
                    (_, NegInf) => continue, // j cannot cover d
                    (PosInf, PosInf) => Req::GtNegInf,
                    (PosInf, Finite(_)) => Req::ExactlyPosInf,
                    (Finite(_), PosInf) => Req::GtNegInf,
                    (Finite(_), Finite(_)) => Req::AtLeast(wjd.residual(wid)),
                    (NegInf, _) => unreachable!(),
                };
                if satisfiable(&req, &allowed[j]) {
                    found = Some((j, req));
                    break;
                }
            }
            // coordinate d not coverable by any j: no violation here
            picks.push(found?);
        }

        // Assemble a concrete β meeting every pick inside its allowed set.
        let mut beta = vec![NegInf; k];
        for j in 0..k {
            let mut need_posinf = false;
            let mut need_finite = false;
            let mut low: Option<TropScalar> = None;
            for (pj, req) in &picks {
                if *pj != j {
                    continue;
                }
                match req {
                    Req::ExactlyPosInf => need_posinf = true,
                    Req::GtNegInf => need_finite = true,
                    Req::AtLeast(r) => {
                        let r = r.clone();
                        low = Some(match low {
                            None => r,
                            Some(l) => l.t_add(&r),
                        });
                    }
                }
            }
            beta[j] = if need_posinf {
                PosInf
            } else if let Some(r) = low {
                r
            } else if need_finite {
                match &allowed[j] {
                    Allowed::Below(Finite(b)) => {
                        Finite(b - num_rational::BigRational::from_integer(1.into()))
                    }
                    _ => TropScalar::int(0),
                }
            } else {
                NegInf
            };
        }

        let witness = ViolationWitness {
            generator: i,
            coord: c,
            beta,
        };
        debug_assert!(self.verify_violation(&witness));
        Some(witness)
    }

    /// Re-check a violation witness by exact arithmetic.
    pub fn verify_violation(&self, w: &ViolationWitness) -> bool {
        let basis: Vec<TropVector> = self.domain.weak_basis().into_iter().cloned().collect();
        let dom_combo = combine(self.domain.ambient_dim(), &basis, &w.beta);
        let img_combo = combine(self.codomain_dim, &self.images, &w.beta);
        basis[w.generator].leq(&dom_combo)
            && !self.images[w.generator].leq(&img_combo)
            && img_combo.get(w.coord) < self.images[w.generator].get(w.coord)
    }

    /// Apply the certified map to `x ∈ domain` via principal coefficients.
    pub fn apply(&self, x: &TropVector) -> Result<TropVector> {
        if !self.extends().extends() {
            return Err(Error::NotAMorphism);
        }
        let basis: Vec<TropVector> = self.domain.weak_basis().into_iter().cloned().collect();
        let basis_set = ConvexSet::from_generators(self.domain.flavor(), basis)?;
        let coeffs = basis_set.member(x)?.ok_or(Error::NotAMember)?;
        Ok(combine(self.codomain_dim, &self.images, &coeffs))
    }
}
