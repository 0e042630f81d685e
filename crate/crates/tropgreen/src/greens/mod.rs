//! Deciders and semideciders for Green's relations on tropical matrix
//! semigroups.
//!
//! `≤_L`, `≤_R`, `L`, `R` and `H` are decided exactly by residuation.
//! `≤_J`, `J` and `D` combine sound obstructions (rank monotonicity,
//! generator dimensions) with bounded witness searches; every `Holds`
//! verdict carries a witness that re-verifies by exact arithmetic, every
//! `Fails` a proven obstruction, and `Unknown` is the honest answer when a
//! budget runs out.

mod dclass;
mod diagnostics;
mod finitize;
mod relations;
mod sandwich;

pub use dclass::rel_d_decide;
pub use diagnostics::{isometry_diagnostics, IsometryReport};
pub use finitize::{finitize_t_witness, finitize_tbar_witness};
pub use relations::{leq_l, leq_r, rel_h, rel_l, rel_r};
pub use sandwich::{leq_j_decide, rank_interval_for, rel_j_decide, sandwich_search, WitnessHint};

use crate::linalg::{mat_mul, TropMatrix};
use crate::ranks::RankOptions;
use crate::scalar::TropScalar;

/// Three-valued decision outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Outcome {
    Holds,
    Fails,
    Unknown,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Outcome::Holds => "holds",
            Outcome::Fails => "fails",
            Outcome::Unknown => "unknown",
        })
    }
}

/// One side of a factorization; `Identity` is the adjoined identity of
/// `S^1` (there is no identity matrix over `FT`).
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub enum Factor {
    Identity,
    Matrix(TropMatrix),
}

impl Factor {
    pub fn is_identity(&self) -> bool {
        matches!(self, Factor::Identity)
    }
}

/// What a witness claims about the ordered pair `(A, B)` it is attached to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Claim {
    /// `A = P ⊗ B ⊗ Q` (with identity factors allowed): `A ≤_J B`,
    /// specializing to `≤_L` when `Q = 1` and `≤_R` when `P = 1`.
    Locates,
    /// the same with the roles of `A` and `B` swapped
    LocatesReversed,
    /// a certified linear isomorphism between the row spaces
    RowSpaceIso,
}

/// A certified relation instance attached to a verdict.
#[derive(Debug, Clone, serde::Serialize)]
pub struct TaggedWitness {
    pub claim: Claim,
    pub witness: Witness,
}

#[derive(Debug, Clone, serde::Serialize)]
pub enum Witness {
    /// `lhs = p ⊗ rhs ⊗ q`
    Sandwich { p: Factor, q: Factor },
    /// row-space isomorphism `w_i ↦ λ_i ⊗ w'_{π(i)}` between the weak
    /// bases of the row spaces
    RowIso {
        pi: Vec<usize>,
        lambdas: Vec<TropScalar>,
    },
}

impl TaggedWitness {
    /// Re-verify against the pair the verdict was issued for.
    pub fn verify(&self, a: &TropMatrix, b: &TropMatrix) -> bool {
        match self.claim {
            Claim::Locates => verify_sandwich(&self.witness, a, b),
            Claim::LocatesReversed => verify_sandwich(&self.witness, b, a),
            Claim::RowSpaceIso => dclass::verify_row_iso(&self.witness, a, b),
        }
    }
}

fn verify_sandwich(w: &Witness, lhs: &TropMatrix, rhs: &TropMatrix) -> bool {
    let Witness::Sandwich { p, q } = w else {
        return false;
    };
    let step1 = match p {
        Factor::Identity => rhs.clone(),
        Factor::Matrix(m) => match mat_mul(m, rhs) {
            Ok(x) => x,
            Err(_) => return false,
        },
    };
    let step2 = match q {
        Factor::Identity => step1,
        Factor::Matrix(m) => match mat_mul(&step1, m) {
            Ok(x) => x,
            Err(_) => return false,
        },
    };
    step2 == *lhs
}

/// Why a relation provably fails.
#[derive(Debug, Clone, serde::Serialize)]
pub enum Obstruction {
    /// a J-order-monotone rank is strictly larger on the left matrix
    RankExcess {
        rank: &'static str,
        lhs: usize,
        rhs: usize,
    },
    /// over `FT`, J-related matrices have equal row and column ranks
    RankMismatch {
        rank: &'static str,
        lhs: usize,
        rhs: usize,
    },
    /// a row (column) of the left matrix is certified outside the row
    /// (column) space of the right one by its principal solution
    NonMembership { axis: &'static str, index: usize },
    /// isomorphic spaces have equal generator dimensions
    GenDimMismatch {
        space: &'static str,
        lhs: usize,
        rhs: usize,
    },
    /// every weak-basis bijection was proved infeasible (only emitted when
    /// the extension criterion is trusted as complete)
    IsoSearchExhausted { bijections: usize },
}

impl std::fmt::Display for Obstruction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Obstruction::RankExcess { rank, lhs, rhs } => {
                write!(
                    f,
                    "{rank} rank {lhs} of the left matrix exceeds {rhs} of the right"
                )
            }
            Obstruction::RankMismatch { rank, lhs, rhs } => {
                write!(f, "{rank} ranks differ over FT: {lhs} vs {rhs}")
            }
            Obstruction::NonMembership { axis, index } => {
                write!(
                    f,
                    "{axis} {index} of the left matrix is outside the corresponding space of the right"
                )
            }
            Obstruction::GenDimMismatch { space, lhs, rhs } => {
                write!(
                    f,
                    "{space}-space generator dimensions differ: {lhs} vs {rhs}"
                )
            }
            Obstruction::IsoSearchExhausted { bijections } => {
                write!(f, "all {bijections} weak-basis bijections are infeasible")
            }
        }
    }
}

/// Search effort counters, reported with every verdict.
#[derive(Debug, Clone, Copy, Default, serde::Serialize)]
pub struct BudgetStats {
    pub residual_rounds: u64,
    pub seeds_tried: u32,
    pub bijections_tried: u32,
    pub systems_solved: u64,
}

impl BudgetStats {
    pub fn absorb(&mut self, other: &BudgetStats) {
        self.residual_rounds += other.residual_rounds;
        self.seeds_tried += other.seeds_tried;
        self.bijections_tried += other.bijections_tried;
        self.systems_solved += other.systems_solved;
    }
}

/// Decision result: `Holds` always carries re-verifiable witnesses, `Fails`
/// a sound obstruction, `Unknown` neither.
#[derive(Debug, Clone, serde::Serialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub witnesses: Vec<TaggedWitness>,
    pub obstruction: Option<Obstruction>,
    pub budget: BudgetStats,
}

impl Verdict {
    pub fn holds(witnesses: Vec<TaggedWitness>, budget: BudgetStats) -> Self {
        Verdict {
            outcome: Outcome::Holds,
            witnesses,
            obstruction: None,
            budget,
        }
    }

    pub fn fails(obstruction: Obstruction, budget: BudgetStats) -> Self {
        Verdict {
            outcome: Outcome::Fails,
            witnesses: Vec::new(),
            obstruction: Some(obstruction),
            budget,
        }
    }

    pub fn unknown(budget: BudgetStats) -> Self {
        Verdict {
            outcome: Outcome::Unknown,
            witnesses: Vec::new(),
            obstruction: None,
            budget,
        }
    }

    pub fn is_holds(&self) -> bool {
        self.outcome == Outcome::Holds
    }

    pub fn is_fails(&self) -> bool {
        self.outcome == Outcome::Fails
    }

    /// Re-verify every attached witness against the pair.
    pub fn verify_witnesses(&self, a: &TropMatrix, b: &TropMatrix) -> bool {
        self.witnesses.iter().all(|w| w.verify(a, b))
    }
}

/// Tunables for the semideciders. Defaults: 3 seeds, 200 alternation
/// rounds, untrusted extension criterion.
#[derive(Debug, Clone)]
pub struct DecideConfig {
    pub budget_rounds: usize,
    pub seeds: u32,
    pub seed: u64,
    /// When set, exhausting the D-class bijection search yields `Fails`
    /// instead of `Unknown`. The extension criterion is exact over `FT`;
    /// its completeness in `±inf` corners over `T`/`TBar` is validated
    /// empirically, hence the opt-in.
    pub trust_extension: bool,
    pub rank_opts: RankOptions,
}

impl Default for DecideConfig {
    fn default() -> Self {
        DecideConfig {
            budget_rounds: 200,
            seeds: 3,
            seed: 0x7001,
            trust_extension: false,
            rank_opts: RankOptions::default(),
        }
    }
}

pub(crate) fn check_same_shape(
    a: &TropMatrix,
    b: &TropMatrix,
    op: &'static str,
) -> crate::error::Result<()> {
    if a.n_rows() != b.n_rows() || a.n_cols() != b.n_cols() {
        return Err(crate::error::Error::DimensionMismatch {
            op,
            detail: format!(
                "{}x{} vs {}x{}",
                a.n_rows(),
                a.n_cols(),
                b.n_rows(),
                b.n_cols()
            ),
        });
    }
    // flavors always unify along FT ⊆ T ⊆ TBar
    Ok(())
}
