//! Exact max-plus (tropical) linear algebra over the three semirings
//! `FT ⊆ T ⊆ TBar` (finitary reals; with `-inf`; with both infinities).
//!
//! Everything is computed with arbitrary-precision rationals, so equality,
//! membership and order questions are decided exactly — there are no
//! tolerances anywhere. On top of the scalar and matrix layers the crate
//! provides:
//!
//! * residuation (principal solutions of one-sided systems) and the scalar
//!   product `⟨x|y⟩` ([`linalg`]);
//! * finitely generated tropical convex sets with weak bases, membership
//!   certificates and a finite criterion for extending generator
//!   assignments to linear morphisms ([`convex`]);
//! * the tropical Hilbert projective metric in full and chart evaluation
//!   modes ([`metric`]);
//! * the row-space/column-space duality maps and executable checks of
//!   their order, scaling and isometry properties ([`duality`]);
//! * deciders and semideciders for Green's relations `L, R, H, D, J` on
//!   tropical matrix semigroups, with re-verified witnesses and sound
//!   obstructions ([`greens`]);
//! * the rank zoo: row/column rank, factor-rank bounds, Gondran-Minoux
//!   ranks, determinantal and tropical rank ([`ranks`]);
//! * worked-example bundles, fixture matrices, property-suite fuzzers,
//!   figure export and a thin CLI ([`bundles`], [`fixtures`], [`fuzz`],
//!   [`figure`], [`cli`]).
//!
//! The `examples/` directory of this crate is the best starting point; each
//! example exercises one capability end to end.

pub mod bundles;
pub mod cli;
pub mod convex;
pub mod diffcon;
pub mod duality;
pub mod error;
pub mod figure;
pub mod fixtures;
pub mod fuzz;
pub mod greens;
pub mod io;
pub mod linalg;
pub mod metric;
pub mod ranks;
pub mod scalar;

pub use error::{Error, Result};
pub use linalg::{TropMatrix, TropVector};
pub use scalar::{SemiringFlavor, TropScalar};
