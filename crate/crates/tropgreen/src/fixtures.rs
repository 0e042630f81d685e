//! Bundled worked-example matrices, reproduced entry by entry.
//!
//! These are the inputs of the example bundles `6.1`, `6.2`, `6.3` and
//! `7.gm` exposed by [`crate::bundles`] and the `examples` CLI subcommand.

use crate::linalg::TropMatrix;
use crate::scalar::{SemiringFlavor, TropScalar};

const NI: i64 = i64::MIN; // stands for -inf in the tables below

fn build(flavor: SemiringFlavor, rows: &[&[i64]]) -> TropMatrix {
    TropMatrix::from_rows(
        flavor,
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|&n| {
                        if n == NI {
                            TropScalar::NegInf
                        } else {
                            TropScalar::int(n)
                        }
                    })
                    .collect()
            })
            .collect(),
    )
    .expect("fixture entries are legal")
}

/// Example 6.1, matrix `A` (finitary, 4×4).
pub fn a61() -> TropMatrix {
    build(
        SemiringFlavor::FT,
        &[
            &[0, 1, 2, 3],
            &[0, -1, -2, -3],
            &[0, 0, 0, 0],
            &[0, 0, 0, 0],
        ],
    )
}

/// Example 6.1, matrix `B` (finitary, 4×4).
pub fn b61() -> TropMatrix {
    build(
        SemiringFlavor::FT,
        &[&[0, 0, 1, 3], &[0, 0, -2, -3], &[0, 0, 0, 0], &[0, 0, 0, 0]],
    )
}

/// Example 6.1, the factor `X` with `A = B ⊗ X`.
pub fn x61() -> TropMatrix {
    build(
        SemiringFlavor::FT,
        &[
            &[0, -1, -2, -3],
            &[0, -1, -2, -3],
            &[-1, 0, 0, -1],
            &[-3, -3, -1, 0],
        ],
    )
}

/// Example 6.2, matrix `A` (over `T`, 4×4).
pub fn a62() -> TropMatrix {
    build(
        SemiringFlavor::T,
        &[
            &[NI, 0, 1, 1],
            &[NI, NI, 1, 1],
            &[0, 0, 0, 0],
            &[NI, NI, NI, NI],
        ],
    )
}

/// Example 6.2, matrix `B` (over `T`, 4×4).
pub fn b62() -> TropMatrix {
    build(
        SemiringFlavor::T,
        &[
            &[NI, 0, 1, 1],
            &[NI, NI, 1, 0],
            &[0, 0, 0, 0],
            &[NI, NI, NI, NI],
        ],
    )
}

/// Example 6.2, the monomial matrix of the map `(x,y,z,t) ↦ (x,y,z+1,t)`.
pub fn mu62() -> TropMatrix {
    build(
        SemiringFlavor::T,
        &[
            &[0, NI, NI, NI],
            &[NI, 0, NI, NI],
            &[NI, NI, 1, NI],
            &[NI, NI, NI, 0],
        ],
    )
}

/// Example 6.3, the 3×3 finitary matrix compared with its transpose.
pub fn a63() -> TropMatrix {
    build(SemiringFlavor::FT, &[&[0, 0, 0], &[1, 5, 0], &[3, 2, 0]])
}

/// The 2×2 Gondran-Minoux example: column rank 2 over `T` but 1 over `TBar`.
pub fn g27() -> TropMatrix {
    build(SemiringFlavor::T, &[&[0, 0], &[0, 1]])
}
