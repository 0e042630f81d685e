//! File formats: the matrix document (`semiring` + rectangular `rows` of
//! scalar strings), witness-hint files, and JSON report rendering.
//!
//! Scalar text syntax everywhere: decimal integer, `p/q`, `-inf`, `+inf`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::greens::WitnessHint;
use crate::linalg::TropMatrix;
use crate::scalar::{SemiringFlavor, TropScalar};

/// The on-disk matrix document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub semiring: SemiringFlavor,
    pub rows: Vec<Vec<String>>,
}

impl MatrixFile {
    pub fn from_matrix(m: &TropMatrix) -> Self {
        MatrixFile {
            semiring: m.flavor(),
            rows: (0..m.n_rows())
                .map(|i| (0..m.n_cols()).map(|j| m.get(i, j).to_text()).collect())
                .collect(),
        }
    }

    /// Validate and convert; errors carry the offending entry position.
    pub fn to_matrix(&self) -> Result<TropMatrix> {
        let mut rows = Vec::with_capacity(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (j, text) in row.iter().enumerate() {
                let value = TropScalar::parse(text).map_err(|e| Error::Parse {
                    place: format!("row {i}, column {j}"),
                    msg: e.to_string(),
                })?;
                if !self.semiring.admits(&value) {
                    return Err(Error::Parse {
                        place: format!("row {i}, column {j}"),
                        msg: format!("{value} is not a legal {} value", self.semiring),
                    });
                }
                out.push(value);
            }
            rows.push(out);
        }
        TropMatrix::from_rows(self.semiring, rows)
    }
}

/// Parse a matrix document from JSON text. Syntax errors come back with
/// line and column from the JSON parser; semantic errors carry the entry
/// position.
pub fn parse_matrix(text: &str) -> Result<TropMatrix> {
    let doc: MatrixFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        place: format!("line {}, column {}", e.line(), e.column()),
        msg: e.to_string(),
    })?;
    doc.to_matrix()
}

/// Canonical JSON rendering of a matrix document.
pub fn serialize_matrix(m: &TropMatrix) -> String {
    serde_json::to_string_pretty(&MatrixFile::from_matrix(m)).expect("serialization is total")
}

pub fn read_matrix(path: &Path) -> Result<TropMatrix> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_matrix(&text)
}

pub fn write_matrix(path: &Path, m: &TropMatrix) -> Result<()> {
    std::fs::write(path, serialize_matrix(m))
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// On-disk witness hint for the J-order deciders: explicit factors and/or
/// an embedding matrix, each in matrix-document form.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct WitnessFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<MatrixFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<MatrixFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub embedding: Option<MatrixFile>,
}

pub fn read_witness(path: &Path) -> Result<WitnessHint> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let doc: WitnessFile = serde_json::from_str(&text).map_err(|e| Error::Parse {
        place: format!("line {}, column {}", e.line(), e.column()),
        msg: e.to_string(),
    })?;
    let convert = |m: &Option<MatrixFile>| -> Result<Option<TropMatrix>> {
        m.as_ref().map(|f| f.to_matrix()).transpose()
    };
    Ok(WitnessHint {
        p: convert(&doc.p)?,
        q: convert(&doc.q)?,
        embedding: convert(&doc.embedding)?,
    })
}
