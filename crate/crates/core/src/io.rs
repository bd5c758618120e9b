//! JSON file formats for matrices and bases.
//!
//! Matrix: `{"dim": d, "entries": [[[re, im], ...], ...]}`, row-major.
//! Basis: `{"dim": d, "label": "...", "kets": [[[re, im], ...], ...]}`, one ket per row.
//!
//! Writers emit every real with 17 significant digits so that reading a file
//! back reproduces the doubles exactly.

use std::fmt::Write as _;

use num_complex::Complex64;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::mub::{OrthonormalBasis, BASIS_TOL};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    dim: usize,
    entries: Vec<Vec<[f64; 2]>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BasisFile {
    dim: usize,
    label: String,
    kets: Vec<Vec<[f64; 2]>>,
}

fn fmt_real(x: f64) -> String {
    format!("{x:.16e}")
}

fn write_rows(out: &mut String, rows: impl Iterator<Item = Vec<Complex64>>, indent: &str) {
    out.push('[');
    for (i, row) in rows.enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push('\n');
        out.push_str(indent);
        out.push('[');
        for (j, z) in row.iter().enumerate() {
            if j > 0 {
                out.push_str(", ");
            }
            let _ = write!(out, "[{}, {}]", fmt_real(z.re), fmt_real(z.im));
        }
        out.push(']');
    }
    out.push('\n');
    out.push_str("  ]");
}

/// Serializes a square matrix in the shared matrix format.
pub fn matrix_to_json(m: &ComplexMatrix) -> String {
    assert!(m.is_square(), "matrix files hold square matrices");
    let mut out = format!("{{\n  \"dim\": {},\n  \"entries\": ", m.rows());
    write_rows(&mut out, (0..m.rows()).map(|i| m.row(i).to_vec()), "    ");
    out.push_str("\n}\n");
    out
}

pub fn matrix_from_json(text: &str) -> Result<ComplexMatrix> {
    let file: MatrixFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let d = file.dim;
    if d == 0 {
        return Err(Error::Format("dim must be positive".into()));
    }
    if file.entries.len() != d || file.entries.iter().any(|r| r.len() != d) {
        return Err(Error::Format(format!("entries must be a {d}x{d} array")));
    }
    let data = file
        .entries
        .into_iter()
        .flatten()
        .map(|[re, im]| Complex64::new(re, im))
        .collect();
    ComplexMatrix::new(d, d, data)
}

pub fn basis_to_json(b: &OrthonormalBasis) -> String {
    let label = serde_json::to_string(b.label()).expect("string serialization");
    let mut out = format!(
        "{{\n  \"dim\": {},\n  \"label\": {label},\n  \"kets\": ",
        b.dim()
    );
    write_rows(&mut out, b.kets().iter().cloned(), "    ");
    out.push_str("\n}\n");
    out
}

/// Parses and validates a basis file. Off-normal kets are rejected unless
/// `renormalize` is set.
pub fn basis_from_json(text: &str, renormalize: bool) -> Result<OrthonormalBasis> {
    let file: BasisFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let d = file.dim;
    if file.kets.len() != d || file.kets.iter().any(|k| k.len() != d) {
        return Err(Error::Format(format!(
            "kets must be {d} vectors of length {d}"
        )));
    }
    let kets = file
        .kets
        .into_iter()
        .map(|k| {
            k.into_iter()
                .map(|[re, im]| Complex64::new(re, im))
                .collect()
        })
        .collect();
    if renormalize {
        OrthonormalBasis::new_renormalized(file.label, kets, BASIS_TOL)
    } else {
        OrthonormalBasis::new(file.label, kets, BASIS_TOL)
    }
}
