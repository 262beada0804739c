//! Element input: inline JSON, a path to a JSON file, or `diag(...)`
//! shorthand.
//!
//! JSON is either `{"matrix": [[[re, im], ...], ...]}` or
//! `{"diag": [λ₁, ..., λₙ]}` for `diag(iλ₁, ..., iλₙ)`. The shorthand lists
//! the diagonal entries themselves, e.g. `diag(i, i, 2i)`.

use std::path::Path;
use std::sync::Arc;

use orbitkit_core::lie::io::{matrix_from_json, MatrixJson};
use orbitkit_core::lie::{AlgebraElement, LieAlgebra};
use orbitkit_core::numerics::{Complex64, ComplexMatrix, Tolerance};
use orbitkit_core::{Error, Result};
use serde::Deserialize;

#[derive(Deserialize)]
#[serde(untagged, deny_unknown_fields)]
enum ElementJson {
    Matrix { matrix: MatrixJson },
    Diag { diag: Vec<f64> },
}

/// Reads the element matrix from `input` without reference to an algebra.
pub fn parse_matrix(input: &str) -> Result<ComplexMatrix> {
    let trimmed = input.trim();
    if trimmed.starts_with('{') {
        return from_json(trimmed);
    }
    if trimmed.starts_with("diag(") {
        return from_shorthand(trimmed);
    }
    let path = Path::new(trimmed);
    if path.is_file() {
        let text = std::fs::read_to_string(path)?;
        return parse_matrix(&text);
    }
    Err(Error::Parse(format!(
        "element `{trimmed}` is neither JSON, diag(...) shorthand, nor a readable file"
    )))
}

fn from_json(text: &str) -> Result<ComplexMatrix> {
    let parsed: ElementJson = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("element JSON needs a `matrix` or `diag` field ({e})")))?;
    match parsed {
        ElementJson::Matrix { matrix } => matrix_from_json(&matrix),
        ElementJson::Diag { diag } => {
            if diag.iter().any(|l| !l.is_finite()) {
                return Err(Error::NonFinite);
            }
            Ok(ComplexMatrix::imaginary_diagonal(&diag))
        }
    }
}

fn from_shorthand(text: &str) -> Result<ComplexMatrix> {
    let inner = text
        .strip_prefix("diag(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("unterminated shorthand `{text}`")))?;
    let entries = inner.split(',').map(parse_entry).collect::<Result<Vec<_>>>()?;
    let n = entries.len();
    Ok(ComplexMatrix::from_fn(n, n, |r, c| {
        if r == c {
            entries[r]
        } else {
            Complex64::new(0.0, 0.0)
        }
    }))
}

/// `2i`, `-i`, `0.5i` or a real number such as `0`.
fn parse_entry(entry: &str) -> Result<Complex64> {
    let entry = entry.trim();
    let bad = || Error::Parse(format!("cannot read diagonal entry `{entry}`"));
    if let Some(coeff) = entry.strip_suffix('i') {
        let im = match coeff.trim() {
            "" | "+" => 1.0,
            "-" => -1.0,
            c => c.parse::<f64>().map_err(|_| bad())?,
        };
        return Ok(Complex64::new(0.0, im));
    }
    entry
        .parse::<f64>()
        .map(|re| Complex64::new(re, 0.0))
        .map_err(|_| bad())
}

/// Parses `input` and expands it in the basis of `algebra`, rejecting
/// matrices that are not skew-Hermitian before anything else.
pub fn parse_element(algebra: &Arc<LieAlgebra>, input: &str) -> Result<AlgebraElement> {
    let m = parse_matrix(input)?;
    let n = algebra.matrix_size();
    if m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} element for {} ({n}x{n} matrices)",
            m.rows(),
            m.cols(),
            algebra.name()
        )));
    }
    let defect = m.skew_hermitian_defect();
    if defect > Tolerance::default().threshold(m.frobenius_norm()) {
        return Err(Error::NotSkewHermitian { defect });
    }
    AlgebraElement::from_matrix(algebra, &m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthand_entries() {
        let m = parse_matrix("diag(i, -i, 2.5i, 0)").unwrap();
        assert_eq!(m[(0, 0)], Complex64::new(0.0, 1.0));
        assert_eq!(m[(1, 1)], Complex64::new(0.0, -1.0));
        assert_eq!(m[(2, 2)], Complex64::new(0.0, 2.5));
        assert_eq!(m[(3, 3)], Complex64::new(0.0, 0.0));
        assert!(parse_matrix("diag(i, x)").is_err());
    }

    #[test]
    fn json_forms_agree() {
        let a = parse_matrix(r#"{"diag": [1, 2]}"#).unwrap();
        let b = parse_matrix(r#"{"matrix": [[[0,1],[0,0]],[[0,0],[0,2]]]}"#).unwrap();
        assert_eq!(a.distance(&b), 0.0);
        assert!(matches!(parse_matrix(r#"{"diagonal": [1]}"#), Err(Error::Parse(_))));
    }
}
