//! JSON algebra files:
//!
//! ```json
//! {"name": "su(2)", "n": 2, "basis": [[[[0,0],[0,-0.5]], [[0,-0.5],[0,0]]], ...]}
//! ```
//!
//! Each matrix is an array of rows and each entry a `[re, im]` pair.
//! Structure constants are always recomputed from the basis. A file may
//! still declare `"structure_constants"` (shape `d × d × d`); those are kept
//! only so they can be checked against the recomputed ones.

use std::path::Path;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::algebra::{AlgebraKind, LieAlgebra};
use crate::error::{Error, Result};
use crate::numerics::ComplexMatrix;

pub type MatrixJson = Vec<Vec<[f64; 2]>>;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub name: String,
    pub n: usize,
    pub basis: Vec<MatrixJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure_constants: Option<Vec<Vec<Vec<f64>>>>,
}

/// An algebra read from a file, plus whatever structure constants the file
/// declared.
#[derive(Debug, Clone)]
pub struct LoadedAlgebra {
    pub algebra: Arc<LieAlgebra>,
    pub declared_constants: Option<Vec<Vec<Vec<f64>>>>,
}

impl LoadedAlgebra {
    /// Largest deviation between declared and recomputed constants, or
    /// `None` when nothing was declared. A shape mismatch counts as infinite.
    pub fn declared_drift(&self) -> Option<f64> {
        let declared = self.declared_constants.as_ref()?;
        let actual = self.algebra.structure_constants();
        let d = actual.len();
        let shape_ok = declared.len() == d
            && declared
                .iter()
                .all(|row| row.len() == d && row.iter().all(|v| v.len() == d));
        if !shape_ok {
            return Some(f64::INFINITY);
        }
        let drift = declared
            .iter()
            .flatten()
            .flatten()
            .zip(actual.iter().flatten().flatten())
            .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
        Some(drift)
    }
}

pub fn matrix_from_json(m: &MatrixJson) -> Result<ComplexMatrix> {
    let rows: Vec<Vec<Complex64>> = m
        .iter()
        .map(|row| row.iter().map(|[re, im]| Complex64::new(*re, *im)).collect())
        .collect();
    ComplexMatrix::from_rows(&rows)
}

pub fn matrix_to_json(m: &ComplexMatrix) -> MatrixJson {
    m.to_rows()
        .into_iter()
        .map(|row| row.into_iter().map(|z| [z.re, z.im]).collect())
        .collect()
}

impl AlgebraFile {
    pub fn from_algebra(algebra: &LieAlgebra) -> Self {
        Self {
            name: algebra.name().to_string(),
            n: algebra.matrix_size(),
            basis: algebra.basis().iter().map(matrix_to_json).collect(),
            structure_constants: None,
        }
    }

    pub fn into_algebra(self) -> Result<LoadedAlgebra> {
        let basis = self.basis.iter().map(matrix_from_json).collect::<Result<Vec<_>>>()?;
        if basis.is_empty() && self.n == 0 {
            return Err(Error::InvalidAlgebra("empty algebra with n = 0".into()));
        }
        let kind = infer_kind(self.n, &basis);
        let algebra = LieAlgebra::from_basis(self.name, kind, self.n, basis)?;
        Ok(LoadedAlgebra {
            algebra,
            declared_constants: self.structure_constants,
        })
    }
}

pub fn parse_algebra(json: &str) -> Result<LoadedAlgebra> {
    serde_json::from_str::<AlgebraFile>(json)?.into_algebra()
}

pub fn load_algebra(path: impl AsRef<Path>) -> Result<LoadedAlgebra> {
    parse_algebra(&std::fs::read_to_string(path)?)
}

/// Recognizes `u(n)`, `su(n)` and `so(n)` spans by dimension and matrix
/// shape: skew-Hermitian for the unitary families, additionally traceless
/// for `su`, additionally real for `so`.
fn infer_kind(n: usize, basis: &[ComplexMatrix]) -> AlgebraKind {
    let tol = 1e-12;
    let skew = basis
        .iter()
        .all(|e| e.skew_hermitian_defect() <= tol * e.frobenius_norm().max(1.0));
    if !skew {
        return AlgebraKind::Custom;
    }
    let traceless = basis
        .iter()
        .all(|e| e.trace().norm() <= tol * e.frobenius_norm().max(1.0));
    let real = basis.iter().all(|e| {
        e.as_slice()
            .iter()
            .all(|z| z.im.abs() <= tol * e.frobenius_norm().max(1.0))
    });
    let d = basis.len();
    if d == n * n {
        AlgebraKind::Unitary
    } else if n >= 1 && d == n * n - 1 && traceless {
        AlgebraKind::SpecialUnitary
    } else if real && d == n * n.saturating_sub(1) / 2 && n >= 2 {
        AlgebraKind::SpecialOrthogonal
    } else {
        AlgebraKind::Custom
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::preset;

    #[test]
    fn preset_round_trip_through_json() {
        for (name, n, kind) in [
            ("su", 2, AlgebraKind::SpecialUnitary),
            ("u", 3, AlgebraKind::Unitary),
            ("so", 3, AlgebraKind::SpecialOrthogonal),
        ] {
            let alg = preset(name, n).unwrap();
            let json = serde_json::to_string(&AlgebraFile::from_algebra(&alg)).unwrap();
            let loaded = parse_algebra(&json).unwrap();
            assert_eq!(loaded.algebra.kind(), kind);
            assert_eq!(loaded.algebra.dim(), alg.dim());
            assert_eq!(loaded.algebra.structure_constants(), alg.structure_constants());
            assert!(loaded.declared_drift().is_none());
        }
    }

    #[test]
    fn declared_constants_are_checked_not_trusted() {
        let alg = preset("su", 2).unwrap();
        let mut file = AlgebraFile::from_algebra(&alg);
        let mut c = alg.structure_constants();
        c[0][1][2] += 0.1;
        file.structure_constants = Some(c);
        let loaded = file.into_algebra().unwrap();
        assert_eq!(loaded.algebra.structure_constant(0, 1, 2), 1.0);
        assert!((loaded.declared_drift().unwrap() - 0.1).abs() < 1e-12);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_algebra("{not json"), Err(Error::Json(_))));
        let ragged = r#"{"name":"x","n":2,"basis":[[[[0,1]],[[0,0],[0,0]]]]}"#;
        assert!(parse_algebra(ragged).is_err());
        let dependent = r#"{"name":"x","n":1,"basis":[[[[0,1]]],[[[0,2]]]]}"#;
        assert!(matches!(parse_algebra(dependent), Err(Error::InvalidAlgebra(_))));
    }
}
