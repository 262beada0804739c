use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{svd, ComplexMatrix, RealMatrix, Svd, Tolerance};

/// Closure tolerance on `[eᵢ, eⱼ] − Σ c_ijk e_k`.
pub const AXIOM_TOL: f64 = 1e-10;

/// Which matrix family an algebra realizes. Presets know their family;
/// algebras loaded from files are recognized by dimension and shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgebraKind {
    Unitary,
    SpecialUnitary,
    SpecialOrthogonal,
    Custom,
}

impl AlgebraKind {
    /// Compact families whose group elements must be unitary.
    pub fn is_compact(self) -> bool {
        !matches!(self, AlgebraKind::Custom)
    }

    /// Dimension of the matching group for matrices of size `n`.
    pub fn group_dim(self, n: usize, dim: usize) -> usize {
        match self {
            AlgebraKind::Unitary => n * n,
            AlgebraKind::SpecialUnitary => n * n - 1,
            AlgebraKind::SpecialOrthogonal => n * (n.saturating_sub(1)) / 2,
            AlgebraKind::Custom => dim,
        }
    }
}

/// A finite-dimensional matrix Lie algebra: a real basis of `n × n` complex
/// matrices together with the structure constants `[eᵢ, eⱼ] = Σ_k c_ijk e_k`.
///
/// Structure constants are computed from commutators when the algebra is
/// built and never change afterwards.
pub struct LieAlgebra {
    name: String,
    n: usize,
    kind: AlgebraKind,
    basis: Vec<ComplexMatrix>,
    structure: Vec<f64>,
    // SVD of the real Gram matrix Re tr(eᵢ† eⱼ), for re-expanding matrices.
    basis_gram: Svd,
}

impl LieAlgebra {
    /// Builds an algebra from a matrix basis, computing its structure
    /// constants. The basis must be linearly independent over the reals.
    /// The commutator closure is not enforced here; see [`validate`].
    ///
    /// [`validate`]: crate::lie::validate
    pub fn from_basis(
        name: impl Into<String>,
        kind: AlgebraKind,
        n: usize,
        basis: Vec<ComplexMatrix>,
    ) -> Result<Arc<Self>> {
        let mut algebra = Self::assemble(name.into(), kind, n, basis)?;
        algebra.structure = algebra.computed_structure_constants();
        Ok(Arc::new(algebra))
    }

    /// Builds an algebra with caller-supplied structure constants, indexed
    /// `c[i][j][k]`. Nothing is checked beyond shapes; [`validate`] reports
    /// any inconsistency.
    ///
    /// [`validate`]: crate::lie::validate
    pub fn with_structure_constants(
        name: impl Into<String>,
        kind: AlgebraKind,
        n: usize,
        basis: Vec<ComplexMatrix>,
        constants: &[Vec<Vec<f64>>],
    ) -> Result<Arc<Self>> {
        let mut algebra = Self::assemble(name.into(), kind, n, basis)?;
        algebra.structure = flatten_constants(constants, algebra.dim())?;
        Ok(Arc::new(algebra))
    }

    fn assemble(name: String, kind: AlgebraKind, n: usize, basis: Vec<ComplexMatrix>) -> Result<Self> {
        for (idx, e) in basis.iter().enumerate() {
            if e.rows() != n || e.cols() != n {
                return Err(Error::InvalidAlgebra(format!(
                    "basis element {idx} is {}x{}, expected {n}x{n}",
                    e.rows(),
                    e.cols()
                )));
            }
            if !e.is_finite() {
                return Err(Error::NonFinite);
            }
        }
        let d = basis.len();
        let gram = RealMatrix::from_fn(d, d, |i, j| basis[i].real_inner(&basis[j]));
        let basis_gram = svd(&gram);
        if d > 0 && basis_gram.rank(Tolerance::default()) < d {
            return Err(Error::InvalidAlgebra(
                "basis matrices are linearly dependent over the reals".into(),
            ));
        }
        Ok(Self {
            name,
            n,
            kind,
            basis,
            structure: Vec::new(),
            basis_gram,
        })
    }

    fn computed_structure_constants(&self) -> Vec<f64> {
        let d = self.dim();
        let mut c = vec![0.0; d * d * d];
        for i in 0..d {
            for j in (i + 1)..d {
                let (coeffs, _) = self.expand(&self.basis[i].commutator(&self.basis[j]));
                for (k, v) in coeffs.into_iter().enumerate() {
                    c[(i * d + j) * d + k] = v;
                    c[(j * d + i) * d + k] = -v;
                }
            }
        }
        c
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Matrix size `n` of the realization.
    pub fn matrix_size(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn basis(&self) -> &[ComplexMatrix] {
        &self.basis
    }

    /// `c_ijk`, the `e_k` coefficient of `[eᵢ, eⱼ]`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> f64 {
        let d = self.dim();
        self.structure[(i * d + j) * d + k]
    }

    /// Structure constants as a nested `c[i][j][k]` tensor.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<f64>>> {
        let d = self.dim();
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| (0..d).map(|k| self.structure_constant(i, j, k)).collect())
                    .collect()
            })
            .collect()
    }

    /// Largest deviation between the stored constants and the ones implied
    /// by the matrix commutators.
    pub fn structure_constant_drift(&self) -> f64 {
        self.computed_structure_constants()
            .iter()
            .zip(&self.structure)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    /// `Σᵢ coeffsᵢ eᵢ`.
    pub fn realize(&self, coeffs: &[f64]) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(self.n, self.n);
        for (c, e) in coeffs.iter().zip(&self.basis) {
            if *c != 0.0 {
                m = &m + &e.scale_real(*c);
            }
        }
        m
    }

    /// Least-squares coefficients of `m` in the basis, with the Frobenius
    /// residual of the expansion.
    pub fn expand(&self, m: &ComplexMatrix) -> (Vec<f64>, f64) {
        let rhs: Vec<f64> = self.basis.iter().map(|e| e.real_inner(m)).collect();
        let coeffs = self.basis_gram.solve_min_norm(&rhs, Tolerance::new(0.0, 1e-14));
        let residual = self.realize(&coeffs).distance(m);
        (coeffs, residual)
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LieAlgebra")
            .field("name", &self.name)
            .field("n", &self.n)
            .field("dim", &self.dim())
            .field("kind", &self.kind)
            .finish()
    }
}

fn flatten_constants(constants: &[Vec<Vec<f64>>], d: usize) -> Result<Vec<f64>> {
    let shape_ok = constants.len() == d
        && constants
            .iter()
            .all(|row| row.len() == d && row.iter().all(|v| v.len() == d));
    if !shape_ok {
        return Err(Error::InvalidAlgebra(format!(
            "structure constants must have shape {d}x{d}x{d}"
        )));
    }
    let flat: Vec<f64> = constants.iter().flatten().flatten().copied().collect();
    if flat.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(flat)
}
