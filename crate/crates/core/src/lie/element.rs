use std::sync::Arc;

use super::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::numerics::{distance, norm, ComplexMatrix, RealMatrix, Tolerance};

/// An element of a Lie algebra, stored as real coefficients in its basis.
#[derive(Clone, Debug)]
pub struct AlgebraElement {
    algebra: Arc<LieAlgebra>,
    coeffs: Vec<f64>,
}

impl AlgebraElement {
    pub fn new(algebra: &Arc<LieAlgebra>, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for an algebra of dimension {}",
                coeffs.len(),
                algebra.dim()
            )));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self {
            algebra: Arc::clone(algebra),
            coeffs,
        })
    }

    pub fn zero(algebra: &Arc<LieAlgebra>) -> Self {
        Self {
            algebra: Arc::clone(algebra),
            coeffs: vec![0.0; algebra.dim()],
        }
    }

    /// The basis element `e_index`.
    pub fn basis(algebra: &Arc<LieAlgebra>, index: usize) -> Self {
        let mut coeffs = vec![0.0; algebra.dim()];
        coeffs[index] = 1.0;
        Self {
            algebra: Arc::clone(algebra),
            coeffs,
        }
    }

    /// Expands a matrix in the basis; fails with [`Error::NotInAlgebra`] if
    /// the expansion residual exceeds `1e-9·max(1, ‖m‖)`.
    pub fn from_matrix(algebra: &Arc<LieAlgebra>, m: &ComplexMatrix) -> Result<Self> {
        let n = algebra.matrix_size();
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix for an algebra of {n}x{n} matrices",
                m.rows(),
                m.cols()
            )));
        }
        let (coeffs, residual) = algebra.expand(m);
        if residual > 1e-9 * m.frobenius_norm().max(1.0) {
            return Err(Error::NotInAlgebra { residual });
        }
        Self::new(algebra, coeffs)
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<f64> {
        self.coeffs
    }

    pub fn matrix(&self) -> ComplexMatrix {
        self.algebra.realize(&self.coeffs)
    }

    pub fn norm(&self) -> f64 {
        norm(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    pub fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra)
    }

    pub(crate) fn check_same(&self, other: &Self) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    fn with_coeffs(&self, coeffs: Vec<f64>) -> Self {
        Self {
            algebra: Arc::clone(&self.algebra),
            coeffs,
        }
    }

    pub fn scale(&self, s: f64) -> Self {
        self.with_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.with_coeffs(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.with_coeffs(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect()))
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: f64, other: &Self, b: f64) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.with_coeffs(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(x, y)| a * x + b * y)
                .collect(),
        ))
    }

    /// Coefficient-vector distance.
    pub fn distance(&self, other: &Self) -> f64 {
        distance(&self.coeffs, &other.coeffs)
    }

    /// Equality up to `abs + rel·max(‖self‖, ‖other‖)` in coefficient space.
    pub fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        self.same_algebra(other) && self.distance(other) <= tol.threshold(self.norm().max(other.norm()))
    }

    /// `[self, other]` from the structure constants. Each pair `i < j` is
    /// combined as `c_ijk (xᵢyⱼ − xⱼyᵢ)`, so `[Y, X]` is exactly `−[X, Y]`
    /// and `[X, X]` is exactly zero.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let alg = &self.algebra;
        let d = alg.dim();
        let (x, y) = (&self.coeffs, &other.coeffs);
        let mut out = vec![0.0; d];
        for i in 0..d {
            for j in (i + 1)..d {
                let w = x[i] * y[j] - x[j] * y[i];
                if w == 0.0 {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o += alg.structure_constant(i, j, k) * w;
                }
            }
        }
        Ok(self.with_coeffs(out))
    }

    /// Matrix of `ad(self)` on coefficient vectors: column `j` holds the
    /// coefficients of `[self, eⱼ]`.
    pub fn ad_matrix(&self) -> RealMatrix {
        let alg = &self.algebra;
        let d = alg.dim();
        RealMatrix::from_fn(d, d, |k, j| {
            (0..d).map(|i| self.coeffs[i] * alg.structure_constant(i, j, k)).sum()
        })
    }
}

/// `[x, y]`.
pub fn bracket(x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    x.bracket(y)
}

/// `ad(x)` as a `d × d` real matrix.
pub fn ad_matrix(x: &AlgebraElement) -> RealMatrix {
    x.ad_matrix()
}
