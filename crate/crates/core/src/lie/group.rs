use std::sync::Arc;

use super::algebra::LieAlgebra;
use super::element::AlgebraElement;
use crate::error::{Error, Result};
use crate::numerics::{matrix_exp, ComplexMatrix, RealMatrix};

/// Unitarity tolerance for group elements of compact families.
pub const UNITARY_TOL: f64 = 1e-10;

/// An invertible matrix acting on an algebra by conjugation. The inverse is
/// kept alongside so `Ad(g⁻¹)` never needs a fresh inversion.
#[derive(Clone, Debug)]
pub struct GroupElement {
    algebra: Arc<LieAlgebra>,
    matrix: ComplexMatrix,
    inverse: ComplexMatrix,
}

impl GroupElement {
    pub fn identity(algebra: &Arc<LieAlgebra>) -> Self {
        let n = algebra.matrix_size();
        Self {
            algebra: Arc::clone(algebra),
            matrix: ComplexMatrix::identity(n),
            inverse: ComplexMatrix::identity(n),
        }
    }

    /// Wraps an arbitrary invertible matrix. For compact families the matrix
    /// must be unitary within [`UNITARY_TOL`].
    pub fn from_matrix(algebra: &Arc<LieAlgebra>, matrix: ComplexMatrix) -> Result<Self> {
        let n = algebra.matrix_size();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} group element for {n}x{n} matrices",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if algebra.kind().is_compact() {
            let defect = matrix.unitarity_defect();
            if defect > UNITARY_TOL {
                return Err(Error::InvalidAlgebra(format!(
                    "group element of {} is not unitary (defect {defect:.3e})",
                    algebra.name()
                )));
            }
        }
        let inverse = matrix.inverse()?;
        Ok(Self {
            algebra: Arc::clone(algebra),
            matrix,
            inverse,
        })
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn inverse_matrix(&self) -> &ComplexMatrix {
        &self.inverse
    }

    pub fn inverse(&self) -> Self {
        Self {
            algebra: Arc::clone(&self.algebra),
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
        }
    }

    /// `self · other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if !Arc::ptr_eq(&self.algebra, &other.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Self {
            algebra: Arc::clone(&self.algebra),
            matrix: &self.matrix * &other.matrix,
            inverse: &other.inverse * &self.inverse,
        })
    }

    /// `Ad(g)X = g X g⁻¹`, re-expanded in the basis.
    pub fn act(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        if !Arc::ptr_eq(&self.algebra, x.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        let conj = &(&self.matrix * &x.matrix()) * &self.inverse;
        AlgebraElement::from_matrix(&self.algebra, &conj)
    }

    /// Matrix of `Ad(g)` on coefficient vectors; column `j` holds the
    /// coefficients of `Ad(g)eⱼ`.
    pub fn adjoint_matrix(&self) -> Result<RealMatrix> {
        let d = self.algebra.dim();
        let columns = (0..d)
            .map(|j| {
                self.act(&AlgebraElement::basis(&self.algebra, j))
                    .map(AlgebraElement::into_coeffs)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RealMatrix::from_columns(d, &columns))
    }
}

/// `Ad(g)X`.
pub fn adjoint_action(g: &GroupElement, x: &AlgebraElement) -> Result<AlgebraElement> {
    g.act(x)
}

/// `exp(tX)` as a group element; its inverse is `exp(−tX)`. Only fails if
/// `t·X` is so large that the exponential overflows.
pub fn flow_point(x: &AlgebraElement, t: f64) -> Result<GroupElement> {
    let m = x.matrix().scale_real(t);
    let matrix = matrix_exp(&m)?;
    let inverse = matrix_exp(&-&m)?;
    Ok(GroupElement {
        algebra: Arc::clone(x.algebra()),
        matrix,
        inverse,
    })
}
