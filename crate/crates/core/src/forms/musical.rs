use std::sync::Arc;

use super::bilinear::BilinearForm;
use crate::error::{Error, Result};
use crate::lie::{AlgebraElement, GroupElement, LieAlgebra};
use crate::numerics::{distance, dot, norm, Tolerance};

/// Element of the dual space, in coordinates of the dual basis:
/// `⟨α, X⟩ = Σᵢ αᵢ Xᵢ`.
#[derive(Clone, Debug)]
pub struct Covector {
    algebra: Arc<LieAlgebra>,
    coeffs: Vec<f64>,
}

impl Covector {
    pub fn new(algebra: &Arc<LieAlgebra>, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for a dual space of dimension {}",
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

    /// The dual basis covector `eᵢ*`.
    pub fn dual_basis(algebra: &Arc<LieAlgebra>, index: usize) -> Self {
        let mut coeffs = vec![0.0; algebra.dim()];
        coeffs[index] = 1.0;
        Self {
            algebra: Arc::clone(algebra),
            coeffs,
        }
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn norm(&self) -> f64 {
        norm(&self.coeffs)
    }

    pub fn distance(&self, other: &Self) -> f64 {
        distance(&self.coeffs, &other.coeffs)
    }

    /// `⟨α, X⟩`.
    pub fn pair(&self, x: &AlgebraElement) -> Result<f64> {
        if !Arc::ptr_eq(&self.algebra, x.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(dot(&self.coeffs, x.coeffs()))
    }
}

/// `B♭(X) = B(X, ·)`.
pub fn flat(form: &BilinearForm, x: &AlgebraElement) -> Result<Covector> {
    form.check_algebra(x)?;
    Ok(Covector {
        algebra: Arc::clone(form.algebra()),
        coeffs: form.gram().mul_vec(x.coeffs()),
    })
}

/// `B♯(α)`, the unique `X` with `B(X, ·) = α`. Requires a nondegenerate
/// form.
pub fn sharp(form: &BilinearForm, alpha: &Covector) -> Result<AlgebraElement> {
    if !Arc::ptr_eq(form.algebra(), alpha.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let tol = Tolerance::default();
    form.require_nondegenerate(tol)?;
    let x = form.decomposition().solve_min_norm(alpha.coeffs(), tol);
    AlgebraElement::new(form.algebra(), x)
}

/// Coadjoint action `Ad*_g α = α ∘ Ad(g⁻¹)`, a left action.
pub fn coadjoint(g: &GroupElement, alpha: &Covector) -> Result<Covector> {
    if !Arc::ptr_eq(g.algebra(), alpha.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let ad_inv = g.inverse().adjoint_matrix()?;
    Ok(Covector {
        algebra: Arc::clone(alpha.algebra()),
        coeffs: ad_inv.transpose().mul_vec(alpha.coeffs()),
    })
}
