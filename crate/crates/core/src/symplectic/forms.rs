use crate::error::{Error, Result};
use crate::forms::BilinearForm;
use crate::lie::AlgebraElement;
use crate::numerics::{norm, svd, RealMatrix, Tolerance};

/// Residual allowed when solving `[h, X] = v`.
pub const TANGENT_TOL: f64 = 1e-9;

/// A tangent vector `v = [h, X]` to the adjoint orbit through `h`, stored
/// with one preimage `X`.
#[derive(Debug, Clone)]
pub struct OrbitTangentVector {
    pub base: AlgebraElement,
    pub vector: AlgebraElement,
    pub preimage: AlgebraElement,
}

impl OrbitTangentVector {
    /// The same tangent vector with preimage `X + shift`. Only meaningful
    /// when `shift` commutes with the base point.
    pub fn shifted(&self, shift: &AlgebraElement) -> Result<Self> {
        Ok(Self {
            base: self.base.clone(),
            vector: self.vector.clone(),
            preimage: self.preimage.add(shift)?,
        })
    }
}

/// `ω_h(X, Y) = B(h, [X, Y])`.
pub fn omega_h(form: &BilinearForm, h: &AlgebraElement, x: &AlgebraElement, y: &AlgebraElement) -> Result<f64> {
    form.eval(h, &x.bracket(y)?)
}

/// Matrix `W_ij = ω_h(eᵢ, eⱼ)`.
pub fn omega_matrix(form: &BilinearForm, h: &AlgebraElement) -> Result<RealMatrix> {
    let algebra = form.algebra();
    let d = algebra.dim();
    form.check_algebra(h)?;
    let weights = form.gram().mul_vec(h.coeffs());
    Ok(RealMatrix::from_fn(d, d, |i, j| {
        (0..d).map(|k| weights[k] * algebra.structure_constant(i, j, k)).sum()
    }))
}

/// Basis of `ker ω_h = {X : ω_h(X, ·) = 0}`. The form must be
/// nondegenerate, in which case this is the centralizer of `h`.
pub fn omega_kernel(form: &BilinearForm, h: &AlgebraElement) -> Result<Vec<AlgebraElement>> {
    let tol = Tolerance::default();
    if !form.is_nondegenerate(tol) {
        return Err(Error::DegenerateForm {
            smallest: svd(form.gram()).smallest(),
        });
    }
    let w = omega_matrix(form, h)?;
    svd(&w)
        .null_space(tol)
        .into_iter()
        .map(|v| AlgebraElement::new(form.algebra(), v))
        .collect()
}

/// Minimum-norm `X` with `[h, X] = v`; [`Error::NotTangent`] if `v` is not
/// in the range of `ad(h)`.
pub fn solve_tangent_preimage(h: &AlgebraElement, v: &AlgebraElement) -> Result<OrbitTangentVector> {
    h.check_same(v)?;
    let ad = h.ad_matrix();
    let x = svd(&ad).solve_min_norm(v.coeffs(), Tolerance::default());
    let image = ad.mul_vec(&x);
    let residual = crate::numerics::distance(&image, v.coeffs());
    if residual > TANGENT_TOL * (1.0 + norm(v.coeffs())) {
        return Err(Error::NotTangent { residual });
    }
    Ok(OrbitTangentVector {
        base: h.clone(),
        vector: v.clone(),
        preimage: AlgebraElement::new(h.algebra(), x)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{killing_form, trace_form};
    use crate::lie::preset;
    use crate::numerics::ComplexMatrix;
    use crate::sampling::{random_element, sample_rng};

    #[test]
    fn omega_su2_worked_value() {
        let su2 = preset("su", 2).unwrap();
        let k = killing_form(&su2);
        let e = |i| AlgebraElement::basis(&su2, i);
        assert_eq!(omega_h(&k, &e(2), &e(0), &e(1)).unwrap(), -2.0);
        assert_eq!(omega_h(&k, &e(2), &e(0), &e(0)).unwrap(), 0.0);
    }

    #[test]
    fn kernel_examples() {
        let su2 = preset("su", 2).unwrap();
        let k = killing_form(&su2);
        let ker = omega_kernel(&k, &AlgebraElement::basis(&su2, 2)).unwrap();
        assert_eq!(ker.len(), 1);
        assert!((ker[0].coeffs()[2].abs() - 1.0).abs() < 1e-12);
        assert_eq!(omega_kernel(&k, &AlgebraElement::zero(&su2)).unwrap().len(), 3);

        let u3 = preset("u", 3).unwrap();
        let h = AlgebraElement::from_matrix(&u3, &ComplexMatrix::imaginary_diagonal(&[1.0, 1.0, 2.0])).unwrap();
        assert_eq!(omega_kernel(&trace_form(&u3), &h).unwrap().len(), 5);
        assert!(matches!(
            omega_kernel(&killing_form(&u3), &h),
            Err(Error::DegenerateForm { .. })
        ));
    }

    #[test]
    fn preimage_examples() {
        let su2 = preset("su", 2).unwrap();
        let e3 = AlgebraElement::basis(&su2, 2);
        assert!(matches!(
            solve_tangent_preimage(&e3, &e3),
            Err(Error::NotTangent { .. })
        ));
        let zero = solve_tangent_preimage(&e3, &AlgebraElement::zero(&su2)).unwrap();
        assert!(zero.preimage.is_zero());

        let u3 = preset("u", 3).unwrap();
        for idx in 0..20 {
            let mut rng = sample_rng(9, 0, idx);
            let h = random_element(&u3, &mut rng);
            let x0 = random_element(&u3, &mut rng);
            let v = h.bracket(&x0).unwrap();
            let t = solve_tangent_preimage(&h, &v).unwrap();
            let back = h.bracket(&t.preimage).unwrap();
            assert!(back.distance(&v) <= 1e-9 * (1.0 + v.norm()));
            // minimum norm: never longer than the constructed preimage
            assert!(t.preimage.norm() <= x0.norm() + 1e-12);
        }
    }
}
