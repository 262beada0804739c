//! Adjoint orbits of `u(n)` and `su(n)`.
//!
//! A skew-Hermitian `X` is unitarily conjugate to `diag(iλ₁, …, iλₙ)` and its
//! orbit is determined by the sorted spectrum `λ`. Grouping equal eigenvalues
//! into clusters of sizes `(n₁, …, n_k)` identifies the orbit with the flag
//! manifold `U(n)/(U(n₁)×⋯×U(n_k))` of real dimension `n² − Σ nⱼ²`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{AlgebraElement, AlgebraKind, LieAlgebra};
use crate::numerics::{hermitian_eig, rank_with_tol, real_rank, Complex64, RealMatrix, Tolerance};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrbitDescriptor {
    /// Ascending `λ` with eigenvalues `iλⱼ`.
    pub spectrum: Vec<f64>,
    /// Cluster sizes in ascending eigenvalue order.
    pub multiplicities: Vec<usize>,
    pub orbit_dim: usize,
    pub isotropy_dim: usize,
    pub flag_type: String,
}

impl OrbitDescriptor {
    /// Same clustering and dimensions, spectra equal entrywise within `tol`.
    pub fn matches(&self, other: &Self, tol: f64) -> bool {
        self.multiplicities == other.multiplicities
            && self.orbit_dim == other.orbit_dim
            && self.isotropy_dim == other.isotropy_dim
            && self.flag_type == other.flag_type
            && spectra_agree(&self.spectrum, &other.spectrum, tol)
    }

    /// The normal form `diag(iλ₁, …, iλₙ)` as an element of `algebra`.
    pub fn representative(&self, algebra: &Arc<LieAlgebra>) -> Result<AlgebraElement> {
        if self.spectrum.len() != algebra.matrix_size() {
            return Err(Error::DimensionMismatch(format!(
                "descriptor of size {} for {}x{} matrices",
                self.spectrum.len(),
                algebra.matrix_size(),
                algebra.matrix_size()
            )));
        }
        AlgebraElement::from_matrix(
            algebra,
            &crate::numerics::ComplexMatrix::imaginary_diagonal(&self.spectrum),
        )
    }
}

fn spectra_agree(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

/// `1e-8·max(1, ‖X‖)`.
pub fn default_cluster_tol(x: &AlgebraElement) -> f64 {
    1e-8 * x.matrix().frobenius_norm().max(1.0)
}

fn require_unitary_family(algebra: &LieAlgebra) -> Result<()> {
    match algebra.kind() {
        AlgebraKind::Unitary | AlgebraKind::SpecialUnitary => Ok(()),
        _ => Err(Error::UnsupportedAlgebra(algebra.name().to_string())),
    }
}

/// Ascending `λ` such that the eigenvalues of `X` are `iλⱼ`, from the
/// Hermitian matrix `−iX`.
pub fn spectrum(x: &AlgebraElement) -> Result<Vec<f64>> {
    require_unitary_family(x.algebra())?;
    let m = x.matrix();
    let tol = Tolerance::default();
    let defect = m.skew_hermitian_defect();
    if defect > tol.threshold(m.frobenius_norm()) {
        return Err(Error::NotSkewHermitian { defect });
    }
    let h = m.scale(Complex64::new(0.0, -1.0));
    Ok(hermitian_eig(&h, tol)?.values)
}

/// Maximal runs of the ascending spectrum whose consecutive gaps are at
/// most `cluster_tol`.
pub fn cluster(spectrum: &[f64], cluster_tol: f64) -> Vec<usize> {
    let mut sizes = Vec::new();
    let mut prev: Option<f64> = None;
    for &l in spectrum {
        match prev {
            Some(p) if l - p <= cluster_tol => *sizes.last_mut().unwrap() += 1,
            _ => sizes.push(1),
        }
        prev = Some(l);
    }
    sizes
}

pub fn flag_label(n: usize, multiplicities: &[usize]) -> String {
    let factors: Vec<String> = multiplicities.iter().map(|m| format!("U({m})")).collect();
    format!("U({n})/({})", factors.join("×"))
}

/// Orbit descriptor of `X`. `cluster_tol` defaults to
/// [`default_cluster_tol`].
pub fn classify(x: &AlgebraElement, cluster_tol: Option<f64>) -> Result<OrbitDescriptor> {
    let spectrum = spectrum(x)?;
    let tol = cluster_tol.unwrap_or_else(|| default_cluster_tol(x));
    let multiplicities = cluster(&spectrum, tol);
    let algebra = x.algebra();
    let n = algebra.matrix_size();
    let orbit_dim = n * n - multiplicities.iter().map(|m| m * m).sum::<usize>();
    let group_dim = algebra.kind().group_dim(n, algebra.dim());
    Ok(OrbitDescriptor {
        flag_type: flag_label(n, &multiplicities),
        spectrum,
        multiplicities,
        orbit_dim,
        isotropy_dim: group_dim - orbit_dim,
    })
}

/// Whether `X` and `Y` have the same sorted spectrum within `cluster_tol`.
pub fn same_orbit(x: &AlgebraElement, y: &AlgebraElement, cluster_tol: Option<f64>) -> Result<bool> {
    x.check_same(y)?;
    let tol = cluster_tol.unwrap_or_else(|| default_cluster_tol(x).max(default_cluster_tol(y)));
    Ok(spectra_agree(&spectrum(x)?, &spectrum(y)?, tol))
}

/// `rank ad(h)`, the orbit dimension computed without the spectrum.
pub fn orbit_dim_by_rank(h: &AlgebraElement) -> usize {
    real_rank(&h.ad_matrix(), Tolerance::default())
}

/// `dim ker ad(h)`, the dimension of the centralizer of `h`.
pub fn isotropy_dim(h: &AlgebraElement) -> usize {
    h.algebra().dim() - orbit_dim_by_rank(h)
}

/// A maximal linearly independent subset of `{[eᵢ, h]}` spanning the
/// tangent space of the orbit at `h`, kept in basis order.
pub fn tangent_basis(h: &AlgebraElement) -> Vec<AlgebraElement> {
    let algebra = h.algebra();
    let d = algebra.dim();
    let tol = Tolerance::default();
    let mut kept: Vec<AlgebraElement> = Vec::new();
    for i in 0..d {
        let v = AlgebraElement::basis(algebra, i).bracket(h).expect("same algebra");
        if v.is_zero() {
            continue;
        }
        let mut columns: Vec<Vec<f64>> = kept.iter().map(|k| k.coeffs().to_vec()).collect();
        columns.push(v.coeffs().to_vec());
        let m = RealMatrix::from_columns(d, &columns);
        if rank_with_tol(&m.to_complex(), tol) == columns.len() {
            kept.push(v);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::preset;
    use crate::numerics::ComplexMatrix;

    fn diag(algebra: &Arc<LieAlgebra>, lambdas: &[f64]) -> AlgebraElement {
        AlgebraElement::from_matrix(algebra, &ComplexMatrix::imaginary_diagonal(lambdas)).unwrap()
    }

    #[test]
    fn distinct_spectrum_is_full_flag() {
        let u3 = preset("u", 3).unwrap();
        let d = classify(&diag(&u3, &[1.0, 2.0, 3.0]), None).unwrap();
        assert_eq!(d.multiplicities, vec![1, 1, 1]);
        assert_eq!(d.orbit_dim, 6);
        assert_eq!(d.isotropy_dim, 3);
        assert_eq!(d.flag_type, "U(3)/(U(1)×U(1)×U(1))");
    }

    #[test]
    fn repeated_eigenvalue_and_central_cases() {
        let u3 = preset("u", 3).unwrap();
        let x = diag(&u3, &[1.0, 1.0, 2.0]);
        let d = classify(&x, None).unwrap();
        assert_eq!(d.multiplicities, vec![2, 1]);
        assert_eq!(d.orbit_dim, 4);
        assert_eq!(orbit_dim_by_rank(&x), 4);
        assert_eq!(d.flag_type, "U(3)/(U(2)×U(1))");

        let c = classify(&diag(&u3, &[1.0, 1.0, 1.0]), None).unwrap();
        assert_eq!(c.multiplicities, vec![3]);
        assert_eq!((c.orbit_dim, c.isotropy_dim), (0, 9));

        let zero = classify(&AlgebraElement::zero(&u3), None).unwrap();
        assert_eq!(zero.spectrum, vec![0.0; 3]);
        assert_eq!(zero.orbit_dim, 0);
    }

    #[test]
    fn su_elements_share_the_pipeline() {
        let su3 = preset("su", 3).unwrap();
        let d = classify(&diag(&su3, &[-1.0, -1.0, 2.0]), None).unwrap();
        assert_eq!(d.multiplicities, vec![2, 1]);
        assert_eq!((d.orbit_dim, d.isotropy_dim), (4, 4));
    }

    #[test]
    fn so_is_unsupported() {
        let so3 = preset("so", 3).unwrap();
        let x = AlgebraElement::basis(&so3, 0);
        assert!(matches!(classify(&x, None), Err(Error::UnsupportedAlgebra(_))));
    }

    #[test]
    fn same_orbit_examples() {
        let u2 = preset("u", 2).unwrap();
        assert!(same_orbit(&diag(&u2, &[1.0, 2.0]), &diag(&u2, &[2.0, 1.0]), None).unwrap());
        assert!(!same_orbit(&diag(&u2, &[1.0, 2.0]), &diag(&u2, &[1.0, 3.0]), None).unwrap());
    }

    #[test]
    fn tangent_basis_on_su2() {
        let su2 = preset("su", 2).unwrap();
        let e3 = AlgebraElement::basis(&su2, 2);
        let basis = tangent_basis(&e3);
        assert_eq!(basis.len(), 2);
        assert_eq!(basis[0].coeffs(), &[0.0, -1.0, 0.0]);
        assert_eq!(basis[1].coeffs(), &[1.0, 0.0, 0.0]);
        assert_eq!(isotropy_dim(&e3), 1);
    }

    #[test]
    fn tangent_basis_sizes() {
        let u3 = preset("u", 3).unwrap();
        assert_eq!(tangent_basis(&diag(&u3, &[1.0, 1.0, 2.0])).len(), 4);
        assert!(tangent_basis(&diag(&u3, &[2.0, 2.0, 2.0])).is_empty());
        assert_eq!(isotropy_dim(&diag(&u3, &[0.5, 1.5, -2.0])), 3);
        assert_eq!(isotropy_dim(&diag(&u3, &[2.0, 2.0, 2.0])), 9);
    }

    #[test]
    fn clustering_is_by_consecutive_gap() {
        assert_eq!(cluster(&[0.0, 0.5, 1.0, 3.0], 0.6), vec![3, 1]);
        assert_eq!(cluster(&[], 1.0), Vec::<usize>::new());
    }
}
