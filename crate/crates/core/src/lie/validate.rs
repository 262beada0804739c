use serde::Serialize;

use super::algebra::{LieAlgebra, AXIOM_TOL};

/// Residuals of the Lie algebra axioms for a stored set of structure
/// constants and basis.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct ValidationReport {
    /// `max |c_ijk + c_jik|`
    pub antisymmetry: f64,
    /// `max |Σ_m (c_ijm c_mkl + c_jkm c_mil + c_kim c_mjl)|`
    pub jacobi: f64,
    /// `max ‖[eᵢ, eⱼ] − Σ_k c_ijk e_k‖`
    pub closure: f64,
    pub failures: Vec<String>,
    pub pass: bool,
}

pub fn validate(algebra: &LieAlgebra) -> ValidationReport {
    let d = algebra.dim();
    let c = |i, j, k| algebra.structure_constant(i, j, k);

    let mut antisymmetry: f64 = 0.0;
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                antisymmetry = antisymmetry.max((c(i, j, k) + c(j, i, k)).abs());
            }
        }
    }

    let mut jacobi: f64 = 0.0;
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for l in 0..d {
                    let s: f64 = (0..d)
                        .map(|m| c(i, j, m) * c(m, k, l) + c(j, k, m) * c(m, i, l) + c(k, i, m) * c(m, j, l))
                        .sum();
                    jacobi = jacobi.max(s.abs());
                }
            }
        }
    }

    let mut closure: f64 = 0.0;
    let basis = algebra.basis();
    for i in 0..d {
        for j in 0..d {
            let coeffs: Vec<f64> = (0..d).map(|k| c(i, j, k)).collect();
            let r = basis[i].commutator(&basis[j]).distance(&algebra.realize(&coeffs));
            closure = closure.max(r);
        }
    }

    let mut failures = Vec::new();
    for (label, value) in [("antisymmetry", antisymmetry), ("jacobi", jacobi), ("closure", closure)] {
        if value.is_nan() || value > AXIOM_TOL {
            failures.push(format!("{label} residual {value:.3e} exceeds {AXIOM_TOL:.0e}"));
        }
    }
    ValidationReport {
        antisymmetry,
        jacobi,
        closure,
        pass: failures.is_empty(),
        failures,
    }
}
